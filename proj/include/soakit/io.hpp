#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "soakit/array.hpp"

namespace soakit {

/// Text format, LF line endings:
///
///     # source: <provenance>        (optional)
///     oa <n> <m> <t>
///     <level count of each column>
///     base <s> power <t>            (optional, SOA metadata)
///     <n rows of m integers>
///
/// Other lines starting with '#' are comments and may appear anywhere.
struct ArrayFile {
  Array array;
  int strength = 0;
  struct SoaMeta {
    int base;
    int power;
    bool operator==(const SoaMeta&) const = default;
  };
  std::optional<SoaMeta> soa;
  std::optional<std::string> source;

  bool operator==(const ArrayFile&) const = default;
};

/// Throws ParseError (with line number) on malformed input.
ArrayFile parse_array(std::string_view text);
std::string emit_array(const ArrayFile& file);

ArrayFile read_array_file(const std::string& path);

}  // namespace soakit
