#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "soakit/array.hpp"

namespace soakit {

/// Runs of a parent OA holding one level in one column, with that column removed.
struct ChildArray {
  std::size_t parent_column;
  int branch_level;
  std::vector<std::size_t> rows;  // ascending parent row indices
  Array array;
};

/// Splits an OA(n, m, s, t), t >= 2, on a column into its s children
/// OA(n/s, m-1, s, t-1), ordered by level. Throws ParameterError if the input
/// is not an OA of the stated strength.
std::vector<ChildArray> branch(const Array& a, std::size_t column, int strength);

struct EmbeddingReport {
  /// Lexicographically least column that keeps strength t, if one exists.
  std::optional<Column> extension;
  /// Informational; ignored by operator==.
  std::uint64_t search_nodes = 0;

  bool embeddable() const noexcept { return extension.has_value(); }
  bool operator==(const EmbeddingReport& o) const { return extension == o.extension; }
};

/// Complete backtracking search for one more s-level column keeping strength
/// t. A false verdict means the whole search tree was exhausted.
EmbeddingReport find_extension(const Array& a, int strength);

struct ChildReport {
  std::size_t column;
  int level;
  EmbeddingReport report;
  bool operator==(const ChildReport&) const = default;
};

enum class ShortCircuit {
  /// OA(2s^3, s+2, s, 3) with s >= 3 and a repeated run: never semi-embeddable.
  RepeatedRun,
};

std::string to_string(ShortCircuit sc);

struct SemiEmbedReport {
  bool semi_embeddable = false;
  /// Children in (column, level) order, up to and including the first one
  /// that is not embeddable. Empty when decided by a short circuit.
  std::vector<ChildReport> per_child;
  std::optional<ShortCircuit> short_circuit;

  bool operator==(const SemiEmbedReport&) const = default;
};

/// Decides whether every one of the m*s children is embeddable. Children are
/// searched concurrently under OpenMP; the report is schedule independent.
SemiEmbedReport is_semi_embeddable(const Array& a, int strength);

struct BoundsWitness {
  std::size_t runs;
  int levels;
  int strength;
  std::size_t columns_reached;
  /// True when the chase stopped because a complete search found no column.
  bool exhaustive;
};

/// Greedily appends least extension columns until none exists or the array
/// has column_limit columns.
std::pair<Array, BoundsWitness> max_extension(const Array& a, int strength, std::size_t column_limit);

namespace serial {
/// Children searched one after another, stopping at the first failure.
SemiEmbedReport is_semi_embeddable(const Array& a, int strength);
}  // namespace serial

}  // namespace soakit
