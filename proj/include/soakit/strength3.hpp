#pragma once

#include <utility>
#include <vector>

#include "soakit/array.hpp"
#include "soakit/verify.hpp"

namespace soakit {

struct BuildOptions {
  /// Re-verify the intermediate GOA and the final SOA.
  bool verify = true;
};

struct SoaBuildTrace {
  enum class Source { Embeddable, SemiEmbeddable };
  Source source;
  std::vector<Column> b_columns;
  std::vector<Column> c_columns;
  GroupedArray goa;
};

/// d_i = a_i s^2 + b_i s + c_i. Throws ConstructionError when verification is
/// on and g is not a GOA.
Array goa_to_soa(const GroupedArray& g, BuildOptions opts = {});

/// Splits every s^3-level entry into its base-s digits (a, b, c).
GroupedArray soa_to_goa(const Array& d, int base);

/// Collapses every column by floor(d / s^2).
Array extract_underlying_oa(const Array& d, int base);

/// From an OA(n, m+1, s, 3): a_i = column i, every b_i = column m+1, c_i the
/// cyclic successor a_{i+1 mod m}. Needs m >= 2.
std::pair<Array, SoaBuildTrace> soa_from_embeddable(const Array& a_plus, BuildOptions opts = {});

/// From a semi-embeddable OA(n, m, s, 3): b_i is assembled from the least
/// extension column of each child obtained by branching column i, scattered
/// back onto that child's rows; c_i is the cyclic successor. Throws
/// ConstructionError naming the first child that has no extension.
std::pair<Array, SoaBuildTrace> soa_from_semi_embeddable(const Array& a, BuildOptions opts = {});

}  // namespace soakit
