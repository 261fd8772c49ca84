#pragma once

#include <cstddef>
#include <vector>

#include "soakit/array.hpp"
#include "soakit/gf.hpp"

namespace soakit {

/// Rows are v * G for every v in GF(q)^k; row index is the base-q number with
/// v[0] as its most significant digit.
struct LinearArraySpec {
  int q;
  std::size_t k;
  std::vector<std::vector<int>> generator;  // k rows, one column per array column

  std::size_t columns() const { return generator.empty() ? 0 : generator.front().size(); }
};

Array linear_array(const LinearArraySpec& spec);

/// OA(s^3, s+1, s, 3) from quadratics p(e) = a2 e^2 + a1 e + a0: one column per
/// field element e (ascending), then the a2 column, then with extended (even s
/// only) the a1 column.
LinearArraySpec bush_spec(int s, bool extended);
Array bush(int s, bool extended);

/// Saturated OA(s^k, (s^k-1)/(s-1), s, 2): one column per projective point.
LinearArraySpec rao_hamming_spec(int s, int k);
Array rao_hamming(int s, int k);

/// OA(s^4, s^2+1, s, 3) from the elliptic quadric
/// x0 x1 + x2^2 + b x2 x3 + c x3^2 in PG(3, s), (b, c) the least pair with
/// x^2 + b x + c irreducible. Limited to s <= 5.
LinearArraySpec ovoid_spec(int s);
Array ovoid_oa(int s);

/// Stacks a on top of b. Throws ParameterError on mismatched columns or levels.
Array juxtapose(const Array& a, const Array& b);

}  // namespace soakit
