#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "soakit/array.hpp"
#include "soakit/verify.hpp"

namespace soakit {

/// Points of [0,1)^m as base-s digit strings; digit 0 is the most
/// significant, so point j-coordinate = sum_d digit(i, j, d) s^-(d+1).
class DigitPointSet {
 public:
  DigitPointSet(std::size_t points, std::size_t dims, int base, int digits, std::vector<int> data);

  std::size_t points() const noexcept { return points_; }
  std::size_t dims() const noexcept { return dims_; }
  int base() const noexcept { return base_; }
  int digits() const noexcept { return digits_; }

  int digit(std::size_t point, std::size_t dim, int d) const {
    return data_[(point * dims_ + dim) * static_cast<std::size_t>(digits_) + static_cast<std::size_t>(d)];
  }
  /// Index of the cell of width s^-resolution holding the coordinate.
  long long cell(std::size_t point, std::size_t dim, int resolution) const;

  DigitPointSet select_dims(const std::vector<std::size_t>& dims) const;

 private:
  std::size_t points_;
  std::size_t dims_;
  int base_;
  int digits_;
  std::vector<int> data_;
};

/// Box prod_j [c_j s^-d_j, (c_j+1) s^-d_j).
struct ElementaryInterval {
  std::vector<int> resolution;  // d_j
  std::vector<long long> cell;  // c_j
};

/// Level v of an s^t-level column becomes its t base-s digits (the left
/// endpoint v / s^t of its cell).
DigitPointSet soa_to_digits(const Array& a, int base, int strength);

/// Every elementary interval of volume s^(w-k) holds exactly s^w points.
/// Membership is decided on digit prefixes. Witness: composition = d,
/// combination = c. Throws ParameterError unless n = s^k and 0 <= w <= k.
VerificationReport verify_net(const DigitPointSet& p, int quality, int resolution);

/// 64-bit LCG: state' = state * 6364136223846793005 + 1442695040888963407.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}
  /// Advances and returns the upper 32 bits of the new state.
  std::uint32_t next();
  std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

/// OA-based Latin hypercube: in column j, the r = n/L runs at level v receive a
/// Fisher-Yates shuffle of {v r, ..., v r + r - 1} (levels ascending, runs in
/// row order), drawn from Lcg64(seed ^ j). Throws ParameterError on an
/// unbalanced column.
Array latin_hypercube(const Array& a, std::uint64_t seed);

}  // namespace soakit
