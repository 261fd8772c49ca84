#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "soakit/array.hpp"

namespace soakit {

/// Location of the first imbalance found by a check. Field meaning by check:
///  - OA/SOA/GOA: `columns` is the column subset, `composition` the collapsing
///    parts u_1..u_g (SOA only), `combination` the level combination.
///  - nets: `composition` holds the resolutions d_j, `combination` the cell
///    indices c_j.
///  - coincidence identity: `combination` is {j}.
/// `observed` and `expected` are the counts (or the two sides of an identity).
struct Witness {
  std::vector<std::size_t> columns;
  std::vector<int> composition;
  std::vector<int> combination;
  long long observed = 0;
  long long expected = 0;
  std::string context;

  bool operator==(const Witness&) const = default;
};

std::string to_string(const Witness& w);

class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(Witness w) : witness_(std::move(w)) {}

  bool passed() const noexcept { return !witness_.has_value(); }
  explicit operator bool() const noexcept { return passed(); }
  const std::optional<Witness>& witness() const noexcept { return witness_; }

  bool operator==(const VerificationReport&) const = default;

 private:
  std::optional<Witness> witness_;
};

struct SoaParams {
  int base;      // s
  int strength;  // t; columns carry s^t levels

  int levels() const;
};

/// m groups of three s-level columns (a_i, b_i, c_i).
struct ColumnTriple {
  Column a, b, c;
  bool operator==(const ColumnTriple&) const = default;
};

struct GroupedArray {
  int levels = 0;  // s
  std::vector<ColumnTriple> groups;

  std::size_t runs() const { return groups.empty() ? 0 : groups.front().a.size(); }
  /// The 3m columns in group order a_1, b_1, c_1, a_2, ...
  Array flatten() const;
  static GroupedArray unflatten(const Array& a);

  bool operator==(const GroupedArray&) const = default;
};

/// Every t-subset of columns has each level combination exactly
/// n / prod(levels) times. Mixed levels are supported. The witness is the
/// first violation with subsets and combinations in lexicographic order.
/// Throws ParameterError when t is out of [1, m] or some t-subset's level
/// product does not divide n.
VerificationReport verify_oa(const Array& a, std::size_t strength);

/// a -> floor(a / s^(t-u)).
Column collapse_column(const Column& col, int base, int strength, int parts);

/// Checks every g-subset (g = 1..t) against every ordered composition of t
/// into g positive parts, after collapsing column j to s^{u_j} levels.
VerificationReport verify_soa(const Array& a, SoaParams params);

/// Strength-3 generalized orthogonal array conditions, in the order:
/// (a_i, a_j, a_k) for i < j < k; (a_i, b_i, a_j) for i != j; (a_i, b_i, c_i).
/// Witness columns index the flattened array (a_i = 3i, b_i = 3i+1, c_i = 3i+2).
VerificationReport verify_goa(const GroupedArray& g);

/// Lexicographic list of all k-subsets of {0..m-1}.
std::vector<std::vector<std::size_t>> subsets(std::size_t m, std::size_t k);

/// All ordered compositions of total into parts positive integers, lexicographic.
std::vector<std::vector<int>> compositions(int total, int parts);

long long int_pow(long long base, int exp);

/// Single-threaded reference implementations. They count with an ordered map
/// of level tuples rather than flat counters, and serve as the oracle for the
/// parallel kernels above.
namespace serial {
VerificationReport verify_oa(const Array& a, std::size_t strength);
VerificationReport verify_soa(const Array& a, SoaParams params);
VerificationReport verify_goa(const GroupedArray& g);
}  // namespace serial

}  // namespace soakit
