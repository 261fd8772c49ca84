#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "soakit/array.hpp"
#include "soakit/verify.hpp"

namespace soakit {

/// counts[i] = number of other runs agreeing with the reference run in
/// exactly i positions (i = 0..m).
struct CoincidenceProfile {
  std::size_t reference_row = 0;
  std::vector<long long> counts;
};

CoincidenceProfile coincidence_profile(const Array& a, std::size_t row);

/// Checks sum_{i>=j} C(i,j) n_i = C(m,j) (n/s^j - 1) for j = 0..t. The
/// witness carries {j} as its combination with the two sides as
/// observed/expected.
VerificationReport coincidence_identity_check(const Array& a, std::size_t row, int strength);

struct RepeatedRun {
  std::vector<int> run;
  std::size_t multiplicity;
  bool operator==(const RepeatedRun&) const = default;
};

/// Distinct runs occurring at least twice, in lexicographic order.
std::vector<RepeatedRun> repeated_runs(const Array& a);

/// An index-2 array OA(2 s^t, m, s, t) with a repeated run needs
/// m <= s + t - 1. Returns false when the parameters break that bound.
/// Throws ParameterError unless n = 2 s^t.
bool repeated_run_bound_holds(long long runs, int factors, int levels, int strength, bool has_repeated_run);

long long binomial(long long n, long long k);

}  // namespace soakit
