#include "soakit/coincidence.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "soakit/error.hpp"

namespace soakit {

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

CoincidenceProfile coincidence_profile(const Array& a, std::size_t row) {
  if (row >= a.runs()) throw ParameterError("reference row " + std::to_string(row) + " out of range");
  CoincidenceProfile p{row, std::vector<long long>(a.factors() + 1, 0)};
  const auto ref = a.row(row);
  for (std::size_t r = 0; r < a.runs(); ++r) {
    if (r == row) continue;
    const auto other = a.row(r);
    std::size_t agree = 0;
    for (std::size_t j = 0; j < a.factors(); ++j) agree += ref[j] == other[j];
    ++p.counts[agree];
  }
  return p;
}

VerificationReport coincidence_identity_check(const Array& a, std::size_t row, int strength) {
  const auto s = a.symmetric_levels();
  if (!s) throw ParameterError("coincidence identity needs symmetric levels");
  if (strength < 0) throw ParameterError("negative strength");
  const auto profile = coincidence_profile(a, row);
  const long long n = static_cast<long long>(a.runs());
  const long long m = static_cast<long long>(a.factors());
  for (int j = 0; j <= strength; ++j) {
    const long long sj = int_pow(*s, j);
    if (n % sj != 0) throw ParameterError("s^" + std::to_string(j) + " does not divide n");
    long long lhs = 0;
    for (long long i = j; i <= m; ++i) lhs += binomial(i, j) * profile.counts[i];
    const long long rhs = binomial(m, j) * (n / sj - 1);
    if (lhs != rhs) return VerificationReport(Witness{{}, {}, {j}, lhs, rhs, "coincidence identity"});
  }
  return {};
}

std::vector<RepeatedRun> repeated_runs(const Array& a) {
  std::map<std::vector<int>, std::size_t> tally;
  for (std::size_t r = 0; r < a.runs(); ++r) {
    auto row = a.row(r);
    ++tally[std::vector<int>(row.begin(), row.end())];
  }
  std::vector<RepeatedRun> out;
  for (auto& [run, count] : tally)
    if (count >= 2) out.push_back({run, count});
  return out;
}

bool repeated_run_bound_holds(long long runs, int factors, int levels, int strength, bool has_repeated_run) {
  if (runs != 2 * int_pow(levels, strength))
    throw ParameterError("repeated-run bound requires index 2 (n = 2 s^t)");
  return !has_repeated_run || factors <= levels + strength - 1;
}

}  // namespace soakit
