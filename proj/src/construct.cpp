#include "soakit/construct.hpp"

#include <string>

#include "soakit/error.hpp"
#include "soakit/verify.hpp"

namespace soakit {
namespace {

constexpr long long kMaxRuns = 1 << 20;

FieldTable field_for(int s) {
  const auto [p, h] = prime_power_decomposition(s);
  if (p == 0) throw ParameterError(std::to_string(s) + " is not a prime power");
  return FieldTable(s);
}

std::vector<int> digits(long long code, int q, std::size_t k) {
  std::vector<int> v(k);
  for (std::size_t i = k; i-- > 0;) {
    v[i] = static_cast<int>(code % q);
    code /= q;
  }
  return v;
}

Array self_verified(Array a, std::size_t strength, const char* name) {
  const auto report = verify_oa(a, strength);
  if (!report.passed())
    throw ConstructionError(std::string(name) + " failed its own verification: " + to_string(*report.witness()));
  return a;
}

// Rank of a set of vectors over GF(q), by Gaussian elimination.
std::size_t rank(const FieldTable& f, std::vector<std::vector<int>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const int inv = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const int factor = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
    }
    ++r;
  }
  return r;
}

bool first_nonzero_is_one(const std::vector<int>& v) {
  for (int x : v)
    if (x != 0) return x == 1;
  return false;
}

}  // namespace

Array linear_array(const LinearArraySpec& spec) {
  const FieldTable f = field_for(spec.q);
  if (spec.generator.size() != spec.k || spec.k == 0) throw ParameterError("generator must have k rows");
  const std::size_t m = spec.columns();
  if (m == 0) throw ParameterError("generator has no columns");
  for (const auto& row : spec.generator) {
    if (row.size() != m) throw ParameterError("ragged generator");
    for (int x : row)
      if (!f.contains(x)) throw ParameterError("generator entry outside the field");
  }
  const long long n = int_pow(spec.q, static_cast<int>(spec.k));
  if (n > kMaxRuns) throw ParameterError("linear array too large: " + std::to_string(n) + " runs");
  std::vector<int> cells(static_cast<std::size_t>(n) * m);
  for (long long i = 0; i < n; ++i) {
    const auto v = digits(i, spec.q, spec.k);
    for (std::size_t c = 0; c < m; ++c) {
      int acc = 0;
      for (std::size_t r = 0; r < spec.k; ++r) acc = f.add(acc, f.mul(v[r], spec.generator[r][c]));
      cells[static_cast<std::size_t>(i) * m + c] = acc;
    }
  }
  return Array(static_cast<std::size_t>(n), std::vector<int>(m, spec.q), std::move(cells));
}

LinearArraySpec bush_spec(int s, bool extended) {
  const FieldTable f = field_for(s);
  if (extended && f.characteristic() != 2)
    throw ParameterError("extended Bush array needs an even prime power; for odd s at most s+1 columns exist");
  LinearArraySpec spec{s, 3, std::vector<std::vector<int>>(3)};
  auto push = [&](int c2, int c1, int c0) {
    spec.generator[0].push_back(c2);
    spec.generator[1].push_back(c1);
    spec.generator[2].push_back(c0);
  };
  for (int e = 0; e < s; ++e) push(f.mul(e, e), e, 1);
  push(1, 0, 0);
  if (extended) push(0, 1, 0);
  return spec;
}

Array bush(int s, bool extended) { return self_verified(linear_array(bush_spec(s, extended)), 3, "Bush array"); }

LinearArraySpec rao_hamming_spec(int s, int k) {
  field_for(s);
  if (k < 2) throw ParameterError("Rao-Hamming needs dimension k >= 2");
  LinearArraySpec spec{s, static_cast<std::size_t>(k), std::vector<std::vector<int>>(static_cast<std::size_t>(k))};
  const long long total = int_pow(s, k);
  if (total > kMaxRuns) throw ParameterError("Rao-Hamming array too large");
  for (long long code = 1; code < total; ++code) {
    const auto v = digits(code, s, spec.k);
    if (!first_nonzero_is_one(v)) continue;
    for (std::size_t r = 0; r < spec.k; ++r) spec.generator[r].push_back(v[r]);
  }
  return spec;
}

Array rao_hamming(int s, int k) {
  return self_verified(linear_array(rao_hamming_spec(s, k)), 2, "Rao-Hamming array");
}

LinearArraySpec ovoid_spec(int s) {
  const FieldTable f = field_for(s);
  if (s > 5) throw ParameterError("ovoid construction is limited to s <= 5");
  int b = -1, c = -1;
  for (int bb = 0; bb < s && b < 0; ++bb) {
    for (int cc = 0; cc < s && b < 0; ++cc) {
      bool has_root = false;
      for (int x = 0; x < s && !has_root; ++x)
        has_root = f.add(f.add(f.mul(x, x), f.mul(bb, x)), cc) == 0;
      if (!has_root) b = bb, c = cc;
    }
  }
  std::vector<std::vector<int>> points;
  for (long long code = 1; code < int_pow(s, 4); ++code) {
    const auto x = digits(code, s, 4);
    if (!first_nonzero_is_one(x)) continue;
    int q = f.mul(x[0], x[1]);
    q = f.add(q, f.mul(x[2], x[2]));
    q = f.add(q, f.mul(b, f.mul(x[2], x[3])));
    q = f.add(q, f.mul(c, f.mul(x[3], x[3])));
    if (q == 0) points.push_back(x);
  }
  if (points.size() != static_cast<std::size_t>(s * s + 1))
    throw ConstructionError("quadric has " + std::to_string(points.size()) + " points, expected s^2+1");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      for (std::size_t k = j + 1; k < points.size(); ++k)
        if (rank(f, {points[i], points[j], points[k]}) != 3)
          throw ConstructionError("quadric points are not a cap");
  LinearArraySpec spec{s, 4, std::vector<std::vector<int>>(4)};
  for (const auto& p : points)
    for (std::size_t r = 0; r < 4; ++r) spec.generator[r].push_back(p[r]);
  return spec;
}

Array ovoid_oa(int s) { return self_verified(linear_array(ovoid_spec(s)), 3, "ovoid array"); }

Array juxtapose(const Array& a, const Array& b) {
  if (a.factors() != b.factors() || a.levels() != b.levels())
    throw ParameterError("juxtaposed arrays need identical columns and level profiles");
  auto cells = a.cells();
  cells.insert(cells.end(), b.cells().begin(), b.cells().end());
  return Array(a.runs() + b.runs(), a.levels(), std::move(cells));
}

}  // namespace soakit
