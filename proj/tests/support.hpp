#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "soakit/array.hpp"
#include "soakit/construct.hpp"
#include "soakit/fixtures.hpp"
#include "soakit/strength3.hpp"
#include "soakit/verify.hpp"

namespace soakit::testkit {

inline std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Random row order, column order and per-column level relabelling.
inline Array scramble(const Array& a, std::mt19937_64& rng) {
  const auto rows = random_permutation(a.runs(), rng);
  const auto cols = random_permutation(a.factors(), rng);
  std::vector<Column> out;
  std::vector<int> levels;
  for (auto c : cols) {
    const int s = a.levels()[c];
    const auto relabel = random_permutation(static_cast<std::size_t>(s), rng);
    Column col(a.runs());
    for (std::size_t r = 0; r < a.runs(); ++r) col[r] = static_cast<int>(relabel[a(rows[r], c)]);
    out.push_back(std::move(col));
    levels.push_back(s);
  }
  return Array::from_columns(out, levels);
}

/// Valid GOAs with s in {2, 3} and n <= 54 to seed random ones from.
inline std::vector<GroupedArray> seed_goas() {
  std::vector<GroupedArray> out;
  for (const auto& f : fixtures()) out.push_back(soa_to_goa(f.file.array, f.file.soa->base));
  out.push_back(soa_to_goa(soa_from_embeddable(bush(2, true)).first, 2));
  out.push_back(soa_to_goa(soa_from_semi_embeddable(bush(3, false)).first, 3));
  out.push_back(soa_to_goa(soa_from_semi_embeddable(ovoid_oa(2)).first, 2));
  return out;
}

/// Shuffles rows and groups, and relabels each of the 3m columns independently.
/// Every GOA condition is a balance count, so the result is again a GOA.
inline GroupedArray random_goa(const std::vector<GroupedArray>& seeds, std::mt19937_64& rng) {
  const auto& g = seeds[std::uniform_int_distribution<std::size_t>(0, seeds.size() - 1)(rng)];
  const auto rows = random_permutation(g.runs(), rng);
  const auto order = random_permutation(g.groups.size(), rng);
  GroupedArray out{g.levels, {}};
  auto remap = [&](const Column& c) {
    const auto relabel = random_permutation(static_cast<std::size_t>(g.levels), rng);
    Column r(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) r[i] = static_cast<int>(relabel[c[rows[i]]]);
    return r;
  };
  for (auto i : order) out.groups.push_back({remap(g.groups[i].a), remap(g.groups[i].b), remap(g.groups[i].c)});
  return out;
}

/// Lexicographically least 2-level column orthogonal (strength 2) to every
/// column of a, by trying all 2^n columns in order. Counting is done here
/// directly rather than through verify_oa.
inline std::optional<Column> brute_force_extension(const Array& a) {
  const std::size_t n = a.runs();
  const auto cols = a.columns();
  for (std::uint32_t code = 0; code < (1u << n); ++code) {
    Column col(n);
    for (std::size_t r = 0; r < n; ++r) col[r] = (code >> (n - 1 - r)) & 1u;
    bool ok = true;
    for (const auto& other : cols) {
      std::size_t cell[4] = {0, 0, 0, 0};
      for (std::size_t r = 0; r < n; ++r) ++cell[2 * other[r] + col[r]];
      for (auto x : cell) ok &= 4 * x == n;
      if (!ok) break;
    }
    if (ok) return col;
  }
  return std::nullopt;
}

/// Every 2-level strength-2 array with n runs whose columns are distinct
/// balanced columns taken in increasing code order (m >= 2).
inline std::vector<Array> strength2_binary_arrays(std::size_t n) {
  std::vector<Column> balanced;
  for (std::uint32_t code = 0; code < (1u << n); ++code) {
    Column col(n);
    int ones = 0;
    for (std::size_t r = 0; r < n; ++r) ones += col[r] = (code >> (n - 1 - r)) & 1u;
    if (2 * ones == static_cast<int>(n)) balanced.push_back(col);
  }
  auto orthogonal = [&](const Column& x, const Column& y) {
    int both = 0;
    for (std::size_t r = 0; r < n; ++r) both += x[r] & y[r];
    return 4 * both == static_cast<int>(n);
  };
  std::vector<Array> out;
  std::vector<std::size_t> chosen;
  auto grow = [&](auto&& self, std::size_t from) -> void {
    if (chosen.size() >= 2) {
      std::vector<Column> cols;
      for (auto i : chosen) cols.push_back(balanced[i]);
      out.push_back(Array::from_columns(cols, 2));
    }
    for (std::size_t i = from; i < balanced.size(); ++i) {
      if (std::all_of(chosen.begin(), chosen.end(), [&](std::size_t j) { return orthogonal(balanced[i], balanced[j]); })) {
        chosen.push_back(i);
        self(self, i + 1);
        chosen.pop_back();
      }
    }
  };
  grow(grow, 0);
  return out;
}

/// An OA(54, 5, 3, 3) whose first run appears twice.
inline Array repeated_run_oa54() {
  return Array::from_rows(
      {{0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {1, 1, 0, 0, 1}, {0, 1, 2, 0, 1}, {2, 2, 1, 0, 0}, {2, 2, 0, 0, 1},
       {0, 2, 1, 0, 1}, {2, 1, 2, 0, 0}, {1, 0, 2, 0, 1}, {2, 0, 2, 0, 2}, {0, 1, 2, 1, 0}, {0, 2, 0, 1, 2},
       {2, 1, 1, 1, 1}, {0, 0, 2, 1, 1}, {2, 2, 0, 1, 0}, {2, 2, 2, 1, 2}, {1, 2, 1, 1, 1}, {0, 1, 0, 1, 1},
       {0, 2, 2, 0, 2}, {1, 2, 0, 0, 2}, {2, 0, 2, 1, 0}, {1, 1, 0, 1, 0}, {1, 2, 1, 2, 2}, {0, 2, 1, 1, 0},
       {0, 2, 0, 2, 1}, {0, 1, 0, 2, 2}, {1, 1, 2, 1, 2}, {2, 0, 0, 1, 1}, {0, 0, 1, 1, 2}, {1, 1, 2, 2, 2},
       {0, 0, 2, 2, 2}, {2, 0, 1, 0, 1}, {1, 0, 1, 0, 2}, {1, 1, 1, 0, 0}, {1, 2, 2, 0, 0}, {2, 1, 0, 0, 2},
       {1, 0, 1, 1, 0}, {0, 2, 2, 2, 0}, {2, 2, 2, 2, 1}, {1, 2, 0, 2, 0}, {2, 1, 2, 2, 1}, {2, 1, 1, 1, 2},
       {1, 0, 0, 1, 2}, {0, 1, 1, 0, 2}, {2, 1, 0, 2, 0}, {2, 0, 0, 2, 2}, {1, 2, 2, 1, 1}, {1, 0, 2, 2, 0},
       {0, 0, 1, 2, 1}, {2, 2, 1, 2, 2}, {1, 1, 1, 2, 1}, {0, 1, 1, 2, 0}, {2, 0, 1, 2, 0}, {1, 0, 0, 2, 1}},
      3);
}

}  // namespace soakit::testkit
