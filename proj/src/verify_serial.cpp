#include <map>
#include <string>

#include "soakit/error.hpp"
#include "soakit/verify.hpp"

namespace soakit::serial {
namespace {

using Tally = std::map<std::vector<int>, long long>;

// Walks every level combination in lexicographic order and reports the first
// one whose tally differs from expected.
std::optional<Witness> first_unbalanced(const Tally& tally, const std::vector<int>& levels, long long expected) {
  std::vector<int> combo(levels.size(), 0);
  while (true) {
    auto it = tally.find(combo);
    const long long seen = it == tally.end() ? 0 : it->second;
    if (seen != expected) return Witness{{}, {}, combo, seen, expected, {}};
    std::size_t j = combo.size();
    while (j > 0 && ++combo[j - 1] == levels[j - 1]) combo[--j] = 0;
    if (j == 0) return std::nullopt;
  }
}

Tally tally_columns(const std::vector<Column>& cols, const std::vector<std::size_t>& which) {
  Tally tally;
  const std::size_t n = cols.front().size();
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<int> key;
    for (auto c : which) key.push_back(cols[c][r]);
    ++tally[key];
  }
  return tally;
}

// Calls visit(subset) over k-subsets of {0..m-1} in lexicographic order until
// it returns true.
template <class Visit>
bool for_each_subset(std::size_t m, std::size_t k, std::vector<std::size_t>& cur, std::size_t start, Visit& visit) {
  if (cur.size() == k) return visit(cur);
  for (std::size_t c = start; c < m; ++c) {
    cur.push_back(c);
    if (for_each_subset(m, k, cur, c + 1, visit)) return true;
    cur.pop_back();
  }
  return false;
}

template <class Visit>
bool for_each_composition(int remaining, int parts, std::vector<int>& cur, Visit& visit) {
  if (parts == 0) return remaining == 0 && visit(cur);
  for (int u = 1; u <= remaining - (parts - 1); ++u) {
    cur.push_back(u);
    if (for_each_composition(remaining - u, parts - 1, cur, visit)) return true;
    cur.pop_back();
  }
  return false;
}

}  // namespace

VerificationReport verify_oa(const Array& a, std::size_t strength) {
  if (strength < 1 || strength > a.factors()) throw ParameterError("strength out of range");
  const auto cols = a.columns();
  std::optional<Witness> found;
  std::vector<std::size_t> cur;
  // Divisibility first so a parameter error never hides behind a witness.
  auto divisible = [&](const std::vector<std::size_t>& sub) {
    long long cells = 1;
    for (auto c : sub) cells *= a.levels()[c];
    if (static_cast<long long>(a.runs()) % cells != 0) throw ParameterError("level product does not divide n");
    return false;
  };
  for_each_subset(a.factors(), strength, cur, 0, divisible);
  auto check = [&](const std::vector<std::size_t>& sub) {
    long long cells = 1;
    std::vector<int> lv;
    for (auto c : sub) {
      cells *= a.levels()[c];
      lv.push_back(a.levels()[c]);
    }
    auto w = first_unbalanced(tally_columns(cols, sub), lv, static_cast<long long>(a.runs()) / cells);
    if (!w) return false;
    w->columns = sub;
    w->context = "OA strength " + std::to_string(strength);
    found = std::move(w);
    return true;
  };
  for_each_subset(a.factors(), strength, cur, 0, check);
  return found ? VerificationReport(std::move(*found)) : VerificationReport();
}

VerificationReport verify_soa(const Array& a, SoaParams params) {
  const int s = params.base;
  const int t = params.strength;
  if (s < 2 || t < 1) throw ParameterError("SOA needs base >= 2 and strength >= 1");
  const int full = params.levels();
  for (int l : a.levels())
    if (l != full) throw ParameterError("SOA column level mismatch");
  if (a.runs() % static_cast<std::size_t>(full) != 0) throw ParameterError("s^t does not divide n");

  const auto cols = a.columns();
  const long long expected = static_cast<long long>(a.runs()) / full;
  std::optional<Witness> found;
  std::vector<std::size_t> sub;
  std::vector<int> comp;
  const std::size_t max_g = std::min<std::size_t>(static_cast<std::size_t>(t), a.factors());
  for (std::size_t g = 1; g <= max_g && !found; ++g) {
    auto per_subset = [&](const std::vector<std::size_t>& chosen) {
      auto per_comp = [&](const std::vector<int>& parts) {
        std::vector<Column> collapsed;
        std::vector<int> lv;
        std::vector<std::size_t> idx;
        for (std::size_t j = 0; j < chosen.size(); ++j) {
          // integer division by s^(t-u) spelled out directly
          int div = 1;
          for (int e = 0; e < t - parts[j]; ++e) div *= s;
          Column c = cols[chosen[j]];
          for (auto& v : c) v /= div;
          collapsed.push_back(std::move(c));
          int l = 1;
          for (int e = 0; e < parts[j]; ++e) l *= s;
          lv.push_back(l);
          idx.push_back(j);
        }
        auto w = first_unbalanced(tally_columns(collapsed, idx), lv, expected);
        if (!w) return false;
        w->columns = chosen;
        w->composition = parts;
        w->context = "SOA collapse";
        found = std::move(w);
        return true;
      };
      comp.clear();
      return for_each_composition(t, static_cast<int>(chosen.size()), comp, per_comp);
    };
    sub.clear();
    for_each_subset(a.factors(), g, sub, 0, per_subset);
  }
  return found ? VerificationReport(std::move(*found)) : VerificationReport();
}

VerificationReport verify_goa(const GroupedArray& g) {
  if (g.levels < 2 || g.groups.empty()) throw ParameterError("GOA needs s >= 2 and one group");
  const Array flat = g.flatten();
  const long long cube = static_cast<long long>(g.levels) * g.levels * g.levels;
  if (static_cast<long long>(flat.runs()) % cube != 0) throw ParameterError("s^3 does not divide n");
  const auto cols = flat.columns();
  const std::size_t m = g.groups.size();
  const long long expected = static_cast<long long>(flat.runs()) / cube;
  const std::vector<int> lv(3, g.levels);

  auto test = [&](std::vector<std::size_t> which, const char* family) -> std::optional<Witness> {
    auto w = first_unbalanced(tally_columns(cols, which), lv, expected);
    if (w) {
      w->columns = std::move(which);
      w->context = family;
    }
    return w;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k)
        if (auto w = test({3 * i, 3 * j, 3 * k}, "GOA (a_i,a_j,a_k)")) return VerificationReport(*w);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j)
        if (auto w = test({3 * i, 3 * i + 1, 3 * j}, "GOA (a_i,b_i,a_j)")) return VerificationReport(*w);
  for (std::size_t i = 0; i < m; ++i)
    if (auto w = test({3 * i, 3 * i + 1, 3 * i + 2}, "GOA (a_i,b_i,c_i)")) return VerificationReport(*w);
  return {};
}

}  // namespace soakit::serial
