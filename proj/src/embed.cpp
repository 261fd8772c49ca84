#include "soakit/embed.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "soakit/coincidence.hpp"
#include "soakit/error.hpp"
#include "soakit/verify.hpp"

namespace soakit {
namespace {

int require_symmetric(const Array& a, const char* what) {
  const auto s = a.symmetric_levels();
  if (!s) throw ParameterError(std::string(what) + " needs symmetric levels");
  return *s;
}

void require_oa(const Array& a, int strength, const char* what) {
  if (strength < 1 || static_cast<std::size_t>(strength) > a.factors())
    throw ParameterError(std::string(what) + ": strength " + std::to_string(strength) + " outside [1," +
                         std::to_string(a.factors()) + "]");
  const auto report = verify_oa(a, static_cast<std::size_t>(strength));
  if (!report.passed())
    throw ParameterError(std::string(what) + ": input is not an OA of strength " + std::to_string(strength) +
                         " (" + to_string(*report.witness()) + ")");
}

// Exact search for a column x such that, for every (t-1)-subset S of the
// existing columns and every level combination on S, each level of x occurs
// exactly lambda = n/s^t times among the matching rows. Each (S, combination)
// pair is a "group" of lambda*s rows.
//
// Propagation keeps, per (group, level), the assigned count and the number of
// unassigned rows still able to take that level. A level is removed from a
// group once its quota is met; when the able rows exactly cover the remaining
// quota they are all forced; a row left with one level is forced.
class ExtensionSearch {
 public:
  ExtensionSearch(const Array& a, int strength, int levels) : n_(a.runs()), s_(levels) {
    const long long cube = int_pow(s_, strength);
    quota_ = static_cast<int>(static_cast<long long>(n_) / cube);
    const auto subs = subsets(a.factors(), static_cast<std::size_t>(strength - 1));
    const auto combos = static_cast<std::size_t>(int_pow(s_, strength - 1));
    groups_per_row_ = subs.size();
    const std::size_t groups = subs.size() * combos;
    row_groups_.resize(n_ * groups_per_row_);
    group_rows_.resize(groups);
    for (std::size_t si = 0; si < subs.size(); ++si) {
      for (std::size_t r = 0; r < n_; ++r) {
        std::size_t key = 0;
        for (auto c : subs[si]) key = key * s_ + static_cast<std::size_t>(a(r, c));
        const std::size_t g = si * combos + key;
        row_groups_[r * groups_per_row_ + si] = g;
        group_rows_[g].push_back(r);
      }
    }
    full_ = s_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s_) - 1;
    root_.domain.assign(n_, full_);
    root_.value.assign(n_, -1);
    root_.count.assign(groups * s_, 0);
    root_.able.resize(groups * s_);
    for (std::size_t g = 0; g < groups; ++g)
      for (int v = 0; v < s_; ++v) root_.able[g * s_ + v] = static_cast<int>(group_rows_[g].size());
  }

  EmbeddingReport run() {
    nodes_ = 0;
    EmbeddingReport report;
    if (auto sol = descend(root_, 0)) report.extension = std::move(*sol);
    report.search_nodes = nodes_;
    return report;
  }

 private:
  struct State {
    std::vector<std::uint64_t> domain;
    std::vector<int> value;
    std::vector<int> count;  // assigned rows per (group, level)
    std::vector<int> able;   // unassigned rows per (group, level) whose domain holds the level
    std::vector<std::pair<std::size_t, int>> pending;
  };

  std::size_t group_of(std::size_t r, std::size_t k) const { return row_groups_[r * groups_per_row_ + k]; }

  // Checks the quota of (g, v) and queues forced rows when the able rows
  // exactly cover what is still missing.
  bool check_quota(State& st, std::size_t g, int v) const {
    const std::size_t idx = g * s_ + v;
    const int need = quota_ - st.count[idx];
    if (need < 0 || st.able[idx] < need) return false;
    if (need > 0 && st.able[idx] == need) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      for (auto r : group_rows_[g])
        if (st.value[r] < 0 && (st.domain[r] & bit)) st.pending.emplace_back(r, v);
    }
    return true;
  }

  bool remove(State& st, std::size_t r, int v) const {
    const std::uint64_t bit = std::uint64_t{1} << v;
    if (!(st.domain[r] & bit)) return true;
    st.domain[r] &= ~bit;
    if (st.domain[r] == 0) return false;
    for (std::size_t k = 0; k < groups_per_row_; ++k) {
      const std::size_t g = group_of(r, k);
      --st.able[g * s_ + v];
      if (!check_quota(st, g, v)) return false;
    }
    if (std::has_single_bit(st.domain[r])) st.pending.emplace_back(r, std::countr_zero(st.domain[r]));
    return true;
  }

  bool assign(State& st, std::size_t r, int v) const {
    if (st.value[r] >= 0) return st.value[r] == v;
    const std::uint64_t bit = std::uint64_t{1} << v;
    if (!(st.domain[r] & bit)) return false;
    const std::uint64_t others = st.domain[r] & ~bit;
    st.value[r] = v;
    st.domain[r] = bit;
    for (std::size_t k = 0; k < groups_per_row_; ++k) {
      const std::size_t g = group_of(r, k);
      for (std::uint64_t rest = others; rest; rest &= rest - 1) --st.able[g * s_ + std::countr_zero(rest)];
      --st.able[g * s_ + v];
      ++st.count[g * s_ + v];
    }
    for (std::size_t k = 0; k < groups_per_row_; ++k) {
      const std::size_t g = group_of(r, k);
      if (st.count[g * s_ + v] > quota_) return false;
      if (st.count[g * s_ + v] == quota_) {
        for (auto other : group_rows_[g])
          if (st.value[other] < 0 && !remove(st, other, v)) return false;
      }
      for (int w = 0; w < s_; ++w)
        if (!check_quota(st, g, w)) return false;
    }
    return true;
  }

  bool propagate(State& st, std::size_t r, int v) const {
    st.pending.clear();
    st.pending.emplace_back(r, v);
    while (!st.pending.empty()) {
      auto [row, level] = st.pending.back();
      st.pending.pop_back();
      if (!assign(st, row, level)) return false;
    }
    return true;
  }

  // Rows are branched in index order with levels ascending, so the first
  // solution found is the lexicographically least. Level relabeling maps
  // solutions to solutions, so the least one introduces levels in increasing
  // order: a branched row may use at most one more than the largest level in
  // the (fully assigned) prefix before it.
  std::optional<Column> descend(const State& st, std::size_t from) {
    std::size_t r = from;
    while (r < n_ && st.value[r] >= 0) ++r;
    if (r == n_) return Column(st.value.begin(), st.value.end());
    int prefix_max = -1;
    for (std::size_t i = 0; i < r; ++i) prefix_max = std::max(prefix_max, st.value[i]);
    const int cap = std::min(prefix_max + 1, s_ - 1);
    for (int v = 0; v <= cap; ++v) {
      if (!(st.domain[r] & (std::uint64_t{1} << v))) continue;
      ++nodes_;
      State next = st;
      if (!propagate(next, r, v)) continue;
      if (auto sol = descend(next, r + 1)) return sol;
    }
    return std::nullopt;
  }

  std::size_t n_;
  int s_;
  int quota_;
  std::uint64_t full_;
  std::size_t groups_per_row_;
  std::vector<std::size_t> row_groups_;
  std::vector<std::vector<std::size_t>> group_rows_;
  State root_;
  std::uint64_t nodes_ = 0;
};

std::vector<ChildArray> all_children(const Array& a, int strength) {
  std::vector<ChildArray> out;
  for (std::size_t c = 0; c < a.factors(); ++c) {
    auto kids = branch(a, c, strength);
    for (auto& k : kids) out.push_back(std::move(k));
  }
  return out;
}

std::optional<SemiEmbedReport> short_circuit(const Array& a, int strength, int s) {
  const auto n = static_cast<long long>(a.runs());
  if (strength == 3 && s >= 3 && n == 2 * int_pow(s, 3) && a.factors() == static_cast<std::size_t>(s + 2) &&
      !repeated_runs(a).empty())
    return SemiEmbedReport{false, {}, ShortCircuit::RepeatedRun};
  return std::nullopt;
}

void semi_embed_checks(const Array& a, int strength) {
  require_symmetric(a, "semi-embeddability");
  if (strength < 2) throw ParameterError("semi-embeddability needs strength >= 2");
  require_oa(a, strength, "semi-embeddability");
}

}  // namespace

std::string to_string(ShortCircuit sc) {
  switch (sc) {
    case ShortCircuit::RepeatedRun:
      return "repeated-run";
  }
  return "unknown";
}

std::vector<ChildArray> branch(const Array& a, std::size_t column, int strength) {
  const int s = require_symmetric(a, "branching");
  if (strength < 2) throw ParameterError("branching needs strength >= 2");
  if (column >= a.factors()) throw ParameterError("branch column " + std::to_string(column) + " out of range");
  require_oa(a, strength, "branching");
  std::vector<ChildArray> out;
  const Array rest = a.without_column(column);
  for (int v = 0; v < s; ++v) {
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < a.runs(); ++r)
      if (a(r, column) == v) rows.push_back(r);
    out.push_back({column, v, rows, rest.select_rows(rows)});
  }
  return out;
}

EmbeddingReport find_extension(const Array& a, int strength) {
  const int s = require_symmetric(a, "extension search");
  if (s > 64) throw ParameterError("extension search supports at most 64 levels");
  if (strength < 1) throw ParameterError("extension search needs strength >= 1");
  if (static_cast<long long>(a.runs()) % int_pow(s, strength) != 0)
    throw ParameterError("s^t does not divide n = " + std::to_string(a.runs()));
  require_oa(a, strength, "extension search");
  return ExtensionSearch(a, strength, s).run();
}

SemiEmbedReport is_semi_embeddable(const Array& a, int strength) {
  semi_embed_checks(a, strength);
  const int s = *a.symmetric_levels();
  if (auto sc = short_circuit(a, strength, s)) return *sc;

  const auto children = all_children(a, strength);
  const std::size_t total = children.size();
  std::vector<EmbeddingReport> reports(total);
  std::size_t first_bad = total;
  const auto count = static_cast<std::ptrdiff_t>(total);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    std::size_t current;
#pragma omp atomic read
    current = first_bad;
    if (static_cast<std::size_t>(i) > current) continue;
    reports[i] = find_extension(children[i].array, strength - 1);
    if (!reports[i].embeddable()) {
#pragma omp critical(soakit_semi_embed)
      {
        if (static_cast<std::size_t>(i) < first_bad) {
#pragma omp atomic write
          first_bad = static_cast<std::size_t>(i);
        }
      }
    }
  }
  SemiEmbedReport out;
  out.semi_embeddable = first_bad == total;
  const std::size_t keep = std::min(total, first_bad + 1);
  for (std::size_t i = 0; i < keep; ++i)
    out.per_child.push_back({children[i].parent_column, children[i].branch_level, std::move(reports[i])});
  return out;
}

SemiEmbedReport serial::is_semi_embeddable(const Array& a, int strength) {
  semi_embed_checks(a, strength);
  const int s = *a.symmetric_levels();
  if (auto sc = short_circuit(a, strength, s)) return *sc;
  SemiEmbedReport out;
  out.semi_embeddable = true;
  for (const auto& child : all_children(a, strength)) {
    out.per_child.push_back({child.parent_column, child.branch_level, find_extension(child.array, strength - 1)});
    if (!out.per_child.back().report.embeddable()) {
      out.semi_embeddable = false;
      break;
    }
  }
  return out;
}

std::pair<Array, BoundsWitness> max_extension(const Array& a, int strength, std::size_t column_limit) {
  const int s = require_symmetric(a, "extension chase");
  Array cur = a;
  bool exhaustive = false;
  while (cur.factors() < column_limit) {
    auto report = find_extension(cur, strength);
    if (!report.embeddable()) {
      exhaustive = true;
      break;
    }
    cur = cur.with_column(*report.extension, s);
  }
  BoundsWitness w{cur.runs(), s, strength, cur.factors(), exhaustive};
  return {std::move(cur), w};
}

}  // namespace soakit
