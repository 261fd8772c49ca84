#include "soakit/verify.hpp"

#include <sstream>
#include <string>

#include "kernels.hpp"
#include "soakit/error.hpp"

namespace soakit {
namespace {

template <class T>
std::string join(const std::vector<T>& v, const char* open, const char* close) {
  std::ostringstream os;
  os << open;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << close;
  return os.str();
}

std::vector<const int*> pointers(const std::vector<Column>& cols, const std::vector<std::size_t>& idx) {
  std::vector<const int*> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(cols[i].data());
  return out;
}

void check_oa_params(const Array& a, std::size_t strength) {
  if (strength < 1 || strength > a.factors())
    throw ParameterError("strength " + std::to_string(strength) + " outside [1," +
                         std::to_string(a.factors()) + "]");
}

long long subset_cells(const Array& a, const std::vector<std::size_t>& subset) {
  long long cells = 1;
  for (auto c : subset) cells *= a.levels()[c];
  if (static_cast<long long>(a.runs()) % cells != 0)
    throw ParameterError("level product " + std::to_string(cells) + " of columns " +
                         join(subset, "{", "}") + " does not divide n = " + std::to_string(a.runs()));
  return cells;
}

}  // namespace

std::string to_string(const Witness& w) {
  std::ostringstream os;
  if (!w.context.empty()) os << w.context << ": ";
  if (!w.columns.empty()) os << "columns " << join(w.columns, "{", "}") << " ";
  if (!w.composition.empty()) os << "composition " << join(w.composition, "(", ")") << " ";
  os << "combination " << join(w.combination, "(", ")") << " observed " << w.observed
     << ", expected " << w.expected;
  return os.str();
}

int SoaParams::levels() const { return static_cast<int>(int_pow(base, strength)); }

long long int_pow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t m, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > m) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  if (parts < 1 || total < parts) return out;
  if (parts == 1) return {{total}};
  for (int first = 1; first <= total - parts + 1; ++first) {
    for (auto& rest : compositions(total - first, parts - 1)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  }
  return out;
}

Column collapse_column(const Column& col, int base, int strength, int parts) {
  if (parts < 1 || parts > strength)
    throw ParameterError("collapse parts " + std::to_string(parts) + " outside [1," +
                         std::to_string(strength) + "]");
  const long long full = int_pow(base, strength);
  const auto divisor = static_cast<int>(int_pow(base, strength - parts));
  Column out(col.size());
  for (std::size_t i = 0; i < col.size(); ++i) {
    if (col[i] < 0 || col[i] >= full)
      throw ParameterError("entry " + std::to_string(col[i]) + " outside [0," + std::to_string(full) + ")");
    out[i] = col[i] / divisor;
  }
  return out;
}

Array GroupedArray::flatten() const {
  std::vector<Column> cols;
  for (const auto& g : groups) {
    cols.push_back(g.a);
    cols.push_back(g.b);
    cols.push_back(g.c);
  }
  return Array::from_columns(cols, levels);
}

GroupedArray GroupedArray::unflatten(const Array& a) {
  if (a.factors() % 3 != 0) throw ParameterError("grouped array needs a multiple of three columns");
  auto s = a.symmetric_levels();
  if (!s) throw ParameterError("grouped array columns must share one level count");
  GroupedArray g{*s, {}};
  for (std::size_t i = 0; i < a.factors(); i += 3) g.groups.push_back({a.column(i), a.column(i + 1), a.column(i + 2)});
  return g;
}

VerificationReport verify_oa(const Array& a, std::size_t strength) {
  check_oa_params(a, strength);
  const auto subs = subsets(a.factors(), strength);
  std::vector<long long> expected;
  expected.reserve(subs.size());
  for (const auto& sub : subs) expected.push_back(static_cast<long long>(a.runs()) / subset_cells(a, sub));

  const auto cols = a.columns();
  auto w = detail::first_failure(subs.size(), [&](std::size_t i) -> std::optional<Witness> {
    thread_local std::vector<long long> scratch;
    std::vector<int> lv;
    for (auto c : subs[i]) lv.push_back(a.levels()[c]);
    const auto ptrs = pointers(cols, subs[i]);
    auto bad = detail::find_imbalance(ptrs, lv, a.runs(), expected[i], scratch);
    if (!bad) return std::nullopt;
    return Witness{subs[i], {}, std::move(bad->combination), bad->observed, bad->expected,
                   "OA strength " + std::to_string(strength)};
  });
  return w ? VerificationReport(std::move(*w)) : VerificationReport();
}

namespace {

void check_soa_params(const Array& a, const SoaParams& p) {
  if (p.base < 2 || p.strength < 1) throw ParameterError("SOA needs base >= 2 and strength >= 1");
  const int full = p.levels();
  for (std::size_t j = 0; j < a.factors(); ++j)
    if (a.levels()[j] != full)
      throw ParameterError("column " + std::to_string(j) + " has " + std::to_string(a.levels()[j]) +
                           " levels, expected " + std::to_string(full));
  if (a.runs() % static_cast<std::size_t>(full) != 0)
    throw ParameterError(std::to_string(full) + " does not divide n = " + std::to_string(a.runs()));
}

struct SoaTask {
  std::vector<std::size_t> subset;
  std::vector<int> composition;
};

}  // namespace

VerificationReport verify_soa(const Array& a, SoaParams params) {
  check_soa_params(a, params);
  const int s = params.base;
  const int t = params.strength;

  // collapsed[c][u-1]: column c at s^u levels
  std::vector<std::vector<Column>> collapsed(a.factors());
  for (std::size_t c = 0; c < a.factors(); ++c) {
    const Column col = a.column(c);
    for (int u = 1; u <= t; ++u) collapsed[c].push_back(collapse_column(col, s, t, u));
  }

  std::vector<SoaTask> tasks;
  const int max_g = std::min<int>(t, static_cast<int>(a.factors()));
  for (int g = 1; g <= max_g; ++g)
    for (auto& sub : subsets(a.factors(), g))
      for (auto& comp : compositions(t, g)) tasks.push_back({sub, comp});

  const long long expected = static_cast<long long>(a.runs()) / params.levels();
  auto w = detail::first_failure(tasks.size(), [&](std::size_t i) -> std::optional<Witness> {
    thread_local std::vector<long long> scratch;
    const auto& task = tasks[i];
    std::vector<const int*> ptrs;
    std::vector<int> lv;
    for (std::size_t j = 0; j < task.subset.size(); ++j) {
      ptrs.push_back(collapsed[task.subset[j]][task.composition[j] - 1].data());
      lv.push_back(static_cast<int>(int_pow(s, task.composition[j])));
    }
    auto bad = detail::find_imbalance(ptrs, lv, a.runs(), expected, scratch);
    if (!bad) return std::nullopt;
    return Witness{task.subset, task.composition, std::move(bad->combination), bad->observed,
                   bad->expected, "SOA collapse"};
  });
  return w ? VerificationReport(std::move(*w)) : VerificationReport();
}

namespace detail {

struct GoaTask {
  std::vector<std::size_t> columns;  // into the flattened array
  const char* family;
};

std::vector<GoaTask> goa_tasks(std::size_t m) {
  std::vector<GoaTask> tasks;
  for (auto& t : subsets(m, 3)) tasks.push_back({{3 * t[0], 3 * t[1], 3 * t[2]}, "GOA (a_i,a_j,a_k)"});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j) tasks.push_back({{3 * i, 3 * i + 1, 3 * j}, "GOA (a_i,b_i,a_j)"});
  for (std::size_t i = 0; i < m; ++i) tasks.push_back({{3 * i, 3 * i + 1, 3 * i + 2}, "GOA (a_i,b_i,c_i)"});
  return tasks;
}

Array checked_goa_array(const GroupedArray& g) {
  if (g.levels < 2) throw ParameterError("GOA needs at least two levels");
  if (g.groups.empty()) throw ParameterError("GOA needs at least one group");
  const std::size_t n = g.runs();
  for (const auto& grp : g.groups)
    if (grp.a.size() != n || grp.b.size() != n || grp.c.size() != n)
      throw ParameterError("GOA column lengths differ");
  Array flat = g.flatten();
  const long long cube = int_pow(g.levels, 3);
  if (static_cast<long long>(n) % cube != 0)
    throw ParameterError("s^3 = " + std::to_string(cube) + " does not divide n = " + std::to_string(n));
  return flat;
}

}  // namespace detail

VerificationReport verify_goa(const GroupedArray& g) {
  const Array flat = detail::checked_goa_array(g);
  const auto tasks = detail::goa_tasks(g.groups.size());
  const auto cols = flat.columns();
  const long long expected = static_cast<long long>(flat.runs()) / int_pow(g.levels, 3);
  const std::vector<int> lv(3, g.levels);
  auto w = detail::first_failure(tasks.size(), [&](std::size_t i) -> std::optional<Witness> {
    thread_local std::vector<long long> scratch;
    const auto ptrs = pointers(cols, tasks[i].columns);
    auto bad = detail::find_imbalance(ptrs, lv, flat.runs(), expected, scratch);
    if (!bad) return std::nullopt;
    return Witness{tasks[i].columns, {}, std::move(bad->combination), bad->observed, bad->expected,
                   tasks[i].family};
  });
  return w ? VerificationReport(std::move(*w)) : VerificationReport();
}

}  // namespace soakit
