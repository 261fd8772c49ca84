#include "soakit/nets.hpp"

#include <numeric>
#include <string>

#include "kernels.hpp"
#include "soakit/error.hpp"

namespace soakit {

DigitPointSet::DigitPointSet(std::size_t points, std::size_t dims, int base, int digits, std::vector<int> data)
    : points_(points), dims_(dims), base_(base), digits_(digits), data_(std::move(data)) {
  if (base_ < 2 || digits_ < 0) throw ParameterError("digit set needs base >= 2");
  if (data_.size() != points_ * dims_ * static_cast<std::size_t>(digits_))
    throw ParameterError("digit tensor has the wrong size");
  for (int d : data_)
    if (d < 0 || d >= base_) throw ParameterError("digit outside [0, base)");
}

long long DigitPointSet::cell(std::size_t point, std::size_t dim, int resolution) const {
  long long c = 0;
  for (int d = 0; d < resolution; ++d) c = c * base_ + digit(point, dim, d);
  return c;
}

DigitPointSet DigitPointSet::select_dims(const std::vector<std::size_t>& dims) const {
  std::vector<int> data;
  for (std::size_t i = 0; i < points_; ++i)
    for (auto j : dims)
      for (int d = 0; d < digits_; ++d) data.push_back(digit(i, j, d));
  return DigitPointSet(points_, dims.size(), base_, digits_, std::move(data));
}

DigitPointSet soa_to_digits(const Array& a, int base, int strength) {
  if (base < 2 || strength < 1) throw ParameterError("digits need base >= 2 and strength >= 1");
  const long long full = int_pow(base, strength);
  for (std::size_t j = 0; j < a.factors(); ++j)
    if (a.levels()[j] > full)
      throw ParameterError("column " + std::to_string(j) + " has more than s^t levels");
  std::vector<int> data;
  data.reserve(a.runs() * a.factors() * static_cast<std::size_t>(strength));
  for (std::size_t i = 0; i < a.runs(); ++i) {
    for (std::size_t j = 0; j < a.factors(); ++j) {
      long long v = a(i, j);
      std::vector<int> digits(strength);
      for (int d = strength; d-- > 0;) {
        digits[d] = static_cast<int>(v % base);
        v /= base;
      }
      data.insert(data.end(), digits.begin(), digits.end());
    }
  }
  return DigitPointSet(a.runs(), a.factors(), base, strength, std::move(data));
}

namespace {

// All vectors of `parts` nonnegative integers summing to total, lexicographic.
void resolutions(int total, std::size_t parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (cur.size() + 1 == parts) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int d = 0; d <= total; ++d) {
    cur.push_back(d);
    resolutions(total - d, parts, cur, out);
    cur.pop_back();
  }
}

}  // namespace

VerificationReport verify_net(const DigitPointSet& p, int quality, int resolution) {
  const int s = p.base();
  if (resolution < 0 || quality < 0 || quality > resolution) throw ParameterError("net check needs 0 <= w <= k");
  if (static_cast<long long>(p.points()) != int_pow(s, resolution))
    throw ParameterError("net checks require a power run size: n = " + std::to_string(p.points()) + " is not " +
                         std::to_string(s) + "^" + std::to_string(resolution));
  const int depth = resolution - quality;
  if (p.digits() < depth) throw ParameterError("not enough digits per coordinate for resolution k - w");
  if (p.dims() == 0) throw ParameterError("net check needs at least one dimension");

  std::vector<std::vector<int>> shapes;
  std::vector<int> cur;
  resolutions(depth, p.dims(), cur, shapes);

  // An interval of volume s^-depth is a level combination of the columns
  // "cell index at resolution d_j", each with s^{d_j} levels.
  const long long expected = int_pow(s, quality);
  std::vector<std::vector<int>> cells(p.dims() * static_cast<std::size_t>(depth + 1));
  for (std::size_t j = 0; j < p.dims(); ++j)
    for (int d = 0; d <= depth; ++d) {
      auto& col = cells[j * (depth + 1) + d];
      col.resize(p.points());
      for (std::size_t i = 0; i < p.points(); ++i) col[i] = static_cast<int>(p.cell(i, j, d));
    }
  auto w = detail::first_failure(shapes.size(), [&](std::size_t i) -> std::optional<Witness> {
    thread_local std::vector<long long> scratch;
    std::vector<const int*> ptrs;
    std::vector<int> lv;
    for (std::size_t j = 0; j < p.dims(); ++j) {
      ptrs.push_back(cells[j * (depth + 1) + shapes[i][j]].data());
      lv.push_back(static_cast<int>(int_pow(s, shapes[i][j])));
    }
    auto bad = detail::find_imbalance(ptrs, lv, p.points(), expected, scratch);
    if (!bad) return std::nullopt;
    return Witness{{}, shapes[i], std::move(bad->combination), bad->observed, bad->expected, "elementary interval"};
  });
  return w ? VerificationReport(std::move(*w)) : VerificationReport();
}

std::uint32_t Lcg64::next() {
  state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
  return static_cast<std::uint32_t>(state_ >> 32);
}

Array latin_hypercube(const Array& a, std::uint64_t seed) {
  const std::size_t n = a.runs();
  std::vector<Column> out;
  for (std::size_t j = 0; j < a.factors(); ++j) {
    const int levels = a.levels()[j];
    if (n % static_cast<std::size_t>(levels) != 0)
      throw ParameterError("column " + std::to_string(j) + ": " + std::to_string(levels) + " levels do not divide n");
    const int reps = static_cast<int>(n / static_cast<std::size_t>(levels));
    std::vector<std::vector<std::size_t>> rows(levels);
    for (std::size_t r = 0; r < n; ++r) rows[a(r, j)].push_back(r);
    for (int v = 0; v < levels; ++v)
      if (static_cast<int>(rows[v].size()) != reps)
        throw ParameterError("column " + std::to_string(j) + " is unbalanced at level " + std::to_string(v));

    Lcg64 rng(seed ^ static_cast<std::uint64_t>(j));
    Column col(n);
    for (int v = 0; v < levels; ++v) {
      std::vector<int> fine(reps);
      std::iota(fine.begin(), fine.end(), v * reps);
      for (int i = reps - 1; i > 0; --i) {
        const auto k = static_cast<int>(rng.next() % static_cast<std::uint32_t>(i + 1));
        std::swap(fine[i], fine[k]);
      }
      for (int k = 0; k < reps; ++k) col[rows[v][k]] = fine[k];
    }
    out.push_back(std::move(col));
  }
  return Array::from_columns(out, static_cast<int>(n));
}

}  // namespace soakit
