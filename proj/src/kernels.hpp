// Shared counting kernels and the deterministic parallel first-failure driver.
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "soakit/verify.hpp"

namespace soakit::detail {

struct Imbalance {
  std::vector<int> combination;
  long long observed;
  long long expected;
};

/// Counts level combinations over the given columns with one flat counter per
/// combination (first column most significant) and returns the
/// lexicographically first combination whose count differs from expected.
/// `counts` is scratch storage reused across calls.
inline std::optional<Imbalance> find_imbalance(std::span<const int* const> cols,
                                               std::span<const int> levels, std::size_t runs,
                                               long long expected, std::vector<long long>& counts) {
  std::size_t cells = 1;
  for (int l : levels) cells *= static_cast<std::size_t>(l);
  counts.assign(cells, 0);
  for (std::size_t r = 0; r < runs; ++r) {
    std::size_t key = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) key = key * levels[j] + cols[j][r];
    ++counts[key];
  }
  for (std::size_t key = 0; key < cells; ++key) {
    if (counts[key] == expected) continue;
    Imbalance out{std::vector<int>(cols.size()), counts[key], expected};
    std::size_t code = key;
    for (std::size_t j = cols.size(); j-- > 0;) {
      out.combination[j] = static_cast<int>(code % levels[j]);
      code /= levels[j];
    }
    return out;
  }
  return std::nullopt;
}

/// Runs check(i) for i in [0, count) and returns the witness of the smallest
/// failing i. Under OpenMP the tasks run concurrently; tasks above the current
/// best failure are skipped, and every task below it still runs, so the result
/// equals the serial first failure.
template <class Check>
std::optional<Witness> first_failure(std::size_t count, const Check& check) {
  std::size_t best = count;
  std::optional<Witness> found;
  const auto total = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < total; ++i) {
    std::size_t current;
#pragma omp atomic read
    current = best;
    if (static_cast<std::size_t>(i) > current) continue;
    std::optional<Witness> w = check(static_cast<std::size_t>(i));
    if (w) {
#pragma omp critical(soakit_first_failure)
      {
        if (static_cast<std::size_t>(i) < best) {
#pragma omp atomic write
          best = static_cast<std::size_t>(i);
          found = std::move(w);
        }
      }
    }
  }
  return found;
}

}  // namespace soakit::detail
