#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace soakit {

using Column = std::vector<int>;

/// n x m integer matrix with a level count per column; cell (i, j) lies in
/// [0, levels[j]). Carrier for every OA, SOA, GOA and child array.
class Array {
 public:
  /// cells are row-major, size n * levels.size(). Throws ParameterError on an
  /// empty shape or a cell outside its column's level range.
  Array(std::size_t runs, std::vector<int> levels, std::vector<int> cells);

  static Array from_rows(const std::vector<std::vector<int>>& rows, std::vector<int> levels);
  static Array from_rows(const std::vector<std::vector<int>>& rows, int levels);
  static Array from_columns(const std::vector<Column>& columns, std::vector<int> levels);
  static Array from_columns(const std::vector<Column>& columns, int levels);

  std::size_t runs() const noexcept { return runs_; }
  std::size_t factors() const noexcept { return levels_.size(); }
  const std::vector<int>& levels() const noexcept { return levels_; }
  const std::vector<int>& cells() const noexcept { return cells_; }

  int operator()(std::size_t row, std::size_t col) const { return cells_[row * factors() + col]; }
  std::span<const int> row(std::size_t r) const {
    return {cells_.data() + r * factors(), factors()};
  }
  Column column(std::size_t c) const;
  std::vector<Column> columns() const;

  /// The common level count when every column has the same one.
  std::optional<int> symmetric_levels() const;

  Array with_column(const Column& col, int levels) const;
  Array without_column(std::size_t c) const;
  Array select_columns(std::span<const std::size_t> cols) const;
  Array select_rows(std::span<const std::size_t> rows) const;
  Array with_cell(std::size_t row, std::size_t col, int value) const;

  bool operator==(const Array&) const = default;

 private:
  std::size_t runs_;
  std::vector<int> levels_;
  std::vector<int> cells_;
};

/// Full factorial s^m in lexicographic row order (first column slowest).
Array full_factorial(int s, std::size_t m);

}  // namespace soakit
