#include "soakit/array.hpp"

#include <string>

#include "soakit/error.hpp"

namespace soakit {

Array::Array(std::size_t runs, std::vector<int> levels, std::vector<int> cells)
    : runs_(runs), levels_(std::move(levels)), cells_(std::move(cells)) {
  if (runs_ == 0 || levels_.empty()) throw ParameterError("array needs at least one run and one column");
  if (cells_.size() != runs_ * levels_.size())
    throw ParameterError("cell count " + std::to_string(cells_.size()) + " does not match " +
                         std::to_string(runs_) + "x" + std::to_string(levels_.size()));
  for (std::size_t j = 0; j < levels_.size(); ++j)
    if (levels_[j] < 1) throw ParameterError("column " + std::to_string(j) + " has no levels");
  for (std::size_t i = 0; i < runs_; ++i) {
    for (std::size_t j = 0; j < levels_.size(); ++j) {
      const int v = cells_[i * levels_.size() + j];
      if (v < 0 || v >= levels_[j])
        throw ParameterError("cell (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                             std::to_string(v) + " outside [0," + std::to_string(levels_[j]) + ")");
    }
  }
}

Array Array::from_rows(const std::vector<std::vector<int>>& rows, std::vector<int> levels) {
  std::vector<int> cells;
  cells.reserve(rows.size() * levels.size());
  for (const auto& r : rows) {
    if (r.size() != levels.size()) throw ParameterError("ragged row");
    cells.insert(cells.end(), r.begin(), r.end());
  }
  return Array(rows.size(), std::move(levels), std::move(cells));
}

Array Array::from_rows(const std::vector<std::vector<int>>& rows, int levels) {
  if (rows.empty()) throw ParameterError("array needs at least one run and one column");
  return from_rows(rows, std::vector<int>(rows.front().size(), levels));
}

Array Array::from_columns(const std::vector<Column>& columns, std::vector<int> levels) {
  if (columns.size() != levels.size()) throw ParameterError("column/level count mismatch");
  if (columns.empty()) throw ParameterError("array needs at least one run and one column");
  const std::size_t n = columns.front().size();
  std::vector<int> cells(n * columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != n) throw ParameterError("column lengths differ");
    for (std::size_t i = 0; i < n; ++i) cells[i * columns.size() + j] = columns[j][i];
  }
  return Array(n, std::move(levels), std::move(cells));
}

Array Array::from_columns(const std::vector<Column>& columns, int levels) {
  return from_columns(columns, std::vector<int>(columns.size(), levels));
}

Column Array::column(std::size_t c) const {
  Column col(runs_);
  for (std::size_t i = 0; i < runs_; ++i) col[i] = (*this)(i, c);
  return col;
}

std::vector<Column> Array::columns() const {
  std::vector<Column> out;
  out.reserve(factors());
  for (std::size_t c = 0; c < factors(); ++c) out.push_back(column(c));
  return out;
}

std::optional<int> Array::symmetric_levels() const {
  for (int l : levels_)
    if (l != levels_.front()) return std::nullopt;
  return levels_.front();
}

Array Array::with_column(const Column& col, int levels) const {
  if (col.size() != runs_) throw ParameterError("new column length differs from run count");
  auto cols = columns();
  cols.push_back(col);
  auto lv = levels_;
  lv.push_back(levels);
  return from_columns(cols, std::move(lv));
}

Array Array::without_column(std::size_t c) const {
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < factors(); ++j)
    if (j != c) keep.push_back(j);
  return select_columns(keep);
}

Array Array::select_columns(std::span<const std::size_t> cols) const {
  std::vector<int> lv;
  std::vector<int> cells;
  cells.reserve(runs_ * cols.size());
  for (auto c : cols) {
    if (c >= factors()) throw ParameterError("column index " + std::to_string(c) + " out of range");
    lv.push_back(levels_[c]);
  }
  for (std::size_t i = 0; i < runs_; ++i)
    for (auto c : cols) cells.push_back((*this)(i, c));
  return Array(runs_, std::move(lv), std::move(cells));
}

Array Array::select_rows(std::span<const std::size_t> rows) const {
  std::vector<int> cells;
  cells.reserve(rows.size() * factors());
  for (auto r : rows) {
    if (r >= runs_) throw ParameterError("row index " + std::to_string(r) + " out of range");
    auto rr = row(r);
    cells.insert(cells.end(), rr.begin(), rr.end());
  }
  return Array(rows.size(), levels_, std::move(cells));
}

Array Array::with_cell(std::size_t row, std::size_t col, int value) const {
  auto cells = cells_;
  cells.at(row * factors() + col) = value;
  return Array(runs_, levels_, std::move(cells));
}

Array full_factorial(int s, std::size_t m) {
  std::size_t n = 1;
  for (std::size_t j = 0; j < m; ++j) n *= static_cast<std::size_t>(s);
  std::vector<int> cells(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t code = i;
    for (std::size_t j = m; j-- > 0;) {
      cells[i * m + j] = static_cast<int>(code % s);
      code /= s;
    }
  }
  return Array(n, std::vector<int>(m, s), std::move(cells));
}

}  // namespace soakit
