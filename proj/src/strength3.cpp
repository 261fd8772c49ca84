#include "soakit/strength3.hpp"

#include <string>

#include "soakit/embed.hpp"
#include "soakit/error.hpp"

namespace soakit {
namespace {

int require_base(const Array& d, int base) {
  if (base < 2) throw ParameterError("base must be at least 2");
  const int cube = base * base * base;
  for (std::size_t j = 0; j < d.factors(); ++j)
    if (d.levels()[j] != cube)
      throw ParameterError("column " + std::to_string(j) + " has " + std::to_string(d.levels()[j]) +
                           " levels, expected s^3 = " + std::to_string(cube));
  return cube;
}

std::pair<Array, SoaBuildTrace> finish(SoaBuildTrace trace, const BuildOptions& opts) {
  Array d = goa_to_soa(trace.goa, opts);
  if (opts.verify) {
    const auto report = verify_soa(d, {trace.goa.levels, 3});
    if (!report.passed()) throw ConstructionError("assembled array is not an SOA: " + to_string(*report.witness()));
  }
  return {std::move(d), std::move(trace)};
}

SoaBuildTrace assemble(const Array& a, std::vector<Column> b, SoaBuildTrace::Source source) {
  const std::size_t m = a.factors();
  SoaBuildTrace trace{source, std::move(b), {}, GroupedArray{*a.symmetric_levels(), {}}};
  for (std::size_t i = 0; i < m; ++i) trace.c_columns.push_back(a.column((i + 1) % m));
  for (std::size_t i = 0; i < m; ++i) trace.goa.groups.push_back({a.column(i), trace.b_columns[i], trace.c_columns[i]});
  return trace;
}

void require_oa3(const Array& a, std::size_t min_columns, const char* what) {
  const auto s = a.symmetric_levels();
  if (!s || *s < 2) throw ParameterError(std::string(what) + " needs a symmetric array with s >= 2");
  if (a.factors() < min_columns)
    throw ParameterError(std::string(what) + " needs at least " + std::to_string(min_columns) + " columns");
  const auto report = verify_oa(a, 3);
  if (!report.passed())
    throw ParameterError(std::string(what) + ": input is not an OA of strength 3 (" + to_string(*report.witness()) + ")");
}

}  // namespace

Array goa_to_soa(const GroupedArray& g, BuildOptions opts) {
  if (opts.verify) {
    const auto report = verify_goa(g);
    if (!report.passed()) throw ConstructionError("not a GOA: " + to_string(*report.witness()));
  }
  const int s = g.levels;
  if (s < 2 || g.groups.empty()) throw ParameterError("grouped array needs s >= 2 and one group");
  std::vector<Column> cols;
  for (const auto& grp : g.groups) {
    if (grp.a.size() != g.runs() || grp.b.size() != g.runs() || grp.c.size() != g.runs())
      throw ParameterError("grouped array column lengths differ");
    Column d(g.runs());
    for (std::size_t r = 0; r < d.size(); ++r) d[r] = grp.a[r] * s * s + grp.b[r] * s + grp.c[r];
    cols.push_back(std::move(d));
  }
  return Array::from_columns(cols, s * s * s);
}

GroupedArray soa_to_goa(const Array& d, int base) {
  require_base(d, base);
  GroupedArray g{base, {}};
  const int s = base;
  for (std::size_t j = 0; j < d.factors(); ++j) {
    ColumnTriple t{Column(d.runs()), Column(d.runs()), Column(d.runs())};
    for (std::size_t r = 0; r < d.runs(); ++r) {
      const int v = d(r, j);
      t.a[r] = v / (s * s);
      t.b[r] = (v / s) % s;
      t.c[r] = v % s;
    }
    g.groups.push_back(std::move(t));
  }
  return g;
}

Array extract_underlying_oa(const Array& d, int base) {
  require_base(d, base);
  std::vector<Column> cols;
  for (std::size_t j = 0; j < d.factors(); ++j) cols.push_back(collapse_column(d.column(j), base, 3, 1));
  return Array::from_columns(cols, base);
}

std::pair<Array, SoaBuildTrace> soa_from_embeddable(const Array& a_plus, BuildOptions opts) {
  require_oa3(a_plus, 3, "building from an embeddable OA");
  const std::size_t m = a_plus.factors() - 1;
  const Array a = a_plus.without_column(m);
  const Column shared = a_plus.column(m);
  return finish(assemble(a, std::vector<Column>(m, shared), SoaBuildTrace::Source::Embeddable), opts);
}

std::pair<Array, SoaBuildTrace> soa_from_semi_embeddable(const Array& a, BuildOptions opts) {
  require_oa3(a, 2, "building from a semi-embeddable OA");
  const std::size_t m = a.factors();
  std::vector<Column> b(m, Column(a.runs()));
  std::vector<std::string> failures(m);
  const auto count = static_cast<std::ptrdiff_t>(m);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      for (const auto& child : branch(a, static_cast<std::size_t>(i), 3)) {
        const auto report = find_extension(child.array, 2);
        if (!report.embeddable()) {
          failures[i] = "child (column " + std::to_string(i) + ", level " + std::to_string(child.branch_level) +
                        ") is not embeddable; the input is not semi-embeddable";
          break;
        }
        for (std::size_t k = 0; k < child.rows.size(); ++k) b[i][child.rows[k]] = (*report.extension)[k];
      }
    } catch (const std::exception& e) {
      failures[i] = e.what();
    }
  }
  for (const auto& f : failures)
    if (!f.empty()) throw ConstructionError(f);
  return finish(assemble(a, std::move(b), SoaBuildTrace::Source::SemiEmbeddable), opts);
}

}  // namespace soakit
