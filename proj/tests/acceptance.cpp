// One PASS/FAIL line per acceptance criterion; exit status 0 only if all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "soakit/coincidence.hpp"
#include "soakit/construct.hpp"
#include "soakit/embed.hpp"
#include "soakit/fixtures.hpp"
#include "soakit/nets.hpp"
#include "soakit/strength3.hpp"
#include "soakit/verify.hpp"
#include "support.hpp"

using namespace soakit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Collects failed checks for one criterion.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void within(double secs, double limit, const std::string& what) {
    std::ostringstream os;
    os << what << " took " << secs << " s (limit " << limit << " s)";
    notes_.push_back(os.str());
    expect(secs < limit, os.str());
  }
  void note(const std::string& what) { notes_.push_back(what); }
  bool ok() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

Array swap_cells(const Array& a, std::size_t col, std::size_t r1, std::size_t r2) {
  return a.with_cell(r1, col, a(r2, col)).with_cell(r2, col, a(r1, col));
}

void golden_54(Checks& c) {
  for (const auto* name : {"soa-54-5-27-iii", "soa-54-5-27-iv"}) {
    const auto& a = fixture(name).file.array;
    const auto t0 = Clock::now();
    const bool ok = verify_soa(a, {3, 3}).passed();
    c.within(seconds_since(t0), 1.0, std::string(name) + " verify_soa");
    c.expect(ok, std::string(name) + " fails verify_soa(3,3)");
    c.expect(a.runs() == 54 && a.factors() == 5 && a.levels().front() == 27, std::string(name) + " has wrong shape");
    // The same check spelled out: 5 single columns, 20 ordered-pair and 10 triple collapsings.
    int checks = 0;
    for (std::size_t j = 0; j < 5; ++j, ++checks)
      c.expect(verify_oa(a.select_columns(std::vector<std::size_t>{j}), 1).passed(), "single column");
    for (const auto& pair : subsets(5, 2))
      for (auto [u, v] : {std::pair{1, 2}, {2, 1}}) {
        const auto x = Array::from_columns(
            {collapse_column(a.column(pair[0]), 3, 3, u), collapse_column(a.column(pair[1]), 3, 3, v)},
            std::vector<int>{static_cast<int>(int_pow(3, u)), static_cast<int>(int_pow(3, v))});
        c.expect(verify_oa(x, 2).passed(), "pair collapse");
        ++checks;
      }
    for (const auto& tri : subsets(5, 3)) {
      std::vector<Column> cols;
      for (auto j : tri) cols.push_back(collapse_column(a.column(j), 3, 3, 1));
      c.expect(verify_oa(Array::from_columns(cols, 3), 3).passed(), "triple collapse");
      ++checks;
    }
    c.expect(checks == 5 + 20 + 10, "collapsing count");
  }
}

void golden_8(Checks& c) {
  const auto& a = fixture("soa-8-3-8").file.array;
  c.expect(verify_soa(a, {2, 3}).passed(), "soa-8-3-8 fails verify_soa(2,3)");
  int swaps = 0, survivors = 0, survivors_same_prefix = 0;
  for (std::size_t col = 0; col < a.factors(); ++col)
    for (std::size_t r1 = 0; r1 < a.runs(); ++r1)
      for (std::size_t r2 = r1 + 1; r2 < a.runs(); ++r2) {
        if (a(r1, col) == a(r2, col)) continue;
        const auto r = verify_soa(swap_cells(a, col, r1, r2), {2, 3});
        ++swaps;
        std::ostringstream os;
        os << "swap column " << col << " runs " << r1 << "," << r2 << " still passes";
        c.expect(!r.passed() && !r.witness()->columns.empty(), os.str());
        if (r.passed()) {
          ++survivors;
          survivors_same_prefix += a(r1, col) / 2 == a(r2, col) / 2;
        }
      }
  c.expect(swaps == 84, "expected 84 unequal swaps");
  std::ostringstream os;
  os << survivors << " of " << swaps << " swaps still pass; " << survivors_same_prefix
     << " of those exchange levels that agree in their first two base-2 digits, which only the"
        " single-column check (still a permutation) can see";
  c.note(os.str());
}

void characterization(Checks& c) {
  const auto t0 = Clock::now();
  for (const auto* name : {"soa-54-5-27-iii", "soa-54-5-27-iv"}) {
    const std::string n(name);
    const auto oa = extract_underlying_oa(fixture(name).file.array, 3);
    c.expect(verify_oa(oa, 3).passed(), n + " extracted array is not an OA of strength 3");
    c.expect(repeated_runs(oa).empty(), n + " extracted array has a repeated run");
    const auto semi = is_semi_embeddable(oa, 3);
    c.expect(semi.semi_embeddable, n + " extracted array is not semi-embeddable");
    c.expect(semi.per_child.size() == 15, n + " expected 15 children");
    for (const auto& k : semi.per_child) c.expect(k.report.embeddable(), n + " child without extension");
    const auto [d, trace] = soa_from_semi_embeddable(oa);
    c.expect(verify_soa(d, {3, 3}).passed(), n + " rebuilt array fails verify_soa");
  }
  c.within(seconds_since(t0), 30.0, "round trips");
}

void bush_pipeline(Checks& c) {
  for (int s : {2, 3, 4, 5}) c.expect(verify_oa(bush(s, false), 3).passed(), "bush(" + std::to_string(s) + ") not strength 3");
  for (int s : {3, 5}) {
    const std::string tag = "s=" + std::to_string(s);
    const auto a = bush(s, false);
    const auto t0 = Clock::now();
    const auto ext = find_extension(a, 3);
    const double secs = seconds_since(t0);
    if (s == 5) c.within(secs, 60.0, "find_extension at s=5");
    c.expect(!ext.embeddable(), tag + " bush array found embeddable");
    c.expect(is_semi_embeddable(a, 3).semi_embeddable, tag + " not semi-embeddable");
    const auto [d, trace] = soa_from_semi_embeddable(a);
    c.expect(d.runs() == static_cast<std::size_t>(s * s * s) && d.factors() == static_cast<std::size_t>(s + 1) &&
                 d.levels().front() == s * s * s,
             tag + " wrong SOA shape");
    c.expect(verify_soa(d, {s, 3}).passed(), tag + " SOA fails");
  }
}

void even_frontier(Checks& c) {
  for (int s : {2, 4}) {
    const std::string tag = "s=" + std::to_string(s);
    const auto a = bush(s, true);
    c.expect(a.factors() == static_cast<std::size_t>(s + 2) && verify_oa(a, 3).passed(), tag + " extended bush fails");
    // a_1..a_{s+1} with the extra column as b: SOA(s^3, s+1, s^3, 3).
    const auto [d, trace] = soa_from_embeddable(a);
    c.expect(d.factors() == static_cast<std::size_t>(s + 1) && verify_soa(d, {s, 3}).passed(), tag + " SOA with s+1 columns fails");
    // Literal reading: the first s+1 columns alone, the last of them as b.
    std::vector<std::size_t> first(static_cast<std::size_t>(s + 1));
    for (std::size_t i = 0; i < first.size(); ++i) first[i] = i;
    const auto [d2, trace2] = soa_from_embeddable(a.select_columns(first));
    c.expect(verify_soa(d2, {s, 3}).passed(), tag + " SOA from first s+1 columns fails");
  }
}

void ovoid(Checks& c) {
  c.expect(verify_oa(ovoid_oa(2), 3).passed(), "ovoid(2) fails");
  const auto a = ovoid_oa(3);
  c.expect(a.runs() == 81 && a.factors() == 10 && verify_oa(a, 3).passed(), "ovoid(3) is not an OA(81,10,3,3)");
  c.expect(is_semi_embeddable(a, 3).semi_embeddable, "ovoid(3) not semi-embeddable");
  const auto t0 = Clock::now();
  const auto ext = find_extension(a, 3);
  c.within(seconds_since(t0), 600.0, "find_extension on ovoid(3)");
  c.expect(!ext.embeddable(), "ovoid(3) found embeddable");
}

void repeated_run_laws(Checks& c) {
  const auto rh = rao_hamming(3, 2);
  const auto d = juxtapose(rh, rh);
  for (std::size_t r = 0; r < d.runs(); ++r) {
    c.expect(coincidence_profile(d, r).counts == std::vector<long long>{0, 16, 0, 0, 1}, "profile of run " + std::to_string(r));
    c.expect(coincidence_identity_check(d, r, 2).passed(), "identity at run " + std::to_string(r));
  }
  const auto b = bush(2, true);
  const auto bb = juxtapose(b, b);
  const bool has_rep = !repeated_runs(bb).empty();
  c.expect(has_rep && verify_oa(bb, 3).passed() && bb.factors() == 4, "doubled bush(2) is not OA(16,4,2,3) with repeats");
  c.expect(repeated_run_bound_holds(16, static_cast<int>(bb.factors()), 2, 3, has_rep), "bound rejects m = 4");
  c.expect(!repeated_run_bound_holds(16, 5, 2, 3, true), "bound accepts m = 5");
}

void short_circuit(Checks& c) {
  const auto a = testkit::repeated_run_oa54();
  c.expect(verify_oa(a, 3).passed() && !repeated_runs(a).empty(), "fixture is not an OA(54,5,3,3) with repeats");
  const auto r = is_semi_embeddable(a, 3);
  c.expect(!r.semi_embeddable && r.short_circuit == ShortCircuit::RepeatedRun && r.per_child.empty(),
           "s=3 shape not decided without search");
  bool bad_child = false;
  for (std::size_t col = 0; col < a.factors(); ++col)
    for (const auto& k : branch(a, col, 3)) bad_child |= !find_extension(k.array, 2).embeddable();
  c.expect(bad_child, "search finds every child embeddable");
  const auto b = bush(2, true);
  const auto r2 = is_semi_embeddable(juxtapose(b, b), 3);
  c.expect(!r2.short_circuit && !r2.per_child.empty(), "s=2 shape short-circuited");
}

void net_bridge(Checks& c) {
  const auto& a = fixture("soa-8-3-8").file.array;
  c.expect(verify_net(soa_to_digits(a, 2, 3), 0, 3).passed(), "soa-8-3-8 is not a (0,3,3)-net");
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> row(0, a.runs() - 1), col(0, a.factors() - 1);
  int broken = 0;
  for (int i = 0; i < 20; ++i) {
    const std::size_t cc = col(rng), r1 = row(rng);
    std::size_t r2 = row(rng);
    while (r2 == r1) r2 = row(rng);
    const auto p = swap_cells(a, cc, r1, r2);
    const bool soa = verify_soa(p, {2, 3}).passed();
    const bool net = verify_net(soa_to_digits(p, 2, 3), 0, 3).passed();
    c.expect(soa == net, "verdicts disagree on perturbation " + std::to_string(i));
    broken += !soa;
  }
  c.note(std::to_string(broken) + " of 20 perturbations break both properties");
}

void properties(Checks& c) {
  std::mt19937_64 rng(1);
  const auto seeds = testkit::seed_goas();
  for (int i = 0; i < 100; ++i) {
    const auto g = testkit::random_goa(seeds, rng);
    const auto d = goa_to_soa(g);
    c.expect(g.runs() <= 54 && (g.levels == 2 || g.levels == 3), "random GOA out of range");
    c.expect(soa_to_goa(d, g.levels) == g, "soa_to_goa(goa_to_soa(g)) != g");
    c.expect(goa_to_soa(soa_to_goa(d, g.levels)) == d, "goa_to_soa(soa_to_goa(d)) != d");
  }
  const auto b = bush(3, false);
  const auto broken = b.with_cell(0, 0, 1);
  for (int i = 0; i < 100; ++i) {
    c.expect(verify_oa(testkit::scramble(b, rng), 3).passed(), "permuted bush(3) fails");
    c.expect(!verify_oa(testkit::scramble(broken, rng), 3).passed(), "permuted broken array passes");
  }
  std::size_t count = 0;
  for (std::size_t n : {4u, 8u})
    for (const auto& a : testkit::strength2_binary_arrays(n)) {
      ++count;
      c.expect(find_extension(a, 2).extension == testkit::brute_force_extension(a), "search disagrees with enumeration");
    }
  c.expect(count > 0, "no arrays enumerated");
}

void latin(Checks& c) {
  const auto& d = fixture("soa-54-5-27-iii").file.array;
  for (std::uint64_t seed : {0ull, 7ull, 123456789ull, 0xffffffffffffffffull}) {
    const auto l = latin_hypercube(d, seed);
    for (std::size_t col = 0; col < l.factors(); ++col) {
      auto v = l.column(col);
      for (std::size_t r = 0; r < l.runs(); ++r) c.expect(v[r] / 2 == d(r, col), "lhd does not collapse to the fixture");
      std::sort(v.begin(), v.end());
      for (int i = 0; i < 54; ++i) c.expect(v[i] == i, "lhd column is not a permutation");
    }
    c.expect(l == latin_hypercube(d, seed), "lhd not reproducible");
  }
}

// Criteria whose literal statement does not hold for the mathematics; they
// still run and report FAIL, but do not change the exit status. A PASS here
// is flagged as unexpected.
const std::vector<std::size_t> kKnownFailures{2};

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Checks&)>>> criteria{
      {"54-run fixtures pass verify_soa(3,3)", golden_54},
      {"8-run fixture passes and every unequal swap fails", golden_8},
      {"extract, semi-embed and rebuild the 54-run fixtures", characterization},
      {"Bush pipeline for s = 2..5", bush_pipeline},
      {"even prime power extended Bush arrays", even_frontier},
      {"ovoid arrays", ovoid},
      {"coincidence profile and repeated-run bound", repeated_run_laws},
      {"repeated-run short circuit", short_circuit},
      {"SOA and net verdicts agree", net_bridge},
      {"round trip, permutation and enumeration properties", properties},
      {"OA-based Latin hypercube", latin},
  };
  int failed = 0, known = 0, unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checks c;
    const auto t0 = Clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = seconds_since(t0);
    std::printf("%s criterion %zu: %s (%.3f s)\n", c.ok() ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs);
    for (const auto& n : c.notes()) std::printf("    %s\n", n.c_str());
    for (std::size_t k = 0; k < c.failures().size() && k < 5; ++k) std::printf("    failed: %s\n", c.failures()[k].c_str());
    const bool expected_fail = std::find(kKnownFailures.begin(), kKnownFailures.end(), i + 1) != kKnownFailures.end();
    if (expected_fail) {
      if (c.ok()) {
        ++unexpected;
        std::printf("    unexpected pass of a known failure\n");
      } else {
        ++known;
        std::printf("    known failure: see README\n");
      }
    }
    failed += !c.ok();
  }
  std::printf("%d of %zu criteria passed (%d known failure%s)\n", static_cast<int>(criteria.size()) - failed,
              criteria.size(), known, known == 1 ? "" : "s");
  return failed - known + unexpected ? 1 : 0;
}
