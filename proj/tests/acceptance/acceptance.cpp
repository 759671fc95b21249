// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "qlogic/correlations.hpp"
#include "qlogic/geometry.hpp"
#include "qlogic/quantum.hpp"
#include "qlogic/states.hpp"
#include "qlogic_cli/fixtures.hpp"

using namespace qlogic;

namespace {

constexpr double born_tol = 1e-9;
constexpr double max_seconds_per_count = 1.0;
constexpr double max_seconds_facets = 10.0;
constexpr double max_seconds_scan = 30.0;
constexpr std::size_t joint_ray_budget = 2000;

struct Check {
  std::ostringstream detail;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond) ok = false;
    detail << "    " << (cond ? "ok   " : "FAIL ") << what << '\n';
  }
  void note(const std::string& what) { detail << "    note " << what << '\n'; }
};

Logic fx(std::string_view name) { return cli::fixture_logic(cli::fixture(name)); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string num(double x) {
  std::ostringstream s;
  s << std::setprecision(12) << x;
  return s.str();
}

std::set<std::set<std::string>> supports(const Logic& l, const StateSet& s) {
  std::set<std::set<std::string>> out;
  for (const auto& m : s.measures()) {
    std::set<std::string> ones;
    for (AtomId a = 0; a < l.atom_count(); ++a)
      if (m(a)) ones.insert(l.atom_name(a));
    out.insert(ones);
  }
  return out;
}

// Index sets per atom, read as one support set per index.
std::set<std::set<std::string>> supports_from_index_sets(const Logic& l, const std::vector<std::set<int>>& sets) {
  std::set<int> indices;
  for (const auto& s : sets) indices.insert(s.begin(), s.end());
  std::set<std::set<std::string>> out;
  for (int k : indices) {
    std::set<std::string> ones;
    for (std::size_t a = 0; a < sets.size(); ++a)
      if (sets[a].count(k)) ones.insert(l.atom_name(a));
    out.insert(ones);
  }
  return out;
}

void criterion1(Check& c) {
  const std::vector<std::pair<const char*, std::size_t>> expected = {
      {"pentagon", 11}, {"cats-cradle", 14}, {"triangle4", 14},       {"fig2iii", 1}, {"fig3i", 2},
      {"fig3iii", 6},   {"fig1iii", 0},      {"fig2i", 0},            {"fig3iv", 0},  {"reduced-pentagon", 0},
      {"cabello18", 0}};
  for (const auto& [name, n] : expected) {
    const Logic l = fx(name);
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t m = enumerate_states(l).size();
    const double dt = seconds_since(t0);
    c.expect(m == n && dt < max_seconds_per_count,
             std::string(name) + ": " + std::to_string(m) + " states (expected " + std::to_string(n) + "), " +
                 num(dt) + " s");
  }
}

void criterion2(Check& c) {
  const Logic pent = fx("pentagon");
  const StateSet ps = enumerate_states(pent);
  const PartitionLogic p = partition_logic(pent, ps);
  // printed sets for a1..a10, with a7's "{3,5,9,3}" read as {3,5,9}
  const std::vector<std::set<int>> printed = {{1, 2, 3},  {7, 8, 9, 10, 11}, {4, 5, 6},  {1, 3, 9, 10, 11},
                                              {2, 7, 8},  {1, 4, 6, 10, 11}, {3, 5, 9},  {1, 2, 4, 7, 11},
                                              {6, 8, 10}, {4, 5, 7, 9, 11}};
  c.expect(supports_from_index_sets(pent, printed) == supports(pent, ps),
           "pentagon partition logic equals the printed sets up to renumbering the 11 measures");
  bool partitions = true;
  for (const auto& ctx : p.blocks) {
    std::vector<std::size_t> all;
    for (const auto& s : ctx) all.insert(all.end(), s.begin(), s.end());
    std::sort(all.begin(), all.end());
    for (std::size_t k = 0; k < all.size(); ++k) partitions = partitions && all[k] == k + 1;
    partitions = partitions && all.size() == ps.size();
  }
  c.expect(partitions, "every pentagon context partitions {1..11}");
  c.note("a7 is printed as {3,5,9,3}; the repeated 3 is dropped");

  const Logic tri = fx("fig2ii");
  const StateSet all = enumerate_states(tri);
  c.expect(all.size() == 4, "fig2ii has " + std::to_string(all.size()) + " two-valued measures");
  // The printed triple {{1},{3},{2}} / {{2},{1},{3}} / {{3},{2},{1}} covers the
  // measures that put their 1s on the corner atoms a1 a3 a5.
  std::vector<TwoValuedMeasure> corner;
  for (const auto& m : all.measures())
    for (const char* a : {"a1", "a3", "a5"})
      if (m(tri.atom(a))) {
        corner.push_back(m);
        break;
      }
  const StateSet sub(tri, corner);
  // a1..a6 from C1 = {a1,a2,a3} -> {1},{3},{2}, C2 = {a3,a4,a5} -> {2},{1},{3}, C3 = {a5,a6,a1} -> {3},{2},{1}
  const std::vector<std::set<int>> by_atom = {{1}, {3}, {2}, {1}, {3}, {2}};
  c.expect(supports_from_index_sets(tri, by_atom) == supports(tri, sub),
           "fig2ii printed singleton partitions match the three corner measures");
  const PartitionLogic pt = partition_logic(tri, sub);
  bool singletons = true;
  for (const auto& ctx : pt.blocks)
    for (const auto& s : ctx) singletons = singletons && s.size() == 1;
  c.expect(singletons, "every atom of fig2ii is 1 in exactly one corner measure");
  c.note("the fourth measure (a2 a4 a6) is absent from the printed triple");
}

void criterion3(Check& c) {
  const Logic l = fx("cats-cradle");
  const StateSet s = enumerate_states(l);
  std::size_t premise = 0;
  bool ok = true;
  for (const auto& m : s.measures()) {
    if (m(l.atom("a1"))) {
      ++premise;
      ok = ok && !m(l.atom("a7"));
    }
  }
  c.expect(ok && premise > 0, "v(a1)=1 implies v(a7)=0 on all " + std::to_string(s.size()) + " measures (" +
                                  std::to_string(premise) + " with v(a1)=1)");
  c.expect(implication_check(s, l.atom("a1"), l.atom("a7")), "implication_check(a1, a7)");
}

void criterion4(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  for (const char* name : {"cats-cradle", "pentagon", "triangle4"}) {
    const cli::Fixture& f = cli::fixture(name);
    const Logic l = cli::fixture_logic(f);
    const VPolytope v = state_polytope(l, enumerate_states(l));
    std::size_t facets = 0, equalities = 0;
    for (const auto& text : f.printed_facets) {
      const Inequality ineq = parse_inequality(text, v.labels);
      const Verdict verdict = verify_inequality(v, ineq);
      const bool everywhere_tight = std::all_of(v.vertices.begin(), v.vertices.end(), [&](const RatVector& x) {
        return sgn(evaluate(x, ineq).slack) == 0;
      });
      const bool ok = verdict == Verdict::facet || verdict == Verdict::supporting;
      facets += verdict == Verdict::facet;
      equalities += everywhere_tight;
      c.expect(ok, std::string(name) + ": " + std::string(text) + " -> " + std::string(to_string(verdict)) +
                       (everywhere_tight ? " (equality on the polytope)" : ""));
    }
    c.note(std::string(name) + ": " + std::to_string(facets) + " of " + std::to_string(f.printed_facets.size()) +
           " printed rows are facets; " + std::to_string(equalities) + " hold with equality on every vertex");
    c.note(std::string(name) + ": full hull has " + std::to_string(hull(v).inequalities.size()) + " facets");
  }
  const Logic cc = fx("cats-cradle");
  const VPolytope v = state_polytope(cc, enumerate_states(cc));
  const Verdict bound = verify_inequality(v, parse_inequality("p1+p7<=3/2", v.labels));
  c.expect(bound == Verdict::valid, "cats-cradle: p1+p7 <= 3/2 -> " + std::string(to_string(bound)));
  const double dt = seconds_since(t0);
  c.expect(dt < max_seconds_facets, "total " + num(dt) + " s");
}

void criterion5(Check& c) {
  const Logic l = fx("cats-cradle");
  const Realization printed = parse_realization(cli::fixture("cats-cradle").partial_realization);
  const Realization full = parse_realization(cli::fixture("cats-cradle").realization);
  const PureState rho = PureState::from_vector(*printed.find("a1"), born_tol);
  const auto p = born(rho, printed, l);
  auto close = [&](const char* atom, double expected) {
    const double got = *p[l.atom(atom)];
    c.expect(std::abs(got - expected) <= born_tol, std::string("p(") + atom + ") = " + num(got) + ", expected " +
                                                       num(expected));
  };
  close("a1", 1.0);
  close("a7", 1.0 / 9);
  close("a13", 1.0 / 3);
  close("a6", 2.0 / 9);
  close("a8", 2.0 / 9);

  const auto q = born(PureState::from_vector(*full.find("a1"), born_tol), full, l);
  auto at = [&](const char* a) { return *q[l.atom(a)]; };
  const double lhs = at("a1") + at("a7");
  const double rhs = 1.5 - 0.5 * (at("a12") + at("a13") + at("a2") + at("a6") + at("a8"));
  c.expect(std::abs(lhs - 10.0 / 9) <= born_tol && std::abs(lhs - rhs) <= born_tol,
           "p1+p7 = " + num(lhs) + " = 3/2 - (p12+p13+p2+p6+p8)/2 = " + num(rhs));
  c.expect(std::abs((1.0 + 1.0 / 9) - (1.5 - 0.5 * (0 + 1.0 / 3 + 0 + 2.0 / 9 + 2.0 / 9))) <= born_tol,
           "1 + 1/9 = 3/2 - (0 + 1/3 + 0 + 2/9 + 2/9)/2");
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);
  const CVector b{{-1 / s3, 0}, {s2 / s3, 0}, {0, 0}};
  const double tandem = born(rho, b);
  c.expect(std::abs(tandem - 8.0 / 9) <= born_tol, "|<b|a1>|^2 = " + num(tandem) + ", expected 8/9");
}

void criterion6(Check& c) {
  const Logic l = fx("cats-cradle");
  const Realization full = parse_realization(cli::fixture("cats-cradle").realization);
  const auto q = born(PureState::from_vector(*full.find("a1"), born_tol), full, l);
  std::vector<double> values;
  for (const auto& x : q) values.push_back(*x);
  const double slack = evaluate_slack(values, parse_inequality("p2+p6>=p4", l.atoms()));
  c.expect(std::abs(slack + 1.0 / 9) <= born_tol, "slack of p2+p6 >= p4 = " + num(slack) + ", expected -1/9");
}

void criterion7(Check& c) {
  struct Case {
    const char* fixture;
    const char* bound;
  };
  for (const Case k : {Case{"pentagon", "p4+p8>=p1"}, Case{"triangle4", "p5+p6>=p1"}}) {
    const cli::Fixture& f = cli::fixture(k.fixture);
    const Logic l = cli::fixture_logic(f);
    const ProbabilityAssignment w = cli::parse_assignment(l, f.assignment);
    const Evaluation e = evaluate(w.values, parse_inequality(k.bound, l.atoms()));
    c.expect(!e.satisfied && e.slack == Rational(-1, 2),
             std::string(k.fixture) + ": Wright assignment vs " + k.bound + " slack " + to_string(e.slack));
    c.expect(is_frame_function(l, w), std::string(k.fixture) + ": Wright assignment is a frame function");
  }
}

void criterion8(Check& c) {
  const Logic l = fx("cabello18");
  const auto t0 = std::chrono::steady_clock::now();
  const ScanResult r = scan(l, Objective::sum_E);
  const double dt = seconds_since(t0);
  c.expect(r.min == -7, "min sum E = " + std::to_string(r.min));
  c.expect(r.count_at_min == 1152,
           "assignments at the minimum = " + std::to_string(r.count_at_min) + " (expected 1152)");
  c.expect(dt < max_seconds_scan, "scan of " + std::to_string(r.total) + " assignments in " + num(dt) + " s");

  // Diagnostics for the count: every minimizer has exactly one context with
  // E = +1; count those where that context is all zeros.
  std::vector<std::uint64_t> masks;
  for (const auto& ctx : l.contexts()) {
    std::uint64_t m = 0;
    for (auto a : ctx.atoms) m |= std::uint64_t{1} << a;
    masks.push_back(m);
  }
  std::uint64_t zero_context = 0;
  for (auto bits : assignments_with(l, Objective::sum_E, r.min)) {
    for (auto m : masks)
      if (!(std::popcount(bits & m) & 1) && (bits & m) == 0) ++zero_context;
  }
  c.note("minimizers whose single even context is all zeros: " + std::to_string(zero_context));
  c.note("9 choices of the even context x 1024 assignments each = " + std::to_string((1u << 10) * 9u));

  const SubclassicalClaim claim = subclassical_E_claim(l);
  c.expect(claim.holds, "every admissible pattern of every context gives E = -1 (" +
                            std::to_string(claim.patterns_checked) + " patterns)");
  c.note("an admissible global assignment would give sum E = " + std::to_string(claim.hypothetical_sum_E));
}

void criterion9(Check& c) {
  const Logic l = fx("cabello18");
  const VPolytope e = correlation_polytope(l, Coordinates::E);
  const Verdict ve = verify_inequality(e, parse_inequality("E1+E2+E3+E4+E5+E6+E7+E8+E9+7>=0", e.labels));
  c.expect(ve == Verdict::facet || ve == Verdict::supporting,
           "E1+...+E9+7 >= 0 on the E polytope -> " + std::string(to_string(ve)));
  const VPolytope p = correlation_polytope(l, Coordinates::P);
  const Verdict vp = verify_inequality(p, parse_inequality("P1+3>=P2+P6+P7+P8", p.labels));
  c.expect(vp == Verdict::facet || vp == Verdict::supporting,
           "P1+3 >= P2+P6+P7+P8 on the P polytope -> " + std::string(to_string(vp)));

  c.note("E polytope: " + std::to_string(e.vertices.size()) + " vertices, " +
         std::to_string(hull(e).inequalities.size()) + " facets");
  c.note("P polytope: " + std::to_string(p.vertices.size()) + " vertices, " +
         std::to_string(hull(p).inequalities.size()) + " facets");
  const VPolytope pe = correlation_polytope(l, Coordinates::PE);
  try {
    c.note("joint polytope: " + std::to_string(pe.vertices.size()) + " vertices, " +
           std::to_string(hull(pe, {joint_ray_budget}).inequalities.size()) + " facets");
  } catch (const RayLimitExceeded&) {
    c.note("joint polytope: " + std::to_string(pe.vertices.size()) + " vertices, facets not computed (over " +
           std::to_string(joint_ray_budget) + " intermediate rays)");
  }
}

void criterion10(Check& c) {
  bool round_trip = true;
  std::size_t polytopes = 0;
  for (const auto& f : cli::fixtures()) {
    const Logic l = cli::fixture_logic(f);
    const StateSet s = enumerate_states(l);
    if (s.empty()) continue;
    ++polytopes;
    VPolytope v = state_polytope(l, s);
    std::vector<RatVector> expected = v.vertices;
    std::sort(expected.begin(), expected.end());
    round_trip = round_trip && vertex_enumerate(hull(v)).vertices == expected;
  }
  c.expect(round_trip, "vertex_enumerate(hull(V)) = V on " + std::to_string(polytopes) + " fixture polytopes");

  std::mt19937 rng(20240901);
  std::normal_distribution<double> gauss;
  for (const auto& f : cli::fixtures()) {
    if (f.realization.empty()) continue;
    const Logic l = cli::fixture_logic(f);
    const Realization r = parse_realization(f.realization);
    bool ok = validate_realization(l, r, born_tol).pass;
    const int trials = 100;
    for (int t = 0; t < trials; ++t) {
      CVector v;
      for (std::size_t i = 0; i < r.dimension; ++i) v.emplace_back(gauss(rng), gauss(rng));
      std::vector<double> values;
      for (const auto& x : born(PureState::normalized(v), r, l)) values.push_back(*x);
      ok = ok && is_frame_function(l, values, born_tol);
    }
    c.expect(ok, std::string(f.name) + ": Born values of " + std::to_string(trials) +
                     " random states are frame functions");
  }

  const VPolytope red = vertex_enumerate(frame_function_polytope(fx("reduced-pentagon")));
  c.expect(red.vertices.size() == 1 &&
               std::all_of(red.vertices[0].begin(), red.vertices[0].end(),
                           [](const Rational& x) { return x == Rational(1, 2); }),
           "reduced-pentagon frame-function polytope is the single point (1/2,...,1/2)");

  bool powers = true;
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t k = 2; n * k <= 16; ++k) {
      std::size_t expected = 1;
      for (std::size_t i = 0; i < n; ++i) expected *= k;
      powers = powers && enumerate_states(horizontal_pasting(n, k)).size() == expected;
    }
  c.expect(powers, "horizontal_pasting(n, k) has k^n states for all n*k <= 16");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria = {
      {"state counts", criterion1},
      {"partition logics", criterion2},
      {"cat's-cradle implication a1 -> not a7", criterion3},
      {"printed inequalities are valid and tight", criterion4},
      {"Born values on the cat's cradle", criterion5},
      {"quantum violation of p2+p6 >= p4", criterion6},
      {"Wright assignments violate classical facets", criterion7},
      {"Cabello scan of all 2^18 assignments", criterion8},
      {"Cabello correlation polytopes", criterion9},
      {"property suites", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << '\n'
              << c.detail.str();
    failed += !c.ok;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << " of " << criteria.size()
            << " criteria passed\n";
  return failed;
}
