#include "qlogic_cli/commands.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "qlogic/correlations.hpp"
#include "qlogic/error.hpp"
#include "qlogic/geometry.hpp"
#include "qlogic/logic.hpp"
#include "qlogic/quantum.hpp"
#include "qlogic/states.hpp"
#include "qlogic_cli/fixtures.hpp"

namespace qlogic::cli {

namespace {

struct Options {
  std::string fixture;
  std::string logic_file;
  double tol = default_tolerance;
  std::string format = "text";

  std::vector<std::string> checks;
  std::string realization_file;
  bool printed = false;
  std::string state_atom;
  std::string state_vec;
  bool against_facets = false;
  std::string objective = "sum_E";
  unsigned threads = 0;
  std::size_t max_order = 0;
  std::string kind = "states";
  bool with_hull = false;
  std::size_t max_rays = 0;
  bool human = false;
  std::string out_dir;
  bool list = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const Fixture* selected_fixture(const Options& o) { return o.fixture.empty() ? nullptr : &fixture(o.fixture); }

Logic load_logic(const Options& o) {
  if (o.fixture.empty() == o.logic_file.empty()) throw Error("give exactly one of a logic file or --fixture NAME");
  if (!o.fixture.empty()) return fixture_logic(fixture(o.fixture));
  return parse_logic(read_file(o.logic_file));
}

bool tsv(const Options& o) { return o.format == "tsv"; }

std::string fixed9(double x) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(9) << x;
  std::string r = s.str();
  if (r == "-0.000000000") r = "0.000000000";
  return r;
}

std::string atom_list(const Logic& logic, const std::vector<AtomId>& atoms) {
  std::string s;
  for (AtomId a : atoms) s += (s.empty() ? "" : " ") + logic.atom_name(a);
  return s;
}

void print_states(std::ostream& out, const Logic& logic, const StateSet& states, bool as_tsv) {
  if (as_tsv) {
    out << "index";
    for (const auto& a : logic.atoms()) out << '\t' << a;
    out << '\n';
    for (std::size_t k = 0; k < states.size(); ++k) {
      out << k + 1;
      for (auto v : states.measures()[k].values) out << '\t' << int(v);
      out << '\n';
    }
    return;
  }
  out << "# states " << states.size() << '\n' << states.to_text();
}

void print_classification(std::ostream& out, const Logic& logic, const Classification& c) {
  out << "has_states\t" << std::boolalpha << c.has_states << '\n';
  out << "unital\t" << c.unital;
  if (c.unital_witness) out << "\t(" << logic.atom_name(*c.unital_witness) << " is never 1)";
  out << '\n';
  out << "separating\t" << c.separating;
  if (c.separating_witness)
    out << "\t(" << logic.atom_name(c.separating_witness->first) << ", "
        << logic.atom_name(c.separating_witness->second) << " not separated)";
  out << '\n' << std::noboolalpha;
}

void print_partition(std::ostream& out, const Logic& logic, const StateSet& states, const Classification& c) {
  if (!c.unital) {
    out << "not partition-representable: ";
    if (states.empty())
      out << "no two-valued states\n";
    else
      out << "atom " << logic.atom_name(*c.unital_witness) << " is 1 in no state\n";
  } else {
    out << partition_logic(logic, states).to_text();
  }
  if (c.has_states && !c.separating) {
    out << "not partition-representable: " << (states.size() == 1 ? "single state" : "states")
        << " cannot separate " << logic.atom_name(c.separating_witness->first) << " and "
        << logic.atom_name(c.separating_witness->second) << '\n';
  }
}

void print_loops(std::ostream& out, const Logic& logic, const std::vector<LoopReport>& loops) {
  if (loops.empty()) out << "no loops\n";
  for (const auto& l : loops) {
    out << "order " << l.order << ':';
    for (auto c : l.contexts) out << ' ' << logic.contexts()[c].name;
    out << " via " << atom_list(logic, l.linking_atoms) << '\n';
  }
}

void print_profile(std::ostream& out, const Logic& logic) {
  const auto p = context_profile(logic);
  out << "atoms\t" << logic.atom_count() << '\n' << "contexts\t" << logic.context_count() << '\n' << "arity";
  for (auto [k, n] : p.arity_histogram) out << '\t' << k << ':' << n;
  out << "\nmixed_arity\t" << std::boolalpha << p.mixed_arity << std::noboolalpha << '\n';
}

void print_scan(std::ostream& out, const ScanResult& r) {
  out << "objective\t" << to_string(r.objective) << '\n'
      << "min\t" << r.min << '\n'
      << "max\t" << r.max << '\n'
      << "count_at_min\t" << r.count_at_min << '\n'
      << "count_at_max\t" << r.count_at_max << '\n'
      << "assignments\t" << r.total << '\n'
      << "histogram";
  for (std::size_t i = 0; i < r.histogram.size(); ++i)
    if (r.histogram[i]) out << '\t' << r.min + static_cast<long>(i) << ':' << r.histogram[i];
  out << '\n';
}

// Verdict, flagging rows that hold with equality on the whole polytope.
std::string verdict_text(const VPolytope& v, const Inequality& ineq) {
  const Verdict verdict = verify_inequality(v, ineq);
  std::string s(to_string(verdict));
  if (verdict == Verdict::supporting &&
      std::all_of(v.vertices.begin(), v.vertices.end(),
                  [&](const RatVector& x) { return sgn(evaluate(x, ineq).slack) == 0; }))
    s += " (equality on the polytope)";
  return s;
}

void print_h(std::ostream& out, const HPolytope& h, const Options& o) {
  if (tsv(o)) {
    out << format_h_polytope_tsv(h);
  } else if (o.human) {
    out << "# affine hull\n";
    for (const auto& eq : h.equalities) {
      Inequality as{eq.coefficients, eq.rhs};
      std::string s = to_human(as, h.labels);
      s.replace(s.find(">="), 2, "=");
      out << s << '\n';
    }
    out << "# facets\n";
    for (const auto& f : h.inequalities) out << to_human(f, h.labels) << '\n';
  } else {
    out << format_h_polytope(h);
  }
}

int cmd_states(const Options& o, std::ostream& out) {
  const Logic logic = load_logic(o);
  const StateSet states = enumerate_states(logic);
  print_states(out, logic, states, tsv(o));
  if (!tsv(o)) print_classification(out, logic, classify(logic, states));
  return ok;
}

int cmd_facets(const Options& o, std::ostream& out, std::ostream& err) {
  const Logic logic = load_logic(o);
  const StateSet states = enumerate_states(logic);
  if (states.empty()) {
    err << "no two-valued states: the state polytope is empty\n";
    return usage_error;
  }
  const VPolytope v = state_polytope(logic, states);
  if (!o.checks.empty()) {
    for (const auto& text : o.checks) {
      const Inequality ineq = parse_inequality(text, v.labels);
      out << to_human(ineq, v.labels) << '\t' << verdict_text(v, ineq) << '\n';
    }
    return ok;
  }
  const HPolytope h = hull(v, {o.max_rays});
  if (!tsv(o))
    out << "# vertices " << v.vertices.size() << ", dimension " << v.dimension() << ", facets "
        << h.inequalities.size() << '\n';
  print_h(out, h, o);
  return ok;
}

Realization load_realization(const Options& o, const Logic& logic) {
  if (!o.realization_file.empty()) return parse_realization(read_file(o.realization_file));
  const Fixture* f = selected_fixture(o);
  if (f == nullptr) throw Error("--realization FILE is required with a logic file");
  const std::string_view text = o.printed ? f->partial_realization : f->realization;
  if (text.empty())
    throw Error(std::string("fixture ") + std::string(f->name) + " has no " + (o.printed ? "printed " : "") +
                "realization");
  (void)logic;
  return parse_realization(text);
}

PureState load_state(const Options& o, const Realization& r) {
  if (!o.state_atom.empty() && !o.state_vec.empty()) throw Error("give only one of --state and --vec");
  if (!o.state_vec.empty()) return PureState::from_vector(parse_vector(o.state_vec), o.tol);
  const std::string atom = o.state_atom.empty() ? std::string() : o.state_atom;
  if (atom.empty()) throw Error("give --state ATOM or --vec \"c1 c2 ...\"");
  const CVector* v = r.find(atom);
  if (v == nullptr) throw Error("realization has no vector for " + atom);
  return PureState::from_vector(*v, o.tol);
}

// Born table, frame-function verdict and (optionally) facet violations.
void born_report(std::ostream& out, const Logic& logic, const Realization& real, const PureState& state,
                 const std::string& state_label, const Options& o, const std::vector<std::string_view>& printed) {
  const auto report = validate_realization(logic, real, o.tol, false);
  const auto values = born(state, real, logic);
  out << "# born, state " << state_label << '\n';
  out << "# realization " << (report.complete ? "complete" : "partial") << ", "
      << (report.pass ? "orthonormal" : "NOT orthonormal") << " within " << o.tol << '\n';
  out << "atom\tprobability\n";
  for (AtomId a = 0; a < logic.atom_count(); ++a)
    out << logic.atom_name(a) << '\t' << (values[a] ? fixed9(*values[a]) : std::string("-")) << '\n';
  const FrameCheck fc = check_frame_function(logic, values, o.tol);
  out << "frame_function\t" << std::boolalpha << fc.frame_function << std::noboolalpha << "\t(" << fc.checked
      << " contexts checked, " << fc.unchecked << " skipped)\n";
  if (!o.against_facets) return;

  const StateSet states = enumerate_states(logic);
  if (states.empty()) {
    out << "# no two-valued states: no classical facets to test\n";
    return;
  }
  const VPolytope v = state_polytope(logic, states);
  std::vector<Inequality> tests;
  for (const auto& text : printed) tests.push_back(parse_inequality(text, v.labels));
  for (const auto& text : o.checks) tests.push_back(parse_inequality(text, v.labels));
  for (const auto& f : hull(v, {o.max_rays}).inequalities)
    if (std::find(tests.begin(), tests.end(), f) == tests.end()) tests.push_back(f);

  std::size_t violated = 0, skipped = 0;
  out << "# classical bounds against the Born values\n";
  for (const auto& ineq : tests) {
    std::vector<double> point(logic.atom_count(), 0.0);
    bool available = true;
    for (AtomId a = 0; a < logic.atom_count(); ++a) {
      if (sgn(ineq.coefficients[a]) == 0) continue;
      if (!values[a]) available = false;
      else point[a] = *values[a];
    }
    if (!available) {
      ++skipped;
      continue;
    }
    const double slack = evaluate_slack(point, ineq);
    if (slack < -o.tol) {
      ++violated;
      out << "violated\t" << fixed9(slack) << '\t' << to_human(ineq, v.labels) << '\n';
    }
  }
  out << "bounds_tested\t" << tests.size() - skipped << "\nbounds_skipped\t" << skipped << "\nbounds_violated\t"
      << violated << '\n';
}

int cmd_born(const Options& o, std::ostream& out) {
  const Logic logic = load_logic(o);
  const Realization real = load_realization(o, logic);
  const PureState state = load_state(o, real);
  const Fixture* f = selected_fixture(o);
  std::vector<std::string_view> printed;
  if (f != nullptr) printed = f->printed_facets;
  born_report(out, logic, real, state, o.state_vec.empty() ? o.state_atom : "(" + o.state_vec + ")", o, printed);
  return ok;
}

int cmd_scan(const Options& o, std::ostream& out) {
  const Logic logic = load_logic(o);
  print_scan(out, scan(logic, parse_objective(o.objective), o.threads));
  return ok;
}

int cmd_loops(const Options& o, std::ostream& out) {
  const Logic logic = load_logic(o);
  const std::size_t max_order = o.max_order ? o.max_order : std::max<std::size_t>(3, logic.context_count());
  print_loops(out, logic, detect_loops(logic, max_order));
  return ok;
}

int cmd_partition(const Options& o, std::ostream& out) {
  const Logic logic = load_logic(o);
  const StateSet states = enumerate_states(logic);
  print_partition(out, logic, states, classify(logic, states));
  return ok;
}

int cmd_polytope(const Options& o, std::ostream& out, std::ostream& err) {
  const Logic logic = load_logic(o);
  if (o.kind == "frame") {
    const VPolytope v = vertex_enumerate(frame_function_polytope(logic), {o.max_rays});
    out << format_v_polytope(v);
    return ok;
  }
  VPolytope v;
  if (o.kind == "states") {
    v = state_polytope(logic, enumerate_states(logic));
  } else {
    v = correlation_polytope(logic, parse_coordinates(o.kind), o.threads);
  }
  if (v.vertices.empty()) {
    err << "polytope is empty\n";
    return usage_error;
  }
  if (!o.with_hull) {
    out << format_v_polytope(v);
    return ok;
  }
  if (!tsv(o))
    out << "# vertices " << v.vertices.size() << ", dimension " << v.dimension() << '\n';
  try {
    const HPolytope h = hull(v, {o.max_rays});
    if (!tsv(o)) out << "# facets " << h.inequalities.size() << '\n';
    print_h(out, h, o);
  } catch (const RayLimitExceeded& e) {
    out << "# facets not computed: " << e.what() << '\n';
  }
  return ok;
}

int cmd_dot(const Options& o, std::ostream& out) {
  out << to_dot(load_logic(o));
  return ok;
}

void report_bundle(std::ostream& out, const Logic& logic, const Fixture* f, const Options& o) {
  out << "== logic\n";
  print_profile(out, logic);
  out << "== loops\n";
  print_loops(out, logic, detect_loops(logic, std::max<std::size_t>(3, logic.context_count())));

  const StateSet states = enumerate_states(logic);
  const Classification c = classify(logic, states);
  out << "== states\n";
  print_states(out, logic, states, false);
  print_classification(out, logic, c);
  if (f != nullptr && f->expected_states && *f->expected_states != states.size())
    throw InvariantError("fixture " + std::string(f->name) + ": expected " + std::to_string(*f->expected_states) +
                         " states, found " + std::to_string(states.size()));

  out << "== partition logic\n";
  print_partition(out, logic, states, c);

  out << "== facets\n";
  if (states.empty()) {
    out << "no two-valued states: the state polytope is empty\n";
  } else {
    const VPolytope v = state_polytope(logic, states);
    const HPolytope h = hull(v, {o.max_rays});
    out << "vertices\t" << v.vertices.size() << "\ndimension\t" << v.dimension() << "\nfacets\t"
        << h.inequalities.size() << '\n';
    Options human = o;
    human.human = true;
    human.format = "text";
    print_h(out, h, human);
    if (f != nullptr && !f->printed_facets.empty()) {
      out << "# printed inequalities\n";
      for (const auto& text : f->printed_facets) {
        const Inequality ineq = parse_inequality(text, v.labels);
        out << text << '\t' << verdict_text(v, ineq) << '\n';
      }
    }
  }

  out << "== frame-function polytope\n";
  {
    const VPolytope ff = vertex_enumerate(frame_function_polytope(logic), {o.max_rays});
    std::size_t two_valued = 0;
    for (const auto& v : ff.vertices)
      if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0 || x == 1; })) ++two_valued;
    out << "vertices\t" << ff.vertices.size() << "\ntwo_valued_vertices\t" << two_valued << '\n';
    if (ff.vertices.size() <= 32) out << format_v_polytope(ff);
  }

  if (f != nullptr && !f->assignment.empty()) {
    out << "== assignment " << f->assignment_name << '\n';
    const ProbabilityAssignment p = parse_assignment(logic, f->assignment);
    for (AtomId a = 0; a < logic.atom_count(); ++a) out << logic.atom_name(a) << '\t' << p.values[a] << '\n';
    out << "frame_function\t" << std::boolalpha << is_frame_function(logic, p) << std::noboolalpha << '\n';
    if (!states.empty()) {
      const VPolytope v = state_polytope(logic, states);
      std::vector<Inequality> tests;
      for (const auto& text : f->printed_facets) tests.push_back(parse_inequality(text, v.labels));
      for (const auto& ineq : hull(v, {o.max_rays}).inequalities)
        if (std::find(tests.begin(), tests.end(), ineq) == tests.end()) tests.push_back(ineq);
      std::size_t violated = 0;
      for (const auto& ineq : tests) {
        const Evaluation e = evaluate(p.values, ineq);
        if (!e.satisfied) {
          ++violated;
          out << "violated\t" << e.slack << '\t' << to_human(ineq, v.labels) << '\n';
        }
      }
      out << "bounds_violated\t" << violated << " of " << tests.size() << '\n';
    }
  }

  if (f != nullptr && !f->realization.empty()) {
    out << "== quantum\n";
    const Realization real = parse_realization(f->realization);
    const auto rep = validate_realization(logic, real, o.tol, true);
    out << "realization\t" << (rep.pass ? "orthonormal" : "NOT orthonormal") << '\n';
    const std::string first = logic.atom_name(0);
    Options b = o;
    b.against_facets = !states.empty();
    born_report(out, logic, real, PureState::from_vector(*real.find(first), o.tol), first, b, f->printed_facets);
  }

  bool even = true;
  for (const auto& ctx : logic.contexts()) even = even && ctx.atoms.size() % 2 == 0;
  if (logic.atom_count() <= 20) {
    out << "== correlations\n";
    print_scan(out, scan(logic, Objective::sum_E, o.threads));
    print_scan(out, scan(logic, Objective::sum_P, o.threads));
    if (even) {
      const SubclassicalClaim claim = subclassical_E_claim(logic);
      out << "admissible_patterns_give_E_minus_1\t" << std::boolalpha << claim.holds << std::noboolalpha
          << "\nhypothetical_admissible_sum_E\t" << claim.hypothetical_sum_E << '\n';
    }
  }
}

int cmd_report(const Options& o, std::ostream& out) {
  const Logic logic = load_logic(o);
  report_bundle(out, logic, selected_fixture(o), o);
  return ok;
}

int cmd_export(const Options& o, std::ostream& out) {
  if (o.list) {
    for (const auto& f : fixtures()) out << f.name << '\t' << f.description << '\n';
    return ok;
  }
  const Fixture& f = fixture(o.fixture.empty() ? throw Error("give --fixture NAME or --list") : o.fixture);
  if (o.out_dir.empty()) {
    out << f.logic;
    return ok;
  }
  namespace fs = std::filesystem;
  fs::create_directories(o.out_dir);
  auto write = [&](const std::string& suffix, std::string_view text) {
    if (text.empty()) return;
    const fs::path p = fs::path(o.out_dir) / (std::string(f.name) + suffix);
    std::ofstream file(p, std::ios::binary);
    if (!file) throw Error("cannot write " + p.string());
    file << text;
    out << p.string() << '\n';
  };
  write(".logic", f.logic);
  write(".real", f.realization);
  write(".printed.real", f.partial_realization);
  write("." + std::string(f.assignment_name) + ".assignment", f.assignment);
  return ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Orthogonality logics: two-valued states, correlation polytopes and Born-rule checks", "qlogic"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--fixture", o.fixture, "Use an embedded fixture instead of a logic file");
  app.add_option("--tol", o.tol, "Floating-point tolerance")->capture_default_str();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "tsv"}))->capture_default_str();

  auto with_logic = [&](CLI::App* sub) {
    sub->add_option("logic-file", o.logic_file, "Logic file (context NAME: atom atom ...)");
    return sub;
  };
  auto* states = with_logic(app.add_subcommand("states", "List two-valued measures and classify them"));
  auto* facets = with_logic(app.add_subcommand("facets", "Facets of the polytope spanned by the two-valued measures"));
  facets->add_option("--check", o.checks, "Classify an inequality, e.g. \"p4+p8>=p1\"");
  facets->add_flag("--human", o.human, "Write facets as p2 + p6 >= p4");
  facets->add_option("--max-rays", o.max_rays, "Abort the hull beyond this many intermediate rays");
  auto* born_cmd = with_logic(app.add_subcommand("born", "Born-rule probabilities on a vector realization"));
  born_cmd->add_option("--realization", o.realization_file, "Realization file");
  born_cmd->add_flag("--printed", o.printed, "Use the fixture's printed (partial) vectors only");
  born_cmd->add_option("--state", o.state_atom, "Prepare the state along this atom's vector");
  born_cmd->add_option("--vec", o.state_vec, "Explicit state vector components");
  born_cmd->add_flag("--against-facets", o.against_facets, "Test the probabilities against the classical facets");
  born_cmd->add_option("--check", o.checks, "Additional inequality to test");
  auto* scan_cmd = with_logic(app.add_subcommand("scan", "Exhaustive scan of sum E_i or sum P_i over all 0/1 assignments"));
  scan_cmd->add_option("--objective", o.objective, "sum_E or sum_P")->capture_default_str();
  scan_cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  auto* loops = with_logic(app.add_subcommand("loops", "Loops of contexts"));
  loops->add_option("--max-order", o.max_order, "Largest loop order (default: number of contexts)");
  auto* partition = with_logic(app.add_subcommand("partition", "Partition logic of the two-valued measures"));
  auto* polytope = with_logic(app.add_subcommand("polytope", "Vertices (and optionally facets) of a polytope"));
  polytope->add_option("--kind", o.kind, "states, frame, P, E or PE")
      ->check(CLI::IsMember({"states", "frame", "P", "E", "PE"}))
      ->capture_default_str();
  polytope->add_flag("--hull", o.with_hull, "Also compute the facets");
  polytope->add_flag("--human", o.human, "Write facets as P1 + 3 >= P2");
  polytope->add_option("--max-rays", o.max_rays, "Abort the hull beyond this many intermediate rays");
  polytope->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  auto* dot = with_logic(app.add_subcommand("dot", "Graphviz rendering of the orthogonality diagram"));
  auto* report = with_logic(app.add_subcommand("report", "Full analysis of a logic"));
  auto* export_cmd = app.add_subcommand("export-fixture", "Write an embedded fixture to files");
  export_cmd->add_option("--out", o.out_dir, "Directory to write NAME.logic and companions into");
  export_cmd->add_flag("--list", o.list, "List fixture names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  try {
    if (*states) return cmd_states(o, out);
    if (*facets) return cmd_facets(o, out, err);
    if (*born_cmd) return cmd_born(o, out);
    if (*scan_cmd) return cmd_scan(o, out);
    if (*loops) return cmd_loops(o, out);
    if (*partition) return cmd_partition(o, out);
    if (*polytope) return cmd_polytope(o, out, err);
    if (*dot) return cmd_dot(o, out);
    if (*report) return cmd_report(o, out);
    if (*export_cmd) return cmd_export(o, out);
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return invariant_failure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return invariant_failure;
  }
  return usage_error;
}

}  // namespace qlogic::cli
