#include "qlogic/geometry.hpp"

#include <algorithm>
#include <sstream>

#include "qlogic/error.hpp"
#include "qlogic/linalg.hpp"

namespace qlogic {

namespace {

bool row_less(const IntVector& a, const Integer& ab, const IntVector& b, const Integer& bb) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return ab < bb;
}

Rational inner(const IntVector& c, const RatVector& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (sgn(c[i]) != 0) s += c[i] * x[i];
  return s;
}

}  // namespace

Inequality Inequality::from_rational(const RatVector& coefficients, const Rational& bound) {
  RatVector row = coefficients;
  row.push_back(bound);
  IntVector z = primitive_integer(row);
  Inequality out;
  out.bound = z.back();
  z.pop_back();
  out.coefficients = std::move(z);
  return out;
}

long VPolytope::dimension() const { return linalg::affine_dimension(vertices); }

HPolytope hull(const VPolytope& polytope, const DoubleDescriptionOptions& options) {
  const std::size_t dim = polytope.ambient_dimension();
  if (polytope.vertices.empty()) throw Error("hull: no vertices");

  // Facets of conv(V) are the extreme rays of the dual cone
  // { (a0, c) : a0 + c.v >= 0 for all v }; its lineality space is the
  // affine hull.
  ConeSystem system;
  system.dimension = dim + 1;
  for (const auto& v : polytope.vertices) {
    if (v.size() != dim) throw Error("hull: vertex has wrong dimension");
    RatVector lifted{Rational(1)};
    lifted.insert(lifted.end(), v.begin(), v.end());
    system.inequalities.push_back(primitive_integer(lifted));
  }
  const ConeGenerators gens = double_description(system, options);

  // Echelon basis of the affine hull, pivots searched from the last
  // coordinate down; the constant column is never a pivot.
  std::vector<std::size_t> column_order;
  for (std::size_t c = dim; c >= 1; --c) column_order.push_back(c);
  linalg::Matrix lin;
  for (const auto& l : gens.lineality) lin.push_back(to_rational(l));
  const auto echelon = linalg::reduced_row_echelon(lin, column_order);

  HPolytope out;
  out.labels = polytope.labels;
  for (const auto& row : echelon.rows) {
    IntVector z = primitive_integer(row);
    Equality eq;
    eq.rhs = -z[0];
    eq.coefficients.assign(z.begin() + 1, z.end());
    auto first = std::find_if(eq.coefficients.begin(), eq.coefficients.end(),
                              [](const Integer& x) { return sgn(x) != 0; });
    const int lead = first != eq.coefficients.end() ? sgn(*first) : -sgn(eq.rhs);
    if (lead < 0) {
      for (auto& x : eq.coefficients) x = -x;
      eq.rhs = -eq.rhs;
    }
    out.equalities.push_back(std::move(eq));
  }
  std::sort(out.equalities.begin(), out.equalities.end(), [](const Equality& a, const Equality& b) {
    return row_less(a.coefficients, a.rhs, b.coefficients, b.rhs);
  });

  for (const auto& ray : gens.rays) {
    RatVector a = to_rational(ray);
    for (std::size_t r = 0; r < echelon.rows.size(); ++r) {
      const Rational f = a[echelon.pivots[r]];
      if (sgn(f) == 0) continue;
      for (std::size_t c = 0; c <= dim; ++c) a[c] -= f * echelon.rows[r][c];
    }
    IntVector z = primitive_integer(a);
    Inequality ineq;
    ineq.bound = -z[0];
    ineq.coefficients.assign(z.begin() + 1, z.end());
    const bool trivial = std::all_of(ineq.coefficients.begin(), ineq.coefficients.end(),
                                     [](const Integer& x) { return sgn(x) == 0; });
    if (trivial) continue;
    out.inequalities.push_back(std::move(ineq));
  }
  std::sort(out.inequalities.begin(), out.inequalities.end(), [](const Inequality& a, const Inequality& b) {
    return row_less(a.coefficients, a.bound, b.coefficients, b.bound);
  });
  out.inequalities.erase(std::unique(out.inequalities.begin(), out.inequalities.end()), out.inequalities.end());
  return out;
}

VPolytope vertex_enumerate(const HPolytope& polytope, const DoubleDescriptionOptions& options) {
  const std::size_t dim = polytope.labels.size();
  ConeSystem system;
  system.dimension = dim + 1;
  auto homogenize = [&](const IntVector& c, const Integer& b) {
    if (c.size() != dim) throw Error("vertex_enumerate: row has wrong dimension");
    IntVector row;
    row.reserve(dim + 1);
    row.push_back(-b);
    row.insert(row.end(), c.begin(), c.end());
    return row;
  };
  for (const auto& ineq : polytope.inequalities) system.inequalities.push_back(homogenize(ineq.coefficients, ineq.bound));
  {
    IntVector t(dim + 1, 0);
    t[0] = 1;
    system.inequalities.push_back(std::move(t));
  }
  for (const auto& eq : polytope.equalities) system.equalities.push_back(homogenize(eq.coefficients, eq.rhs));

  const ConeGenerators gens = double_description(system, options);

  VPolytope out;
  out.labels = polytope.labels;
  bool recession = !gens.lineality.empty();
  for (const auto& ray : gens.rays) {
    if (sgn(ray[0]) == 0) {
      recession = true;
      continue;
    }
    RatVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = Rational(ray[i + 1], ray[0]);
    for (auto& x : v) x.canonicalize();
    out.vertices.push_back(std::move(v));
  }
  if (out.vertices.empty()) return out;
  if (recession) throw Error("vertex_enumerate: polyhedron is unbounded");
  std::sort(out.vertices.begin(), out.vertices.end());
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
  return out;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::invalid: return "invalid";
    case Verdict::valid: return "valid";
    case Verdict::supporting: return "supporting";
    case Verdict::facet: return "facet";
  }
  return "?";
}

Verdict verify_inequality(const VPolytope& polytope, const Inequality& inequality) {
  if (inequality.coefficients.size() != polytope.ambient_dimension())
    throw Error("verify_inequality: dimension mismatch");
  std::vector<RatVector> tight;
  for (const auto& v : polytope.vertices) {
    const Rational slack = inner(inequality.coefficients, v) - inequality.bound;
    if (sgn(slack) < 0) return Verdict::invalid;
    if (sgn(slack) == 0) tight.push_back(v);
  }
  if (tight.empty()) return Verdict::valid;
  return linalg::affine_dimension(tight) == polytope.dimension() - 1 ? Verdict::facet : Verdict::supporting;
}

Evaluation evaluate(const RatVector& point, const Inequality& inequality) {
  if (point.size() != inequality.coefficients.size()) throw Error("evaluate: dimension mismatch");
  Evaluation e;
  e.slack = inner(inequality.coefficients, point) - inequality.bound;
  e.satisfied = sgn(e.slack) >= 0;
  return e;
}

double evaluate_slack(const std::vector<double>& point, const Inequality& inequality) {
  if (point.size() != inequality.coefficients.size()) throw Error("evaluate: dimension mismatch");
  double s = 0;
  for (std::size_t i = 0; i < point.size(); ++i) s += inequality.coefficients[i].get_d() * point[i];
  return s - inequality.bound.get_d();
}

VPolytope state_polytope(const Logic& logic, const StateSet& states) {
  VPolytope p;
  p.labels = logic.atoms();
  for (const auto& m : states.measures()) {
    RatVector v;
    v.reserve(m.values.size());
    for (auto x : m.values) v.emplace_back(x ? 1 : 0);
    p.vertices.push_back(std::move(v));
  }
  return p;
}

HPolytope frame_function_polytope(const Logic& logic) {
  HPolytope h;
  h.labels = logic.atoms();
  const std::size_t n = logic.atom_count();
  for (const auto& ctx : logic.contexts()) {
    Equality eq{IntVector(n, 0), 1};
    for (AtomId a : ctx.atoms) eq.coefficients[a] = 1;
    h.equalities.push_back(std::move(eq));
  }
  for (AtomId a = 0; a < n; ++a) {
    Inequality nonneg{IntVector(n, 0), 0};
    nonneg.coefficients[a] = 1;
    h.inequalities.push_back(std::move(nonneg));
  }
  return h;
}

std::string to_human(const Inequality& inequality, const std::vector<std::string>& labels) {
  std::string lhs, rhs;
  auto append = [](std::string& side, const Integer& c, const std::string& term) {
    if (!side.empty()) side += " + ";
    if (term.empty()) {
      side += to_string(c);
    } else {
      if (c != 1) side += to_string(c) + "*";
      side += term;
    }
  };
  for (std::size_t i = 0; i < inequality.coefficients.size(); ++i) {
    const Integer& c = inequality.coefficients[i];
    const std::string& name = i < labels.size() ? labels[i] : "x" + std::to_string(i + 1);
    if (sgn(c) > 0) append(lhs, c, name);
    if (sgn(c) < 0) append(rhs, Integer(-c), name);
  }
  if (sgn(inequality.bound) < 0) append(lhs, Integer(-inequality.bound), "");
  if (sgn(inequality.bound) > 0) append(rhs, inequality.bound, "");
  if (lhs.empty()) lhs = "0";
  if (rhs.empty()) rhs = "0";
  return lhs + " >= " + rhs;
}

std::string format_h_polytope(const HPolytope& polytope) {
  std::ostringstream out;
  out << "# affine hull\n";
  for (const auto& eq : polytope.equalities) {
    for (const auto& c : eq.coefficients) out << c << '\t';
    out << "=\t" << eq.rhs << '\n';
  }
  out << "# facets\n";
  for (const auto& f : polytope.inequalities) {
    for (const auto& c : f.coefficients) out << c << '\t';
    out << ">=\t" << f.bound << '\n';
  }
  return out.str();
}

std::string format_h_polytope_tsv(const HPolytope& polytope) {
  std::ostringstream out;
  out << "kind";
  for (const auto& l : polytope.labels) out << '\t' << l;
  out << "\trel\trhs\n";
  for (const auto& eq : polytope.equalities) {
    out << "equality";
    for (const auto& c : eq.coefficients) out << '\t' << c;
    out << "\t=\t" << eq.rhs << '\n';
  }
  for (const auto& f : polytope.inequalities) {
    out << "facet";
    for (const auto& c : f.coefficients) out << '\t' << c;
    out << "\t>=\t" << f.bound << '\n';
  }
  return out.str();
}

std::string format_v_polytope(const VPolytope& polytope) {
  std::ostringstream out;
  out << "# vertices";
  for (const auto& l : polytope.labels) out << '\t' << l;
  out << '\n';
  for (const auto& v : polytope.vertices) {
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "\t" : "") << v[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace qlogic
