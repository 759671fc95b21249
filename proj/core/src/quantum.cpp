#include "qlogic/quantum.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "qlogic/error.hpp"

namespace qlogic {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double x = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size() || !std::isfinite(x))
    throw Error("malformed number '" + std::string(whole) + "'");
  return x;
}

std::vector<std::string_view> split_fields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',')) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != ',') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

void write_double(std::ostream& out, double x) {
  if (x == 0) x = 0;  // drop negative zero
  out << std::setprecision(17) << x;
}

}  // namespace

const CVector* Realization::find(std::string_view atom) const {
  auto it = vectors.find(std::string(atom));
  return it == vectors.end() ? nullptr : &it->second;
}

Complex parse_complex(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw Error("empty number");
  if (s.back() != 'j' && s.back() != 'i') return {parse_real(s, text), 0.0};
  const std::string_view body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_part = [&](std::string_view im) {
    if (im.empty() || im == "+") return 1.0;
    if (im == "-") return -1.0;
    return parse_real(im, text);
  };
  if (split == std::string_view::npos) return {0.0, imag_part(body)};
  return {parse_real(body.substr(0, split), text), imag_part(body.substr(split))};
}

CVector parse_vector(std::string_view text) {
  CVector v;
  for (auto f : split_fields(text)) v.push_back(parse_complex(f));
  return v;
}

Realization parse_realization(std::string_view text) {
  Realization r;
  bool have_dim = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    try {
      if (!have_dim) {
        auto fields = split_fields(line);
        if (fields.size() != 2 || fields[0] != "dim") throw Error("expected 'dim <d>' header");
        std::size_t d = 0;
        auto [p, ec] = std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), d);
        if (ec != std::errc() || p != fields[1].data() + fields[1].size() || d == 0)
          throw Error("bad dimension '" + std::string(fields[1]) + "'");
        r.dimension = d;
        have_dim = true;
      } else {
        auto colon = line.find(':');
        if (colon == std::string_view::npos) throw Error("expected '<atom>: <components>'");
        std::string name(trim(line.substr(0, colon)));
        if (name.empty()) throw Error("missing atom name");
        for (char c : name)
          if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') throw Error("bad atom name '" + name + "'");
        CVector v = parse_vector(line.substr(colon + 1));
        if (v.size() != r.dimension)
          throw Error("atom " + name + " has " + std::to_string(v.size()) + " components, expected " +
                      std::to_string(r.dimension));
        if (!r.vectors.emplace(name, std::move(v)).second) throw Error("duplicate vector for atom " + name);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
    if (end == text.size()) break;
  }
  if (!have_dim) throw ParseError(0, "missing 'dim <d>' header");
  return r;
}

std::string serialize(const Realization& realization) {
  std::ostringstream out;
  out << "dim " << realization.dimension << '\n';
  for (const auto& [name, v] : realization.vectors) {
    out << name << ':';
    for (const auto& c : v) {
      out << ' ';
      write_double(out, c.real());
      if (c.imag() != 0) {
        if (c.imag() > 0) out << '+';
        write_double(out, c.imag());
        out << 'j';
      }
    }
    out << '\n';
  }
  return out.str();
}

PureState PureState::from_vector(CVector v, double tolerance) {
  double n2 = 0;
  for (const auto& c : v) n2 += std::norm(c);
  if (v.empty() || std::abs(std::sqrt(n2) - 1) > tolerance) throw Error("state vector is not normalized");
  return PureState{std::move(v)};
}

PureState PureState::normalized(CVector v) {
  double n2 = 0;
  for (const auto& c : v) n2 += std::norm(c);
  if (n2 == 0) throw Error("zero state vector");
  const double n = std::sqrt(n2);
  for (auto& c : v) c /= n;
  return PureState{std::move(v)};
}

RealizationReport validate_realization(const Logic& logic, const Realization& realization, double tolerance,
                                       bool require_complete) {
  for (const auto& [name, v] : realization.vectors) {
    if (!logic.find_atom(name)) throw Error("realization names unknown atom " + name);
    if (v.size() != realization.dimension) throw Error("vector for " + name + " has wrong length");
  }
  RealizationReport report;
  report.complete = true;
  for (AtomId a = 0; a < logic.atom_count(); ++a) {
    if (realization.find(logic.atom_name(a))) continue;
    if (require_complete) throw Error("no vector for atom " + logic.atom_name(a));
    report.complete = false;
  }
  for (ContextId c = 0; c < logic.context_count(); ++c) {
    const auto& ctx = logic.contexts()[c];
    if (ctx.atoms.size() != realization.dimension)
      throw Error("context " + ctx.name + " has " + std::to_string(ctx.atoms.size()) + " atoms but dimension is " +
                  std::to_string(realization.dimension));
    std::vector<const CVector*> vs;
    for (AtomId a : ctx.atoms)
      if (const CVector* v = realization.find(logic.atom_name(a))) vs.push_back(v);
    ContextCheck check;
    check.context = c;
    check.present = vs.size();
    check.covered = vs.size() == ctx.atoms.size();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i; j < vs.size(); ++j) {
        Complex ip = 0;
        for (std::size_t k = 0; k < realization.dimension; ++k) ip += std::conj((*vs[i])[k]) * (*vs[j])[k];
        const double dev = i == j ? std::abs(ip.real() - 1) : std::abs(ip);
        check.deviation = std::max(check.deviation, dev);
      }
    }
    check.orthonormal = check.deviation <= tolerance;
    report.worst_deviation = std::max(report.worst_deviation, check.deviation);
    report.contexts.push_back(check);
  }
  report.pass = report.worst_deviation <= tolerance;
  return report;
}

double born(const PureState& state, const CVector& e) {
  if (e.size() != state.amplitudes.size()) throw Error("born: dimension mismatch");
  Complex ip = 0;
  for (std::size_t k = 0; k < e.size(); ++k) ip += std::conj(e[k]) * state.amplitudes[k];
  return std::norm(ip);
}

std::vector<std::optional<double>> born(const PureState& state, const Realization& realization, const Logic& logic) {
  if (state.amplitudes.size() != realization.dimension) throw Error("born: dimension mismatch");
  std::vector<std::optional<double>> out(logic.atom_count());
  for (AtomId a = 0; a < logic.atom_count(); ++a)
    if (const CVector* v = realization.find(logic.atom_name(a))) out[a] = born(state, *v);
  return out;
}

FrameCheck check_frame_function(const Logic& logic, const std::vector<std::optional<double>>& values,
                                double tolerance) {
  if (values.size() != logic.atom_count()) throw Error("frame function: wrong number of values");
  FrameCheck check;
  bool ok = true;
  for (const auto& v : values)
    if (v && (*v < -tolerance || *v > 1 + tolerance)) ok = false;
  for (const auto& ctx : logic.contexts()) {
    double sum = 0;
    bool full = true;
    for (AtomId a : ctx.atoms) {
      if (!values[a]) {
        full = false;
        break;
      }
      sum += *values[a];
    }
    if (!full) {
      ++check.unchecked;
      continue;
    }
    ++check.checked;
    const double dev = std::abs(sum - 1);
    check.worst_deviation = std::max(check.worst_deviation, dev);
    if (dev > tolerance) ok = false;
  }
  check.frame_function = ok;
  return check;
}

bool is_frame_function(const Logic& logic, const std::vector<double>& values, double tolerance) {
  if (values.size() != logic.atom_count()) throw Error("frame function: wrong number of values");
  std::vector<std::optional<double>> opt(values.begin(), values.end());
  return check_frame_function(logic, opt, tolerance).frame_function;
}

std::vector<double> to_double(const ProbabilityAssignment& p) {
  std::vector<double> out;
  out.reserve(p.values.size());
  for (const auto& x : p.values) out.push_back(x.get_d());
  return out;
}

}  // namespace qlogic
