#include "qlogic/logic.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_map>

#include "qlogic/error.hpp"

namespace qlogic {

Logic Logic::from_contexts(const std::vector<ContextSpec>& specs) {
  Logic logic;
  std::unordered_map<std::string, AtomId> index;
  std::set<std::vector<AtomId>> seen_sets;
  std::set<std::string> seen_names;

  for (const auto& spec : specs) {
    if (spec.atoms.size() < 2)
      throw Error("context '" + spec.name + "' has fewer than two atoms");
    if (!seen_names.insert(spec.name).second)
      throw Error("duplicate context name '" + spec.name + "'");

    Context ctx{spec.name, {}};
    for (const auto& name : spec.atoms) {
      auto [it, inserted] = index.try_emplace(name, logic.atoms_.size());
      if (inserted) {
        logic.atoms_.push_back(name);
        logic.membership_.emplace_back();
      }
      if (std::find(ctx.atoms.begin(), ctx.atoms.end(), it->second) != ctx.atoms.end())
        throw Error("atom '" + name + "' listed twice in context '" + spec.name + "'");
      ctx.atoms.push_back(it->second);
    }
    auto key = ctx.atoms;
    std::sort(key.begin(), key.end());
    if (!seen_sets.insert(key).second)
      throw Error("context '" + spec.name + "' duplicates the atom set of an earlier context");

    for (AtomId a : ctx.atoms) logic.membership_[a].push_back(logic.contexts_.size());
    logic.contexts_.push_back(std::move(ctx));
  }
  return logic;
}

std::optional<AtomId> Logic::find_atom(std::string_view name) const {
  auto it = std::find(atoms_.begin(), atoms_.end(), name);
  if (it == atoms_.end()) return std::nullopt;
  return static_cast<AtomId>(it - atoms_.begin());
}

AtomId Logic::atom(std::string_view name) const {
  if (auto a = find_atom(name)) return *a;
  throw Error("unknown atom '" + std::string(name) + "'");
}

bool Logic::orthogonal(AtomId a, AtomId b) const {
  if (a == b) return false;
  const auto& ca = membership_.at(a);
  const auto& cb = membership_.at(b);
  for (ContextId c : ca)
    if (std::binary_search(cb.begin(), cb.end(), c)) return true;
  return false;
}

namespace {

bool valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

Logic parse_logic(std::string_view text) {
  std::vector<Logic::ContextSpec> specs;
  std::vector<std::size_t> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }

    constexpr std::string_view kw = "context";
    if (line.substr(0, kw.size()) != kw || line.size() == kw.size() ||
        !std::isspace(static_cast<unsigned char>(line[kw.size()])))
      throw ParseError(line_no, "expected 'context <NAME>: <atoms>'");
    line.remove_prefix(kw.size());
    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(line_no, "missing ':' after context name");
    std::string name(trim(line.substr(0, colon)));
    if (!valid_identifier(name)) throw ParseError(line_no, "invalid context name '" + name + "'");
    auto atoms = split_ws(line.substr(colon + 1));
    for (const auto& a : atoms)
      if (!valid_identifier(a)) throw ParseError(line_no, "invalid atom name '" + a + "'");

    specs.push_back({std::move(name), std::move(atoms)});
    lines.push_back(line_no);

    // Validate incrementally so the error points at the offending line.
    try {
      (void)Logic::from_contexts(specs);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
    if (end == text.size()) break;
  }
  if (specs.empty()) throw ParseError(0, "logic has no contexts");
  return Logic::from_contexts(specs);
}

std::string serialize(const Logic& logic) {
  std::string out;
  for (const auto& ctx : logic.contexts()) {
    out += "context " + ctx.name + ":";
    for (AtomId a : ctx.atoms) out += " " + logic.atom_name(a);
    out += '\n';
  }
  return out;
}

Logic horizontal_pasting(std::size_t n, std::size_t arity) {
  if (n < 1 || arity < 2) throw Error("horizontal_pasting needs n >= 1 and arity >= 2");
  std::vector<Logic::ContextSpec> specs;
  std::size_t next = 1;
  for (std::size_t c = 1; c <= n; ++c) {
    Logic::ContextSpec spec{"C" + std::to_string(c), {}};
    for (std::size_t k = 0; k < arity; ++k) spec.atoms.push_back("a" + std::to_string(next++));
    specs.push_back(std::move(spec));
  }
  return Logic::from_contexts(specs);
}

namespace {

// Shared atoms of two contexts.
std::vector<AtomId> intersection(const Context& a, const Context& b) {
  std::vector<AtomId> x = a.atoms, y = b.atoms, out;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<LoopReport> detect_loops(const Logic& logic, std::size_t max_order) {
  if (max_order < 3) throw Error("detect_loops: max_order must be at least 3");
  const auto& ctxs = logic.contexts();
  const std::size_t n = ctxs.size();

  // shared[i][j]: number of common atoms; link[i][j]: the atom when exactly one.
  std::vector<std::vector<std::size_t>> shared(n, std::vector<std::size_t>(n, 0));
  std::vector<std::vector<AtomId>> link(n, std::vector<AtomId>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto common = intersection(ctxs[i], ctxs[j]);
      shared[i][j] = shared[j][i] = common.size();
      if (common.size() == 1) link[i][j] = link[j][i] = common.front();
    }

  std::vector<LoopReport> loops;
  std::vector<ContextId> path;
  std::vector<bool> on_path(n, false);

  // Extends `path` (whose first element is its smallest id) by contexts with
  // larger ids; every new context must be disjoint from all path members
  // except its predecessor (and, when closing, the start).
  std::function<void()> extend = [&]() {
    const ContextId last = path.back();
    const ContextId start = path.front();
    for (ContextId next = start + 1; next < n; ++next) {
      if (on_path[next] || shared[last][next] != 1) continue;
      bool ok = true;
      for (std::size_t k = 1; k + 1 < path.size() && ok; ++k)
        if (shared[path[k]][next] != 0) ok = false;
      if (!ok) continue;

      const bool can_close = path.size() + 1 >= 3 && shared[next][start] == 1;
      // Any member other than the start and predecessor must be disjoint;
      // when next touches the start without closing a legal loop, stop.
      if (path.size() >= 2 && shared[next][start] != 0 && !can_close) continue;

      path.push_back(next);
      on_path[next] = true;
      if (can_close && path[1] < path.back()) {
        LoopReport r;
        r.order = path.size();
        r.contexts = path;
        for (std::size_t k = 0; k < path.size(); ++k)
          r.linking_atoms.push_back(link[path[k]][path[(k + 1) % path.size()]]);
        auto atoms = r.linking_atoms;
        std::sort(atoms.begin(), atoms.end());
        if (std::adjacent_find(atoms.begin(), atoms.end()) == atoms.end()) loops.push_back(std::move(r));
      }
      if (!can_close && path.size() < max_order) extend();
      path.pop_back();
      on_path[next] = false;
    }
  };

  for (ContextId s = 0; s < n; ++s) {
    path = {s};
    on_path[s] = true;
    extend();
    on_path[s] = false;
  }

  std::sort(loops.begin(), loops.end(), [](const LoopReport& a, const LoopReport& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.contexts < b.contexts;
  });
  return loops;
}

ContextProfile context_profile(const Logic& logic) {
  ContextProfile p;
  for (const auto& c : logic.contexts()) ++p.arity_histogram[c.atoms.size()];
  p.mixed_arity = p.arity_histogram.size() >= 2;
  return p;
}

SpeckerReport specker_oracle_check() {
  SpeckerReport report;
  report.classes.resize(4);
  report.every_state_has_equal_pair = true;
  for (int bits = 0; bits < 8; ++bits) {
    SpeckerReport::Row row;
    int filled = 0;
    for (int box = 0; box < 3; ++box) {
      const bool f = (bits >> (2 - box)) & 1;
      row.state += f ? 'f' : 'e';
      filled += f;
    }
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (row.state[i] == row.state[j]) row.equal_pairs.emplace_back(i + 1, j + 1);
    if (row.equal_pairs.empty()) report.every_state_has_equal_pair = false;
    report.classes[filled].push_back(row.state);
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string to_dot(const Logic& logic) {
  static constexpr const char* kPalette[] = {"blue",   "red",    "green3", "magenta", "cyan3",
                                             "orange", "gray40", "brown",  "olivedrab", "purple"};
  constexpr std::size_t kColors = sizeof(kPalette) / sizeof(kPalette[0]);
  std::ostringstream out;
  out << "graph logic {\n";
  out << "  node [shape=circle, width=0.15, fixedsize=true, fontsize=9];\n";
  for (const auto& name : logic.atoms()) out << "  \"" << name << "\";\n";
  std::size_t k = 0;
  for (const auto& ctx : logic.contexts()) {
    out << "  ";
    for (std::size_t i = 0; i < ctx.atoms.size(); ++i) {
      if (i) out << " -- ";
      out << '"' << logic.atom_name(ctx.atoms[i]) << '"';
    }
    out << " [color=" << kPalette[k % kColors] << ", penwidth=3, label=\"" << ctx.name << "\"];\n";
    ++k;
  }
  out << "}\n";
  return out.str();
}

}  // namespace qlogic
