#include "qlogic/correlations.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <thread>

#include "qlogic/error.hpp"

namespace qlogic {

namespace {

std::vector<std::uint64_t> context_masks(const Logic& logic) {
  if (logic.atom_count() > max_scan_atoms)
    throw Error("exhaustive scan limited to " + std::to_string(max_scan_atoms) + " atoms, logic has " +
                std::to_string(logic.atom_count()));
  std::vector<std::uint64_t> masks;
  for (const auto& ctx : logic.contexts()) {
    std::uint64_t m = 0;
    for (AtomId a : ctx.atoms) m |= std::uint64_t{1} << a;
    masks.push_back(m);
  }
  return masks;
}

long objective_value(const std::vector<std::uint64_t>& masks, std::uint64_t bits, Objective objective) {
  long s = 0;
  for (auto m : masks) {
    if (objective == Objective::sum_E)
      s += (std::popcount(bits & m) & 1) ? -1 : 1;
    else
      s += (bits & m) == m ? 1 : 0;
  }
  return s;
}

unsigned thread_count(unsigned requested, std::uint64_t work) {
  unsigned t = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (work < (std::uint64_t{1} << 12)) t = 1;
  return t;
}

// Runs body(begin, end, slot) over [0, total) in contiguous chunks.
template <class Body>
void parallel_ranges(std::uint64_t total, unsigned threads, Body body) {
  if (threads <= 1) {
    body(std::uint64_t{0}, total, 0u);
    return;
  }
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (total + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t begin = std::min(total, chunk * t);
    const std::uint64_t end = std::min(total, begin + chunk);
    pool.emplace_back([=, &body] { body(begin, end, t); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

Assignment Assignment::from_bits(std::uint64_t bits, std::size_t atoms) {
  Assignment a;
  a.values.resize(atoms);
  for (std::size_t i = 0; i < atoms; ++i) a.values[i] = (bits >> i) & 1;
  return a;
}

ContextProducts products(const Logic& logic, const Assignment& assignment) {
  if (assignment.values.size() != logic.atom_count()) throw Error("products: assignment does not cover every atom");
  ContextProducts out;
  for (const auto& ctx : logic.contexts()) {
    int p = 1, e = 1;
    for (AtomId a : ctx.atoms) {
      const int v = assignment.values[a] ? 1 : 0;
      p *= v;
      e *= 1 - 2 * v;
    }
    out.P.push_back(p);
    out.E.push_back(e);
  }
  return out;
}

std::string_view to_string(Objective objective) { return objective == Objective::sum_E ? "sum_E" : "sum_P"; }

Objective parse_objective(std::string_view text) {
  if (text == "sum_E") return Objective::sum_E;
  if (text == "sum_P") return Objective::sum_P;
  throw Error("unknown objective '" + std::string(text) + "' (expected sum_E or sum_P)");
}

ScanResult scan(const Logic& logic, Objective objective, unsigned threads) {
  const auto masks = context_masks(logic);
  const std::uint64_t total = std::uint64_t{1} << logic.atom_count();
  const long k = static_cast<long>(masks.size());
  const long lo = objective == Objective::sum_E ? -k : 0;
  const std::size_t width = static_cast<std::size_t>(k - lo + 1);

  const unsigned t = thread_count(threads, total);
  std::vector<std::vector<std::uint64_t>> partial(t, std::vector<std::uint64_t>(width, 0));
  parallel_ranges(total, t, [&](std::uint64_t begin, std::uint64_t end, unsigned slot) {
    auto& h = partial[slot];
    for (std::uint64_t bits = begin; bits < end; ++bits) ++h[static_cast<std::size_t>(objective_value(masks, bits, objective) - lo)];
  });
  std::vector<std::uint64_t> hist(width, 0);
  for (const auto& h : partial)
    for (std::size_t i = 0; i < width; ++i) hist[i] += h[i];

  std::size_t first = 0, last = width - 1;
  while (hist[first] == 0) ++first;
  while (hist[last] == 0) --last;
  ScanResult r;
  r.objective = objective;
  r.total = total;
  r.min = lo + static_cast<long>(first);
  r.max = lo + static_cast<long>(last);
  r.count_at_min = hist[first];
  r.count_at_max = hist[last];
  r.histogram.assign(hist.begin() + static_cast<long>(first), hist.begin() + static_cast<long>(last) + 1);
  return r;
}

std::vector<std::uint64_t> assignments_with(const Logic& logic, Objective objective, long value, unsigned threads) {
  const auto masks = context_masks(logic);
  const std::uint64_t total = std::uint64_t{1} << logic.atom_count();
  const unsigned t = thread_count(threads, total);
  std::vector<std::vector<std::uint64_t>> partial(t);
  parallel_ranges(total, t, [&](std::uint64_t begin, std::uint64_t end, unsigned slot) {
    for (std::uint64_t bits = begin; bits < end; ++bits)
      if (objective_value(masks, bits, objective) == value) partial[slot].push_back(bits);
  });
  std::vector<std::uint64_t> out;
  for (auto& p : partial) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::string_view to_string(Coordinates coords) {
  switch (coords) {
    case Coordinates::P: return "P";
    case Coordinates::E: return "E";
    case Coordinates::PE: return "PE";
  }
  return "?";
}

Coordinates parse_coordinates(std::string_view text) {
  if (text == "P") return Coordinates::P;
  if (text == "E") return Coordinates::E;
  if (text == "PE") return Coordinates::PE;
  throw Error("unknown coordinates '" + std::string(text) + "' (expected P, E or PE)");
}

VPolytope correlation_polytope(const Logic& logic, Coordinates coords, unsigned threads) {
  const auto masks = context_masks(logic);
  const std::size_t k = masks.size();
  if (2 * k > 64) throw Error("correlation_polytope: too many contexts");
  const std::uint64_t total = std::uint64_t{1} << logic.atom_count();

  // Each product vector is packed into a key: bit i is P_i, bit k+i is
  // E_i = -1.
  const unsigned t = thread_count(threads, total);
  std::vector<std::set<std::uint64_t>> partial(t);
  parallel_ranges(total, t, [&](std::uint64_t begin, std::uint64_t end, unsigned slot) {
    auto& seen = partial[slot];
    for (std::uint64_t bits = begin; bits < end; ++bits) {
      std::uint64_t key = 0;
      for (std::size_t i = 0; i < k; ++i) {
        const std::uint64_t m = masks[i];
        if (coords != Coordinates::E && (bits & m) == m) key |= std::uint64_t{1} << i;
        if (coords != Coordinates::P && (std::popcount(bits & m) & 1)) key |= std::uint64_t{1} << (k + i);
      }
      seen.insert(key);
    }
  });
  std::set<std::uint64_t> keys;
  for (auto& s : partial) keys.merge(s);

  VPolytope poly;
  if (coords != Coordinates::E)
    for (std::size_t i = 0; i < k; ++i) poly.labels.push_back("P" + std::to_string(i + 1));
  if (coords != Coordinates::P)
    for (std::size_t i = 0; i < k; ++i) poly.labels.push_back("E" + std::to_string(i + 1));
  for (auto key : keys) {
    RatVector v;
    if (coords != Coordinates::E)
      for (std::size_t i = 0; i < k; ++i) v.emplace_back(static_cast<int>((key >> i) & 1));
    if (coords != Coordinates::P)
      for (std::size_t i = 0; i < k; ++i) v.emplace_back((key >> (k + i)) & 1 ? -1 : 1);
    poly.vertices.push_back(std::move(v));
  }
  std::sort(poly.vertices.begin(), poly.vertices.end());
  return poly;
}

SubclassicalClaim subclassical_E_claim(const Logic& logic) {
  SubclassicalClaim claim;
  claim.holds = true;
  for (const auto& ctx : logic.contexts()) {
    const std::size_t n = ctx.atoms.size();
    if (n % 2 != 0) throw Error("context " + ctx.name + " has odd arity " + std::to_string(n));
    for (std::size_t one = 0; one < n; ++one) {
      int e = 1;
      for (std::size_t j = 0; j < n; ++j) e *= j == one ? -1 : 1;
      claim.holds = claim.holds && e == -1;
      ++claim.patterns_checked;
    }
  }
  claim.hypothetical_sum_E = -static_cast<long>(logic.context_count());
  return claim;
}

}  // namespace qlogic
