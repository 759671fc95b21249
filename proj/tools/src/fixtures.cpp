#include "qlogic_cli/fixtures.hpp"

#include <cctype>

#include "qlogic/error.hpp"

namespace qlogic::cli {

namespace {

constexpr std::string_view cats_cradle_vectors = R"(dim 3
a1: 0.81649658092772603 -0.57735026918962576 0
a2: -0.28867513459481288 -0.40824829046386302 0.86602540378443865
a3: 0.5 0.70710678118654752 0.5
a4: 0.70710678118654752 0 -0.70710678118654752
a5: -0.5 0.70710678118654752 -0.5
a6: -0.28867513459481288 0.40824829046386302 0.86602540378443865
a7: 0.81649658092772603 0.57735026918962576 0
a8: -0.28867513459481288 0.40824829046386302 -0.86602540378443865
a9: -0.5 0.70710678118654752 0.5
a10: 0.70710678118654752 0 0.70710678118654752
a11: 0.5 0.70710678118654752 -0.5
a12: 0.28867513459481288 0.40824829046386302 0.86602540378443865
a13: 0 1 0
)";

// a1, a7, a13 and the pair a6, a8 as printed; the rest of the basis is
// left open.
constexpr std::string_view cats_cradle_printed = R"(dim 3
a1: 0.81649658092772603 -0.57735026918962576 0
a6: -0.28867513459481288 0.40824829046386302 0.86602540378443865
a7: 0.81649658092772603 0.57735026918962576 0
a8: -0.28867513459481288 0.40824829046386302 -0.86602540378443865
a13: 0 1 0
)";

std::vector<Fixture> build() {
  std::vector<Fixture> f;

  f.push_back({"mo3", "three two-atom contexts pasted horizontally (Chinese lantern MO3)",
               "context C1: a1 a2\ncontext C2: a3 a4\ncontext C3: a5 a6\n", "", "", "", "", 8, {}});

  f.push_back({"single2", "one two-atom context", "context C1: a1 a2\n",
               "dim 2\na1: 1 0\na2: 0 1\n", "", "", "", 2, {}});
  f.push_back({"single3", "one three-atom context", "context C1: a1 a2 a3\n",
               "dim 3\na1: 1 0 0\na2: 0 1 0\na3: 0 0 1\n", "", "", "", 3, {}});
  f.push_back({"single4", "one four-atom context", "context C1: a1 a2 a3 a4\n",
               "dim 4\na1: 1 0 0 0\na2: 0 1 0 0\na3: 0 0 1 0\na4: 0 0 0 1\n", "", "", "", 4, {}});

  f.push_back({"fig1i", "a three-atom and a two-atom context, disjoint",
               "context C1: a1 a2 a3\ncontext C2: a4 a5\n", "", "", "", "", 6, {}});
  f.push_back({"fig1ii", "two three-atom contexts tied by two two-atom contexts",
               "context C1: a1 a2 a3\ncontext C2: a4 a5 a6\ncontext C3: a3 a6\ncontext C4: a1 a4\n", "", "",
               "", "", std::nullopt, {}});
  f.push_back({"fig1iii", "fig1ii with a third two-atom context; forces 2 = 3",
               "context C1: a1 a2 a3\ncontext C2: a4 a5 a6\ncontext C3: a3 a6\ncontext C4: a1 a4\n"
               "context C5: a2 a5\n",
               "", "", "", "", 0, {}});

  f.push_back({"fig2i", "triangle of two-atom contexts",
               "context C1: a1 a2\ncontext C2: a2 a3\ncontext C3: a3 a1\n", "", "", "", "", 0, {}});
  f.push_back({"fig2ii", "triangle of three-atom contexts",
               "context C1: a1 a2 a3\ncontext C2: a3 a4 a5\ncontext C3: a5 a6 a1\n", "", "", "", "", 4, {}});
  f.push_back({"fig2iii", "triangle of three-atom contexts with three more contexts through a7",
               "context C1: a1 a2 a3\ncontext C2: a3 a4 a5\ncontext C3: a5 a6 a1\n"
               "context C4: a2 a7 a5\ncontext C5: a6 a7 a3\ncontext C6: a4 a7 a1\n",
               "", "", "", "", 1, {}});

  f.push_back({"fig3i", "square of two-atom contexts",
               "context C1: a1 a2\ncontext C2: a2 a3\ncontext C3: a3 a4\ncontext C4: a4 a1\n", "", "", "", "", 2,
               {}});
  f.push_back({"fig3ii", "square of three-atom contexts",
               "context C1: a1 a2 a3\ncontext C2: a3 a4 a5\ncontext C3: a5 a6 a7\ncontext C4: a7 a8 a1\n", "",
               "", "", "", std::nullopt, {}});
  f.push_back({"fig3iii", "3x3 grid: three row and three column contexts",
               "context C1: a1 a2 a3\ncontext C2: a4 a5 a6\ncontext C3: a7 a8 a9\n"
               "context C4: a1 a4 a7\ncontext C5: a2 a5 a8\ncontext C6: a3 a6 a9\n",
               "", "", "", "", 6, {}});
  f.push_back({"fig3iv", "3x3 grid plus both diagonals",
               "context C1: a1 a2 a3\ncontext C2: a4 a5 a6\ncontext C3: a7 a8 a9\n"
               "context C4: a1 a4 a7\ncontext C5: a2 a5 a8\ncontext C6: a3 a6 a9\n"
               "context C7: a1 a5 a9\ncontext C8: a3 a5 a7\n",
               "", "", "", "", 0, {}});

  f.push_back({"cats-cradle", "cat's cradle: 13 atoms in 7 three-atom contexts",
               "context C1: a1 a2 a3\ncontext C2: a3 a4 a5\ncontext C3: a5 a6 a7\ncontext C4: a7 a8 a9\n"
               "context C5: a9 a10 a11\ncontext C6: a11 a12 a1\ncontext C7: a4 a13 a10\n",
               cats_cradle_vectors, cats_cradle_printed, "", "", 14,
               {"p1+p2+p6>=p4+p8", "p1+p2>=p4", "p1+2p2+p6>=2p4+p8", "p2+p6>=p4", "p10+p2+p6>=p4+p8",
                "p4+p8+1>=p1+p10+p2+p6", "p8+1>=p1+p10+p2", "p4+1>=p1+p2+p6", "p4+p5>=p1+p2",
                "p1+p2+p6+p7>=p4+1", "p4+p8+p9>=p1+p2+p6", "p1+p10+p11+p2+p6>=p4+p8+1",
                "p12+p4+p8>=p10+p2+p6", "p10+p13+p4>=1"}});

  f.push_back({"pentagon", "pentagon: five three-atom contexts sharing corners a1 a3 a5 a7 a9",
               "context C1: a1 a2 a3\ncontext C2: a3 a4 a5\ncontext C3: a5 a6 a7\ncontext C4: a7 a8 a9\n"
               "context C5: a9 a10 a1\n",
               "", "", "a1: 1/2\na3: 1/2\na5: 1/2\na7: 1/2\na9: 1/2\n", "wright", 11,
               {"p4+p8>=p1", "p4+1>=p1+p2+p6", "p4+p8+1>=2p1+p2+p6", "p1+p2>=p4", "p1+p2+p6>=p4+p8",
                "2p1+p10+p2+p6>=p4+p8+1"}});
  f.push_back({"reduced-pentagon", "pentagon with the non-intertwining atoms removed",
               "context C1: a1 a3\ncontext C2: a3 a5\ncontext C3: a5 a7\ncontext C4: a7 a9\ncontext C5: a9 a1\n",
               "", "", "a1: 1/2\na3: 1/2\na5: 1/2\na7: 1/2\na9: 1/2\n", "wright", 0, {}});

  f.push_back({"triangle4", "triangle of four-atom contexts sharing corners a1 a4 a7",
               "context C1: a1 a2 a3 a4\ncontext C2: a4 a5 a6 a7\ncontext C3: a7 a8 a9 a1\n", "", "",
               "a1: 1/2\na4: 1/2\na7: 1/2\n", "wright", 14,
               {"p5+p6>=p1", "p5+p6+1>=2p1+p2+p3+p8", "p1+p2+p3>=p5+p6", "p5+p6+p7>=p1+p2+p3",
                "2p1+p2+p3+p8+p9>=p5+p6+1"}});

  // Nine four-atom contexts, every atom in exactly two. C1..C6 form a
  // hexagon through a1 a4 a7 a10 a13 a16; C7..C9 cross it.
  f.push_back({"cabello18", "18 atoms in nine four-atom contexts, no two-valued state",
               "context C1: a1 a2 a3 a4\ncontext C2: a4 a5 a6 a7\ncontext C3: a7 a8 a9 a10\n"
               "context C4: a10 a11 a12 a13\ncontext C5: a13 a14 a15 a16\ncontext C6: a16 a17 a18 a1\n"
               "context C7: a3 a5 a12 a14\ncontext C8: a2 a9 a11 a18\ncontext C9: a6 a8 a15 a17\n",
               "", "", "", "", 0, {}});
  return f;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = build();
  return all;
}

const Fixture& fixture(std::string_view name) {
  for (const auto& f : fixtures())
    if (f.name == name) return f;
  std::string known;
  for (const auto& f : fixtures()) known += (known.empty() ? "" : ", ") + std::string(f.name);
  throw Error("unknown fixture '" + std::string(name) + "' (known: " + known + ")");
}

Logic fixture_logic(const Fixture& f) { return parse_logic(f.logic); }

ProbabilityAssignment parse_assignment(const Logic& logic, std::string_view text) {
  ProbabilityAssignment p;
  p.values.assign(logic.atom_count(), Rational(0));
  std::vector<bool> seen(logic.atom_count(), false);
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::string compact;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    if (compact.empty()) continue;
    const auto colon = compact.find(':');
    if (colon == std::string::npos) throw ParseError(line_no, "expected '<atom>: <value>'");
    const std::string atom = compact.substr(0, colon);
    const auto id = logic.find_atom(atom);
    if (!id) throw ParseError(line_no, "unknown atom '" + atom + "'");
    if (seen[*id]) throw ParseError(line_no, "atom '" + atom + "' assigned twice");
    seen[*id] = true;
    try {
      p.values[*id] = parse_rational(compact.substr(colon + 1));
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return p;
}

}  // namespace qlogic::cli
