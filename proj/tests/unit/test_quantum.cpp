#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qlogic/error.hpp"
#include "qlogic/quantum.hpp"
#include "qlogic_cli/fixtures.hpp"

using namespace qlogic;

namespace {

constexpr double tol = 1e-9;

Logic fx(std::string_view name) { return cli::fixture_logic(cli::fixture(name)); }

CVector real_vector(std::initializer_list<double> xs) {
  CVector v;
  for (double x : xs) v.emplace_back(x, 0.0);
  return v;
}

PureState random_state(std::size_t d, std::mt19937& rng) {
  std::normal_distribution<double> n;
  CVector v;
  for (std::size_t i = 0; i < d; ++i) v.emplace_back(n(rng), n(rng));
  return PureState::normalized(v);
}

}  // namespace

TEST(ParseRealization, Basics) {
  const Realization r = parse_realization("# comment\ndim 2\na: 1 0\nb: 0, 1j\n");
  EXPECT_EQ(r.dimension, 2u);
  ASSERT_NE(r.find("b"), nullptr);
  EXPECT_EQ((*r.find("b"))[1], Complex(0, 1));
  EXPECT_EQ(r.find("c"), nullptr);
}

TEST(ParseRealization, ComplexEntries) {
  EXPECT_EQ(parse_complex("0.5"), Complex(0.5, 0));
  EXPECT_EQ(parse_complex("-1e-3"), Complex(-1e-3, 0));
  EXPECT_EQ(parse_complex("0.2-0.7j"), Complex(0.2, -0.7));
  EXPECT_EQ(parse_complex("1e-1+2e+1j"), Complex(0.1, 20));
  EXPECT_EQ(parse_complex("-j"), Complex(0, -1));
  EXPECT_EQ(parse_complex("2j"), Complex(0, 2));
  EXPECT_THROW(parse_complex("abc"), Error);
  EXPECT_THROW(parse_complex("1+"), Error);
}

TEST(ParseRealization, ErrorsCarryLineNumbers) {
  auto line_of = [](std::string_view text) {
    try {
      parse_realization(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{99};
  };
  EXPECT_EQ(line_of("dim 2\na: 1 0\nb: 1\n"), 3u);
  EXPECT_EQ(line_of("dim x\n"), 1u);
  EXPECT_EQ(line_of("a: 1 0\n"), 1u);
  EXPECT_EQ(line_of("dim 2\na: 1 0\na: 0 1\n"), 3u);
  EXPECT_EQ(line_of("dim 2\na 1 0\n"), 2u);
  EXPECT_EQ(line_of(""), 0u);
}

TEST(ParseRealization, SerializeRoundTrip) {
  const Realization r = parse_realization(cli::fixture("cats-cradle").realization);
  const Realization back = parse_realization(serialize(r));
  EXPECT_EQ(back.vectors, r.vectors);
  const Realization c = parse_realization("dim 2\na: 0.5+0.5j 0.5-0.5j\n");
  EXPECT_EQ(parse_realization(serialize(c)).vectors, c.vectors);
}

TEST(Validate, CatsCradlePrintedVectors) {
  const Logic l = fx("cats-cradle");
  const Realization r = parse_realization(cli::fixture("cats-cradle").partial_realization);
  for (const auto& [name, v] : r.vectors) {
    double n2 = 0;
    for (auto c : v) n2 += std::norm(c);
    EXPECT_NEAR(n2, 1.0, tol) << name;
  }
  EXPECT_THROW(validate_realization(l, r, tol, true), Error);
  const auto report = validate_realization(l, r, tol, false);
  EXPECT_TRUE(report.pass);
  EXPECT_FALSE(report.complete);
  // the context a5 a6 a7 holds two printed vectors, which must be orthogonal
  const auto& c3 = report.contexts[2];
  EXPECT_EQ(c3.present, 2u);
  EXPECT_FALSE(c3.covered);
  EXPECT_TRUE(c3.orthonormal);
}

TEST(Validate, CompletedCatsCradle) {
  const Logic l = fx("cats-cradle");
  const auto report = validate_realization(l, parse_realization(cli::fixture("cats-cradle").realization), tol);
  EXPECT_TRUE(report.pass);
  EXPECT_TRUE(report.complete);
  EXPECT_LT(report.worst_deviation, 1e-15);
  for (const auto& c : report.contexts) EXPECT_TRUE(c.covered && c.orthonormal);
}

TEST(Validate, IdentityAndRepeatedVector) {
  const Logic l = parse_logic("context C: a b c");
  EXPECT_TRUE(validate_realization(l, parse_realization("dim 3\na: 1 0 0\nb: 0 1 0\nc: 0 0 1\n")).pass);
  const auto bad = validate_realization(l, parse_realization("dim 3\na: 1 0 0\nb: 1 0 0\nc: 0 0 1\n"));
  EXPECT_FALSE(bad.pass);
  EXPECT_NEAR(bad.worst_deviation, 1.0, 1e-15);
}

TEST(Validate, Errors) {
  const Logic l = parse_logic("context C: a b c");
  EXPECT_THROW(validate_realization(l, parse_realization("dim 2\na: 1 0\nb: 0 1\nc: 1 0\n")), Error);
  EXPECT_THROW(validate_realization(l, parse_realization("dim 3\na: 1 0 0\nb: 0 1 0\nz: 0 0 1\n"), tol, false),
               Error);
  EXPECT_THROW(validate_realization(l, parse_realization("dim 3\na: 1 0 0\nb: 0 1 0\n")), Error);
}

TEST(Born, CatsCradleValues) {
  const Logic l = fx("cats-cradle");
  const Realization r = parse_realization(cli::fixture("cats-cradle").partial_realization);
  const PureState rho = PureState::from_vector(*r.find("a1"));
  const auto p = born(rho, r, l);
  EXPECT_NEAR(*p[l.atom("a1")], 1.0, tol);
  EXPECT_NEAR(*p[l.atom("a7")], 1.0 / 9, tol);
  EXPECT_NEAR(*p[l.atom("a13")], 1.0 / 3, tol);
  EXPECT_NEAR(*p[l.atom("a6")], 2.0 / 9, tol);
  EXPECT_NEAR(*p[l.atom("a8")], 2.0 / 9, tol);
  EXPECT_FALSE(p[l.atom("a2")].has_value());
}

TEST(Born, TandemPrediction) {
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);
  const PureState a1 = PureState::from_vector(real_vector({s2 / s3, -1 / s3, 0}));
  EXPECT_NEAR(born(a1, real_vector({-1 / s3, s2 / s3, 0})), 8.0 / 9, tol);
}

TEST(Born, EqualityOfTheCatsCradleBound) {
  const Logic l = fx("cats-cradle");
  const Realization r = parse_realization(cli::fixture("cats-cradle").realization);
  const auto p = born(PureState::from_vector(*r.find("a1")), r, l);
  auto at = [&](const char* a) { return *p[l.atom(a)]; };
  EXPECT_NEAR(at("a1") + at("a7"), 10.0 / 9, tol);
  EXPECT_NEAR(at("a1") + at("a7"), 1.5 - 0.5 * (at("a12") + at("a13") + at("a2") + at("a6") + at("a8")), tol);
}

TEST(Born, PhaseInvariance) {
  const Logic l = fx("cats-cradle");
  Realization r = parse_realization(cli::fixture("cats-cradle").realization);
  std::mt19937 rng(17);
  const PureState rho = random_state(3, rng);
  const auto base = born(rho, r, l);
  const Complex phase = std::polar(1.0, 0.7);
  PureState shifted = rho;
  for (auto& c : shifted.amplitudes) c *= phase;
  for (auto& [name, v] : r.vectors)
    for (auto& c : v) c *= -std::conj(phase);
  const auto moved = born(shifted, r, l);
  for (std::size_t a = 0; a < base.size(); ++a) EXPECT_NEAR(*base[a], *moved[a], 1e-14);
}

TEST(Born, RandomStatesGiveFrameFunctions) {
  std::mt19937 rng(2024);
  for (const auto& f : cli::fixtures()) {
    if (f.realization.empty()) continue;
    const Logic l = cli::fixture_logic(f);
    const Realization r = parse_realization(f.realization);
    ASSERT_TRUE(validate_realization(l, r, tol).pass) << f.name;
    for (int trial = 0; trial < 200; ++trial) {
      const auto p = born(random_state(r.dimension, rng), r, l);
      std::vector<double> values;
      for (const auto& x : p) values.push_back(*x);
      EXPECT_TRUE(is_frame_function(l, values, tol)) << f.name;
    }
  }
}

TEST(Born, DimensionMismatch) {
  const Logic l = parse_logic("context C: a b");
  const Realization r = parse_realization("dim 2\na: 1 0\nb: 0 1\n");
  EXPECT_THROW(born(PureState::from_vector(real_vector({1, 0, 0})), r, l), Error);
  EXPECT_THROW(PureState::from_vector(real_vector({1, 1})), Error);
  EXPECT_THROW(PureState::normalized(real_vector({0, 0})), Error);
}

TEST(FrameFunction, FloatingCheck) {
  const Logic pent = fx("pentagon");
  EXPECT_TRUE(is_frame_function(pent, to_double(cli::parse_assignment(pent, cli::fixture("pentagon").assignment))));
  EXPECT_FALSE(is_frame_function(pent, std::vector<double>(10, 0.0)));
  const Logic one = parse_logic("context C: a b");
  EXPECT_TRUE(is_frame_function(one, {0.5 + 4e-10, 0.5}, tol));
  EXPECT_FALSE(is_frame_function(one, {0.5 + 4e-9, 0.5}, tol));
  EXPECT_FALSE(is_frame_function(one, {1.5, -0.5}, tol));
  const FrameCheck partial = check_frame_function(one, {0.5, std::nullopt}, tol);
  EXPECT_EQ(partial.unchecked, 1u);
  EXPECT_TRUE(partial.frame_function);
}
