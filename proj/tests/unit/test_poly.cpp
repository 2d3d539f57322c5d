#include <gtest/gtest.h>

#include <finitype/errors.hpp>
#include <finitype/gaussian_rational.hpp>
#include <finitype/parser.hpp>
#include <finitype/polynomial.hpp>

#include "oracles.hpp"

using namespace finitype;

namespace {

const GaussianRational I = GaussianRational::i();
constexpr const char* kFixture = "2*Re(z3) + |z1^2 - z2*z3|^2 + |z2|^4";

Monomial mono(std::vector<unsigned> holo, std::vector<unsigned> anti) { return Monomial(std::move(holo), std::move(anti)); }

GaussianRational coefficient(const Poly& p, const Monomial& m) {
  auto it = p.terms().find(m);
  return it == p.terms().end() ? GaussianRational() : it->second;
}

bool hermitian(const Poly& p) {
  for (const auto& [m, c] : p.terms()) {
    if (!(coefficient(p, m.conj_swap()) == c.conj())) return false;
  }
  return true;
}

Point random_point(oracle::Generator& gen, std::size_t n) {
  Point p;
  for (std::size_t j = 0; j < n; ++j) p.push_back(gen.small_gaussian(2));
  return p;
}

}  // namespace

TEST(GaussianRational, CanonicalForm) {
  GaussianRational a(mpq_class(2, 4), mpq_class(-3, -6));
  EXPECT_EQ(a.re(), mpq_class(1, 2));
  EXPECT_EQ(a.im(), mpq_class(1, 2));
  EXPECT_EQ(a.re().get_den(), 2);
  EXPECT_TRUE(GaussianRational(0).is_zero());
  EXPECT_EQ(GaussianRational(mpq_class(6, 3)), GaussianRational(2));
}

TEST(GaussianRational, FieldOperations) {
  const GaussianRational a(mpq_class(1, 2), mpq_class(3));
  const GaussianRational b(mpq_class(-2), mpq_class(1, 3));
  EXPECT_EQ(a * a.inverse(), GaussianRational(1));
  EXPECT_EQ((a + b) - b, a);
  EXPECT_EQ(I * I, GaussianRational(-1));
  EXPECT_EQ(a.norm(), mpq_class(37, 4));
  EXPECT_EQ(a.conj().im(), mpq_class(-3));
  EXPECT_THROW(GaussianRational().inverse(), std::domain_error);
}

TEST(GaussianRational, TextRoundTrip) {
  oracle::Generator gen(11);
  for (int t = 0; t < 100; ++t) {
    const GaussianRational z = gen.small_gaussian(9);
    EXPECT_EQ(parse_scalar(z.to_string()), z) << z.to_string();
  }
  EXPECT_EQ(rational_string(mpq_class(4)), "4/1");
}

TEST(Parser, FixtureExpansion) {
  const RealPoly r = parse_poly(kFixture, 3);
  const Poly& p = r.poly();
  EXPECT_EQ(p.terms().size(), 7u);
  EXPECT_EQ(coefficient(p, mono({0, 0, 1}, {0, 0, 0})), GaussianRational(1));
  EXPECT_EQ(coefficient(p, mono({0, 0, 0}, {0, 0, 1})), GaussianRational(1));
  EXPECT_EQ(coefficient(p, mono({2, 0, 0}, {2, 0, 0})), GaussianRational(1));
  EXPECT_EQ(coefficient(p, mono({2, 0, 0}, {0, 1, 1})), GaussianRational(-1));
  EXPECT_EQ(coefficient(p, mono({0, 1, 1}, {2, 0, 0})), GaussianRational(-1));
  EXPECT_EQ(coefficient(p, mono({0, 1, 1}, {0, 1, 1})), GaussianRational(1));
  EXPECT_EQ(coefficient(p, mono({0, 2, 0}, {0, 2, 0})), GaussianRational(1));
  EXPECT_EQ(r.degree(), 4);
}

TEST(Parser, SmallCases) {
  EXPECT_TRUE(parse_poly("0", 2).poly().is_zero());
  const RealPoly m = parse_poly("|z1|^2", 1);
  ASSERT_EQ(m.poly().terms().size(), 1u);
  EXPECT_EQ(coefficient(m.poly(), mono({1}, {1})), GaussianRational(1));
  EXPECT_EQ(parse_poly("Im(z1)", 1).poly(), parse_expression("-1/2*i*z1 + 1/2*i*zb1", 1));
  EXPECT_EQ(parse_poly("-z1*zb1 + 3", 1).poly(), parse_expression("3 - |z1|^2", 1));
}

TEST(Parser, Errors) {
  try {
    parse_poly("z1 + * z2", 2);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  try {
    parse_poly("z1", 1);
    FAIL() << "expected a realness error";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("not real-valued"), std::string::npos);
  }
  EXPECT_THROW(parse_poly("|z4|^2", 3), ParseError);
  EXPECT_THROW(parse_poly("|z1|^3", 1), ParseError);
  EXPECT_THROW(parse_poly("Re(z1", 1), ParseError);
  EXPECT_THROW(parse_holo_poly("zb1", 1), InputError);
  EXPECT_THROW(parse_point("(0, 0)", 3), InputError);
}

TEST(RingOps, Examples) {
  const Poly a = parse_expression("z1*zb1", 2);
  const Poly b = parse_expression("z2*zb2", 2);
  EXPECT_EQ(a + b, parse_expression("|z1|^2 + |z2|^2", 2));
  EXPECT_EQ(Poly::variable(1, 0) * Poly::conj_variable(1, 0), parse_expression("z1*zb1", 1));
  EXPECT_EQ(parse_expression("i*z1", 1).conj_swap(), parse_expression("-i*zb1", 1));
  EXPECT_THROW(a + Poly::variable(3, 0), InputError);
}

TEST(Translate, Examples) {
  const RealPoly re3 = parse_poly("2*Re(z3)", 3);
  EXPECT_EQ(translate_to_point(re3, Point{0, 0, I}), re3);
  EXPECT_EQ(translate_to_point(parse_poly("|z1|^2", 2), Point{1, 0}), parse_poly("z1*zb1 + z1 + zb1 + 1", 2));
  EXPECT_EQ(translate_to_point(parse_poly(kFixture, 3), Point{0, 0, I}),
            parse_poly("2*Re(z3) + |z1^2 - i*z2 - z2*z3|^2 + |z2|^4", 3));
}

TEST(Translate, AgreesWithPointEvaluation) {
  oracle::Generator gen(5);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
    const RealPoly r = gen.real_poly(n, 4, 4);
    const Point p = random_point(gen, n);
    const Point z = random_point(gen, n);
    Point zp(n);
    for (std::size_t j = 0; j < n; ++j) zp[j] = z[j] + p[j];
    EXPECT_EQ(translate_to_point(r, p).evaluate(z), r.evaluate(zp));
  }
}

TEST(Truncate, Examples) {
  const RealPoly r = parse_poly(kFixture, 3);
  EXPECT_EQ(taylor_truncate(r, 3), parse_poly("2*Re(z3)", 3));
  // Every modulus term has degree exactly 4.
  EXPECT_EQ(taylor_truncate(r, 4), r);
  EXPECT_EQ(taylor_truncate(r, 8), r);
  EXPECT_EQ(taylor_truncate(r, 20), r);
}

TEST(PolyProperties, HermitianSymmetryPreserved) {
  oracle::Generator gen(7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
    const RealPoly a = gen.real_poly(n, 4, 3);
    const RealPoly b = gen.real_poly(n, 4, 3);
    EXPECT_TRUE(hermitian((a + b).poly()));
    EXPECT_TRUE(hermitian((a * b).poly()));
    EXPECT_TRUE(hermitian(translate_to_point(a, random_point(gen, n)).poly()));
    EXPECT_TRUE(hermitian(taylor_truncate(a * b, static_cast<unsigned>(gen.integer(0, 8))).poly()));
  }
}

TEST(PolyProperties, TranslateInverse) {
  oracle::Generator gen(8);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
    const RealPoly r = gen.real_poly(n, 5, 4);
    Point p = random_point(gen, n);
    Point minus;
    for (const auto& c : p) minus.push_back(-c);
    EXPECT_EQ(translate_to_point(translate_to_point(r, p), minus), r);
  }
}

TEST(PolyProperties, TruncationSplit) {
  oracle::Generator gen(9);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
    const RealPoly r = gen.real_poly(n, 6, 5);
    const unsigned k = static_cast<unsigned>(gen.integer(0, 6));
    const RealPoly rk = taylor_truncate(r, k);
    const RealPoly rest = r - rk;
    EXPECT_EQ(rk + rest, r);
    for (const auto& [m, c] : rest.poly().terms()) EXPECT_GE(m.degree(), k + 1);
    for (const auto& [m, c] : rk.poly().terms()) EXPECT_LE(m.degree(), k);
  }
}

TEST(PolyProperties, PrintParseFixedPoint) {
  oracle::Generator gen(10);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
    const RealPoly r = gen.real_poly(n, 5, 4);
    const std::string text = r.to_string();
    const RealPoly again = parse_poly(text, n);
    EXPECT_EQ(again, r) << text;
    EXPECT_EQ(again.to_string(), text);
  }
}
