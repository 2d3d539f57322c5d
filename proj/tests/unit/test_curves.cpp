#include <gtest/gtest.h>

#include <set>

#include <finitype/curve.hpp>
#include <finitype/errors.hpp>
#include <finitype/parser.hpp>

#include "oracles.hpp"

using namespace finitype;

namespace {

const GaussianRational I = GaussianRational::i();
constexpr const char* kFixture = "2*Re(z3) + |z1^2 - z2*z3|^2 + |z2|^4";

CurveGerm curve(const std::vector<std::string>& comps) {
  std::vector<UnivariatePoly> c;
  for (const auto& s : comps) c.push_back(parse_univariate(s));
  return CurveGerm(std::move(c));
}

TracePoly trace(std::initializer_list<std::tuple<unsigned, unsigned, GaussianRational>> terms) {
  TracePoly t;
  for (const auto& [a, b, c] : terms) t.add_term(a, b, c);
  return t;
}

CurveGerm random_curve(oracle::Generator& gen, std::size_t n) {
  while (true) {
    std::vector<UnivariatePoly> comps(n);
    bool moving = false;
    for (auto& c : comps) {
      c.assign(static_cast<std::size_t>(gen.integer(1, 4)), GaussianRational());
      for (std::size_t e = 1; e < c.size(); ++e) {
        if (gen.integer(0, 2) > 0) {
          c[e] = gen.small_gaussian(2);
          moving = true;
        }
      }
    }
    if (moving) return CurveGerm(std::move(comps));
  }
}

}  // namespace

TEST(CurveGerm, Multiplicity) {
  EXPECT_EQ(curve({"t^2 + t^3", "t^5", "i"}).multiplicity(), 2u);
  EXPECT_EQ(curve({"1", "t"}).multiplicity(), 1u);
  EXPECT_THROW(curve({"1", "i"}), InputError);
  const CurveGerm g = curve({"t", "-i*t^2", "i"});
  EXPECT_EQ(g.base(), (Point{0, 0, I}));
  EXPECT_EQ(g.reparametrize(3).multiplicity(), 3u);
  EXPECT_EQ(g.to_string(), "(t, (-1*i)*t^2, i)");
}

TEST(Compose, FixtureAtOrigin) {
  const RealPoly r = parse_poly(kFixture, 3);
  const TracePoly s = compose_with_curve(r, curve({"t", "t^2", "0"}));
  EXPECT_EQ(s, trace({{2, 2, 1}, {4, 4, 1}}));
  EXPECT_TRUE(s.is_real());
}

TEST(Compose, FixtureRecentered) {
  const RealPoly r = translate_to_point(parse_poly(kFixture, 3), Point{0, 0, I});
  EXPECT_EQ(compose_with_curve(r, curve({"t", "-i*t^2", "0"})), trace({{4, 4, 1}}));
}

TEST(Compose, Hyperplane) {
  EXPECT_EQ(compose_with_curve(parse_poly("2*Re(z1)", 1), curve({"t"})), trace({{1, 0, 1}, {0, 1, 1}}));
  EXPECT_THROW(compose_with_curve(parse_poly("2*Re(z1)", 1), curve({"t", "0"})), InputError);
}

TEST(VanishingOrder, Examples) {
  EXPECT_EQ(vanishing_order(trace({{2, 2, 1}})), ExtNatural(4));
  EXPECT_TRUE(vanishing_order(TracePoly{}).is_infinite());
  EXPECT_EQ(vanishing_order(trace({{1, 0, 1}, {4, 4, 1}})), ExtNatural(1));
}

TEST(ProbeFamily, SingleVariable) {
  ProbeConfig cfg;
  cfg.max_weight = 1;
  cfg.pool = {1};
  cfg.random_curves = 0;
  const auto curves = enumerate_probe_curves(1, Point{0}, cfg);
  ASSERT_EQ(curves.size(), 1u);
  EXPECT_EQ(curves.front().to_string(), "(t)");
}

TEST(ProbeFamily, MonomialCountMatchesBruteForce) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (unsigned w = 1; w <= 3; ++w) {
      ProbeConfig cfg;
      cfg.max_weight = w;
      cfg.pool = {1, -I};
      cfg.random_curves = 0;
      const auto curves = enumerate_probe_curves(n, Point(n), cfg);
      // Oracle: every choice per component from {0} ∪ pool × weights, minus the all-zero tuple.
      std::set<std::string> distinct;
      std::size_t total = 1;
      for (std::size_t j = 0; j < n; ++j) total *= 1 + w * cfg.pool.size();
      for (const auto& g : curves) distinct.insert(g.to_string());
      EXPECT_EQ(curves.size(), total - 1);
      EXPECT_EQ(distinct.size(), curves.size());
    }
  }
  ProbeConfig cfg;
  cfg.max_weight = 2;
  cfg.pool = {1};
  cfg.random_curves = 0;
  std::set<std::string> names;
  for (const auto& g : enumerate_probe_curves(2, Point(2), cfg)) names.insert(g.to_string());
  EXPECT_EQ(names, (std::set<std::string>{"(t, 0)", "(t^2, 0)", "(0, t)", "(0, t^2)", "(t, t)", "(t, t^2)",
                                          "(t^2, t)", "(t^2, t^2)"}));
}

TEST(ProbeFamily, DeterministicAndContainsWitness) {
  ProbeConfig cfg;
  cfg.max_weight = 2;
  const Point base{0, 0, I};
  const auto a = enumerate_probe_curves(3, base, cfg);
  const auto b = enumerate_probe_curves(3, base, cfg);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
  const CurveGerm witness = curve({"t", "-i*t^2", "i"});
  EXPECT_NE(std::find(a.begin(), a.end(), witness), a.end());
  for (const auto& g : a) EXPECT_EQ(g.base(), base);
  std::set<std::string> distinct;
  for (const auto& g : a) distinct.insert(g.to_string());
  EXPECT_EQ(distinct.size(), a.size());
}

TEST(Probe, Examples) {
  const std::vector<RealPoly> m{parse_poly(kFixture, 3)};
  EXPECT_EQ(probe_min_order(m, Point{0, 0, 0}, curve({"t", "t^2", "0"})), ExtRational(mpq_class(4)));
  EXPECT_EQ(probe_min_order(m, Point{0, 0, I}, curve({"t", "-i*t^2", "i"})), ExtRational(mpq_class(8)));

  const std::vector<RealPoly> m_prime{parse_poly("Re(z4)", 4), parse_poly(kFixture, 4)};
  EXPECT_EQ(probe_min_order(m_prime, Point(4), curve({"t", "t^2", "0", "0"})), ExtRational(mpq_class(4)));

  const std::vector<RealPoly> plane{parse_poly("2*Re(z1)", 1)};
  EXPECT_EQ(probe_min_order(plane, Point{0}, curve({"t"})), ExtRational(mpq_class(1)));
  // The curve lies in the zero set: infinite order.
  EXPECT_TRUE(probe_min_order(plane, Point{0}, curve({"i*t"})).is_finite());
  const std::vector<RealPoly> line{parse_poly("2*Re(z1)", 2)};
  EXPECT_TRUE(probe_min_order(line, Point(2), curve({"0", "t"})).is_infinite());
}

TEST(Probe, RejectsPointOffTheSet) {
  const std::vector<RealPoly> m{parse_poly(kFixture, 3)};
  try {
    probe_min_order(m, Point{1, 0, 0}, curve({"1 + t", "0", "0"}));
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("generator does not vanish at point"), std::string::npos);
  }
  EXPECT_THROW(probe_min_order(m, Point{0, 0, 0}, curve({"t", "0", "i"})), InputError);
}

TEST(CurveProperties, ReparametrizationInvariance) {
  oracle::Generator gen(21);
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
    const std::vector<RealPoly> rs{gen.real_poly(n, 4, 3), gen.real_poly(n, 4, 3)};
    const CurveGerm g = random_curve(gen, n);
    const unsigned m = static_cast<unsigned>(gen.integer(1, 4));
    EXPECT_EQ(probe_min_order_recentered(rs, g), probe_min_order_recentered(rs, g.reparametrize(m)));
  }
}

TEST(CurveProperties, OrderAdditivity) {
  oracle::Generator gen(22);
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
    const CurveGerm g = random_curve(gen, n);
    const TracePoly a = compose_with_curve(gen.real_poly(n, 4, 3), g);
    const TracePoly b = compose_with_curve(gen.real_poly(n, 4, 3), g);
    const ExtNatural oa = vanishing_order(a);
    const ExtNatural ob = vanishing_order(b);
    const ExtNatural prod = vanishing_order(a * b);
    if (oa.is_infinite() || ob.is_infinite()) {
      EXPECT_TRUE(prod.is_infinite());
    } else {
      EXPECT_EQ(prod, ExtNatural(oa.value() + ob.value()));
    }
  }
}

TEST(CurveProperties, RemainderOrderAndSplit) {
  oracle::Generator gen(23);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
    const RealPoly r = gen.real_poly(n, 6, 5);
    const unsigned k = static_cast<unsigned>(gen.integer(1, 5));
    const CurveGerm g = random_curve(gen, n);
    const RealPoly rk = taylor_truncate(r, k);
    const RealPoly ek = r - rk;
    const TracePoly tail = compose_with_curve(ek, g);
    EXPECT_EQ(compose_with_curve(r, g), compose_with_curve(rk, g) + tail);
    EXPECT_GE(vanishing_order(tail), ExtNatural(std::uint64_t{k + 1} * g.multiplicity()));
  }
}

TEST(CurveProperties, HolomorphicComposition) {
  const HoloPoly h = parse_holo_poly("z1^2 - i*z2", 2);
  const TracePoly s = compose_holomorphic(h, curve({"t", "-i*t^2"}));
  EXPECT_TRUE(s.is_zero());
  const TracePoly u = compose_holomorphic(parse_holo_poly("1 + z1", 1), curve({"2 + t"}));
  EXPECT_EQ(u, trace({{0, 0, 1}, {1, 0, 1}}));
}
