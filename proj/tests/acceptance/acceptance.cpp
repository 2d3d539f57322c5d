// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <finitype/curve.hpp>
#include <finitype/decomposition.hpp>
#include <finitype/ideal.hpp>
#include <finitype/parser.hpp>
#include <finitype/typecalc.hpp>
#include <finitype/unitary.hpp>

#include "oracles.hpp"

#ifdef FINITYPE_HAVE_CLI
#include <finitype_cli/commands.hpp>
#endif

using namespace finitype;

namespace {

using Clock = std::chrono::steady_clock;

const GaussianRational I = GaussianRational::i();
constexpr const char* kFixture = "2*Re(z3) + |z1^2 - z2*z3|^2 + |z2|^4";

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "failed: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string str(const ExtRational& v) { return to_string(v); }

ProblemSpec fixture() { return ProblemSpec(3, {parse_poly(kFixture, 3)}, {}, 1); }

ProblemSpec fixture_prime() {
  return ProblemSpec(4, {parse_poly(kFixture, 4), parse_poly("Re(z4)", 4)}, {}, 2);
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

void decomposition_identity(Outcome& out) {
  const auto start = Clock::now();
  oracle::Generator gen(1001);
  std::size_t ok = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
    const unsigned degree = static_cast<unsigned>(gen.integer(1, 6));
    const RealPoly r = gen.real_poly(n, degree, 6);
    const unsigned k = static_cast<unsigned>(gen.integer(1, 6));
    const RealPoly rk = taylor_truncate(r, k);
    const HermitianDecomposition d = decompose(r, Point(n), k);
    if (d.reassemble() == rk) ++ok;
  }
  const double secs = seconds_since(start);
  out.require(ok == 200, std::to_string(200 - ok) + " identities failed");
  out.require(secs < 30, "took " + std::to_string(secs) + " s");
  out.detail << (out.pass ? "" : " | ") << ok << "/200 exact identities in " << secs << " s";
}

void colength_oracle(Outcome& out) {
  const auto start = Clock::now();
  oracle::Generator gen(1002);
  std::size_t agree = 0;
  const std::size_t total = 120;
  for (std::size_t t = 0; t < total; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
    const auto gens = gen.isolated_ideal(n, 4, static_cast<unsigned>(gen.integer(0, 3)));
    const auto value = colength(IdealSpec(n, gens)).value;
    const auto expect = oracle::macaulay_dimension(n, gens, oracle::power_bound_for(n, gens));
    if (value == ExtNatural(expect)) ++agree;
  }
  std::size_t monomial_agree = 0;
  const std::size_t monomial_total = 60;
  for (std::size_t t = 0; t < monomial_total; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
    std::vector<std::vector<unsigned>> exps;
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<unsigned> e(n, 0);
      e[j] = static_cast<unsigned>(gen.integer(1, 4));
      exps.push_back(e);
    }
    for (long x = gen.integer(0, 3); x > 0; --x) {
      std::vector<unsigned> e(n);
      for (auto& v : e) v = static_cast<unsigned>(gen.integer(0, 3));
      exps.push_back(e);
    }
    std::vector<HoloPoly> gens;
    for (const auto& e : exps) gens.push_back(HoloPoly(Poly::monomial(Monomial(e, std::vector<unsigned>(n, 0)))));
    if (colength(IdealSpec(n, gens)).value == ExtNatural(oracle::staircase_count(n, exps))) ++monomial_agree;
  }
  const double secs = seconds_since(start);
  out.require(agree == total, std::to_string(total - agree) + " oracle mismatches");
  out.require(monomial_agree == monomial_total, std::to_string(monomial_total - monomial_agree) + " staircase mismatches");
  out.require(secs < 120, "took " + std::to_string(secs) + " s");
  out.detail << (out.pass ? "" : " | ") << agree << "/" << total << " oracle, " << monomial_agree << "/"
             << monomial_total << " staircase in " << secs << " s";
}

void check_fixture_point(Outcome& out, const ProblemSpec& spec, const Point& p, long expected_probe) {
  const TypeReport r = type_bounds(spec, p, TypeConfig{});
  const std::string at = point_to_string(p);
  out.require(r.probe_lower == ExtRational(mpq_class(expected_probe)), "probe_lower " + str(r.probe_lower) + " at " + at);
  out.require(r.heuristic_upper == ExtRational(mpq_class(8)), "heuristic_upper " + str(r.heuristic_upper) + " at " + at);
  bool all_four = !r.colength_table.empty();
  for (const auto& e : r.colength_table) all_four = all_four && e.colength == ExtNatural(4);
  out.require(all_four, "colength table not constant 4 at " + at);
  out.require(r.witness && probe_min_order(spec.generators(), p, *r.witness) == r.probe_lower,
              "witness does not replay at " + at);
  out.detail << (out.pass ? "" : " | ") << at << ": probe " << str(r.probe_lower) << ", upper "
             << str(r.heuristic_upper) << ", " << r.colength_table.size() << " samples; ";
}

void fixture_values(Outcome& out) {
  const auto start = Clock::now();
  check_fixture_point(out, fixture(), Point(3), 4);
  check_fixture_point(out, fixture(), Point{0, 0, I}, 8);
  const double secs = seconds_since(start);
  out.require(secs < 60, "took " + std::to_string(secs) + " s");
  out.detail << secs << " s";
}

void codimension_two(Outcome& out) {
  check_fixture_point(out, fixture_prime(), Point(4), 4);
  check_fixture_point(out, fixture_prime(), Point{0, 0, I, 0}, 8);
}

TypeConfig scan_config() {
  TypeConfig c;
  c.probe.max_weight = 2;
  c.probe.pool = {1, -1, I, -I, GaussianRational(0, 2), GaussianRational(0, -2), GaussianRational(0, 4),
                  GaussianRational(0, -4), GaussianRational(0, mpq_class(1, 2)),
                  GaussianRational(0, mpq_class(-1, 2))};
  return c;
}

void openness_scan_check(Outcome& out) {
  std::vector<Point> nearby;
  for (const mpq_class a : {mpq_class(1), mpq_class(1, 2), mpq_class(1, 4), mpq_class(2)}) {
    nearby.push_back(Point{0, 0, GaussianRational(0, a)});
  }
  const ScanReport s = openness_scan(fixture(), Point(3), nearby, scan_config());
  out.require(s.bound == ExtRational(mpq_class(128)), "bound " + str(s.bound));
  out.require(s.codim_bound && *s.codim_bound == ExtRational(mpq_class(32)), "codimension bound");
  out.require(s.violations.empty(), std::to_string(s.violations.size()) + " violations");
  for (const auto& e : s.entries) {
    out.require(e.within_bound && e.within_codim_bound, "entry out of bounds at " + point_to_string(e.point));
    out.detail << (out.pass ? "" : " | ") << point_to_string(e.point) << ": " << str(e.probe_lower) << "; ";
  }
  out.detail << "bounds " << str(s.bound) << " and " << str(*s.codim_bound);
}

void truncation_suite(Outcome& out) {
  const ProblemSpec spec = fixture();
  const RealPoly r = spec.generators().front();
  out.require(taylor_truncate(r, 9) == r, "degree-9 truncation differs from the generator");

  for (const Point& p : {Point(3), Point{0, 0, I}}) {
    TypeConfig nine;
    nine.k = 9;
    TypeConfig full;
    full.k = static_cast<unsigned>(r.degree());
    const TypeReport a = type_bounds(spec, p, nine);
    const TypeReport b = type_bounds(spec, p, full);
    bool same = a.probe_lower == b.probe_lower && a.heuristic_upper == b.heuristic_upper &&
                a.witness == b.witness && a.colength_table.size() == b.colength_table.size();
    for (std::size_t i = 0; same && i < a.colength_table.size(); ++i) {
      same = a.colength_table[i].colength == b.colength_table[i].colength;
    }
    out.require(same, "k = 9 report differs from the untruncated report at " + point_to_string(p));
    const TruncationCertificate c = truncation_check(spec, p, nine);
    out.require(c.full_matches_truncated && c.split_identity_holds && c.remainder_order_holds,
                "certificate checks failed at " + point_to_string(p));
  }

  oracle::Generator gen(1006);
  std::size_t holds = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
    const RealPoly rr = gen.real_poly(n, 6, 6);
    const unsigned k = static_cast<unsigned>(gen.integer(1, 5));
    const CurveGerm gamma = random_curve(gen, n);
    const RealPoly e = truncation_remainder(rr, k);
    const ExtNatural order = vanishing_order(compose_with_curve(e, gamma));
    const bool split =
        compose_with_curve(rr, gamma) == compose_with_curve(taylor_truncate(rr, k), gamma) + compose_with_curve(e, gamma);
    if (split && order >= ExtNatural(std::uint64_t{k + 1} * gamma.multiplicity())) ++holds;
  }
  out.require(holds == 100, std::to_string(100 - holds) + " remainder triples failed");
  out.detail << (out.pass ? "" : " | ") << "k=9 matches untruncated at both points; " << holds << "/100 remainder triples";
}

void component_orders(Outcome& out) {
  for (const Point& p : {Point(3), Point{0, 0, I}}) {
    const ComponentOrderCheck c = component_order_check(fixture(), p, TypeConfig{});
    out.require(c.comparisons > 0, "no comparisons at " + point_to_string(p));
    out.require(c.violations == 0, std::to_string(c.violations) + " violations at " + point_to_string(p));
    out.detail << (out.pass ? "" : " | ") << point_to_string(p) << ": " << c.comparisons << " comparisons, "
               << c.violations << " violations; ";
  }
}

void unitarity(Outcome& out) {
  std::size_t cayley = 0;
  std::size_t exact = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    UnitaryConfig cfg;
    cfg.cayley_count = 10;
    cfg.permutation_cap = 0;
    cfg.seed = 7 + n;
    for (const auto& s : sample_unitaries(n, cfg)) {
      if (s.id.rfind("cayley#", 0) != 0) continue;
      ++cayley;
      const Matrix& u = s.u.matrix();
      if (u.conj_transpose() * u == Matrix::identity(n) && u * u.conj_transpose() == Matrix::identity(n)) ++exact;
    }
  }
  out.require(cayley == 50, std::to_string(cayley) + " Cayley samples");
  out.require(exact == cayley, std::to_string(cayley - exact) + " not exactly unitary");
  out.detail << (out.pass ? "" : " | ") << exact << "/" << cayley << " exactly unitary";
}

void qtype_upper_bounds(Outcome& out) {
  TypeConfig four;
  four.k = 4;
  const ProblemSpec quartic(2, {parse_poly("Re(z2) + |z1|^4", 2)});
  const QTypeReport a = qtype_bounds(quartic, Point(2), 2, four);
  out.require(a.upper_bound == ExtRational(mpq_class(1)), "quartic upper bound " + str(a.upper_bound));
  out.require(a.best_slice == "coords[2]", "quartic best slice " + a.best_slice);

  const QTypeReport b = qtype_bounds(fixture(), Point(3), 2, TypeConfig{});
  out.require(b.upper_bound <= ExtRational(mpq_class(4)), "fixture upper bound " + str(b.upper_bound));
  bool plane_ok = false;
  for (const auto& s : b.slices) {
    if (s.embedding.id == "coords[2,3]") plane_ok = s.report.probe_lower == ExtRational(mpq_class(4));
  }
  out.require(plane_ok, "z1 = 0 plane does not probe to 4");
  out.detail << (out.pass ? "" : " | ") << "quartic " << str(a.upper_bound) << " via " << a.best_slice << "; fixture "
             << str(b.upper_bound) << " via " << b.best_slice;
}

void determinism(Outcome& out) {
#ifdef FINITYPE_HAVE_CLI
  const std::string input = std::string(FINITYPE_TEST_DATA_DIR) + "/m.json";
  const std::vector<std::vector<std::string>> runs{
      {"type", "--input", input, "--point", "1"},
      {"qtype", "--input", input, "--point", "0", "--q", "2"},
      {"colength", "--gens", "z3; z1^2 - z2*z3; z2^2"},
  };
  for (const auto& args : runs) {
    const auto a = cli::run_command(args);
    const auto b = cli::run_command(args);
    const bool ok = a.exit_code == 0 && b.exit_code == 0 && a.document && b.document &&
                    cli::canonical_dump(*a.document) == cli::canonical_dump(*b.document);
    out.require(ok, "'" + args.front() + "' reports differ");
    if (ok) out.detail << args.front() << " " << cli::canonical_dump(*a.document).size() << " bytes identical; ";
  }
#else
  const TypeReport a = type_bounds(fixture(), Point{0, 0, I}, TypeConfig{});
  const TypeReport b = type_bounds(fixture(), Point{0, 0, I}, TypeConfig{});
  out.require(a.probe_lower == b.probe_lower && a.witness == b.witness, "reports differ");
#endif
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"decomposition identity", decomposition_identity},
      {"colength oracle equivalence", colength_oracle},
      {"fixture values", fixture_values},
      {"codimension-2 fixture", codimension_two},
      {"openness scan", openness_scan_check},
      {"truncation suite", truncation_suite},
      {"component order inequality", component_orders},
      {"unitarity", unitarity},
      {"q-type upper bounds", qtype_upper_bounds},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    if (!out.pass) ++failures;
    std::printf("[%s] %2zu %s: %s\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                out.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
