#include "finitype/typecalc.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "finitype/errors.hpp"

namespace finitype {

const char* const kSemanticsNote =
    "Per-curve minimum taken over the listed generators only. The bracketed quantity equals the type "
    "when the generators span the ideal of the germ (hypersurface case) and bounds it from above otherwise. "
    "heuristic_upper uses sampled unitary matrices and is not certified.";

namespace {

ExtRational scaled(const ExtNatural& v, unsigned factor) {
  if (v.is_infinite()) return ExtRational::infinite();
  return mpq_class(mpz_class(v.value()) * factor);
}

ExtRational power_bound(const ExtRational& ref, std::size_t exponent) {
  if (ref.is_infinite()) return ExtRational::infinite();
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), ref.value().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), ref.value().get_den_mpz_t(), exponent);
  mpq_class out(num * 2, den);
  out.canonicalize();
  return out;
}

// D₁^{1/e₁} < D₂^{1/e₂}, with e = 0 read as the value D itself.
bool root_less(const TauBounds& a, const TauBounds& b) {
  if (a.d_value.is_infinite()) return false;
  if (b.d_value.is_infinite()) return true;
  const std::size_t ea = std::max<std::size_t>(a.exponent, 1);
  const std::size_t eb = std::max<std::size_t>(b.exponent, 1);
  mpz_class lhs;
  mpz_class rhs;
  mpz_class da(a.d_value.value());
  mpz_class db(b.d_value.value());
  mpz_pow_ui(lhs.get_mpz_t(), da.get_mpz_t(), eb);
  mpz_pow_ui(rhs.get_mpz_t(), db.get_mpz_t(), ea);
  return lhs < rhs;
}

std::string ideal_key(const std::vector<HoloPoly>& gens) {
  std::vector<std::string> parts;
  parts.reserve(gens.size());
  for (const auto& g : gens) parts.push_back(g.to_string());
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (const auto& s : parts) key += s + ";";
  return key;
}

struct Recentered {
  std::vector<RealPoly> full;
  std::vector<RealPoly> truncated;
};

Recentered recenter(const ProblemSpec& spec, const Point& p, unsigned k) {
  spec.require_on_set(p);
  Recentered out;
  for (const auto& r : spec.generators()) {
    out.full.push_back(translate_to_point(r, p));
    out.truncated.push_back(taylor_truncate(out.full.back(), k));
  }
  return out;
}

std::size_t common_length(const std::vector<HermitianDecomposition>& decomps) {
  std::size_t n = 1;
  for (const auto& d : decomps) n = std::max(n, d.N);
  return n;
}

}  // namespace

// -------------------------------------------------------------- ProblemSpec

ProblemSpec::ProblemSpec(std::size_t n, std::vector<RealPoly> generators, std::vector<Point> points,
                         std::optional<std::size_t> codim_hint)
    : n_(n), generators_(std::move(generators)), points_(std::move(points)), codim_hint_(codim_hint) {
  if (generators_.empty()) throw InputError("at least one generator is required");
  for (const auto& r : generators_) {
    if (r.num_vars() != n_) throw InputError("generator has the wrong number of variables");
  }
  if (codim_hint_ && *codim_hint_ > n_) throw InputError("codimension hint exceeds the dimension");
  for (const auto& p : points_) require_on_set(p);
}

void ProblemSpec::require_on_set(const Point& p) const {
  if (p.size() != n_) throw InputError("point has the wrong dimension: " + point_to_string(p));
  for (const auto& r : generators_) {
    if (sgn(r.evaluate(p)) != 0) throw InputError("generator does not vanish at point " + point_to_string(p));
  }
}

// --------------------------------------------------------------- type_bounds

ExtRational TypeReport::type_estimate() const {
  if (n == 1 || probe_lower == heuristic_upper) return probe_lower;
  return heuristic_upper;
}

TypeReport type_bounds(const ProblemSpec& spec, const Point& p, const TypeConfig& config) {
  if (config.k == 0) throw InputError("truncation order k must be positive");
  const std::size_t n = spec.num_vars();
  const Recentered rc = recenter(spec, p, config.k);

  TypeReport report;
  report.point = p;
  report.k = config.k;
  report.n = n;
  report.semantics_note = kSemanticsNote;

  const auto curves = enumerate_probe_curves(n, p, config.probe);
  report.curves_probed = curves.size();
  bool first = true;
  for (const auto& gamma : curves) {
    const ExtRational v = probe_min_order_recentered(rc.truncated, gamma);
    if (first || report.probe_lower < v) {
      report.probe_lower = v;
      report.witness = gamma;
      first = false;
    }
  }
  if (first) report.probe_lower = mpq_class(0);

  std::vector<HermitianDecomposition> decomps;
  for (const auto& rk : rc.truncated) decomps.push_back(decompose_truncated(rk, config.k));
  report.decomposition_length = common_length(decomps);

  std::map<std::string, ColengthEntry> memo;
  ExtNatural max_d = std::uint64_t{0};
  bool all_finite = true;
  for (const auto& sample : sample_unitaries(report.decomposition_length, config.unitary)) {
    const IdealSpec ideal(n, build_ideal_generators(decomps, sample.u));
    const std::string key = ideal_key(ideal.generators());
    auto it = memo.find(key);
    if (it == memo.end()) {
      ColengthEntry e;
      const ColengthResult c = colength(ideal, config.caps);
      e.colength = c.value;
      e.isolation_route = c.isolation_route;
      e.linear_rank = linear_rank(ideal, config.caps);
      e.tau = tau_bounds(n, c.value, e.linear_rank);
      it = memo.emplace(key, std::move(e)).first;
    }
    ColengthEntry entry = it->second;
    entry.unitary_id = sample.id;
    if (entry.colength.is_infinite()) all_finite = false;
    max_d = std::max(max_d, entry.colength);
    if (report.colength_table.empty() || root_less(report.ideal_lower, entry.tau)) {
      report.ideal_lower = entry.tau;
      report.ideal_lower_sample = entry.unitary_id;
    }
    report.colength_table.push_back(std::move(entry));
  }
  report.heuristic_upper = all_finite ? scaled(max_d, 2) : ExtRational::infinite();
  report.finite_type_evidence = all_finite;
  report.truncation_stable = report.type_estimate() < ExtRational(mpq_class(config.k));
  return report;
}

// ---------------------------------------------------------- truncation_check

RealPoly truncation_remainder(const RealPoly& recentered, unsigned k) {
  return recentered - taylor_truncate(recentered, k);
}

TruncationCertificate truncation_check(const ProblemSpec& spec, const Point& p, const TypeConfig& config) {
  const TypeReport report = type_bounds(spec, p, config);
  const Recentered rc = recenter(spec, p, config.k);
  std::vector<RealPoly> remainders;
  for (const auto& r : rc.full) remainders.push_back(truncation_remainder(r, config.k));

  TruncationCertificate cert;
  cert.k = config.k;
  cert.probe_lower_truncated = report.probe_lower;
  cert.type_estimate = report.type_estimate();

  bool first = true;
  for (const auto& gamma : enumerate_probe_curves(spec.num_vars(), p, config.probe)) {
    ++cert.curves_checked;
    const ExtRational full = probe_min_order_recentered(rc.full, gamma);
    const ExtRational trunc = probe_min_order_recentered(rc.truncated, gamma);
    if (first || cert.probe_lower_full < full) cert.probe_lower_full = full;
    first = false;
    if (!(full == trunc)) cert.full_matches_truncated = false;
    for (std::size_t i = 0; i < rc.full.size(); ++i) {
      const TracePoly whole = compose_with_curve(rc.full[i], gamma);
      const TracePoly tail = compose_with_curve(remainders[i], gamma);
      if (!(whole == compose_with_curve(rc.truncated[i], gamma) + tail)) cert.split_identity_holds = false;
      const ExtNatural order = vanishing_order(tail);
      if (order < ExtNatural(std::uint64_t{config.k + 1} * gamma.multiplicity())) cert.remainder_order_holds = false;
    }
  }
  if (first) cert.probe_lower_full = mpq_class(0);

  const ExtRational k_value = mpq_class(config.k);
  if (cert.probe_lower_truncated >= k_value || cert.probe_lower_full >= k_value) {
    cert.status = "k_too_small";
  } else if (cert.type_estimate < k_value) {
    cert.status = "truncation_stable";
  } else {
    cert.status = "inconclusive";
  }
  return cert;
}

// ------------------------------------------------------------ openness_scan

ScanReport openness_scan(const ProblemSpec& spec, const Point& p0, const std::vector<Point>& nearby,
                         const TypeConfig& config) {
  const std::size_t n = spec.num_vars();
  for (const auto& q : nearby) spec.require_on_set(q);

  ScanReport scan;
  scan.base = type_bounds(spec, p0, config);
  scan.reference_type = scan.base.probe_lower;
  scan.bound = power_bound(scan.reference_type, n);
  scan.conservative_bound = power_bound(scan.base.heuristic_upper, n);
  scan.codim_hint = spec.codim_hint();
  if (scan.codim_hint) scan.codim_bound = power_bound(scan.reference_type, n - *scan.codim_hint);

  for (const auto& q : nearby) {
    const TypeReport r = type_bounds(spec, q, config);
    ScanEntry e;
    e.point = q;
    e.probe_lower = r.probe_lower;
    e.heuristic_upper = r.heuristic_upper;
    e.within_bound = r.probe_lower <= scan.bound;
    if (!e.within_bound) {
      scan.violations.push_back("probe_lower " + to_string(r.probe_lower) + " at " + point_to_string(q) +
                                " exceeds " + to_string(scan.bound));
    }
    if (scan.codim_bound) {
      e.within_codim_bound = r.probe_lower <= *scan.codim_bound;
      if (!e.within_codim_bound) {
        scan.violations.push_back("probe_lower " + to_string(r.probe_lower) + " at " + point_to_string(q) +
                                  " exceeds codimension bound " + to_string(*scan.codim_bound));
      }
    }
    scan.entries.push_back(std::move(e));
  }
  return scan;
}

// ------------------------------------------------------------------ slices

LinearEmbedding::LinearEmbedding(Matrix m, Point off, std::string name)
    : matrix(std::move(m)), offset(std::move(off)), id(std::move(name)) {
  if (offset.size() != matrix.rows()) throw InputError("embedding offset has the wrong dimension");
  if (matrix.cols() == 0 || matrix.cols() > matrix.rows()) throw InputError("embedding has invalid shape");
  if (matrix.rank() != matrix.cols()) throw InputError("embedding matrix is rank deficient");
}

ProblemSpec slice_pullback(const ProblemSpec& spec, const LinearEmbedding& phi) {
  const std::size_t n = spec.num_vars();
  const std::size_t m = phi.source_dim();
  if (phi.matrix.rows() != n) throw InputError("embedding target dimension does not match the problem");
  spec.require_on_set(phi.offset);

  // z_j = offset_j + Σ A_jc w_c and its conjugate, with cached powers.
  std::vector<std::vector<Poly>> holo(n);
  std::vector<std::vector<Poly>> anti(n);
  for (std::size_t j = 0; j < n; ++j) {
    Poly z = Poly::constant(m, phi.offset[j]);
    Poly zb = Poly::constant(m, phi.offset[j].conj());
    for (std::size_t c = 0; c < m; ++c) {
      z += Poly::variable(m, c) * phi.matrix(j, c);
      zb += Poly::conj_variable(m, c) * phi.matrix(j, c).conj();
    }
    holo[j] = {Poly::constant(m, 1), std::move(z)};
    anti[j] = {Poly::constant(m, 1), std::move(zb)};
  }
  auto power = [](std::vector<Poly>& cache, unsigned e) -> const Poly& {
    while (cache.size() <= e) cache.push_back(cache.back() * cache[1]);
    return cache[e];
  };

  std::vector<RealPoly> gens;
  for (const auto& r : spec.generators()) {
    Poly out(m);
    for (const auto& [mono, c] : r.poly().terms()) {
      Poly term = Poly::constant(m, c);
      for (std::size_t j = 0; j < n; ++j) {
        if (mono.holo(j) > 0) term = term * power(holo[j], mono.holo(j));
        if (mono.anti(j) > 0) term = term * power(anti[j], mono.anti(j));
      }
      out += term;
    }
    gens.emplace_back(std::move(out));
  }
  return ProblemSpec(m, std::move(gens), {Point(m)});
}

std::vector<LinearEmbedding> sample_slices(std::size_t n, std::size_t q, const Point& p, const SliceConfig& config) {
  if (q < 1 || q > n) throw InputError("q must lie between 1 and n");
  const std::size_t m = n - q + 1;
  std::vector<LinearEmbedding> out;
  if (m == n) {
    out.emplace_back(Matrix::identity(n), p, "identity");
    return out;
  }

  // Kept coordinates in lexicographic order.
  std::vector<std::size_t> kept(m);
  for (std::size_t i = 0; i < m; ++i) kept[i] = i;
  while (out.size() < config.coordinate_cap) {
    Matrix a(n, m);
    std::string id = "coords[";
    for (std::size_t c = 0; c < m; ++c) {
      a(kept[c], c) = 1;
      id += (c ? "," : "") + std::to_string(kept[c] + 1);
    }
    out.emplace_back(std::move(a), p, id + "]");
    std::size_t i = m;
    while (i > 0 && kept[i - 1] == n - m + i - 1) --i;
    if (i == 0) break;
    ++kept[i - 1];
    for (std::size_t j = i; j < m; ++j) kept[j] = kept[j - 1] + 1;
  }

  std::mt19937_64 rng(config.seed);
  const long span = 2 * static_cast<long>(config.entry_height) + 1;
  auto entry = [&]() {
    const long re = static_cast<long>(rng() % span) - static_cast<long>(config.entry_height);
    const long im = static_cast<long>(rng() % span) - static_cast<long>(config.entry_height);
    return GaussianRational(mpq_class(re), mpq_class(im));
  };
  for (unsigned made = 0; made < config.random_slices;) {
    Matrix a(n, m);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < m; ++c) a(r, c) = entry();
    }
    if (a.rank() != m) continue;
    out.emplace_back(std::move(a), p, "random#" + std::to_string(made));
    ++made;
  }
  return out;
}

QTypeReport qtype_bounds(const ProblemSpec& spec, const Point& p, std::size_t q, const TypeConfig& config,
                         const SliceConfig& slices) {
  spec.require_on_set(p);
  QTypeReport out;
  out.q = q;
  bool first = true;
  for (auto& phi : sample_slices(spec.num_vars(), q, p, slices)) {
    const ProblemSpec sliced = slice_pullback(spec, phi);
    TypeReport report = type_bounds(sliced, sliced.points().front(), config);
    ExtRational evidence = report.type_estimate();
    if (first || evidence < out.upper_bound) {
      out.upper_bound = evidence;
      out.best_slice = phi.id;
      first = false;
    }
    out.slices.push_back(SliceResult{std::move(phi), std::move(report), std::move(evidence)});
  }
  return out;
}

// ---------------------------------------------------- component_order_check

ComponentOrderCheck component_order_check(const ProblemSpec& spec, const Point& p, const TypeConfig& config) {
  const Recentered rc = recenter(spec, p, config.k);
  std::vector<HermitianDecomposition> decomps;
  for (const auto& rk : rc.truncated) decomps.push_back(decompose_truncated(rk, config.k));
  const auto samples = sample_unitaries(common_length(decomps), config.unitary);
  const auto curves = enumerate_probe_curves(spec.num_vars(), p, config.probe);

  ComponentOrderCheck out;
  for (std::size_t i = 0; i < decomps.size(); ++i) {
    const std::span<const HermitianDecomposition> one(&decomps[i], 1);
    for (const auto& gamma : curves) {
      if (!compose_holomorphic(decomps[i].h, gamma).is_zero()) continue;
      const ExtNatural target = vanishing_order(compose_with_curve(rc.truncated[i], gamma));
      for (const auto& sample : samples) {
        const auto gens = build_ideal_generators(one, sample.u);
        ExtNatural least = ExtNatural::infinite();
        for (std::size_t c = 1; c < gens.size(); ++c) {
          least = std::min(least, vanishing_order(compose_holomorphic(gens[c], gamma)));
        }
        ++out.comparisons;
        if (target < least) ++out.violations;
      }
    }
  }
  return out;
}

}  // namespace finitype
