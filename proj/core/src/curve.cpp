#include "finitype/curve.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "finitype/errors.hpp"

namespace finitype {
namespace {

UnivariatePoly trimmed(UnivariatePoly p) {
  while (p.size() > 1 && p.back().is_zero()) p.pop_back();
  if (p.empty()) p.emplace_back();
  return p;
}

UnivariatePoly multiply(const UnivariatePoly& a, const UnivariatePoly& b) {
  UnivariatePoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

std::string univariate_to_string(const UnivariatePoly& p) {
  std::string out;
  for (std::size_t e = 0; e < p.size(); ++e) {
    if (p[e].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (e == 0) {
      out += p[e].to_string();
      continue;
    }
    if (!p[e].is_one()) out += p[e].to_string() + "*";
    out += "t";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

// --------------------------------------------------------------- CurveGerm

CurveGerm::CurveGerm(std::vector<UnivariatePoly> components) {
  components_.reserve(components.size());
  for (auto& c : components) components_.push_back(trimmed(std::move(c)));
  unsigned best = 0;
  for (const auto& c : components_) {
    for (std::size_t e = 1; e < c.size(); ++e) {
      if (!c[e].is_zero()) {
        if (best == 0 || e < best) best = static_cast<unsigned>(e);
        break;
      }
    }
  }
  if (best == 0) throw InputError("curve germ is constant");
  multiplicity_ = best;
}

CurveGerm CurveGerm::monomial(std::span<const GaussianRational> base, std::span<const GaussianRational> coeffs,
                              std::span<const unsigned> weights) {
  if (base.size() != coeffs.size() || base.size() != weights.size()) {
    throw InputError("curve dimension mismatch");
  }
  std::vector<UnivariatePoly> comps(base.size());
  for (std::size_t j = 0; j < base.size(); ++j) {
    UnivariatePoly c(coeffs[j].is_zero() ? 1 : weights[j] + 1);
    c[0] = base[j];
    if (!coeffs[j].is_zero()) c[weights[j]] = coeffs[j];
    comps[j] = std::move(c);
  }
  return CurveGerm(std::move(comps));
}

Point CurveGerm::base() const {
  Point p;
  p.reserve(components_.size());
  for (const auto& c : components_) p.push_back(c[0]);
  return p;
}

CurveGerm CurveGerm::reparametrize(unsigned m) const {
  if (m == 0) throw InputError("reparametrization power must be positive");
  std::vector<UnivariatePoly> comps;
  for (const auto& c : components_) {
    UnivariatePoly r((c.size() - 1) * m + 1);
    for (std::size_t e = 0; e < c.size(); ++e) r[e * m] = c[e];
    comps.push_back(std::move(r));
  }
  return CurveGerm(std::move(comps));
}

std::string CurveGerm::to_string() const {
  std::string out = "(";
  for (std::size_t j = 0; j < components_.size(); ++j) {
    if (j > 0) out += ", ";
    out += univariate_to_string(components_[j]);
  }
  return out + ")";
}

// --------------------------------------------------------------- TracePoly

void TracePoly::add_term(unsigned a, unsigned b, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool TracePoly::is_real() const {
  for (const auto& [key, c] : terms_) {
    auto it = terms_.find({key.second, key.first});
    if (it == terms_.end() || !(it->second == c.conj())) return false;
  }
  return true;
}

TracePoly operator+(const TracePoly& x, const TracePoly& y) {
  TracePoly r = x;
  for (const auto& [k, c] : y.terms_) r.add_term(k.first, k.second, c);
  return r;
}

TracePoly operator*(const TracePoly& x, const TracePoly& y) {
  TracePoly r;
  for (const auto& [kx, cx] : x.terms_) {
    for (const auto& [ky, cy] : y.terms_) r.add_term(kx.first + ky.first, kx.second + ky.second, cx * cy);
  }
  return r;
}

namespace {

TracePoly compose_poly(const Poly& r, const CurveGerm& gamma, bool keep_constant) {
  const std::size_t n = r.num_vars();
  if (n != gamma.dimension()) throw InputError("dimension mismatch between polynomial and curve");

  // Shifted components γ_j − base_j and their powers.
  std::vector<std::vector<UnivariatePoly>> powers(n);
  for (std::size_t j = 0; j < n; ++j) {
    UnivariatePoly shifted = gamma.components()[j];
    shifted[0] = GaussianRational();
    powers[j].push_back(UnivariatePoly{1});
    powers[j].push_back(std::move(shifted));
  }
  auto power = [&](std::size_t j, unsigned e) -> const UnivariatePoly& {
    while (powers[j].size() <= e) powers[j].push_back(multiply(powers[j].back(), powers[j][1]));
    return powers[j][e];
  };

  TracePoly out;
  for (const auto& [m, c] : r.terms()) {
    if (m.is_one() && !keep_constant) continue;
    UnivariatePoly holo{1};
    UnivariatePoly anti{1};
    for (std::size_t j = 0; j < n; ++j) {
      if (m.holo(j) > 0) holo = multiply(holo, power(j, m.holo(j)));
      if (m.anti(j) > 0) anti = multiply(anti, power(j, m.anti(j)));
    }
    for (std::size_t a = 0; a < holo.size(); ++a) {
      if (holo[a].is_zero()) continue;
      GaussianRational ca = c * holo[a];
      for (std::size_t b = 0; b < anti.size(); ++b) {
        if (!anti[b].is_zero()) out.add_term(static_cast<unsigned>(a), static_cast<unsigned>(b), ca * anti[b].conj());
      }
    }
  }
  return out;
}

}  // namespace

TracePoly compose_with_curve(const RealPoly& r, const CurveGerm& gamma) { return compose_poly(r.poly(), gamma, false); }

TracePoly compose_holomorphic(const HoloPoly& h, const CurveGerm& gamma) { return compose_poly(h.poly(), gamma, true); }

ExtNatural vanishing_order(const TracePoly& s) {
  if (s.is_zero()) return ExtNatural::infinite();
  std::uint64_t best = UINT64_MAX;
  for (const auto& [k, c] : s.terms()) best = std::min<std::uint64_t>(best, k.first + k.second);
  return best;
}

// ---------------------------------------------------------- probe family

std::vector<CurveGerm> enumerate_probe_curves(std::size_t n, std::span<const GaussianRational> base,
                                              const ProbeConfig& config) {
  if (base.size() != n) throw InputError("base point dimension mismatch");
  if (n == 0 || config.max_weight == 0) return {};
  std::vector<GaussianRational> pool;
  for (const auto& a : config.pool) {
    if (!a.is_zero() && std::find(pool.begin(), pool.end(), a) == pool.end()) pool.push_back(a);
  }
  if (pool.empty()) return {};

  std::vector<CurveGerm> out;
  const std::size_t options = 1 + config.max_weight * pool.size();

  // Odometer over per-component options, last component fastest.
  // Option 0 is the constant component; option 1 + (w-1)*|pool| + i is pool[i]·t^w.
  std::vector<std::size_t> odo(n, 0);
  std::vector<GaussianRational> coeffs(n);
  std::vector<unsigned> weights(n, 1);
  while (true) {
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++odo[pos] < options) break;
      odo[pos] = 0;
      if (pos == 0) {
        pos = n;
        break;
      }
    }
    if (pos == n) break;
    for (std::size_t j = 0; j < n; ++j) {
      if (odo[j] == 0) {
        coeffs[j] = GaussianRational();
        weights[j] = 1;
      } else {
        coeffs[j] = pool[(odo[j] - 1) % pool.size()];
        weights[j] = static_cast<unsigned>((odo[j] - 1) / pool.size()) + 1;
      }
    }
    out.push_back(CurveGerm::monomial(base, coeffs, weights));
  }

  // A seeded curve duplicates a monomial curve iff every component has at
  // most one nonconstant term, from the pool, with weight ≤ W.
  auto in_monomial_family = [&](const std::vector<UnivariatePoly>& comps) {
    for (const auto& c : comps) {
      int nonzero = 0;
      for (std::size_t e = 1; e < c.size(); ++e) {
        if (c[e].is_zero()) continue;
        ++nonzero;
        if (e > config.max_weight || std::find(pool.begin(), pool.end(), c[e]) == pool.end()) return false;
      }
      if (nonzero > 1) return false;
    }
    return true;
  };

  std::mt19937_64 rng(config.seed);
  auto pick = [&](std::uint64_t bound) { return static_cast<std::size_t>(rng() % bound); };
  const unsigned max_degree = std::max(1u, config.max_degree);
  std::unordered_set<std::string> seen;
  for (unsigned made = 0, attempts = 0; made < config.random_curves && attempts < 20 * config.random_curves + 20;
       ++attempts) {
    std::vector<UnivariatePoly> comps(n);
    bool nonconstant = false;
    for (std::size_t j = 0; j < n; ++j) {
      UnivariatePoly c(max_degree + 1);
      c[0] = base[j];
      const std::size_t terms = pick(3);
      for (std::size_t t = 0; t < terms; ++t) {
        const std::size_t e = 1 + pick(max_degree);
        c[e] += pool[pick(pool.size())];
      }
      for (std::size_t e = 1; e < c.size(); ++e) nonconstant |= !c[e].is_zero();
      comps[j] = trimmed(std::move(c));
    }
    if (!nonconstant || in_monomial_family(comps)) continue;
    CurveGerm g(std::move(comps));
    if (!seen.insert(g.to_string()).second) continue;
    out.push_back(std::move(g));
    ++made;
  }
  return out;
}

ExtRational probe_min_order_recentered(std::span<const RealPoly> recentered, const CurveGerm& gamma) {
  ExtNatural best = ExtNatural::infinite();
  for (const auto& r : recentered) best = std::min(best, vanishing_order(compose_with_curve(r, gamma)));
  if (best.is_infinite()) return ExtRational::infinite();
  mpq_class ratio(mpz_class(best.value()), mpz_class(gamma.multiplicity()));
  ratio.canonicalize();
  return ratio;
}

ExtRational probe_min_order(std::span<const RealPoly> generators, std::span<const GaussianRational> p,
                            const CurveGerm& gamma) {
  if (!(gamma.base() == Point(p.begin(), p.end()))) throw InputError("curve is not based at the point");
  std::vector<RealPoly> recentered;
  recentered.reserve(generators.size());
  for (const auto& r : generators) {
    if (sgn(r.evaluate(p)) != 0) throw InputError("generator does not vanish at point " + point_to_string(p));
    recentered.push_back(translate_to_point(r, p));
  }
  return probe_min_order_recentered(recentered, gamma);
}

}  // namespace finitype
