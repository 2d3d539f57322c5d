#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "finitype/extended.hpp"
#include "finitype/polynomial.hpp"

namespace finitype {

/// Dense univariate polynomial in t; index = power.
using UnivariatePoly = std::vector<GaussianRational>;

/// A polynomial holomorphic curve germ γ: t ↦ (γ₁(t), …, γₙ(t)), γ(0) = base.
class CurveGerm {
 public:
  /// Throws InputError when every component is constant.
  explicit CurveGerm(std::vector<UnivariatePoly> components);

  /// γ_j(t) = base_j + a_j t^{w_j}; w_j ignored where a_j = 0.
  static CurveGerm monomial(std::span<const GaussianRational> base, std::span<const GaussianRational> coeffs,
                            std::span<const unsigned> weights);

  std::size_t dimension() const { return components_.size(); }
  const std::vector<UnivariatePoly>& components() const { return components_; }
  Point base() const;
  /// ν(γ): the least order among the nonconstant parts of the components.
  unsigned multiplicity() const { return multiplicity_; }

  /// t ↦ t^m.
  CurveGerm reparametrize(unsigned m) const;

  friend bool operator==(const CurveGerm& a, const CurveGerm& b) { return a.components_ == b.components_; }

  /// "(base + a*t^w, ...)" in the univariate expression language.
  std::string to_string() const;

 private:
  std::vector<UnivariatePoly> components_;
  unsigned multiplicity_ = 0;
};

/// Polynomial in (t, t̄); key is (power of t, power of t̄).
class TracePoly {
 public:
  using TermMap = std::map<std::pair<unsigned, unsigned>, GaussianRational>;

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(unsigned a, unsigned b, const GaussianRational& c);
  bool is_real() const;

  friend TracePoly operator+(const TracePoly& x, const TracePoly& y);
  friend TracePoly operator*(const TracePoly& x, const TracePoly& y);
  friend bool operator==(const TracePoly& x, const TracePoly& y) = default;

 private:
  TermMap terms_;
};

/// r(γ(t)) − r(base), where `r` is already recentered at γ's base (so the
/// constant term of r is r(base) and is dropped).
TracePoly compose_with_curve(const RealPoly& r, const CurveGerm& gamma);

/// h(γ(t) − base) for h recentered at γ's base, constant term included.
/// Only (a, 0) keys occur.
TracePoly compose_holomorphic(const HoloPoly& h, const CurveGerm& gamma);

/// Least total degree a + b of a nonzero term; infinite iff s ≡ 0.
ExtNatural vanishing_order(const TracePoly& s);

struct ProbeConfig {
  unsigned max_weight = 4;               ///< W: monomial curve weights 1..W
  unsigned max_degree = 4;               ///< degree bound for the seeded two-term curves
  std::vector<GaussianRational> pool{1, -1, GaussianRational::i(), -GaussianRational::i()};
  unsigned random_curves = 64;           ///< number of seeded two-term curves
  std::uint64_t seed = 1;
};

/// All monomial curves base_j + a_j t^{w_j} (a_j ∈ pool ∪ {0}, not all zero,
/// 1 ≤ w_j ≤ W) in a fixed order, followed by `random_curves` seeded curves
/// with up to two terms per component of degree ≤ max_degree. Duplicates are
/// dropped, first occurrence kept.
std::vector<CurveGerm> enumerate_probe_curves(std::size_t n, std::span<const GaussianRational> base,
                                              const ProbeConfig& config);

/// min over r of ν(r∘γ − r(p)) / ν(γ) with each r in `recentered` already
/// translated to γ's base.
ExtRational probe_min_order_recentered(std::span<const RealPoly> recentered, const CurveGerm& gamma);

/// Same quantity from untranslated generators. Throws InputError("generator
/// does not vanish at point") if some r(p) ≠ 0.
ExtRational probe_min_order(std::span<const RealPoly> generators, std::span<const GaussianRational> p,
                            const CurveGerm& gamma);

}  // namespace finitype
