#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "finitype/extended.hpp"
#include "finitype/groebner.hpp"

namespace finitype {

/// Resource guards. Exceeding any of them throws ResourceLimit; no value is
/// ever reported from a truncated computation.
struct IdealCaps {
  std::uint64_t pair_limit = 100000;  ///< S-pairs per Gröbner computation
  unsigned s_limit = 64;              ///< largest power of m tried by the Nakayama loop
  std::uint64_t staircase_cap = 10'000'000;

  GroebnerCaps groebner() const { return {pair_limit}; }
};

/// I : m^∞ with m = (z₁,…,zₙ), by iterating I ↦ I : m until the reduced
/// basis stabilizes. Each quotient I : z_j and the intersection of the
/// quotients use elimination of an auxiliary variable.
IdealSpec saturate_at_origin(const IdealSpec& ideal, const IdealCaps& caps = {});

/// True iff some generator has a nonzero constant term, i.e. the ideal is
/// not contained in m.
bool escapes_origin(const IdealSpec& ideal);

/// dim_ℂ ℂ[z]/(I + m^s).
std::uint64_t nakayama_dimension(const IdealSpec& ideal, unsigned s, const IdealCaps& caps = {});

struct ColengthResult {
  ExtNatural value;
  /// Some generator is nonzero at the origin; the local colength is then 0.
  bool unit_at_origin = false;
  /// How the origin was shown to be isolated: "zero-dimensional" (global
  /// staircase is finite), "saturation", or empty when it is not isolated.
  std::string isolation_route;
  /// dim ℂ[z]/(I + m^s) for s = 1, 2, … up to the first repeat.
  std::vector<std::uint64_t> nakayama_dims;
};

/// Local colength D(I) = dim_ℂ 𝒪₀/I. Infinite when the origin is not an
/// isolated zero. Otherwise the Nakayama loop stops at the first s with
/// dim(s) = dim(s+1), at which point m^s ⊆ I locally and dim(s) = D(I).
ColengthResult colength(const IdealSpec& ideal, const IdealCaps& caps = {});

/// Number of independent linear forms certified to lie in the ideal: the
/// degree-one elements of the reduced grevlex basis.
std::size_t linear_rank(const IdealSpec& ideal, const IdealCaps& caps = {});

/// D^{1/(n−q)} ≤ τ(I) ≤ D, with the root carried exactly as (D, n−q) and
/// bracketed by integers.
struct TauBounds {
  ExtNatural d_value;
  std::size_t q = 0;
  std::size_t exponent = 0;  ///< n − q
  /// ⌊D^{1/(n−q)}⌋ and ⌈D^{1/(n−q)}⌉; both infinite when D is.
  ExtNatural lower_floor;
  ExtNatural lower_ceil;
  ExtNatural upper;

  /// Exact lower bound D^{1/(n−q)} compared against a rational.
  bool lower_at_most(const mpq_class& value) const;
};

TauBounds tau_bounds(std::size_t n, const ExtNatural& d_value, std::size_t q);
TauBounds tau_bounds(const IdealSpec& ideal, const IdealCaps& caps = {});

}  // namespace finitype
