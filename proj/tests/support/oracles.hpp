#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <finitype/groebner.hpp>
#include <finitype/polynomial.hpp>

namespace finitype::oracle {

/// dim ℂ[z]/(I + m^s) by plain linear algebra on jets: the span of the
/// truncations below degree s of z^β·g over all generators g and |β| < s,
/// measured inside the space of polynomials of degree < s.
std::uint64_t macaulay_dimension(std::size_t n, const std::vector<HoloPoly>& gens, unsigned s);

/// Smallest s with m^s ⊆ I guaranteed by the pure powers z_i^{d_i} among
/// the generators: Σ(d_i − 1) + 1. Zero when some axis has no pure power.
unsigned power_bound_for(std::size_t n, const std::vector<HoloPoly>& gens);

/// Monomials outside the monomial ideal, by enumeration inside the box given
/// by the pure powers. Requires a pure power on every axis.
std::uint64_t staircase_count(std::size_t n, const std::vector<std::vector<unsigned>>& generators);

/// Seeded generators for property tests.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }
  long integer(long lo, long hi);
  GaussianRational small_gaussian(long height = 3, bool allow_fraction = true);

  /// Holomorphic polynomial with up to `terms` terms of degree in [lo, hi].
  HoloPoly holo_poly(std::size_t n, unsigned lo, unsigned hi, unsigned terms);

  /// Real polynomial r = Σ c z^α z̄^β + conj, degree ≤ `degree`, with r(0) = 0.
  RealPoly real_poly(std::size_t n, unsigned degree, unsigned terms);

  /// Ideal containing z_i^{d_i} for every i plus `extra` random generators
  /// vanishing at 0, degrees ≤ `max_degree`.
  std::vector<HoloPoly> isolated_ideal(std::size_t n, unsigned max_degree, unsigned extra);

 private:
  std::mt19937_64 rng_;
};

}  // namespace finitype::oracle
