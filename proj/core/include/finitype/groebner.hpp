#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "finitype/extended.hpp"
#include "finitype/polynomial.hpp"

namespace finitype {

/// Generators of an ideal of ℂ[z₁..zₙ], viewed at the origin. Zero
/// generators are dropped on construction.
class IdealSpec {
 public:
  IdealSpec(std::size_t n, std::vector<HoloPoly> generators);

  std::size_t num_vars() const { return n_; }
  const std::vector<HoloPoly>& generators() const { return generators_; }

 private:
  std::size_t n_;
  std::vector<HoloPoly> generators_;
};

struct GroebnerCaps {
  std::uint64_t pair_limit = 100000;
};

/// Reduced Gröbner basis for graded reverse lexicographic order with
/// z₁ > z₂ > … > zₙ; elements are monic and sorted ascending by leading term.
class GroebnerBasis {
 public:
  GroebnerBasis(std::size_t n, std::vector<HoloPoly> elements);

  std::size_t num_vars() const { return n_; }
  const std::vector<HoloPoly>& elements() const { return elements_; }
  std::string order_name() const { return "grevlex"; }

  std::vector<Monomial> leading_monomials() const;
  bool is_unit() const;

  /// Normal form with respect to the basis.
  HoloPoly reduce(const HoloPoly& f) const;
  bool contains(const HoloPoly& f) const { return reduce(f).is_zero(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) = default;

 private:
  std::size_t n_;
  std::vector<HoloPoly> elements_;
};

/// Leading monomial of a nonzero holomorphic polynomial under grevlex.
Monomial leading_monomial(const HoloPoly& f);

/// Buchberger's algorithm with the coprime and chain criteria. Throws
/// ResourceLimit past caps.pair_limit reduced S-pairs.
GroebnerBasis groebner_basis(const IdealSpec& ideal, const GroebnerCaps& caps = {});

/// Number of monomials outside the leading-term ideal. Infinite when some
/// variable has no pure power among the leading monomials. Throws
/// ResourceLimit when more than `cap` monomials would be visited.
ExtNatural standard_monomial_count(const GroebnerBasis& g, std::uint64_t cap = 10'000'000);

/// Same count from leading exponents directly (monomial ideals).
ExtNatural standard_monomial_count(std::size_t n, const std::vector<Monomial>& leading, std::uint64_t cap = 10'000'000);

}  // namespace finitype
