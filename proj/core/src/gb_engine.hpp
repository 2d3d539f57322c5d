#pragma once

// Buchberger engine over the Gaussian rationals. Internal to the core library.

#include <array>
#include <cstdint>
#include <vector>

#include "finitype/gaussian_rational.hpp"
#include "finitype/polynomial.hpp"

namespace finitype::detail {

inline constexpr std::size_t kMaxEngineVars = 16;

using Exps = std::array<std::uint16_t, kMaxEngineVars>;

struct Term {
  Exps e{};
  std::uint32_t deg = 0;
  GaussianRational c;
};

/// Terms sorted strictly descending in the engine's order.
struct SparsePoly {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  const Term& lead() const { return terms.front(); }
  bool is_monomial() const { return terms.size() == 1; }
  bool is_constant() const { return terms.size() == 1 && terms.front().deg == 0; }
};

/// Graded reverse lexicographic order on `nvars` variables, optionally
/// preceded by an elimination block holding variable 0 alone.
class Order {
 public:
  Order(std::size_t nvars, bool eliminate_first) : nvars_(nvars), eliminate_first_(eliminate_first) {}

  std::size_t nvars() const { return nvars_; }
  /// -1, 0, 1 as a <, =, > b.
  int compare(const Term& a, const Term& b) const;

 private:
  std::size_t nvars_;
  bool eliminate_first_;
};

struct EngineLimits {
  std::uint64_t pair_limit = 100000;
};

/// Reduced, monic Gröbner basis sorted ascending by leading term.
/// Throws ResourceLimit when more than pair_limit S-pairs are reduced.
std::vector<SparsePoly> buchberger(std::vector<SparsePoly> input, const Order& order, const EngineLimits& limits);

/// Full normal form of f with respect to g (not necessarily a basis).
SparsePoly normal_form(const SparsePoly& f, const std::vector<SparsePoly>& g, const Order& order);

bool divides(const Exps& a, const Exps& b, std::size_t nvars);

/// Embeds a holomorphic polynomial with variable j mapped to engine variable j + offset.
SparsePoly from_holo(const HoloPoly& h, const Order& order, std::size_t offset = 0);
/// Inverse of from_holo; engine variables below `offset` must be absent.
HoloPoly to_holo(const SparsePoly& p, std::size_t n, std::size_t offset = 0);

void sort_terms(SparsePoly& p, const Order& order);
SparsePoly monomial_poly(const Exps& e, std::uint32_t deg, const GaussianRational& c);

}  // namespace finitype::detail
