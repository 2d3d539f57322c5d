#include "finitype/ideal.hpp"

#include "finitype/errors.hpp"
#include "gb_engine.hpp"

namespace finitype {
namespace {

using detail::Order;
using detail::SparsePoly;
using detail::Term;

// Engine variable 0 is the auxiliary t; ring variables sit at 1..n.
constexpr std::size_t kOffset = 1;

SparsePoly times_t(const SparsePoly& p) {
  SparsePoly out = p;
  for (auto& t : out.terms) {
    ++t.e[0];
    ++t.deg;
  }
  return out;
}

// (1 − t)·p, sorted.
SparsePoly times_one_minus_t(const SparsePoly& p, const Order& order) {
  SparsePoly out = p;
  for (const auto& t : p.terms) {
    Term s = t;
    ++s.e[0];
    ++s.deg;
    s.c = -s.c;
    out.terms.push_back(std::move(s));
  }
  detail::sort_terms(out, order);
  return out;
}

// Elements of a reduced elimination basis that do not involve t.
std::vector<SparsePoly> eliminate_t(std::vector<SparsePoly> input, const Order& order, const IdealCaps& caps) {
  auto basis = detail::buchberger(std::move(input), order, {caps.pair_limit});
  std::vector<SparsePoly> out;
  for (auto& b : basis) {
    bool has_t = false;
    for (const auto& t : b.terms) has_t = has_t || t.e[0] != 0;
    if (!has_t) out.push_back(std::move(b));
  }
  return out;
}

// A ∩ B as t·A + (1 − t)·B with t eliminated.
std::vector<SparsePoly> intersect(const std::vector<SparsePoly>& a, const std::vector<SparsePoly>& b, const Order& order,
                                  const IdealCaps& caps) {
  std::vector<SparsePoly> input;
  for (const auto& p : a) input.push_back(times_t(p));
  for (const auto& p : b) input.push_back(times_one_minus_t(p, order));
  return eliminate_t(std::move(input), order, caps);
}

// J : z_j from J ∩ (z_j), every element of which is divisible by z_j.
std::vector<SparsePoly> quotient_by_variable(const std::vector<SparsePoly>& j_gens, std::size_t var, const Order& order,
                                             const IdealCaps& caps) {
  Term z;
  z.e[var] = 1;
  z.deg = 1;
  z.c = GaussianRational(1);
  const std::vector<SparsePoly> principal{detail::monomial_poly(z.e, z.deg, z.c)};
  auto meet = intersect(j_gens, principal, order, caps);
  for (auto& p : meet) {
    for (auto& t : p.terms) {
      if (t.e[var] == 0) throw InvariantViolation("intersection element not divisible by the variable");
      --t.e[var];
      --t.deg;
    }
  }
  return meet;
}

std::vector<SparsePoly> to_engine(const IdealSpec& ideal, const Order& order) {
  std::vector<SparsePoly> out;
  for (const auto& g : ideal.generators()) out.push_back(detail::from_holo(g, order, kOffset));
  return out;
}

bool same_ideal(const std::vector<SparsePoly>& a, const std::vector<SparsePoly>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].terms.size() != b[i].terms.size()) return false;
    for (std::size_t k = 0; k < a[i].terms.size(); ++k) {
      const Term& x = a[i].terms[k];
      const Term& y = b[i].terms[k];
      if (x.e != y.e || !(x.c == y.c)) return false;
    }
  }
  return true;
}

IdealSpec with_max_ideal_power(const GroebnerBasis& base, unsigned s) {
  const std::size_t n = base.num_vars();
  std::vector<HoloPoly> gens = base.elements();
  // All monomials of degree exactly s.
  std::vector<unsigned> e(n, 0);
  auto emit = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var + 1 == n) {
      e[var] = left;
      Monomial m(n);
      for (std::size_t j = 0; j < n; ++j) m.holo(j) = e[j];
      gens.push_back(HoloPoly(Poly::monomial(m, GaussianRational(1))));
      return;
    }
    for (unsigned a = 0; a <= left; ++a) {
      e[var] = a;
      self(self, var + 1, left - a);
    }
  };
  if (n > 0) emit(emit, 0, s);
  return IdealSpec(n, std::move(gens));
}

}  // namespace

bool escapes_origin(const IdealSpec& ideal) {
  for (const auto& g : ideal.generators()) {
    if (!g.poly().constant_term().is_zero()) return true;
  }
  return false;
}

IdealSpec saturate_at_origin(const IdealSpec& ideal, const IdealCaps& caps) {
  const std::size_t n = ideal.num_vars();
  const Order order(n + kOffset, true);
  const Order plain(n + kOffset, false);
  std::vector<SparsePoly> current = detail::buchberger(to_engine(ideal, order), plain, {caps.pair_limit});

  while (true) {
    if (current.size() == 1 && current.front().is_constant()) break;
    std::vector<SparsePoly> next;
    for (std::size_t j = 0; j < n; ++j) {
      auto q = quotient_by_variable(current, j + kOffset, order, caps);
      next = j == 0 ? std::move(q) : intersect(next, q, order, caps);
    }
    if (n == 0) next = current;
    for (auto& p : next) detail::sort_terms(p, plain);
    next = detail::buchberger(std::move(next), plain, {caps.pair_limit});
    if (same_ideal(next, current)) break;
    current = std::move(next);
  }

  std::vector<HoloPoly> gens;
  for (const auto& p : current) gens.push_back(detail::to_holo(p, n, kOffset));
  return IdealSpec(n, std::move(gens));
}

std::uint64_t nakayama_dimension(const IdealSpec& ideal, unsigned s, const IdealCaps& caps) {
  const GroebnerBasis base = groebner_basis(ideal, caps.groebner());
  const GroebnerBasis g = groebner_basis(with_max_ideal_power(base, s), caps.groebner());
  const ExtNatural dim = standard_monomial_count(g, caps.staircase_cap);
  if (dim.is_infinite()) throw InvariantViolation("ideal containing a power of m has an unbounded staircase");
  return dim.value();
}

ColengthResult colength(const IdealSpec& ideal, const IdealCaps& caps) {
  ColengthResult out;
  if (escapes_origin(ideal)) {
    out.value = std::uint64_t{0};
    out.unit_at_origin = true;
    return out;
  }
  const std::size_t n = ideal.num_vars();
  if (n == 0) {
    out.value = std::uint64_t{1};
    out.isolation_route = "zero-dimensional";
    return out;
  }

  const GroebnerBasis base = groebner_basis(ideal, caps.groebner());
  if (standard_monomial_count(base, caps.staircase_cap).is_finite()) {
    out.isolation_route = "zero-dimensional";
  } else if (escapes_origin(saturate_at_origin(ideal, caps))) {
    out.isolation_route = "saturation";
  } else {
    out.value = ExtNatural::infinite();
    return out;
  }

  for (unsigned s = 1; s <= caps.s_limit + 1; ++s) {
    const GroebnerBasis g = groebner_basis(with_max_ideal_power(base, s), caps.groebner());
    const ExtNatural dim = standard_monomial_count(g, caps.staircase_cap);
    if (dim.is_infinite()) throw InvariantViolation("ideal containing a power of m has an unbounded staircase");
    out.nakayama_dims.push_back(dim.value());
    const std::size_t k = out.nakayama_dims.size();
    if (k >= 2 && out.nakayama_dims[k - 1] == out.nakayama_dims[k - 2]) {
      out.value = out.nakayama_dims[k - 2];
      return out;
    }
  }
  throw ResourceLimit("Nakayama loop did not stabilize within the s limit");
}

std::size_t linear_rank(const IdealSpec& ideal, const IdealCaps& caps) {
  const GroebnerBasis g = groebner_basis(ideal, caps.groebner());
  if (g.is_unit()) return ideal.num_vars();
  std::size_t rank = 0;
  for (const auto& e : g.elements()) {
    if (e.degree() == 1 && e.poly().constant_term().is_zero()) ++rank;
  }
  return rank;
}

bool TauBounds::lower_at_most(const mpq_class& value) const {
  if (d_value.is_infinite()) return false;
  if (sgn(value) < 0) return false;
  if (exponent == 0) return value >= 1;
  // D^{1/e} ≤ a/b  ⇔  D·b^e ≤ a^e.
  mpz_class a = value.get_num();
  mpz_class b = value.get_den();
  mpz_class ae;
  mpz_class be;
  mpz_pow_ui(ae.get_mpz_t(), a.get_mpz_t(), exponent);
  mpz_pow_ui(be.get_mpz_t(), b.get_mpz_t(), exponent);
  return mpz_class(d_value.value()) * be <= ae;
}

TauBounds tau_bounds(std::size_t n, const ExtNatural& d_value, std::size_t q) {
  if (q > n) throw InputError("linear rank exceeds the number of variables");
  TauBounds t;
  t.d_value = d_value;
  t.q = q;
  t.exponent = n - q;
  if (d_value.is_infinite()) {
    t.lower_floor = t.lower_ceil = t.upper = ExtNatural::infinite();
    return t;
  }
  const std::uint64_t d = d_value.value();
  if (d <= 1 || t.exponent == 0) {
    // The ideal is the unit ideal or contains n independent linear forms.
    t.lower_floor = t.lower_ceil = t.upper = d;
    return t;
  }
  const mpz_class root = integer_root_floor(mpz_class(d), static_cast<unsigned long>(t.exponent));
  mpz_class power;
  mpz_pow_ui(power.get_mpz_t(), root.get_mpz_t(), t.exponent);
  t.lower_floor = root.get_ui();
  t.lower_ceil = power == d ? root.get_ui() : root.get_ui() + 1;
  t.upper = d;
  return t;
}

TauBounds tau_bounds(const IdealSpec& ideal, const IdealCaps& caps) {
  return tau_bounds(ideal.num_vars(), colength(ideal, caps).value, linear_rank(ideal, caps));
}

}  // namespace finitype
