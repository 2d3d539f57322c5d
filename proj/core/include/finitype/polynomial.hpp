#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "finitype/gaussian_rational.hpp"

namespace finitype {

using Point = std::vector<GaussianRational>;

/// z^α · z̄^β in n complex variables. Exponents are stored as one vector,
/// holomorphic powers first, then antiholomorphic powers.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : exps_(2 * n, 0) {}
  Monomial(std::vector<unsigned> holo, std::vector<unsigned> anti);

  static Monomial variable(std::size_t n, std::size_t j, unsigned power = 1);
  static Monomial conj_variable(std::size_t n, std::size_t j, unsigned power = 1);

  std::size_t num_vars() const { return exps_.size() / 2; }
  unsigned holo(std::size_t j) const { return exps_[j]; }
  unsigned anti(std::size_t j) const { return exps_[num_vars() + j]; }
  unsigned& holo(std::size_t j) { return exps_[j]; }
  unsigned& anti(std::size_t j) { return exps_[num_vars() + j]; }

  std::vector<unsigned> holo_exponents() const;
  std::vector<unsigned> anti_exponents() const;

  unsigned degree() const;
  unsigned holo_degree() const;
  unsigned anti_degree() const;
  bool is_one() const { return degree() == 0; }
  bool is_holomorphic() const { return anti_degree() == 0; }

  /// Exchanges holomorphic and antiholomorphic exponents.
  Monomial conj_swap() const;
  /// The holomorphic monomial z^α (resp. z^β) from the two halves.
  Monomial holo_part() const;
  Monomial anti_part_as_holo() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial& a, const Monomial& b) = default;
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  std::string to_string() const;

 private:
  std::vector<unsigned> exps_;
};

/// Sparse polynomial in z₁..zₙ and z̄₁..z̄ₙ with Gaussian-rational coefficients.
/// Zero coefficients are never stored.
class Poly {
 public:
  using TermMap = std::map<Monomial, GaussianRational>;

  Poly() = default;
  explicit Poly(std::size_t n) : n_(n) {}

  static Poly constant(std::size_t n, const GaussianRational& c);
  static Poly variable(std::size_t n, std::size_t j);
  static Poly conj_variable(std::size_t n, std::size_t j);
  static Poly monomial(const Monomial& m, const GaussianRational& c = 1);

  std::size_t num_vars() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  GaussianRational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const GaussianRational& c);

  /// Total degree in (z, z̄); -1 for the zero polynomial.
  int degree() const;
  GaussianRational constant_term() const;

  /// Coefficient of z^α z̄^β is the conjugate of that of z^β z̄^α.
  bool is_real() const;
  bool is_holomorphic() const;

  Poly conj_swap() const;
  Poly pow(unsigned e) const;

  GaussianRational evaluate(std::span<const GaussianRational> point) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const GaussianRational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const GaussianRational& c) { return a *= c; }
  friend Poly operator*(const GaussianRational& c, Poly a) { return a *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  /// Text accepted back by parse_expression.
  std::string to_string() const;

 private:
  void require_same_vars(const Poly& o) const;

  std::size_t n_ = 0;
  TermMap terms_;
};

/// Real-valued polynomial: a Poly with Hermitian coefficient symmetry.
class RealPoly {
 public:
  RealPoly() = default;
  explicit RealPoly(std::size_t n) : p_(n) {}
  /// Throws InputError("not real-valued") if `p` breaks Hermitian symmetry.
  explicit RealPoly(Poly p);

  const Poly& poly() const { return p_; }
  std::size_t num_vars() const { return p_.num_vars(); }
  int degree() const { return p_.degree(); }
  bool is_zero() const { return p_.is_zero(); }
  /// The constant term, which is real by symmetry.
  mpq_class constant_term() const { return p_.constant_term().re(); }
  mpq_class evaluate(std::span<const GaussianRational> point) const { return p_.evaluate(point).re(); }

  friend RealPoly operator+(const RealPoly& a, const RealPoly& b) { return RealPoly(a.p_ + b.p_, {}); }
  friend RealPoly operator-(const RealPoly& a, const RealPoly& b) { return RealPoly(a.p_ - b.p_, {}); }
  friend RealPoly operator*(const RealPoly& a, const RealPoly& b) { return RealPoly(a.p_ * b.p_, {}); }
  friend RealPoly operator*(const mpq_class& c, const RealPoly& a) { return RealPoly(a.p_ * GaussianRational(c), {}); }
  friend bool operator==(const RealPoly& a, const RealPoly& b) = default;

  std::string to_string() const { return p_.to_string(); }

 private:
  struct Trusted {};
  RealPoly(Poly p, Trusted) : p_(std::move(p)) {}
  friend RealPoly translate_to_point(const RealPoly&, std::span<const GaussianRational>);
  friend RealPoly taylor_truncate(const RealPoly&, unsigned);

  Poly p_;
};

/// Polynomial in z₁..zₙ only.
class HoloPoly {
 public:
  HoloPoly() = default;
  explicit HoloPoly(std::size_t n) : p_(n) {}
  /// Throws InputError if any term carries a conjugate variable.
  explicit HoloPoly(Poly p);

  static HoloPoly variable(std::size_t n, std::size_t j) { return HoloPoly(Poly::variable(n, j)); }

  const Poly& poly() const { return p_; }
  std::size_t num_vars() const { return p_.num_vars(); }
  int degree() const { return p_.degree(); }
  bool is_zero() const { return p_.is_zero(); }

  /// z ↦ conj(h(z)) as a polynomial in z̄.
  Poly conj() const { return p_.conj_swap(); }

  HoloPoly& operator+=(const HoloPoly& o) { p_ += o.p_; return *this; }
  HoloPoly& operator-=(const HoloPoly& o) { p_ -= o.p_; return *this; }
  friend HoloPoly operator+(HoloPoly a, const HoloPoly& b) { return a += b; }
  friend HoloPoly operator-(HoloPoly a, const HoloPoly& b) { return a -= b; }
  friend HoloPoly operator*(const HoloPoly& a, const HoloPoly& b) { return HoloPoly(a.p_ * b.p_); }
  friend HoloPoly operator*(const GaussianRational& c, const HoloPoly& a) { return HoloPoly(a.p_ * c); }
  friend bool operator==(const HoloPoly& a, const HoloPoly& b) = default;

  std::string to_string() const { return p_.to_string(); }

 private:
  Poly p_;
};

/// Re(h) = (h + h̄)/2 as a real polynomial.
RealPoly real_part(const HoloPoly& h);
/// |f|² = f·f̄.
RealPoly modulus_squared(const HoloPoly& f);

/// r(z + p), expanded exactly. The result evaluated at 0 equals r(p).
Poly translate_to_point(const Poly& r, std::span<const GaussianRational> p);
RealPoly translate_to_point(const RealPoly& r, std::span<const GaussianRational> p);

/// Keeps the terms of total (z, z̄) degree ≤ k.
Poly taylor_truncate(const Poly& r, unsigned k);
RealPoly taylor_truncate(const RealPoly& r, unsigned k);

std::string point_to_string(std::span<const GaussianRational> p);

}  // namespace finitype
