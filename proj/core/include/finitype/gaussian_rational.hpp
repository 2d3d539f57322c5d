#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace finitype {

/// Exact complex scalar a + b·i with a, b rational.
///
/// Both parts are GMP rationals kept in canonical form (positive
/// denominator, lowest terms), so equality is structural.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational i() { return {0, 1}; }
  static GaussianRational from_ratio(long num, long den, long im_num = 0, long im_den = 1);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|², always a nonnegative rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  /// Throws std::domain_error on zero.
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Parseable text: "3/2", "-i", "(1/2 - 3*i)".
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// "p/q" with q ≥ 1 always present; the canonical serialized form.
std::string rational_string(const mpq_class& q);

/// Integer part of the e-th root: largest r with r^e ≤ value (value ≥ 0, e ≥ 1).
mpz_class integer_root_floor(const mpz_class& value, unsigned long e);

}  // namespace finitype
