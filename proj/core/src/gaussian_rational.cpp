#include "finitype/gaussian_rational.hpp"

#include <stdexcept>

namespace finitype {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::from_ratio(long num, long den, long im_num, long im_den) {
  if (den == 0 || im_den == 0) throw std::domain_error("zero denominator");
  return {mpq_class(num, den), mpq_class(im_num, im_den)};
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero Gaussian rational");
  mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero Gaussian rational");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  auto imag = [](const mpq_class& v) {
    if (v == 1) return std::string("i");
    return v.get_str() + "*i";
  };
  if (sgn(re_) == 0) {
    if (im_ == 1) return "i";
    if (im_ == -1) return "(-1*i)";
    return "(" + imag(im_) + ")";
  }
  if (sgn(im_) > 0) return "(" + re_.get_str() + " + " + imag(im_) + ")";
  return "(" + re_.get_str() + " - " + imag(mpq_class(-im_)) + ")";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

std::string rational_string(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpz_class integer_root_floor(const mpz_class& value, unsigned long e) {
  if (sgn(value) < 0) throw std::domain_error("root of negative value");
  if (e == 0) throw std::domain_error("zeroth root");
  mpz_class r;
  mpz_root(r.get_mpz_t(), value.get_mpz_t(), e);
  return r;
}

}  // namespace finitype
