#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "finitype/gaussian_rational.hpp"

namespace finitype {

/// A value of T or +∞. Infinity compares greater than every finite value.
template <class T>
class Extended {
 public:
  Extended() = default;
  Extended(T v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

  static Extended infinite() { return Extended(); }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  const T& value() const {
    if (!value_) throw std::logic_error("value() on infinite quantity");
    return *value_;
  }

  friend bool operator==(const Extended& a, const Extended& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
    return *a.value_ == *b.value_;
  }
  friend bool operator<(const Extended& a, const Extended& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return *a.value_ < *b.value_;
  }
  friend bool operator>(const Extended& a, const Extended& b) { return b < a; }
  friend bool operator<=(const Extended& a, const Extended& b) { return !(b < a); }
  friend bool operator>=(const Extended& a, const Extended& b) { return !(a < b); }

 private:
  std::optional<T> value_;
};

using ExtNatural = Extended<std::uint64_t>;
using ExtRational = Extended<mpq_class>;

inline std::string to_string(const ExtNatural& v) {
  return v.is_infinite() ? std::string("infinite") : std::to_string(v.value());
}

inline std::string to_string(const ExtRational& v) {
  return v.is_infinite() ? std::string("infinite") : rational_string(v.value());
}

}  // namespace finitype
