#include "finitype/polynomial.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

#include "finitype/errors.hpp"

namespace finitype {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<unsigned> holo, std::vector<unsigned> anti) {
  if (holo.size() != anti.size()) throw InputError("monomial exponent vectors differ in length");
  exps_ = std::move(holo);
  exps_.insert(exps_.end(), anti.begin(), anti.end());
}

Monomial Monomial::variable(std::size_t n, std::size_t j, unsigned power) {
  Monomial m(n);
  m.holo(j) = power;
  return m;
}

Monomial Monomial::conj_variable(std::size_t n, std::size_t j, unsigned power) {
  Monomial m(n);
  m.anti(j) = power;
  return m;
}

std::vector<unsigned> Monomial::holo_exponents() const {
  return {exps_.begin(), exps_.begin() + static_cast<std::ptrdiff_t>(num_vars())};
}

std::vector<unsigned> Monomial::anti_exponents() const {
  return {exps_.begin() + static_cast<std::ptrdiff_t>(num_vars()), exps_.end()};
}

unsigned Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0u); }

unsigned Monomial::holo_degree() const {
  unsigned d = 0;
  for (std::size_t j = 0; j < num_vars(); ++j) d += holo(j);
  return d;
}

unsigned Monomial::anti_degree() const {
  unsigned d = 0;
  for (std::size_t j = 0; j < num_vars(); ++j) d += anti(j);
  return d;
}

Monomial Monomial::conj_swap() const { return Monomial(anti_exponents(), holo_exponents()); }

Monomial Monomial::holo_part() const {
  return Monomial(holo_exponents(), std::vector<unsigned>(num_vars(), 0));
}

Monomial Monomial::anti_part_as_holo() const {
  return Monomial(anti_exponents(), std::vector<unsigned>(num_vars(), 0));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.exps_.size() != b.exps_.size()) throw InputError("mismatched variable count");
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
  return r;
}

std::string Monomial::to_string() const {
  std::string out;
  auto emit = [&](const char* name, std::size_t j, unsigned e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += name + std::to_string(j + 1);
    if (e > 1) out += "^" + std::to_string(e);
  };
  for (std::size_t j = 0; j < num_vars(); ++j) emit("z", j, holo(j));
  for (std::size_t j = 0; j < num_vars(); ++j) emit("zb", j, anti(j));
  return out.empty() ? "1" : out;
}

// -------------------------------------------------------------------- Poly

Poly Poly::constant(std::size_t n, const GaussianRational& c) {
  Poly p(n);
  p.add_term(Monomial(n), c);
  return p;
}

Poly Poly::variable(std::size_t n, std::size_t j) {
  if (j >= n) throw InputError("variable index out of range");
  return monomial(Monomial::variable(n, j));
}

Poly Poly::conj_variable(std::size_t n, std::size_t j) {
  if (j >= n) throw InputError("variable index out of range");
  return monomial(Monomial::conj_variable(n, j));
}

Poly Poly::monomial(const Monomial& m, const GaussianRational& c) {
  Poly p(m.num_vars());
  p.add_term(m, c);
  return p;
}

GaussianRational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void Poly::add_term(const Monomial& m, const GaussianRational& c) {
  if (m.num_vars() != n_) throw InputError("mismatched variable count");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

GaussianRational Poly::constant_term() const { return coefficient(Monomial(n_)); }

bool Poly::is_real() const {
  for (const auto& [m, c] : terms_) {
    if (!(coefficient(m.conj_swap()) == c.conj())) return false;
  }
  return true;
}

bool Poly::is_holomorphic() const {
  for (const auto& [m, c] : terms_) {
    if (!m.is_holomorphic()) return false;
  }
  return true;
}

Poly Poly::conj_swap() const {
  Poly r(n_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m.conj_swap(), c.conj());
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(n_, 1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

GaussianRational Poly::evaluate(std::span<const GaussianRational> point) const {
  if (point.size() != n_) throw InputError("point dimension does not match variable count");
  GaussianRational total;
  for (const auto& [m, c] : terms_) {
    GaussianRational v = c;
    for (std::size_t j = 0; j < n_; ++j) {
      for (unsigned e = 0; e < m.holo(j); ++e) v *= point[j];
      if (m.anti(j) > 0) {
        GaussianRational pc = point[j].conj();
        for (unsigned e = 0; e < m.anti(j); ++e) v *= pc;
      }
    }
    total += v;
  }
  return total;
}

void Poly::require_same_vars(const Poly& o) const {
  if (n_ != o.n_) throw InputError("mismatched variable count");
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_vars(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_vars(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_vars(b);
  Poly r(a.n_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (m.is_one()) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += m.to_string();
    } else {
      out += c.to_string() + "*" + m.to_string();
    }
  }
  return out;
}

// ------------------------------------------------------ RealPoly / HoloPoly

RealPoly::RealPoly(Poly p) : p_(std::move(p)) {
  if (!p_.is_real()) throw InputError("not real-valued: polynomial lacks Hermitian symmetry");
}

HoloPoly::HoloPoly(Poly p) : p_(std::move(p)) {
  if (!p_.is_holomorphic()) throw InputError("polynomial is not holomorphic");
}

RealPoly real_part(const HoloPoly& h) {
  return RealPoly((h.poly() + h.conj()) * GaussianRational(mpq_class(1, 2)));
}

RealPoly modulus_squared(const HoloPoly& f) { return RealPoly(f.poly() * f.conj()); }

// ------------------------------------------------- recentering / truncation

Poly translate_to_point(const Poly& r, std::span<const GaussianRational> p) {
  const std::size_t n = r.num_vars();
  if (p.size() != n) throw InputError("point dimension does not match variable count");

  // (z_j + p_j)^e and (z̄_j + p̄_j)^e, cached per (j, conjugate, e).
  std::map<std::tuple<std::size_t, bool, unsigned>, Poly> cache;
  auto factor = [&](std::size_t j, bool conj, unsigned e) -> const Poly& {
    auto key = std::make_tuple(j, conj, e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Poly base = conj ? Poly::conj_variable(n, j) + Poly::constant(n, p[j].conj())
                     : Poly::variable(n, j) + Poly::constant(n, p[j]);
    return cache.emplace(key, base.pow(e)).first->second;
  };

  Poly out(n);
  for (const auto& [m, c] : r.terms()) {
    Poly term = Poly::constant(n, c);
    for (std::size_t j = 0; j < n; ++j) {
      if (m.holo(j) > 0) term = term * factor(j, false, m.holo(j));
      if (m.anti(j) > 0) term = term * factor(j, true, m.anti(j));
    }
    out += term;
  }
  return out;
}

RealPoly translate_to_point(const RealPoly& r, std::span<const GaussianRational> p) {
  return RealPoly(translate_to_point(r.poly(), p), RealPoly::Trusted{});
}

Poly taylor_truncate(const Poly& r, unsigned k) {
  Poly out(r.num_vars());
  for (const auto& [m, c] : r.terms()) {
    if (m.degree() <= k) out.add_term(m, c);
  }
  return out;
}

RealPoly taylor_truncate(const RealPoly& r, unsigned k) {
  return RealPoly(taylor_truncate(r.poly(), k), RealPoly::Trusted{});
}

std::string point_to_string(std::span<const GaussianRational> p) {
  std::string out = "(";
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j > 0) out += ", ";
    out += p[j].to_string();
  }
  return out + ")";
}

}  // namespace finitype
