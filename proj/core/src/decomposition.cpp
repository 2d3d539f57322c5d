#include "finitype/decomposition.hpp"

#include <algorithm>
#include <map>

#include "finitype/errors.hpp"

namespace finitype {
namespace {

bool basis_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.holo_exponents() > b.holo_exponents();
}

HoloPoly form_to_poly(const Matrix& forms, std::size_t col, const std::vector<Monomial>& basis, std::size_t n,
                      const GaussianRational& scale) {
  Poly p(n);
  for (std::size_t a = 0; a < basis.size(); ++a) p.add_term(basis[a], forms(a, col) * scale);
  return HoloPoly(std::move(p));
}

bool is_square(unsigned long v, unsigned long& root) {
  mpz_class z(v);
  if (!mpz_perfect_square_p(z.get_mpz_t())) return false;
  root = mpz_class(sqrt(z)).get_ui();
  return true;
}

// Minimal decomposition of a small value into at most `parts` squares.
bool small_squares(unsigned long v, int parts, std::vector<unsigned long>& out) {
  if (v == 0) return true;
  if (parts == 0) return false;
  unsigned long root = 0;
  if (is_square(v, root)) {
    out.push_back(root);
    return true;
  }
  if (parts == 1) return false;
  for (unsigned long s = mpz_class(sqrt(mpz_class(v))).get_ui(); s >= 1; --s) {
    out.push_back(s);
    if (small_squares(v - s * s, parts - 1, out)) return true;
    out.pop_back();
  }
  return false;
}

}  // namespace

// ----------------------------------------------------------- HermitianForm

RealPoly HermitianForm::reassemble() const {
  Poly total = real_part(pure_part).poly();
  total += Poly::constant(n, GaussianRational(constant));
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (matrix(a, b).is_zero()) continue;
      total.add_term(basis[a] * basis[b].conj_swap(), matrix(a, b));
    }
  }
  return RealPoly(std::move(total));
}

HermitianForm build_hermitian_form(const RealPoly& rk, unsigned k) {
  if (rk.degree() > static_cast<int>(k)) throw InputError("polynomial degree exceeds truncation order");
  const std::size_t n = rk.num_vars();
  HermitianForm form;
  form.n = n;

  GaussianRational constant = rk.poly().constant_term();
  if (!constant.is_real()) throw InputError("not recentered: constant term is not real");
  form.constant = constant.re();

  std::vector<Monomial> basis;
  Poly pure(n);
  for (const auto& [m, c] : rk.poly().terms()) {
    if (m.is_one()) continue;
    if (m.anti_degree() == 0) {
      pure.add_term(m, c * 2);
    } else if (m.holo_degree() > 0) {
      basis.push_back(m.holo_part());
    }
  }
  std::sort(basis.begin(), basis.end(), basis_less);
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());

  std::map<Monomial, std::size_t> index;
  for (std::size_t a = 0; a < basis.size(); ++a) index.emplace(basis[a], a);

  form.matrix = Matrix(basis.size(), basis.size());
  for (const auto& [m, c] : rk.poly().terms()) {
    if (m.holo_degree() == 0 || m.anti_degree() == 0) continue;
    form.matrix(index.at(m.holo_part()), index.at(m.anti_part_as_holo())) = c;
  }
  form.basis = std::move(basis);
  form.pure_part = HoloPoly(std::move(pure));
  return form;
}

// -------------------------------------------------------------- Congruence

Matrix Congruence::reassemble() const {
  Matrix d(weights.size(), weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) d(i, i) = GaussianRational(weights[i]);
  return forms * d * forms.conj_transpose();
}

Congruence congruence_diagonalize(const Matrix& c) {
  if (!c.is_hermitian()) throw InputError("congruence_diagonalize needs a Hermitian matrix");
  const std::size_t m = c.rows();
  Matrix a = c;
  Congruence out;
  out.forms = Matrix(m, m);
  out.weights.assign(m, mpq_class(0));
  std::vector<bool> done(m, false);

  auto subtract = [&](const std::vector<GaussianRational>& l, const mpq_class& w) {
    const GaussianRational gw(w);
    for (std::size_t r = 0; r < m; ++r) {
      if (l[r].is_zero()) continue;
      const GaussianRational lr = gw * l[r];
      for (std::size_t s = 0; s < m; ++s) {
        if (!l[s].is_zero()) a(r, s) -= lr * l[s].conj();
      }
    }
  };
  auto store = [&](std::size_t slot, const std::vector<GaussianRational>& l, const mpq_class& w) {
    for (std::size_t r = 0; r < m; ++r) out.forms(r, slot) = l[r];
    out.weights[slot] = w;
    done[slot] = true;
  };

  while (true) {
    std::size_t pivot = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (!done[i] && !a(i, i).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < m) {
      const mpq_class w = a(pivot, pivot).re();
      const GaussianRational inv(mpq_class(mpq_class(1) / w));
      std::vector<GaussianRational> l(m);
      for (std::size_t r = 0; r < m; ++r) l[r] = a(r, pivot) * inv;
      subtract(l, w);
      store(pivot, l, w);
      continue;
    }

    std::size_t pj = m;
    std::size_t pk = m;
    for (std::size_t j = 0; j < m && pj == m; ++j) {
      if (done[j]) continue;
      for (std::size_t k = j + 1; k < m; ++k) {
        if (!done[k] && !a(j, k).is_zero()) {
          pj = j;
          pk = k;
          break;
        }
      }
    }
    if (pj == m) break;

    // With a = column j / conj(c) and b = column k, the rows and columns j, k
    // of A equal those of 2Re(a b̄) = ½|a+b|² − ½|b−a|².
    const GaussianRational inv_cbar = a(pj, pk).conj().inverse();
    std::vector<GaussianRational> plus(m);
    std::vector<GaussianRational> minus(m);
    for (std::size_t r = 0; r < m; ++r) {
      const GaussianRational scaled = a(r, pj) * inv_cbar;
      plus[r] = a(r, pk) + scaled;
      minus[r] = a(r, pk) - scaled;
    }
    const mpq_class half(1, 2);
    subtract(plus, half);
    subtract(minus, mpq_class(-half));
    store(pj, plus, half);
    store(pk, minus, mpq_class(-half));
    out.polarized = true;
  }

  for (std::size_t i = 0; i < m; ++i) {
    if (!done[i]) out.forms(i, i) = 1;
  }
  if (!a.is_zero()) throw InvariantViolation("congruence elimination left a nonzero remainder");
  return out;
}

// -------------------------------------------------- HermitianDecomposition

RealPoly HermitianDecomposition::reassemble() const {
  RealPoly total = real_part(h);
  for (const auto& fi : f) total = total + modulus_squared(fi);
  for (const auto& gj : g) total = total - modulus_squared(gj);
  return total;
}

std::vector<mpz_class> sum_of_squares(const mpz_class& value) {
  if (sgn(value) < 0) throw std::domain_error("sum of squares of a negative value");
  constexpr unsigned long kSmall = 10000;
  std::vector<mpz_class> out;
  mpz_class rest = value;
  while (rest > kSmall) {
    mpz_class s = sqrt(rest);
    out.push_back(s);
    rest -= s * s;
  }
  std::vector<unsigned long> small;
  for (int parts = 1; parts <= 4; ++parts) {
    small.clear();
    if (small_squares(rest.get_ui(), parts, small)) break;
  }
  for (unsigned long s : small) out.emplace_back(s);
  return out;
}

HermitianDecomposition integerize_and_assemble(const HermitianForm& form, const Congruence& congruence) {
  if (congruence.forms.rows() != form.basis.size()) throw InputError("congruence does not match the form's basis");
  const std::size_t n = form.n;
  HermitianDecomposition out;
  out.h = form.pure_part + HoloPoly(Poly::constant(n, GaussianRational(form.constant * 2)));

  for (std::size_t i = 0; i < congruence.weights.size(); ++i) {
    const mpq_class& d = congruence.weights[i];
    if (sgn(d) == 0) continue;
    const mpz_class a = abs(d.get_num());
    const mpz_class& b = d.get_den();
    auto& target = sgn(d) > 0 ? out.f : out.g;
    for (const mpz_class& s : sum_of_squares(a * b)) {
      mpq_class scale(s, b);
      scale.canonicalize();
      target.push_back(form_to_poly(congruence.forms, i, form.basis, n, GaussianRational(scale)));
    }
  }
  out.N = std::max(out.f.size(), out.g.size());
  out.f.resize(out.N, HoloPoly(n));
  out.g.resize(out.N, HoloPoly(n));

  if (!(out.reassemble() == form.reassemble())) throw InvariantViolation("identity check failed");
  return out;
}

HermitianDecomposition decompose_truncated(const RealPoly& rk, unsigned k) {
  HermitianForm form = build_hermitian_form(rk, k);
  Congruence congruence = congruence_diagonalize(form.matrix);
  HermitianDecomposition out = integerize_and_assemble(form, congruence);
  if (!(out.reassemble() == rk)) throw InvariantViolation("identity check failed");
  return out;
}

HermitianDecomposition decompose(const RealPoly& r, std::span<const GaussianRational> p, unsigned k) {
  return decompose_truncated(taylor_truncate(translate_to_point(r, p), k), k);
}

std::vector<HoloPoly> build_ideal_generators(std::span<const HermitianDecomposition> decomps, const UnitaryMatrix& u) {
  const std::size_t size = u.size();
  const Matrix& m = u.matrix();
  std::vector<HoloPoly> out;
  std::size_t n = decomps.empty() ? 0 : decomps.front().h.num_vars();
  for (const auto& d : decomps) {
    if (d.h.num_vars() != n) throw InputError("decompositions have different variable counts");
    if (d.N > size) throw InputError("unitary matrix smaller than decomposition length");
    out.push_back(d.h);
    for (std::size_t i = 0; i < size; ++i) {
      HoloPoly comp = i < d.f.size() ? d.f[i] : HoloPoly(n);
      for (std::size_t j = 0; j < d.g.size(); ++j) {
        if (!m(i, j).is_zero()) comp -= m(i, j) * d.g[j];
      }
      out.push_back(std::move(comp));
    }
  }
  return out;
}

}  // namespace finitype
