#pragma once

#include <span>
#include <vector>

#include "finitype/matrix.hpp"
#include "finitype/polynomial.hpp"
#include "finitype/unitary.hpp"

namespace finitype {

/// r_k split as Re(pure_part) + constant + v* · matrix · v, where v is the
/// vector of holomorphic `basis` monomials: the coefficient of z^α z̄^β in
/// r_k is matrix(index(α), index(β)).
struct HermitianForm {
  std::size_t n = 0;
  std::vector<Monomial> basis;
  Matrix matrix;
  HoloPoly pure_part;
  mpq_class constant;

  RealPoly reassemble() const;
};

/// Reads off the Hermitian form of a real polynomial recentered at 0.
/// The basis is the set of holomorphic monomials occurring in mixed terms,
/// sorted by degree, then lexicographically with z₁ highest.
HermitianForm build_hermitian_form(const RealPoly& rk, unsigned k);

/// C = forms · diag(weights) · forms*, with one column of `forms` per
/// linear form ℓ_i (its coefficients on the basis).
struct Congruence {
  Matrix forms;
  std::vector<mpq_class> weights;
  bool polarized = false;

  Matrix reassemble() const;
};

/// Symmetric elimination: pivot on the first nonzero diagonal entry; when the
/// diagonal is exhausted, polarize on the first nonzero off-diagonal pair
/// (j, k) via 2Re(a b̄) = ½|a+b|² − ½|a−b|². Indices never used as pivots
/// get a unit column with weight 0, so columns line up with basis indices.
Congruence congruence_diagonalize(const Matrix& c);

/// r_k = Re(h) + Σ|f_i|² − Σ|g_j|², with f and g padded to common length N.
struct HermitianDecomposition {
  HoloPoly h;
  std::vector<HoloPoly> f;
  std::vector<HoloPoly> g;
  std::size_t N = 0;

  RealPoly reassemble() const;
};

/// Writes each positive integer as a short sum of squares of positive
/// integers (minimal for small values, greedy reduction above).
std::vector<mpz_class> sum_of_squares(const mpz_class& value);

/// Weight d = a/b (lowest terms) contributes copies (s/b)·ℓ for the squares
/// s² summing to |a|·b, to f when d > 0 and to g when d < 0. Verifies the
/// reassembly identity and throws InvariantViolation if it fails.
HermitianDecomposition integerize_and_assemble(const HermitianForm& form, const Congruence& congruence);

/// translate → truncate → form → diagonalize → assemble.
HermitianDecomposition decompose(const RealPoly& r, std::span<const GaussianRational> p, unsigned k);
/// Same, for a polynomial already recentered and truncated.
HermitianDecomposition decompose_truncated(const RealPoly& rk, unsigned k);

/// For each decomposition: h, then the components of f − U·g, with f and g
/// zero-padded to U's size. Throws InputError if U is smaller than some N or
/// variable counts differ.
std::vector<HoloPoly> build_ideal_generators(std::span<const HermitianDecomposition> decomps, const UnitaryMatrix& u);

}  // namespace finitype
