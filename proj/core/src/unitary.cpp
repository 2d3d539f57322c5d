#include "finitype/unitary.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "finitype/errors.hpp"

namespace finitype {

bool is_unitary(const Matrix& m) { return m.is_square() && m.conj_transpose() * m == Matrix::identity(m.rows()); }

bool is_skew_hermitian(const Matrix& s) {
  if (!s.is_square()) return false;
  for (std::size_t i = 0; i < s.rows(); ++i) {
    for (std::size_t j = 0; j < s.cols(); ++j) {
      if (!(s(i, j) == -s(j, i).conj())) return false;
    }
  }
  return true;
}

UnitaryMatrix::UnitaryMatrix(Matrix m) : m_(std::move(m)) {
  if (!is_unitary(m_)) throw InputError("matrix is not unitary");
}

UnitaryMatrix cayley_transform(const Matrix& s) {
  if (!is_skew_hermitian(s)) throw InputError("Cayley transform needs a skew-Hermitian matrix");
  const Matrix id = Matrix::identity(s.rows());
  auto inv = (id + s).inverse();
  if (!inv) throw InvariantViolation("I + S singular for skew-Hermitian S");
  return UnitaryMatrix((id - s) * *inv);
}

std::vector<UnitarySample> sample_unitaries(std::size_t n, const UnitaryConfig& config) {
  if (n == 0) throw InputError("unitary size must be at least 1");
  std::vector<UnitarySample> out;
  out.push_back({"identity", UnitaryMatrix::identity(n)});

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  unsigned made = 0;
  const std::uint64_t sign_patterns = n < 63 ? (std::uint64_t{1} << n) : UINT64_MAX;
  do {
    for (std::uint64_t signs = 0; signs < sign_patterns && made < config.permutation_cap; ++signs) {
      bool is_identity = signs == 0 && std::is_sorted(perm.begin(), perm.end());
      if (is_identity) continue;
      Matrix m(n, n);
      std::string id = "perm[";
      for (std::size_t i = 0; i < n; ++i) {
        const bool negative = (signs >> i) & 1u;
        m(i, perm[i]) = negative ? -1 : 1;
        if (i > 0) id += ",";
        id += (negative ? "-" : "+") + std::to_string(perm[i]);
      }
      out.push_back({id + "]", UnitaryMatrix(std::move(m))});
      ++made;
    }
  } while (made < config.permutation_cap && std::next_permutation(perm.begin(), perm.end()));

  std::mt19937_64 rng(config.seed);
  const long h = static_cast<long>(config.entry_height);
  auto draw = [&]() { return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * h + 1)) - h; };
  for (unsigned c = 0; c < config.cayley_count; ++c) {
    Matrix s(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      s(i, i) = GaussianRational(0, draw());
      for (std::size_t j = i + 1; j < n; ++j) {
        s(i, j) = GaussianRational(draw(), draw());
        s(j, i) = -s(i, j).conj();
      }
    }
    out.push_back({"cayley#" + std::to_string(c), cayley_transform(s)});
  }
  return out;
}

}  // namespace finitype
