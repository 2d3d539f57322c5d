#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "finitype/matrix.hpp"

namespace finitype {

/// A square matrix with U*·U = I holding exactly.
class UnitaryMatrix {
 public:
  /// Throws InputError unless `m` is exactly unitary.
  explicit UnitaryMatrix(Matrix m);
  static UnitaryMatrix identity(std::size_t n) { return UnitaryMatrix(Matrix::identity(n)); }

  const Matrix& matrix() const { return m_; }
  std::size_t size() const { return m_.rows(); }

 private:
  Matrix m_;
};

bool is_unitary(const Matrix& m);
bool is_skew_hermitian(const Matrix& s);

/// Cayley transform (I − S)(I + S)⁻¹ of a skew-Hermitian S. Throws
/// InputError if S is not skew-Hermitian; I + S is then never singular.
UnitaryMatrix cayley_transform(const Matrix& s);

struct UnitarySample {
  std::string id;
  UnitaryMatrix u;
};

struct UnitaryConfig {
  unsigned cayley_count = 8;     ///< seeded Cayley samples
  unsigned permutation_cap = 32; ///< max signed permutation matrices (identity excluded)
  unsigned entry_height = 2;     ///< |Re|, |Im| bound for the entries of S
  std::uint64_t seed = 1;
};

/// Identity, then signed permutation matrices in lexicographic order up to the
/// cap, then `cayley_count` Cayley transforms of seeded skew-Hermitian
/// Gaussian-integer matrices. Deterministic in (n, config).
std::vector<UnitarySample> sample_unitaries(std::size_t n, const UnitaryConfig& config);

}  // namespace finitype
