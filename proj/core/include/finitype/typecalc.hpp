#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finitype/curve.hpp"
#include "finitype/decomposition.hpp"
#include "finitype/extended.hpp"
#include "finitype/ideal.hpp"
#include "finitype/matrix.hpp"
#include "finitype/polynomial.hpp"
#include "finitype/unitary.hpp"

namespace finitype {

/// Attached to every type report.
extern const char* const kSemanticsNote;

/// A real-algebraic germ given by finitely many real polynomials, with the
/// base points of interest. Every point is checked to lie on the zero set.
class ProblemSpec {
 public:
  ProblemSpec(std::size_t n, std::vector<RealPoly> generators, std::vector<Point> points = {},
              std::optional<std::size_t> codim_hint = std::nullopt);

  std::size_t num_vars() const { return n_; }
  const std::vector<RealPoly>& generators() const { return generators_; }
  const std::vector<Point>& points() const { return points_; }
  const std::optional<std::size_t>& codim_hint() const { return codim_hint_; }

  /// Throws InputError("generator does not vanish at point ...") when p is off the set.
  void require_on_set(const Point& p) const;

 private:
  std::size_t n_;
  std::vector<RealPoly> generators_;
  std::vector<Point> points_;
  std::optional<std::size_t> codim_hint_;
};

struct TypeConfig {
  unsigned k = 8;
  ProbeConfig probe;
  UnitaryConfig unitary;
  IdealCaps caps;
};

struct ColengthEntry {
  std::string unitary_id;
  ExtNatural colength;
  std::size_t linear_rank = 0;
  TauBounds tau;
  std::string isolation_route;
};

struct TypeReport {
  Point point;
  unsigned k = 0;
  std::size_t n = 0;

  ExtRational probe_lower;
  std::optional<CurveGerm> witness;
  std::size_t curves_probed = 0;

  std::size_t decomposition_length = 0;  ///< N: common length of f and g
  std::vector<ColengthEntry> colength_table;
  /// Bracket of the largest D^{1/(n−q)} over the samples, and its sample.
  TauBounds ideal_lower;
  std::string ideal_lower_sample;
  /// 2·max sampled colength; infinite if any sampled colength is.
  ExtRational heuristic_upper;

  bool truncation_stable = false;
  bool finite_type_evidence = false;
  std::string semantics_note;

  /// Best single value: the probe when it is exact (one variable, or when it
  /// meets heuristic_upper), heuristic_upper otherwise.
  ExtRational type_estimate() const;
};

/// Probe lower bound against the degree-k truncations, decompositions at p,
/// and the colength of I(U, k, p) for each sampled U.
TypeReport type_bounds(const ProblemSpec& spec, const Point& p, const TypeConfig& config);

struct TruncationCertificate {
  unsigned k = 0;
  /// "truncation_stable", "k_too_small" or "inconclusive".
  std::string status;
  ExtRational probe_lower_truncated;
  ExtRational probe_lower_full;
  ExtRational type_estimate;
  std::size_t curves_checked = 0;
  /// r∘γ = r_k∘γ + e_k∘γ on every probe curve.
  bool split_identity_holds = true;
  /// ν(e_k∘γ) ≥ (k+1)·ν(γ) on every probe curve.
  bool remainder_order_holds = true;
  /// The probe values from r_k and from r agree curve by curve.
  bool full_matches_truncated = true;
};

TruncationCertificate truncation_check(const ProblemSpec& spec, const Point& p, const TypeConfig& config);

/// Remainder e_k = r − r_k of a polynomial recentered at 0.
RealPoly truncation_remainder(const RealPoly& recentered, unsigned k);

struct ScanEntry {
  Point point;
  ExtRational probe_lower;
  ExtRational heuristic_upper;
  bool within_bound = true;        ///< probe_lower ≤ 2·ref^n
  bool within_codim_bound = true;  ///< probe_lower ≤ 2·ref^(n−d), when d is given
};

struct ScanReport {
  TypeReport base;
  /// probe_lower at the base point.
  ExtRational reference_type;
  ExtRational bound;
  std::optional<std::size_t> codim_hint;
  std::optional<ExtRational> codim_bound;
  /// 2·heuristic_upper(p₀)^n, which never depends on the probe being sharp.
  ExtRational conservative_bound;
  std::vector<ScanEntry> entries;
  std::vector<std::string> violations;
};

ScanReport openness_scan(const ProblemSpec& spec, const Point& p0, const std::vector<Point>& nearby,
                         const TypeConfig& config);

/// φ(w) = offset + matrix·w with matrix of full column rank.
struct LinearEmbedding {
  Matrix matrix;
  Point offset;
  std::string id;

  LinearEmbedding(Matrix matrix, Point offset, std::string id = {});
  std::size_t source_dim() const { return matrix.cols(); }
};

/// Generators composed with φ; the single base point is the origin of the slice.
ProblemSpec slice_pullback(const ProblemSpec& spec, const LinearEmbedding& phi);

struct SliceConfig {
  unsigned random_slices = 4;
  unsigned entry_height = 2;
  std::uint64_t seed = 1;
  std::size_t coordinate_cap = 64;
};

/// Coordinate-subspace inclusions (lexicographic in the kept coordinates),
/// then seeded random embeddings. When q = 1 only the identity is used.
std::vector<LinearEmbedding> sample_slices(std::size_t n, std::size_t q, const Point& p, const SliceConfig& config);

struct SliceResult {
  LinearEmbedding embedding;
  TypeReport report;
  ExtRational evidence;
};

struct QTypeReport {
  std::size_t q = 0;
  std::vector<SliceResult> slices;
  ExtRational upper_bound;
  std::string best_slice;
  /// Only the universal bound Δ^q ≥ 1 is claimed.
  mpq_class lower_bound{1};
};

QTypeReport qtype_bounds(const ProblemSpec& spec, const Point& p, std::size_t q, const TypeConfig& config,
                         const SliceConfig& slices = {});

/// For every sampled U and probe curve with h∘γ ≡ 0 for a generator's h,
/// compares the least component order of (f − U·g)∘γ with ν(r_k∘γ).
struct ComponentOrderCheck {
  std::size_t comparisons = 0;
  std::size_t violations = 0;
};

ComponentOrderCheck component_order_check(const ProblemSpec& spec, const Point& p, const TypeConfig& config);

}  // namespace finitype
