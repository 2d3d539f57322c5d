#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <finitype/typecalc.hpp>

namespace finitype::cli {

/// Tunables stored under "defaults" in a problem file.
struct Defaults {
  unsigned k = 8;
  unsigned probe_weights = 4;
  unsigned probe_degree = 4;
  std::vector<GaussianRational> pool{1, -1, GaussianRational::i(), -GaussianRational::i()};
  unsigned random_curves = 64;
  unsigned unitary_count = 8;
  unsigned permutation_cap = 32;
  unsigned random_slices = 4;
  std::uint64_t seed = 1;
  std::uint64_t pair_limit = 100000;
  unsigned s_limit = 64;
};

struct ProblemFile {
  std::size_t n = 0;
  std::vector<std::string> generators;
  std::vector<std::string> points;
  std::optional<std::size_t> codim_hint;
  Defaults defaults;

  /// Parses the generators and points and checks every point lies on the set.
  ProblemSpec to_spec() const;
};

/// Reads the JSON problem format:
///   {"n": 3, "generators": ["..."], "points": ["(0,0,0)"],
///    "codim_hint": 1, "defaults": {"k": 8, "pool": ["1", "-i"], ...}}
ProblemFile parse_problem_file(const std::string& json_text);
ProblemFile load_problem_file(const std::string& path);

std::string read_file(const std::string& path);

/// Applies FINITYPE_PAIR_LIMIT and FINITYPE_S_LIMIT when set.
void apply_environment_caps(Defaults& defaults);

TypeConfig make_type_config(const Defaults& defaults);

}  // namespace finitype::cli
