#include "finitype_cli/problem_file.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include <finitype/errors.hpp>
#include <finitype/parser.hpp>

namespace finitype::cli {
namespace {

using nlohmann::json;

template <class T>
void read_number(const json& obj, const char* key, T& out) {
  if (!obj.contains(key)) return;
  const json& v = obj.at(key);
  if (!v.is_number_unsigned()) throw InputError(std::string("\"") + key + "\" must be a non-negative integer");
  out = v.get<T>();
}

std::uint64_t env_number(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) throw InputError(std::string(name) + " must be a positive integer");
  return v;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ProblemFile parse_problem_file(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("problem file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("problem file must be a JSON object");

  ProblemFile pf;
  try {
    if (!doc.contains("n") || !doc["n"].is_number_unsigned()) throw InputError("problem file needs a positive \"n\"");
    pf.n = doc["n"].get<std::size_t>();
    if (pf.n == 0) throw InputError("problem file needs a positive \"n\"");
    pf.generators = doc.at("generators").get<std::vector<std::string>>();
    if (doc.contains("points")) pf.points = doc["points"].get<std::vector<std::string>>();
    if (doc.contains("codim_hint") && !doc["codim_hint"].is_null()) pf.codim_hint = doc["codim_hint"].get<std::size_t>();
    if (doc.contains("defaults")) {
      const json& d = doc["defaults"];
      Defaults& out = pf.defaults;
      read_number(d, "k", out.k);
      read_number(d, "probe_weights", out.probe_weights);
      read_number(d, "probe_degree", out.probe_degree);
      read_number(d, "random_curves", out.random_curves);
      read_number(d, "unitary_count", out.unitary_count);
      read_number(d, "permutation_cap", out.permutation_cap);
      read_number(d, "random_slices", out.random_slices);
      read_number(d, "seed", out.seed);
      read_number(d, "pair_limit", out.pair_limit);
      read_number(d, "s_limit", out.s_limit);
      if (d.contains("pool")) {
        out.pool.clear();
        for (const auto& s : d["pool"].get<std::vector<std::string>>()) out.pool.push_back(parse_scalar(s));
      }
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed problem file: ") + e.what());
  }
  return pf;
}

ProblemFile load_problem_file(const std::string& path) { return parse_problem_file(read_file(path)); }

ProblemSpec ProblemFile::to_spec() const {
  std::vector<RealPoly> gens;
  for (const auto& g : generators) gens.push_back(parse_poly(g, n));
  std::vector<Point> pts;
  for (const auto& p : points) pts.push_back(parse_point(p, n));
  return ProblemSpec(n, std::move(gens), std::move(pts), codim_hint);
}

void apply_environment_caps(Defaults& defaults) {
  defaults.pair_limit = env_number("FINITYPE_PAIR_LIMIT", defaults.pair_limit);
  defaults.s_limit = static_cast<unsigned>(env_number("FINITYPE_S_LIMIT", defaults.s_limit));
}

TypeConfig make_type_config(const Defaults& d) {
  TypeConfig c;
  c.k = d.k;
  c.probe.max_weight = d.probe_weights;
  c.probe.max_degree = d.probe_degree;
  c.probe.pool = d.pool;
  c.probe.random_curves = d.random_curves;
  c.probe.seed = d.seed;
  c.unitary.cayley_count = d.unitary_count;
  c.unitary.permutation_cap = d.permutation_cap;
  c.unitary.seed = d.seed;
  c.caps.pair_limit = d.pair_limit;
  c.caps.s_limit = d.s_limit;
  return c;
}

}  // namespace finitype::cli
