#include "finitype_cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include <finitype/errors.hpp>
#include <finitype/parser.hpp>

#include "finitype_cli/problem_file.hpp"

namespace finitype::cli {
namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  // Drop blank pieces (trailing separators, surrounding whitespace).
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const std::string& s) { return s.find_first_not_of(" \t\n") == std::string::npos; }),
            out.end());
  return out;
}

struct Options {
  std::string input;
  std::string point;
  std::string output;
  bool timing = false;
  std::optional<unsigned> k;
  std::optional<unsigned> weights;
  std::optional<unsigned> degree;
  std::optional<std::string> pool;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> unitary_count;
  std::optional<unsigned> random_curves;
  std::optional<unsigned> slices;
  // command specific
  std::string gens;
  std::optional<std::size_t> n;
  std::string poly;
  std::string curve;
  std::optional<std::size_t> q;
  std::string base;
  std::string nearby;
};

void add_common(CLI::App* sub, Options& o, bool needs_input) {
  auto* in = sub->add_option("--input", o.input, "Problem file (JSON)");
  if (needs_input) in->required();
  sub->add_option("--output", o.output, "Write the report here instead of standard output");
  sub->add_flag("--timing", o.timing, "Include wall-clock timing in the report");
}

void add_tuning(CLI::App* sub, Options& o) {
  sub->add_option("--k", o.k, "Truncation order");
  sub->add_option("--weights", o.weights, "Largest monomial-curve weight W");
  sub->add_option("--degree", o.degree, "Degree bound for seeded probe curves");
  sub->add_option("--pool", o.pool, "Probe coefficients, ';'-separated");
  sub->add_option("--seed", o.seed, "Seed for curves, unitaries and slices");
  sub->add_option("--unitary-count", o.unitary_count, "Number of Cayley unitary samples");
  sub->add_option("--random-curves", o.random_curves, "Number of seeded two-term probe curves");
}

Defaults resolve_defaults(const std::optional<ProblemFile>& pf, const Options& o) {
  Defaults d = pf ? pf->defaults : Defaults{};
  apply_environment_caps(d);
  if (o.k) d.k = *o.k;
  if (o.weights) d.probe_weights = *o.weights;
  if (o.degree) d.probe_degree = *o.degree;
  if (o.seed) d.seed = *o.seed;
  if (o.unitary_count) d.unitary_count = *o.unitary_count;
  if (o.random_curves) d.random_curves = *o.random_curves;
  if (o.slices) d.random_slices = *o.slices;
  if (o.pool) {
    d.pool.clear();
    for (const auto& s : split(*o.pool, ';')) d.pool.push_back(parse_scalar(s));
  }
  return d;
}

// A bare index selects a listed point; anything else is a coordinate tuple.
Point resolve_point(const ProblemFile& pf, const std::string& text) {
  if (text.empty()) {
    if (pf.points.empty()) throw InputError("no --point given and the problem file lists no points");
    return parse_point(pf.points.front(), pf.n);
  }
  if (std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    const std::size_t idx = std::stoul(text);
    if (idx < pf.points.size()) return parse_point(pf.points[idx], pf.n);
    if (idx == 0) return Point(pf.n);
    throw InputError("point index " + text + " out of range");
  }
  return parse_point(text, pf.n);
}

json config_json(const Defaults& d) {
  json pool = json::array();
  for (const auto& z : d.pool) pool.push_back(complex_json(z));
  return json{{"k", d.k},
              {"probe_weights", d.probe_weights},
              {"probe_degree", d.probe_degree},
              {"pool", std::move(pool)},
              {"random_curves", d.random_curves},
              {"unitary_count", d.unitary_count},
              {"permutation_cap", d.permutation_cap},
              {"random_slices", d.random_slices},
              {"pair_limit", d.pair_limit},
              {"s_limit", d.s_limit}};
}

json run_type(const ProblemFile& pf, const Defaults& d, const Options& o) {
  const ProblemSpec spec = pf.to_spec();
  return type_report_json(type_bounds(spec, resolve_point(pf, o.point), make_type_config(d)));
}

json run_truncation(const ProblemFile& pf, const Defaults& d, const Options& o) {
  const ProblemSpec spec = pf.to_spec();
  return truncation_json(truncation_check(spec, resolve_point(pf, o.point), make_type_config(d)));
}

json run_scan(const ProblemFile& pf, const Defaults& d, const Options& o) {
  const ProblemSpec spec = pf.to_spec();
  const Point base = resolve_point(pf, o.base);
  std::vector<Point> nearby;
  if (!o.nearby.empty()) {
    for (const auto& s : split(o.nearby, ';')) nearby.push_back(resolve_point(pf, s));
  } else {
    for (const auto& s : pf.points) {
      Point p = parse_point(s, pf.n);
      if (!(p == base)) nearby.push_back(std::move(p));
    }
  }
  return scan_json(openness_scan(spec, base, nearby, make_type_config(d)));
}

json run_qtype(const ProblemFile& pf, const Defaults& d, const Options& o) {
  const ProblemSpec spec = pf.to_spec();
  SliceConfig sc;
  sc.random_slices = d.random_slices;
  sc.seed = d.seed;
  const std::size_t q = o.q.value_or(std::min<std::size_t>(2, pf.n));
  return qtype_json(qtype_bounds(spec, resolve_point(pf, o.point), q, make_type_config(d), sc));
}

json decomposition_detail(const RealPoly& r, const Point& p, unsigned k) {
  const RealPoly rk = taylor_truncate(translate_to_point(r, p), k);
  const HermitianForm form = build_hermitian_form(rk, k);
  const Congruence cong = congruence_diagonalize(form.matrix);
  const HermitianDecomposition dec = integerize_and_assemble(form, cong);
  json basis = json::array();
  for (const auto& m : form.basis) basis.push_back(m.to_string());
  json weights = json::array();
  for (const auto& w : cong.weights) weights.push_back(rational_json(w));
  json out = decomposition_json(dec);
  out["generator"] = r.to_string();
  out["truncated"] = rk.to_string();
  out["basis"] = std::move(basis);
  out["weights"] = std::move(weights);
  out["polarized"] = cong.polarized;
  out["identity_verified"] = dec.reassemble() == rk;
  return out;
}

json run_decompose(const std::optional<ProblemFile>& pf, const Defaults& d, const Options& o) {
  json items = json::array();
  Point p;
  if (!o.poly.empty()) {
    const std::size_t n = o.n.value_or(std::max<std::size_t>(1, max_variable_index(o.poly)));
    const RealPoly r = parse_poly(o.poly, n);
    p = o.point.empty() ? Point(n) : parse_point(o.point, n);
    if (sgn(r.evaluate(p)) != 0) throw InputError("generator does not vanish at point " + point_to_string(p));
    items.push_back(decomposition_detail(r, p, d.k));
  } else {
    if (!pf) throw InputError("decompose needs --input or --poly");
    const ProblemSpec spec = pf->to_spec();
    p = resolve_point(*pf, o.point);
    spec.require_on_set(p);
    for (const auto& r : spec.generators()) items.push_back(decomposition_detail(r, p, d.k));
  }
  return json{{"point", point_json(p)}, {"k", d.k}, {"decompositions", std::move(items)}};
}

json run_colength(const std::optional<ProblemFile>& pf, const Defaults& d, const Options& o) {
  if (o.gens.empty()) throw InputError("colength needs --gens");
  (void)pf;
  const auto pieces = split(o.gens, ';');
  std::size_t n = o.n.value_or(0);
  if (n == 0) {
    for (const auto& g : pieces) n = std::max(n, max_variable_index(g));
  }
  if (n == 0) n = 1;
  std::vector<HoloPoly> gens;
  for (const auto& g : pieces) gens.push_back(parse_holo_poly(g, n));
  const IdealSpec ideal(n, gens);
  IdealCaps caps;
  caps.pair_limit = d.pair_limit;
  caps.s_limit = d.s_limit;
  const ColengthResult c = colength(ideal, caps);
  const GroebnerBasis gb = groebner_basis(ideal, caps.groebner());
  json basis = json::array();
  for (const auto& e : gb.elements()) basis.push_back(e.to_string());
  json gen_text = json::array();
  for (const auto& g : gens) gen_text.push_back(g.to_string());
  const std::size_t q = linear_rank(ideal, caps);
  json out = colength_json(c);
  out["n"] = n;
  out["generators"] = std::move(gen_text);
  out["groebner_basis"] = std::move(basis);
  out["order"] = gb.order_name();
  out["linear_rank"] = q;
  out["tau"] = tau_json(tau_bounds(n, c.value, q));
  return out;
}

json run_probe(const ProblemFile& pf, const Options& o) {
  if (o.curve.empty()) throw InputError("probe needs --curve");
  const ProblemSpec spec = pf.to_spec();
  std::string body = o.curve;
  const auto first = body.find_first_not_of(" \t");
  const auto last = body.find_last_not_of(" \t");
  if (first == std::string::npos || body[first] != '(' || body[last] != ')') {
    throw InputError("curve must be written as (c1, c2, ...)");
  }
  body = body.substr(first + 1, last - first - 1);
  std::vector<UnivariatePoly> comps;
  for (const auto& s : split(body, ',')) comps.push_back(parse_univariate(s));
  if (comps.size() != pf.n) throw InputError("curve has the wrong number of components");
  const CurveGerm gamma(std::move(comps));
  const Point p = gamma.base();
  if (!o.point.empty() && !(resolve_point(pf, o.point) == p)) throw InputError("curve is not based at the point");
  spec.require_on_set(p);

  json per = json::array();
  for (const auto& r : spec.generators()) {
    const TracePoly s = compose_with_curve(translate_to_point(r, p), gamma);
    per.push_back({{"generator", r.to_string()}, {"order", ext_json(vanishing_order(s))}});
  }
  return json{{"curve", curve_json(gamma)},
              {"point", point_json(p)},
              {"value", ext_json(probe_min_order(spec.generators(), p, gamma))},
              {"orders", std::move(per)}};
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CommandResult result;
  CLI::App app{"finitype: exact bounds on the type of real-algebraic germs", "finitype"};
  app.require_subcommand(1);
  Options o;

  auto* type = app.add_subcommand("type", "Type bounds at a point");
  add_common(type, o, true);
  add_tuning(type, o);
  type->add_option("--point", o.point, "Point index in the file or a tuple such as (0,0,i)");

  auto* qtype = app.add_subcommand("qtype", "Upper bounds on the q-type by slicing");
  add_common(qtype, o, true);
  add_tuning(qtype, o);
  qtype->add_option("--point", o.point, "Point index or tuple");
  qtype->add_option("--q", o.q, "q (1 <= q <= n)");
  qtype->add_option("--slices", o.slices, "Number of seeded random slices");

  auto* scan = app.add_subcommand("scan", "Openness inequality across nearby points");
  add_common(scan, o, true);
  add_tuning(scan, o);
  scan->add_option("--base", o.base, "Base point index or tuple");
  scan->add_option("--nearby", o.nearby, "';'-separated nearby points (default: other listed points)");

  auto* decompose = app.add_subcommand("decompose", "Hermitian decomposition of the truncated generators");
  add_common(decompose, o, false);
  decompose->add_option("--point", o.point, "Point index or tuple");
  decompose->add_option("--k", o.k, "Truncation order");
  decompose->add_option("--poly", o.poly, "A single real polynomial instead of a problem file");
  decompose->add_option("--n", o.n, "Number of variables for --poly");

  auto* col = app.add_subcommand("colength", "Local colength at the origin");
  add_common(col, o, false);
  col->add_option("--gens", o.gens, "';'-separated holomorphic generators")->required();
  col->add_option("--n", o.n, "Number of variables (default: largest index used)");

  auto* probe = app.add_subcommand("probe", "Normalized vanishing order along one curve");
  add_common(probe, o, true);
  probe->add_option("--curve", o.curve, "Curve such as (t, t^2, 0)")->required();
  probe->add_option("--point", o.point, "Expected base point");

  auto* trunc = app.add_subcommand("truncation-check", "Truncation certificate at a point");
  add_common(trunc, o, true);
  add_tuning(trunc, o);
  trunc->add_option("--point", o.point, "Point index or tuple");

  if (!args.empty() && !args.front().empty() && args.front()[0] != '-') {
    bool known = false;
    for (const auto* sub : app.get_subcommands({})) known = known || sub->get_name() == args.front();
    if (!known) {
      result.exit_code = kInputError;
      result.message = "unknown command: " + args.front();
      return result;
    }
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.message = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.message = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = kInputError;
    result.message = e.what();
    return result;
  }
  for (auto* sub : app.get_subcommands()) {
    if (sub->get_help_ptr() != nullptr && sub->get_help_ptr()->count() > 0) {
      result.message = sub->help();
      return result;
    }
  }
  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  result.output_path = o.output;

  const auto start = std::chrono::steady_clock::now();
  try {
    std::optional<ProblemFile> pf;
    std::string digest_source;
    if (!o.input.empty()) {
      digest_source = read_file(o.input);
      pf = parse_problem_file(digest_source);
    } else {
      digest_source = o.gens + "\n" + o.poly;
    }
    const Defaults d = resolve_defaults(pf, o);

    json payload;
    if (command == "type") payload = run_type(*pf, d, o);
    else if (command == "qtype") payload = run_qtype(*pf, d, o);
    else if (command == "scan") payload = run_scan(*pf, d, o);
    else if (command == "decompose") payload = run_decompose(pf, d, o);
    else if (command == "colength") payload = run_colength(pf, d, o);
    else if (command == "probe") payload = run_probe(*pf, o);
    else payload = run_truncation(*pf, d, o);

    json doc{{"tool", "finitype"},
             {"version", FINITYPE_VERSION},
             {"command", command},
             {"input_digest", "sha256:" + sha256_hex(digest_source)},
             {"seed", d.seed},
             {"config", config_json(d)},
             {"payload", std::move(payload)}};
    if (o.timing) {
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
      doc["timing"] = {{"wall_ms", ms.count()}};
    }
    result.document = std::move(doc);
  } catch (const InputError& e) {
    result.exit_code = kInputError;
    result.message = e.what();
  } catch (const ResourceLimit& e) {
    result.exit_code = kResourceLimit;
    result.message = std::string("inconclusive: ") + e.what();
  } catch (const InvariantViolation& e) {
    result.exit_code = kInvariantFailure;
    result.message = std::string("internal invariant failed: ") + e.what();
  } catch (const std::exception& e) {
    result.exit_code = kInvariantFailure;
    result.message = std::string("internal error: ") + e.what();
  }
  return result;
}

void emit_report(const json& doc, const std::string& path) {
  const std::string text = canonical_dump(doc);
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write report to " + path);
}

}  // namespace finitype::cli
