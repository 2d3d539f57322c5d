#include "finitype_cli/serialize.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>

#include <finitype/errors.hpp>

namespace finitype::cli {

json rational_json(const mpq_class& q) { return rational_string(q); }

json complex_json(const GaussianRational& z) { return json{{"re", rational_string(z.re())}, {"im", rational_string(z.im())}}; }

json ext_json(const ExtRational& v) { return v.is_infinite() ? json("infinite") : rational_json(v.value()); }

json ext_json(const ExtNatural& v) { return v.is_infinite() ? json("infinite") : json(v.value()); }

json point_json(const Point& p) {
  json out = json::array();
  for (const auto& z : p) out.push_back(complex_json(z));
  return out;
}

json curve_json(const CurveGerm& gamma) {
  json comps = json::array();
  for (const auto& c : gamma.components()) {
    json terms = json::array();
    for (std::size_t e = 0; e < c.size(); ++e) {
      if (!c[e].is_zero()) terms.push_back({{"exponent", e}, {"coefficient", complex_json(c[e])}});
    }
    comps.push_back(std::move(terms));
  }
  return json{{"components", std::move(comps)}, {"text", gamma.to_string()}, {"multiplicity", gamma.multiplicity()}};
}

json tau_json(const TauBounds& t) {
  return json{{"colength", ext_json(t.d_value)},  {"linear_rank", t.q},
              {"root_exponent", t.exponent},       {"lower_floor", ext_json(t.lower_floor)},
              {"lower_ceil", ext_json(t.lower_ceil)}, {"upper", ext_json(t.upper)}};
}

json colength_json(const ColengthResult& c) {
  return json{{"colength", ext_json(c.value)},
              {"unit_at_origin", c.unit_at_origin},
              {"isolation_route", c.isolation_route},
              {"nakayama_dims", c.nakayama_dims}};
}

json decomposition_json(const HermitianDecomposition& d) {
  json f = json::array();
  json g = json::array();
  for (const auto& x : d.f) f.push_back(x.to_string());
  for (const auto& x : d.g) g.push_back(x.to_string());
  return json{{"h", d.h.to_string()}, {"f", std::move(f)}, {"g", std::move(g)}, {"N", d.N}};
}

json type_report_json(const TypeReport& r) {
  json table = json::object();
  json samples = json::array();
  for (const auto& e : r.colength_table) {
    table[e.unitary_id] = ext_json(e.colength);
    samples.push_back({{"unitary", e.unitary_id},
                       {"colength", ext_json(e.colength)},
                       {"isolation_route", e.isolation_route},
                       {"tau", tau_json(e.tau)}});
  }
  json out{{"point", point_json(r.point)},
           {"k", r.k},
           {"probe_lower", ext_json(r.probe_lower)},
           {"witness", r.witness ? curve_json(*r.witness) : json(nullptr)},
           {"curves_probed", r.curves_probed},
           {"decomposition_length", r.decomposition_length},
           {"colength_table", std::move(table)},
           {"samples", std::move(samples)},
           {"ideal_lower", tau_json(r.ideal_lower)},
           {"ideal_lower_sample", r.ideal_lower_sample},
           {"heuristic_upper", ext_json(r.heuristic_upper)},
           {"type_estimate", ext_json(r.type_estimate())},
           {"certificates",
            {{"truncation_stable", r.truncation_stable}, {"finite_type_evidence", r.finite_type_evidence}}},
           {"semantics_note", r.semantics_note}};
  return out;
}

json truncation_json(const TruncationCertificate& c) {
  return json{{"k", c.k},
              {"status", c.status},
              {"probe_lower_truncated", ext_json(c.probe_lower_truncated)},
              {"probe_lower_full", ext_json(c.probe_lower_full)},
              {"type_estimate", ext_json(c.type_estimate)},
              {"curves_checked", c.curves_checked},
              {"split_identity_holds", c.split_identity_holds},
              {"remainder_order_holds", c.remainder_order_holds},
              {"full_matches_truncated", c.full_matches_truncated}};
}

json scan_json(const ScanReport& s) {
  json entries = json::array();
  for (const auto& e : s.entries) {
    entries.push_back({{"point", point_json(e.point)},
                       {"probe_lower", ext_json(e.probe_lower)},
                       {"heuristic_upper", ext_json(e.heuristic_upper)},
                       {"within_bound", e.within_bound},
                       {"within_codim_bound", e.within_codim_bound}});
  }
  return json{{"base", type_report_json(s.base)},
              {"reference_type", ext_json(s.reference_type)},
              {"bound", ext_json(s.bound)},
              {"codim_hint", s.codim_hint ? json(*s.codim_hint) : json(nullptr)},
              {"codim_bound", s.codim_bound ? ext_json(*s.codim_bound) : json(nullptr)},
              {"conservative_bound", ext_json(s.conservative_bound)},
              {"entries", std::move(entries)},
              {"violations", s.violations}};
}

json qtype_json(const QTypeReport& q) {
  json slices = json::array();
  for (const auto& s : q.slices) {
    json columns = json::array();
    for (std::size_t c = 0; c < s.embedding.matrix.cols(); ++c) {
      Point col;
      for (std::size_t r = 0; r < s.embedding.matrix.rows(); ++r) col.push_back(s.embedding.matrix(r, c));
      columns.push_back(point_json(col));
    }
    slices.push_back({{"id", s.embedding.id},
                      {"columns", std::move(columns)},
                      {"offset", point_json(s.embedding.offset)},
                      {"evidence", ext_json(s.evidence)},
                      {"report", type_report_json(s.report)}});
  }
  return json{{"q", q.q},
              {"slices", std::move(slices)},
              {"upper_bound", ext_json(q.upper_bound)},
              {"best_slice", q.best_slice},
              {"lower_bound", rational_json(q.lower_bound)}};
}

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 computation failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

std::string canonical_dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace finitype::cli
