#pragma once

#include <string>

#include <json.hpp>

#include <finitype/decomposition.hpp>
#include <finitype/ideal.hpp>
#include <finitype/typecalc.hpp>

namespace finitype::cli {

using nlohmann::json;

// Rationals become "p/q" strings and complex numbers {"re", "im"}; infinite
// quantities become the string "infinite". Object keys are sorted by the
// json type itself, so dumps are byte-stable.

json rational_json(const mpq_class& q);
json complex_json(const GaussianRational& z);
json ext_json(const ExtRational& v);
json ext_json(const ExtNatural& v);
json point_json(const Point& p);
json curve_json(const CurveGerm& gamma);
json tau_json(const TauBounds& t);
json colength_json(const ColengthResult& c);
json decomposition_json(const HermitianDecomposition& d);
json type_report_json(const TypeReport& r);
json truncation_json(const TruncationCertificate& c);
json scan_json(const ScanReport& s);
json qtype_json(const QTypeReport& q);

/// Lowercase hex SHA-256 of `bytes`.
std::string sha256_hex(const std::string& bytes);

/// Canonical text of a report: two-space indented, trailing newline.
std::string canonical_dump(const json& doc);

}  // namespace finitype::cli
