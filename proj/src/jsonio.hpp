#pragma once

// JSON encodings of every value the tools exchange. Serialization is
// canonical: rationals are reduced ["num", "den"] decimal-string pairs,
// object keys are emitted in sorted order, and bivariate terms follow the
// (du, dv) lexicographic order, so equal values serialize byte-identically.

#include <string>

#include "certcheck.hpp"
#include "obstruct.hpp"

#include <json.hpp>

namespace socrep {

// Malformed or schema-violating input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json unipoly_to_json(const UniPoly& p, const std::string& var);
UniPoly unipoly_from_json(const Json& j);

Json bipoly_to_json(const BiPoly& b);
BiPoly bipoly_from_json(const Json& j);

Json decomposition_to_json(const TensorDecomposition& d);
TensorDecomposition decomposition_from_json(const Json& j);

Json spoly_to_json(const SPoly& s);

Json interval_cert_to_json(const IntervalCert& c, const std::string& var);
IntervalCert interval_cert_from_json(const Json& j);

Json factorization_to_json(const PsdFactorization& f);
PsdFactorization factorization_from_json(const Json& j);

Json conic_rep_to_json(const ConicRep& r);
ConicRep conic_rep_from_json(const Json& j);

Json bundle_to_json(const CertificateBundle& b);
CertificateBundle bundle_from_json(const Json& j);

Json point_set_to_json(const PointSet& s);
PointSet point_set_from_json(const Json& j);

Json obstruction_report_to_json(const ObstructionReport& r);

Json check_report_to_json(const CheckReport& r);

// dump(2) plus trailing newline; the canonical file form.
std::string to_file_string(const Json& j);
Json parse_json_text(const std::string& text);

}  // namespace socrep
