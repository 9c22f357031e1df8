// json_io.hpp
// JSON (de)serialization of certificates, heights and verification reports.
// Rationals are serialized as exact "p/q" strings; enclosure endpoints as
// exact dyadic-rational strings. Key order is fixed so equal runs produce
// byte-identical files.

#pragma once

#include "smallzeros/smallzeros.hpp"

#include <json.hpp>

namespace smallzeros {

using ordered_json = nlohmann::ordered_json;

ordered_json height_to_json(const HeightValue& h, long prec = 64);
ordered_json certificate_to_json(const ZeroCertificate& cert);
ordered_json verify_report_to_json(const VerifyReport& rep);

// Rebuilds a certificate (input polynomial, point, bound) from its JSON
// form; the bound becomes exact when the exact fields are present and a
// fixed enclosure otherwise.
ZeroCertificate certificate_from_json(const ordered_json& j);

}  // namespace smallzeros
