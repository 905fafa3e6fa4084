// json_io.hpp — JSON serialization for every exchange format: scalars,
// algebras, parameter vectors, canonical forms, witnesses, and reports.
//
// Scalars: rationals as "p/q" strings (integer shorthand allowed), field
// elements as {"fp": p, "v": k}, polynomials as
// {"terms": [{"c": "p/q", "m": {"A1": 2}}]}. Algebras list only nonzero
// entries, sorted by (i, j, k), 1-based.

#pragma once

#include <string>

#include "json.hpp"
#include "canonical.hpp"
#include "derive.hpp"
#include "oracle.hpp"

namespace nfa::jsonio {

using nlohmann::json;

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, const Domain& dom);

json algebra_to_json(const BiAlgebra& alg);
BiAlgebra algebra_from_json(const json& j);

json check_result_to_json(const CheckResult& r);

// parameter vectors; "kind" is "id" or "twelve"
json id_params_to_json(const IdParams& p);
json twelve_params_to_json(const TwelveParams& p);
json twelve_seed_to_json(const TwelveSeed& p);
json auto_params_to_json(const AutoParams& p);

IdParams id_params_from_json(const json& j);
TwelveParams twelve_params_from_json(const json& j);
TwelveSeed twelve_seed_from_json(const json& j);
AutoParams auto_params_from_json(const json& j, const Domain& dom);

json form_to_json(const CanonicalForm& f);
CanonicalForm form_from_json(const json& j, const Domain& dom);

json witness_to_json(const Witness& w);
json normalize_result_to_json(const NormalizeResult& r);

json derive12_to_json(const Derive12Result& r, const StructureTensor& dot);

json orbit_report_to_json(const OrbitReport& r);
json audit_report_to_json(const AuditReport& r);

}  // namespace nfa::jsonio
