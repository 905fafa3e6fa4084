// capi.cpp — extern "C" surface over the C++ core. All exceptions are caught
// at the boundary and mapped to status codes; messages are kept thread-local.

#include "nfa/nfa.h"

#include <cstring>
#include <string>

#include "canonical.hpp"
#include "derive.hpp"
#include "json_io.hpp"
#include "oracle.hpp"

using namespace nfa;

struct nfa_algebra {
    BiAlgebra alg;
};

namespace {

thread_local std::string g_last_error;

nfa_status status_of(ErrorCode code) {
    switch (code) {
        case ErrorCode::domain_mismatch: return NFA_ERR_DOMAIN_MISMATCH;
        case ErrorCode::division_by_zero: return NFA_ERR_DIVISION_BY_ZERO;
        case ErrorCode::non_invertible: return NFA_ERR_NON_INVERTIBLE;
        case ErrorCode::singular_coefficient: return NFA_ERR_SINGULAR_COEFFICIENT;
        case ErrorCode::dimension_mismatch: return NFA_ERR_DIMENSION_MISMATCH;
        case ErrorCode::not_central: return NFA_ERR_NOT_CENTRAL;
        case ErrorCode::index_out_of_range: return NFA_ERR_INDEX_OUT_OF_RANGE;
        case ErrorCode::non_unit: return NFA_ERR_NON_UNIT;
        case ErrorCode::singular_map: return NFA_ERR_SINGULAR_MAP;
        case ErrorCode::inconsistent_seed: return NFA_ERR_INCONSISTENT_SEED;
        case ErrorCode::unrecognized_family: return NFA_ERR_UNRECOGNIZED_FAMILY;
        case ErrorCode::search_space_too_large: return NFA_ERR_SEARCH_SPACE_TOO_LARGE;
        case ErrorCode::invalid_indices: return NFA_ERR_INVALID_INDICES;
        case ErrorCode::invalid_argument: return NFA_ERR_INVALID_ARGUMENT;
        case ErrorCode::parse_error: return NFA_ERR_PARSE;
    }
    return NFA_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class Fn>
nfa_status guarded(Fn&& fn) {
    try {
        fn();
        return NFA_OK;
    } catch (const Error& e) {
        g_last_error = std::string(error_code_name(e.code())) + ": " + e.what();
        return status_of(e.code());
    } catch (const nlohmann::json::exception& e) {
        g_last_error = std::string("ParseError: ") + e.what();
        return NFA_ERR_PARSE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return NFA_ERR_INTERNAL;
    }
}

nlohmann::json parse_json(const char* text) {
    if (!text) fail(ErrorCode::invalid_argument, "null JSON input");
    return nlohmann::json::parse(text);
}

IdentityKind kind_of(const char* name) {
    if (!name) fail(ErrorCode::invalid_argument, "null identity kind");
    auto k = parse_identity_kind(name);
    if (!k) fail(ErrorCode::invalid_argument, std::string("unknown identity kind: ") + name);
    return *k;
}

// params JSON carries "kind": "id" | "twelve"
bool params_are_twelve(const nlohmann::json& j) {
    if (j.contains("kind")) {
        std::string k = j.at("kind").get<std::string>();
        if (k == "id") return false;
        if (k == "twelve") return true;
        fail(ErrorCode::parse_error, "params kind must be 'id' or 'twelve'");
    }
    return j.contains("beta");
}

}  // namespace

extern "C" {

const char* nfa_version(void) { return "0.1.0"; }

const char* nfa_last_error_message(void) { return g_last_error.c_str(); }

void nfa_string_free(char* s) { std::free(s); }

nfa_status nfa_algebra_make_null_filiform(int n, const char* domain, nfa_algebra** out) {
    return guarded([&] {
        if (!out) fail(ErrorCode::invalid_argument, "null output handle");
        Domain dom = Domain::parse(domain ? domain : "q");
        auto dot = StructureTensor::null_filiform(n, dom);
        *out = new nfa_algebra{BiAlgebra(std::move(dot), StructureTensor(n, dom))};
    });
}

nfa_status nfa_algebra_from_json(const char* json_text, nfa_algebra** out) {
    return guarded([&] {
        if (!out) fail(ErrorCode::invalid_argument, "null output handle");
        *out = new nfa_algebra{jsonio::algebra_from_json(parse_json(json_text))};
    });
}

nfa_status nfa_algebra_to_json(const nfa_algebra* alg, char** json_out) {
    return guarded([&] {
        if (!alg || !json_out) fail(ErrorCode::invalid_argument, "null argument");
        *json_out = dup_string(jsonio::algebra_to_json(alg->alg).dump());
    });
}

nfa_status nfa_algebra_check(const nfa_algebra* alg, const char* kind, int threads,
                             char** report_json_out, int* holds_out) {
    return guarded([&] {
        if (!alg) fail(ErrorCode::invalid_argument, "null algebra");
        auto res = check_identity(alg->alg, kind_of(kind), threads);
        if (holds_out) *holds_out = res.holds ? 1 : 0;
        if (report_json_out) *report_json_out = dup_string(jsonio::check_result_to_json(res).dump());
    });
}

nfa_status nfa_algebra_quotient_by_last(const nfa_algebra* alg, nfa_algebra** out) {
    return guarded([&] {
        if (!alg || !out) fail(ErrorCode::invalid_argument, "null argument");
        *out = new nfa_algebra{quotient_by_last(alg->alg)};
    });
}

void nfa_algebra_free(nfa_algebra* alg) { delete alg; }

nfa_status nfa_derive(const char* seed_json, char** out_json) {
    return guarded([&] {
        if (!out_json) fail(ErrorCode::invalid_argument, "null output");
        auto j = parse_json(seed_json);
        if (params_are_twelve(j)) {
            TwelveSeed seed = jsonio::twelve_seed_from_json(j);
            auto res = derive_12_star(seed);
            auto dot = StructureTensor::null_filiform(seed.dim(), seed.beta[0].domain());
            *out_json = dup_string(jsonio::derive12_to_json(res, dot).dump());
        } else {
            IdParams p = jsonio::id_params_from_json(j);
            auto star = derive_id_star(IdSeed{p.alpha});
            auto dot = StructureTensor::null_filiform(p.dim(), p.alpha[0].domain());
            *out_json =
                dup_string(jsonio::algebra_to_json(BiAlgebra(std::move(dot), std::move(star))).dump());
        }
    });
}

nfa_status nfa_transform(const char* params_json, const char* auto_json, char** out_json) {
    return guarded([&] {
        if (!out_json) fail(ErrorCode::invalid_argument, "null output");
        auto jp = parse_json(params_json);
        auto ja = parse_json(auto_json);
        if (params_are_twelve(jp)) {
            TwelveParams p = jsonio::twelve_params_from_json(jp);
            AutoParams A = jsonio::auto_params_from_json(ja, p.alpha[0].domain());
            *out_json = dup_string(jsonio::twelve_params_to_json(transform_12_params(p, A)).dump());
        } else {
            IdParams p = jsonio::id_params_from_json(jp);
            AutoParams A = jsonio::auto_params_from_json(ja, p.alpha[0].domain());
            *out_json = dup_string(jsonio::id_params_to_json(transform_id_params(p, A)).dump());
        }
    });
}

nfa_status nfa_normalize(const char* params_json, char** out_json) {
    return guarded([&] {
        if (!out_json) fail(ErrorCode::invalid_argument, "null output");
        auto j = parse_json(params_json);
        NormalizeResult res = params_are_twelve(j)
                                  ? normalize_12(jsonio::twelve_params_from_json(j))
                                  : normalize_id(jsonio::id_params_from_json(j));
        *out_json = dup_string(jsonio::normalize_result_to_json(res).dump());
    });
}

nfa_status nfa_realize(const char* form_json, int n, const char* domain, char** out_json) {
    return guarded([&] {
        if (!out_json) fail(ErrorCode::invalid_argument, "null output");
        Domain dom = Domain::parse(domain ? domain : "q");
        CanonicalForm f = jsonio::form_from_json(parse_json(form_json), dom);
        *out_json = dup_string(jsonio::algebra_to_json(realize(f, n, dom)).dump());
    });
}

nfa_status nfa_oracle_dims(int n, const char* kind, unsigned long long p, int* dim_out) {
    return guarded([&] {
        if (!dim_out) fail(ErrorCode::invalid_argument, "null output");
        *dim_out = solution_space_dimension(n, kind_of(kind), p);
    });
}

nfa_status nfa_oracle_census(int n, const char* kind, unsigned long long p, int threads,
                             char** report_json_out) {
    return guarded([&] {
        if (!report_json_out) fail(ErrorCode::invalid_argument, "null output");
        auto report = verify_classification(n, kind_of(kind), p, threads);
        *report_json_out = dup_string(jsonio::orbit_report_to_json(report).dump());
    });
}

nfa_status nfa_oracle_iso(const char* algebra_a_json, const char* algebra_b_json,
                          unsigned long long p, char** witness_json_out, int* found_out) {
    return guarded([&] {
        BiAlgebra a = jsonio::algebra_from_json(parse_json(algebra_a_json));
        BiAlgebra b = jsonio::algebra_from_json(parse_json(algebra_b_json));
        auto witness = brute_force_isomorphism(a, b, p);
        if (found_out) *found_out = witness ? 1 : 0;
        if (witness_json_out) {
            if (witness)
                *witness_json_out = dup_string(jsonio::auto_params_to_json(*witness).dump());
            else
                *witness_json_out = nullptr;
        }
    });
}

nfa_status nfa_oracle_audit(int n, int trials, unsigned long long rng_seed, char** report_json_out) {
    return guarded([&] {
        if (!report_json_out) fail(ErrorCode::invalid_argument, "null output");
        auto report = audit_normalization_steps(n, trials, rng_seed);
        *report_json_out = dup_string(jsonio::audit_report_to_json(report).dump());
    });
}

}  // extern "C"
