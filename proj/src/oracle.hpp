// oracle.hpp — brute-force verification at desk scale: exhaustive structure
// enumeration over small prime fields, isomorphism search over the full
// automorphism group, an orbit census labelled by canonical forms, and an
// audit replaying the normalization-step formulas against solve_affine.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "derive.hpp"

namespace nfa {

// All id-matching parameter vectors over F_p (p^n of them; n <= 5 enforced).
std::vector<IdParams> enumerate_id_structures(int n, uint64_t p);

// Both branches of the (12)-matching constraint variety over F_p,
// deduplicated (n <= 4 enforced).
std::vector<TwelveSeed> enumerate_12_structures(int n, uint64_t p);

// A witness with transport(b.star, phi_A) = a.star, or nullopt after
// exhausting all (p-1) p^{n-1} candidates. Budget: n <= 4, p <= 11.
std::optional<AutoParams> brute_force_isomorphism(const BiAlgebra& a, const BiAlgebra& b, uint64_t p);

struct OrbitEntry {
    CanonicalForm form;
    uint64_t size = 0;
};

struct OrbitReport {
    int n = 0;
    uint64_t p = 0;
    IdentityKind kind{};
    uint64_t total = 0;
    std::vector<OrbitEntry> orbits;      // deterministic order; sizes sum to total
    std::vector<std::string> anomalies;  // must be empty: tag invariance violations
    std::vector<std::string> findings;   // informative: field-dependent splittings etc.
};

// Exhaustive orbit partition of all enumerated structures, each orbit
// labelled by the canonical form of a representative.
OrbitReport verify_classification(int n, IdentityKind kind, uint64_t p, int threads = 1);

struct AuditStep {
    std::string lemma;
    std::string step;
    int trials = 0;
    int agreements = 0;  // closed-form value == solve_affine value (sequential reading)
    bool flagged = false;
    std::string note;  // resolution and findings for flagged or misprinted steps

    bool agrees() const { return agreements == trials; }
};

struct AuditReport {
    int n = 0;
    int trials = 0;
    std::vector<AuditStep> steps;
};

// Replays every closed-form "choosing A_k = ..." step formula on random inputs in
// the corresponding stratum and compares it against the solve_affine result.
AuditReport audit_normalization_steps(int n, int trials, uint64_t seed = 12345);

}  // namespace nfa
