// canonical.hpp — normalization of id- and (12)-family parameter vectors to
// canonical representatives, with machine-checkable witness chains.
//
// Tags and their defining invariants (first nonzero index s, the invariant
// alpha_2, the beta-vs-alpha comparisons) are computed root-free, so the tag
// is exact over any coefficient field. Witness chains record one automorphism
// per normalization step; a chain is partial exactly when a required root
// (a k-th root used only to rescale a leading coefficient to 1) does not
// exist in the domain.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "automorphism.hpp"
#include "derive.hpp"
#include "scalar.hpp"
#include "tensor.hpp"

namespace nfa {

enum class FamilyTag { B1, B2, Bs, A1, A2, A3r, A4s, A5sr, A6s, A7s };

const char* family_tag_name(FamilyTag tag);
std::optional<FamilyTag> parse_family_tag(std::string_view name);

struct CanonicalForm {
    FamilyTag tag;
    int n = 0;  // ambient dimension
    int s = 0;  // Bs, A4s, A5sr, A6s, A7s
    int r = 0;  // A3r, A5sr

    std::optional<Scalar> alpha;  // B2, Bs, A2..A7s
    // leading coefficient of the e_{s+i+j-2} chain for A4s..A7s; 1 when the
    // canonicalizing root exists in the field (always, over C)
    std::optional<Scalar> scale;
    // surviving beta parameters as (index, value), ascending; A1, A2, A4s..A7s
    std::vector<std::pair<int, Scalar>> betas;

    std::string to_string() const;
};

// Structural equality of tag, indices, and parameters. Exact isomorphism test
// for the B families and A1/A2/A3r; as-reported for A4..A7 (their surviving
// parameters have no proven converse in general).
bool canonical_equal(const CanonicalForm& f, const CanonicalForm& g);

struct WitnessStep {
    AutoParams A;
    std::string note;  // which parameter the step pins or annihilates
};

struct Witness {
    std::vector<WitnessStep> steps;
    bool full = true;
    std::string partial_reason;  // set when !full
};

struct NormalizeResult {
    CanonicalForm form;
    Witness witness;
};

// Canonical form of an id-matching parameter vector (concrete scalars only:
// rationals or F_p with p > n).
NormalizeResult normalize_id(const IdParams& p);

// Canonical form of a (12)-family parameter vector. Inputs whose table is
// also id-matching (beta_i = alpha_{n-i+1} throughout) normalize through the
// id classification and receive the corresponding B tag.
NormalizeResult normalize_12(const TwelveParams& p);

// The parameter vector realizing a canonical form.
std::variant<IdParams, TwelveParams> canonical_params(const CanonicalForm& f, int n, const Domain& dom);

// The two-product table of a canonical representative; always passes its
// defining identity check.
BiAlgebra realize(const CanonicalForm& f, int n, const Domain& dom);

}  // namespace nfa
