// derive.hpp — derivation engines that reconstruct a full second product from
// minimal seed data, and the linear solution-space oracle for the matching
// identities against the fixed null-filiform product.

#pragma once

#include <optional>
#include <vector>

#include "automorphism.hpp"
#include "scalar.hpp"
#include "tensor.hpp"

namespace nfa {

// Coordinates of e_1 * e_1.
struct IdSeed {
    std::vector<Scalar> alpha;  // (alpha_1, ..., alpha_n)

    int dim() const { return int(alpha.size()); }
};

// Coordinates of e_1 * e_i: alpha_t from the e_t components (t <= n-1),
// beta_i the e_n components (1 <= i <= n).
struct TwelveSeed {
    std::vector<Scalar> alpha;  // (alpha_1, ..., alpha_{n-1})
    std::vector<Scalar> beta;   // (beta_1, ..., beta_n)

    int dim() const { return int(alpha.size()) + 1; }
};

// e_i * e_j = sum_{t=i+j-1}^{n} alpha_{t-i-j+2} e_t for 2 <= i+j <= n+1.
// The result is associative and totally compatible with the null-filiform dot.
StructureTensor derive_id_star(const IdSeed& seed);

enum class Branch {
    id_matching,  // beta_i = alpha_{n-i+1} for all 2 <= i <= n
    twelve,       // beta_n = 0
    symbolic,     // indeterminate seed: both branches reported, constraints unevaluated
};

struct Derive12Result {
    StructureTensor star;            // the table built from the seed
    std::vector<Scalar> constraints; // beta_n * (beta_i - alpha_{n-i+1}), i = 2..n
    Branch branch;
    std::optional<IdParams> id_params;          // id_matching (or symbolic candidate)
    std::optional<TwelveParams> twelve_params;  // twelve (or symbolic candidate)
};

// Builds the (12)-matching table from a seed and classifies it against the
// associativity constraint set. Concrete seeds satisfying neither branch
// raise InconsistentSeed.
Derive12Result derive_12_star(const TwelveSeed& seed);

// Kernel dimension of the linear system the identity imposes on the n^3
// star coefficients over F_p. kind must be one of id-matching,
// twelve-matching, interchangeable; requires p > n.
int solution_space_dimension(int n, IdentityKind kind, uint64_t p);

// Basis of that kernel as star tensors over F_p (deterministic order).
std::vector<StructureTensor> solution_space_basis(int n, IdentityKind kind, uint64_t p);

}  // namespace nfa
