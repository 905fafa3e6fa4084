// automorphism.hpp — the automorphism group of the null-filiform algebra,
// transport of a second product along an automorphism, and the induced
// transforms on id- and (12)-family parameters.
//
// An automorphism is determined by the image of e_1: phi(e_1) = sum A_i e_i
// with A_1 != 0. Column i of the matrix is built from the composition sums
// G_m^(i) = sum over ordered compositions k_1+...+k_i = m of A_{k_1}...A_{k_i}.

#pragma once

#include "matrix.hpp"
#include "scalar.hpp"
#include "tensor.hpp"

namespace nfa {

struct AutoParams {
    std::vector<Scalar> A;  // (A_1, ..., A_n), A_1 != 0

    int dim() const { return int(A.size()); }
    static AutoParams identity(int n, const Domain& dom);
};

// Parameters of the id-matching family: the coordinates of e_1 * e_1.
struct IdParams {
    std::vector<Scalar> alpha;  // (alpha_1, ..., alpha_n)

    int dim() const { return int(alpha.size()); }
};

// Parameters of the (12)-family at dimension n. The derivation-time beta_n is
// zero throughout the final family and is not stored.
struct TwelveParams {
    std::vector<Scalar> alpha;  // (alpha_1, ..., alpha_{n-1})
    std::vector<Scalar> beta;   // (beta_1, ..., beta_{n-1})

    int dim() const { return int(alpha.size()) + 1; }
};

// G_m^(i): sum over ordered compositions of m into i parts from [1, n].
// Requires 1 <= i <= m <= n where n = A.dim().
Scalar comp_sum(const AutoParams& A, int parts, int total);

// Full table g[m][i] = G_m^(i) for 1 <= i <= m <= n (0 entries elsewhere).
std::vector<std::vector<Scalar>> composition_sums(const AutoParams& A);

// Lower-triangular matrix of phi with diagonal A_1^i; NonUnit when A_1 = 0.
Matrix build_automorphism(const AutoParams& A, int n);

// Pullback of a product along an invertible map: c'(x, y) = phi^-1(phi(x) * phi(y)).
StructureTensor transport(const StructureTensor& star, const Matrix& phi);

// Parameter transforms computed by solving the isomorphism relations
// sequentially (the t-th relation is affine in the new parameter with a unit
// coefficient A_1^t). Satisfy: transport(star(p), phi_A) = star(result).
IdParams transform_id_params(const IdParams& p, const AutoParams& A);
TwelveParams transform_12_params(const TwelveParams& p, const AutoParams& A);

// Parameters of phi_second o phi_first, read off the first column of the
// composed matrix.
AutoParams compose(const AutoParams& first, const AutoParams& second);

}  // namespace nfa
