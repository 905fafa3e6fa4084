// tensor.hpp — structure-constant tensors, the null-filiform product, bilinear
// evaluation, the compatibility-identity checkers, and the center quotient.
//
// Indices are 1-based at the API boundary, matching the basis e_1..e_n.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace nfa {

class StructureTensor {
public:
    StructureTensor(int dim, const Domain& dom);

    int dim() const { return dim_; }
    const Domain& domain() const { return dom_; }

    // coefficient of e_k in e_i o e_j; all of i, j, k in [1, dim]
    const Scalar& at(int i, int j, int k) const;
    void set(int i, int j, int k, Scalar v);

    // e_i o e_j as a coefficient vector (length dim)
    std::vector<Scalar> row(int i, int j) const;

    // bilinear extension: z_k = sum_{i,j} x_i y_j c[i][j][k]
    std::vector<Scalar> product(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;

    bool operator==(const StructureTensor& o) const;
    bool operator!=(const StructureTensor& o) const { return !(*this == o); }

    bool is_zero() const;

    // e_i . e_j = e_{i+j} for i+j <= n, all other products zero
    static StructureTensor null_filiform(int n, const Domain& dom);

private:
    size_t idx(int i, int j, int k) const { return ((size_t(i) - 1) * dim_ + (j - 1)) * dim_ + (k - 1); }
    void check_index(int i, int j, int k) const;

    int dim_;
    Domain dom_;
    std::vector<Scalar> c_;
};

// Pair of products on one space; dot is the fixed associative product.
struct BiAlgebra {
    StructureTensor dot;
    StructureTensor star;

    BiAlgebra(StructureTensor d, StructureTensor s);
    int dim() const { return dot.dim(); }
    const Domain& domain() const { return dot.domain(); }
};

enum class IdentityKind {
    associativity,       // (a*b)*c = a*(b*c) for the star product
    compatible,          // (a.b)*c + (a*b).c = a.(b*c) + a*(b.c)
    id_matching,         // (a.b)*c = a.(b*c)  and  (a*b).c = a*(b.c)
    twelve_matching,     // (a.b)*c = a*(b.c)  and  (a*b).c = a.(b*c)
    interchangeable,     // (a.b)*c = (a*b).c  and  a.(b*c) = a*(b.c)
    totally_compatible,  // all four mixed products coincide
};

const char* identity_kind_name(IdentityKind kind);          // kebab-case
std::optional<IdentityKind> parse_identity_kind(std::string_view name);

struct CheckWitness {
    int i, j, k;           // 1-based failing basis triple (lexicographically least)
    std::string equation;  // which equality failed
    std::vector<Scalar> lhs, rhs;
};

struct CheckResult {
    bool holds;
    std::optional<CheckWitness> witness;
};

// Evaluates the defining identity on all basis triples; multilinearity makes
// basis triples sufficient. Deterministic: reports the least failing triple.
CheckResult check_identity(const BiAlgebra& alg, IdentityKind kind, int threads = 1);

// Deletes basis vector e_n from both products. Requires e_n to annihilate
// both products (e_n o x = x o e_n = 0) and to absorb nothing but e_n outputs.
BiAlgebra quotient_by_last(const BiAlgebra& alg);

}  // namespace nfa
