#include "automorphism.hpp"

namespace nfa {

AutoParams AutoParams::identity(int n, const Domain& dom) {
    AutoParams a;
    a.A.assign(size_t(n), Scalar::zero(dom));
    a.A[0] = Scalar::one(dom);
    return a;
}

std::vector<std::vector<Scalar>> composition_sums(const AutoParams& A) {
    const int n = A.dim();
    const Domain& dom = A.A[0].domain();
    // g[m][i] with g[m][0] unused; g[m][1] = A_m
    std::vector<std::vector<Scalar>> g(size_t(n) + 1,
                                       std::vector<Scalar>(size_t(n) + 1, Scalar::zero(dom)));
    for (int m = 1; m <= n; ++m) g[size_t(m)][1] = A.A[size_t(m) - 1];
    for (int i = 2; i <= n; ++i)
        for (int m = i; m <= n; ++m) {
            Scalar acc = Scalar::zero(dom);
            for (int k = 1; k <= m - i + 1; ++k) {
                if (A.A[size_t(k) - 1].is_zero()) continue;
                acc = acc + A.A[size_t(k) - 1] * g[size_t(m) - k][size_t(i) - 1];
            }
            g[size_t(m)][size_t(i)] = std::move(acc);
        }
    return g;
}

Scalar comp_sum(const AutoParams& A, int parts, int total) {
    const int n = A.dim();
    if (parts < 1 || total < parts || total > n)
        fail(ErrorCode::index_out_of_range, "comp_sum requires 1 <= i <= m <= n");
    return composition_sums(A)[size_t(total)][size_t(parts)];
}

Matrix build_automorphism(const AutoParams& A, int n) {
    if (A.dim() != n) fail(ErrorCode::dimension_mismatch, "automorphism parameter length != dimension");
    if (A.A[0].is_zero()) fail(ErrorCode::non_unit, "A_1 must be nonzero");
    const Domain& dom = A.A[0].domain();
    auto g = composition_sums(A);
    Matrix phi(n, n, dom);
    for (int i = 1; i <= n; ++i)
        for (int t = i; t <= n; ++t) phi.at(t - 1, i - 1) = g[size_t(t)][size_t(i)];
    return phi;
}

StructureTensor transport(const StructureTensor& star, const Matrix& phi) {
    const int n = star.dim();
    if (phi.rows() != n || phi.cols() != n)
        fail(ErrorCode::dimension_mismatch, "map dimension does not match tensor");
    if (phi.domain() != star.domain()) fail(ErrorCode::domain_mismatch, "map domain does not match tensor");
    auto inv = phi.inverse();
    if (!inv) fail(ErrorCode::singular_map, "transport along a singular map");

    std::vector<std::vector<Scalar>> cols;
    cols.reserve(size_t(n));
    for (int j = 0; j < n; ++j) {
        std::vector<Scalar> col;
        col.reserve(size_t(n));
        for (int r = 0; r < n; ++r) col.push_back(phi.at(r, j));
        cols.push_back(std::move(col));
    }

    StructureTensor out(n, star.domain());
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            auto z = star.product(cols[size_t(i) - 1], cols[size_t(j) - 1]);
            auto x = inv->apply(z);
            for (int k = 1; k <= n; ++k)
                if (!x[size_t(k) - 1].is_zero()) out.set(i, j, k, x[size_t(k) - 1]);
        }
    return out;
}

IdParams transform_id_params(const IdParams& p, const AutoParams& A) {
    const int n = p.dim();
    if (A.dim() != n) fail(ErrorCode::dimension_mismatch, "parameter/automorphism dimension mismatch");
    if (A.A[0].is_zero()) fail(ErrorCode::non_unit, "A_1 must be nonzero");
    const Domain& dom = A.A[0].domain();
    auto g = composition_sums(A);

    IdParams out;
    out.alpha.reserve(size_t(n));
    for (int t = 1; t <= n; ++t) {
        Scalar rhs = Scalar::zero(dom);
        for (int i = 1; i <= t; ++i) {
            if (A.A[size_t(i) - 1].is_zero()) continue;
            for (int j = 1; j <= t - i + 1; ++j) {
                const Scalar& aj = A.A[size_t(j) - 1];
                if (aj.is_zero()) continue;
                const Scalar& al = p.alpha[size_t(t - i - j + 2) - 1];
                if (al.is_zero()) continue;
                rhs = rhs + A.A[size_t(i) - 1] * aj * al;
            }
        }
        for (int i = 1; i < t; ++i) {
            if (g[size_t(t)][size_t(i)].is_zero() || out.alpha[size_t(i) - 1].is_zero()) continue;
            rhs = rhs - g[size_t(t)][size_t(i)] * out.alpha[size_t(i) - 1];
        }
        out.alpha.push_back(rhs / A.A[0].pow(t));
    }
    return out;
}

TwelveParams transform_12_params(const TwelveParams& p, const AutoParams& A) {
    const int n = p.dim();
    if (int(p.beta.size()) != n - 1)
        fail(ErrorCode::dimension_mismatch, "twelve-family parameter lengths differ");
    if (A.dim() != n) fail(ErrorCode::dimension_mismatch, "parameter/automorphism dimension mismatch");
    if (A.A[0].is_zero()) fail(ErrorCode::non_unit, "A_1 must be nonzero");
    const Domain& dom = A.A[0].domain();
    auto g = composition_sums(A);

    // alpha transforms exactly as in the id family, truncated at n-1
    TwelveParams out;
    out.alpha.reserve(size_t(n) - 1);
    for (int t = 1; t <= n - 1; ++t) {
        Scalar rhs = Scalar::zero(dom);
        for (int i = 1; i <= t; ++i) {
            if (A.A[size_t(i) - 1].is_zero()) continue;
            for (int j = 1; j <= t - i + 1; ++j) {
                const Scalar& aj = A.A[size_t(j) - 1];
                if (aj.is_zero()) continue;
                const Scalar& al = p.alpha[size_t(t - i - j + 2) - 1];
                if (al.is_zero()) continue;
                rhs = rhs + A.A[size_t(i) - 1] * aj * al;
            }
        }
        for (int i = 1; i < t; ++i) {
            if (g[size_t(t)][size_t(i)].is_zero() || out.alpha[size_t(i) - 1].is_zero()) continue;
            rhs = rhs - g[size_t(t)][size_t(i)] * out.alpha[size_t(i) - 1];
        }
        out.alpha.push_back(rhs / A.A[0].pow(t));
    }

    const Scalar a1n = A.A[0].pow(n);
    out.beta.assign(size_t(n) - 1, Scalar::zero(dom));

    // beta_1': from the e_n coefficient of phi(e_1 * e_1) = phi(e_1) * phi(e_1)
    {
        Scalar rhs = Scalar::zero(dom);
        for (int i = 1; i <= n - 1; ++i) {
            const Scalar& ai = A.A[size_t(i) - 1];
            if (ai.is_zero()) continue;
            for (int j = 1; i + j <= n; ++j) {
                const Scalar& aj = A.A[size_t(j) - 1];
                if (aj.is_zero()) continue;
                const Scalar& b = p.beta[size_t(i + j - 1) - 1];
                if (b.is_zero()) continue;
                rhs = rhs + ai * aj * b;
            }
        }
        for (int i = 1; i <= n - 1; ++i) {
            if (g[size_t(n)][size_t(i)].is_zero() || out.alpha[size_t(i) - 1].is_zero()) continue;
            rhs = rhs - g[size_t(n)][size_t(i)] * out.alpha[size_t(i) - 1];
        }
        out.beta[0] = rhs / a1n;
    }

    // beta_i', 2 <= i <= n-1: from the e_n coefficient of phi(e_1 * e_i)
    for (int i = 2; i <= n - 1; ++i) {
        Scalar rhs = Scalar::zero(dom);
        for (int j = 1; j <= n - i; ++j) {
            const Scalar& aj = A.A[size_t(j) - 1];
            if (aj.is_zero()) continue;
            for (int m = i; m <= n - j; ++m) {
                const Scalar& gm = g[size_t(m)][size_t(i)];
                if (gm.is_zero()) continue;
                const Scalar& b = p.beta[size_t(j + m - 1) - 1];
                if (b.is_zero()) continue;
                rhs = rhs + aj * gm * b;
            }
        }
        for (int m = i; m <= n - 1; ++m) {
            if (g[size_t(n)][size_t(m)].is_zero() || out.alpha[size_t(m - i + 1) - 1].is_zero()) continue;
            rhs = rhs - out.alpha[size_t(m - i + 1) - 1] * g[size_t(n)][size_t(m)];
        }
        out.beta[size_t(i) - 1] = rhs / a1n;
    }
    return out;
}

AutoParams compose(const AutoParams& first, const AutoParams& second) {
    const int n = first.dim();
    if (second.dim() != n) fail(ErrorCode::dimension_mismatch, "composition dimension mismatch");
    Matrix m = build_automorphism(second, n) * build_automorphism(first, n);
    AutoParams out;
    out.A.reserve(size_t(n));
    for (int t = 0; t < n; ++t) out.A.push_back(m.at(t, 0));
    return out;
}

}  // namespace nfa
