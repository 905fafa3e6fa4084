#include "derive.hpp"

#include "numbers.hpp"

namespace nfa {

StructureTensor derive_id_star(const IdSeed& seed) {
    const int n = seed.dim();
    if (n < 1) fail(ErrorCode::invalid_argument, "empty seed");
    const Domain& dom = seed.alpha[0].domain();
    StructureTensor star(n, dom);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i + j > n + 1) continue;
            for (int t = i + j - 1; t <= n; ++t) {
                const Scalar& a = seed.alpha[size_t(t - i - j + 2) - 1];
                if (!a.is_zero()) star.set(i, j, t, a);
            }
        }
    return star;
}

Derive12Result derive_12_star(const TwelveSeed& seed) {
    const int n = seed.dim();
    if (n < 2) fail(ErrorCode::invalid_argument, "twelve seed needs dimension >= 2");
    if (int(seed.beta.size()) != n)
        fail(ErrorCode::dimension_mismatch, "twelve seed needs beta_1..beta_n");
    const Domain& dom = seed.beta[0].domain();

    StructureTensor star(n, dom);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i + j > n + 1) continue;
            for (int t = i + j - 1; t <= n - 1; ++t) {
                const Scalar& a = seed.alpha[size_t(t - i - j + 2) - 1];
                if (!a.is_zero()) star.set(i, j, t, a);
            }
            const Scalar& b = seed.beta[size_t(i + j - 1) - 1];
            if (!b.is_zero()) star.set(i, j, n, b);
        }

    Derive12Result out{std::move(star), {}, Branch::symbolic, std::nullopt, std::nullopt};

    const Scalar& bn = seed.beta[size_t(n) - 1];
    out.constraints.reserve(size_t(n) - 1);
    for (int i = 2; i <= n; ++i)
        out.constraints.push_back(bn * (seed.beta[size_t(i) - 1] - seed.alpha[size_t(n - i + 1) - 1]));

    IdParams id_candidate;
    id_candidate.alpha = seed.alpha;
    id_candidate.alpha.push_back(seed.beta[0]);  // alpha_n := beta_1
    TwelveParams twelve_candidate;
    twelve_candidate.alpha = seed.alpha;
    twelve_candidate.beta.assign(seed.beta.begin(), seed.beta.end() - 1);

    if (dom.is_symbolic()) {
        out.branch = Branch::symbolic;
        out.id_params = std::move(id_candidate);
        out.twelve_params = std::move(twelve_candidate);
        return out;
    }

    bool matched = true;
    for (int i = 2; i <= n; ++i)
        if (!(seed.beta[size_t(i) - 1] == seed.alpha[size_t(n - i + 1) - 1])) {
            matched = false;
            break;
        }
    if (matched) {
        out.branch = Branch::id_matching;
        out.id_params = std::move(id_candidate);
    } else if (bn.is_zero()) {
        out.branch = Branch::twelve;
        out.twelve_params = std::move(twelve_candidate);
    } else {
        fail(ErrorCode::inconsistent_seed,
             "beta_n != 0 and beta_i != alpha_{n-i+1} for some i: no associative structure");
    }
    return out;
}

// ---------------------------------------------------------------- linear oracle

namespace {

// Dense F_p row reduction; returns rank. Rows may be consumed.
int gauss_rank_mod_p(std::vector<std::vector<uint64_t>>& rows, uint64_t p) {
    if (rows.empty()) return 0;
    const size_t cols = rows[0].size();
    int rank = 0;
    size_t row_at = 0;
    for (size_t col = 0; col < cols && row_at < rows.size(); ++col) {
        size_t pivot = row_at;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[row_at], rows[pivot]);
        uint64_t inv = powmod_u64(rows[row_at][col], p - 2, p);
        for (size_t c = col; c < cols; ++c) rows[row_at][c] = mulmod_u64(rows[row_at][c], inv, p);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == row_at || rows[r][col] == 0) continue;
            uint64_t f = rows[r][col];
            for (size_t c = col; c < cols; ++c) {
                uint64_t sub = mulmod_u64(f, rows[row_at][c], p);
                rows[r][c] = (rows[r][c] + p - sub) % p;
            }
        }
        ++row_at;
        ++rank;
    }
    return rank;
}

// Rows of the linear system for one identity kind at dimension n over F_p.
// Unknown index: x(i,j,k) -> ((i-1)n + (j-1))n + (k-1).
std::vector<std::vector<uint64_t>> matching_system(int n, IdentityKind kind, uint64_t p) {
    auto x = [n](int i, int j, int k) -> size_t {
        return ((size_t(i) - 1) * n + (size_t(j) - 1)) * n + (size_t(k) - 1);
    };
    const size_t cols = size_t(n) * n * n;
    std::vector<std::vector<uint64_t>> rows;

    // adds coefficients of the mixed product (index 1..4) on basis coordinate m
    auto add_term = [&](std::vector<uint64_t>& row, int which, int a, int b, int c, int m, uint64_t sign) {
        switch (which) {
            case 1:  // (e_a . e_b) * e_c
                if (a + b <= n) row[x(a + b, c, m)] = (row[x(a + b, c, m)] + sign) % p;
                break;
            case 2:  // (e_a * e_b) . e_c
                if (m - c >= 1) row[x(a, b, m - c)] = (row[x(a, b, m - c)] + sign) % p;
                break;
            case 3:  // e_a . (e_b * e_c)
                if (m - a >= 1) row[x(b, c, m - a)] = (row[x(b, c, m - a)] + sign) % p;
                break;
            case 4:  // e_a * (e_b . e_c)
                if (b + c <= n) row[x(a, b + c, m)] = (row[x(a, b + c, m)] + sign) % p;
                break;
        }
    };

    std::vector<std::pair<int, int>> equations;
    switch (kind) {
        case IdentityKind::id_matching: equations = {{1, 3}, {2, 4}}; break;
        case IdentityKind::twelve_matching: equations = {{1, 4}, {2, 3}}; break;
        case IdentityKind::interchangeable: equations = {{1, 2}, {3, 4}}; break;
        default: fail(ErrorCode::invalid_argument, "solution space is defined for the matching identities");
    }

    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c)
                for (int m = 1; m <= n; ++m)
                    for (auto [l, r] : equations) {
                        std::vector<uint64_t> row(cols, 0);
                        add_term(row, l, a, b, c, m, 1);
                        add_term(row, r, a, b, c, m, p - 1);
                        bool nonzero = false;
                        for (uint64_t v : row)
                            if (v) { nonzero = true; break; }
                        if (nonzero) rows.push_back(std::move(row));
                    }
    return rows;
}

}  // namespace

int solution_space_dimension(int n, IdentityKind kind, uint64_t p) {
    if (n < 1) fail(ErrorCode::invalid_argument, "dimension must be positive");
    if (p <= uint64_t(n)) fail(ErrorCode::invalid_argument, "requires p > n");
    Domain dom = Domain::prime_field(p);  // validates primality
    (void)dom;
    auto rows = matching_system(n, kind, p);
    int rank = gauss_rank_mod_p(rows, p);
    return n * n * n - rank;
}

std::vector<StructureTensor> solution_space_basis(int n, IdentityKind kind, uint64_t p) {
    Domain dom = Domain::prime_field(p);
    if (p <= uint64_t(n)) fail(ErrorCode::invalid_argument, "requires p > n");
    auto rows = matching_system(n, kind, p);
    gauss_rank_mod_p(rows, p);  // rows now in reduced echelon form

    const size_t cols = size_t(n) * n * n;
    // pivot column of each nonzero row
    std::vector<int> pivot_of_col(cols, -1);
    std::vector<std::vector<uint64_t>> reduced;
    for (auto& r : rows) {
        size_t c = 0;
        while (c < cols && r[c] == 0) ++c;
        if (c == cols) continue;
        pivot_of_col[c] = int(reduced.size());
        reduced.push_back(std::move(r));
    }

    std::vector<StructureTensor> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (pivot_of_col[fc] >= 0) continue;
        std::vector<uint64_t> sol(cols, 0);
        sol[fc] = 1;
        for (size_t c = 0; c < cols; ++c) {
            if (pivot_of_col[c] < 0) continue;
            const auto& r = reduced[size_t(pivot_of_col[c])];
            sol[c] = (p - mulmod_u64(r[fc], 1, p)) % p;
        }
        StructureTensor t(n, dom);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k) {
                    uint64_t v = sol[((size_t(i) - 1) * n + (size_t(j) - 1)) * n + (size_t(k) - 1)];
                    if (v) t.set(i, j, k, Scalar::fp(dom, v));
                }
        basis.push_back(std::move(t));
    }
    return basis;
}

}  // namespace nfa
