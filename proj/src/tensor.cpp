#include "tensor.hpp"

#include <algorithm>

#include "parallel.hpp"

namespace nfa {

StructureTensor::StructureTensor(int dim, const Domain& dom) : dim_(dim), dom_(dom) {
    if (dim < 1) fail(ErrorCode::invalid_argument, "tensor dimension must be positive");
    c_.assign(size_t(dim) * dim * dim, Scalar::zero(dom));
}

void StructureTensor::check_index(int i, int j, int k) const {
    if (i < 1 || i > dim_ || j < 1 || j > dim_ || k < 1 || k > dim_)
        fail(ErrorCode::index_out_of_range, "tensor index out of range");
}

const Scalar& StructureTensor::at(int i, int j, int k) const {
    check_index(i, j, k);
    return c_[idx(i, j, k)];
}

void StructureTensor::set(int i, int j, int k, Scalar v) {
    check_index(i, j, k);
    if (v.domain() != dom_) fail(ErrorCode::domain_mismatch, "tensor entry in wrong domain");
    c_[idx(i, j, k)] = std::move(v);
}

std::vector<Scalar> StructureTensor::row(int i, int j) const {
    check_index(i, j, 1);
    std::vector<Scalar> r;
    r.reserve(size_t(dim_));
    for (int k = 1; k <= dim_; ++k) r.push_back(c_[idx(i, j, k)]);
    return r;
}

std::vector<Scalar> StructureTensor::product(const std::vector<Scalar>& x,
                                             const std::vector<Scalar>& y) const {
    if (int(x.size()) != dim_ || int(y.size()) != dim_)
        fail(ErrorCode::dimension_mismatch, "vector length does not match tensor dimension");
    std::vector<Scalar> z(size_t(dim_), Scalar::zero(dom_));
    for (int i = 1; i <= dim_; ++i) {
        if (x[size_t(i) - 1].is_zero()) continue;
        for (int j = 1; j <= dim_; ++j) {
            if (y[size_t(j) - 1].is_zero()) continue;
            Scalar xy = x[size_t(i) - 1] * y[size_t(j) - 1];
            for (int k = 1; k <= dim_; ++k) {
                const Scalar& c = c_[idx(i, j, k)];
                if (c.is_zero()) continue;
                z[size_t(k) - 1] = z[size_t(k) - 1] + xy * c;
            }
        }
    }
    return z;
}

bool StructureTensor::operator==(const StructureTensor& o) const {
    return dim_ == o.dim_ && dom_ == o.dom_ && c_ == o.c_;
}

bool StructureTensor::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

StructureTensor StructureTensor::null_filiform(int n, const Domain& dom) {
    StructureTensor t(n, dom);
    Scalar one = Scalar::one(dom);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i + j <= n) t.set(i, j, i + j, one);
    return t;
}

BiAlgebra::BiAlgebra(StructureTensor d, StructureTensor s) : dot(std::move(d)), star(std::move(s)) {
    if (dot.dim() != star.dim()) fail(ErrorCode::dimension_mismatch, "dot and star dimensions differ");
    if (dot.domain() != star.domain()) fail(ErrorCode::domain_mismatch, "dot and star domains differ");
}

const char* identity_kind_name(IdentityKind kind) {
    switch (kind) {
        case IdentityKind::associativity: return "associativity";
        case IdentityKind::compatible: return "compatible";
        case IdentityKind::id_matching: return "id-matching";
        case IdentityKind::twelve_matching: return "twelve-matching";
        case IdentityKind::interchangeable: return "interchangeable";
        case IdentityKind::totally_compatible: return "totally-compatible";
    }
    return "?";
}

std::optional<IdentityKind> parse_identity_kind(std::string_view name) {
    for (IdentityKind k : {IdentityKind::associativity, IdentityKind::compatible, IdentityKind::id_matching,
                           IdentityKind::twelve_matching, IdentityKind::interchangeable,
                           IdentityKind::totally_compatible})
        if (name == identity_kind_name(k)) return k;
    // tolerated aliases with underscores
    std::string s(name);
    std::replace(s.begin(), s.end(), '_', '-');
    if (s != name) return parse_identity_kind(s);
    return std::nullopt;
}

namespace {

std::vector<Scalar> basis_vec(int n, int i, const Domain& dom) {
    std::vector<Scalar> v(size_t(n), Scalar::zero(dom));
    v[size_t(i) - 1] = Scalar::one(dom);
    return v;
}

std::vector<Scalar> vec_add(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    std::vector<Scalar> r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

bool vec_eq(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

struct FlatWitness {
    size_t flat;
    CheckWitness w;
};

// Evaluates the identity on one basis triple; returns the first failing
// equation, if any.
std::optional<CheckWitness> check_triple(const BiAlgebra& alg, IdentityKind kind, int i, int j, int k) {
    const int n = alg.dim();
    const Domain& dom = alg.domain();
    auto ei = basis_vec(n, i, dom);
    auto ek = basis_vec(n, k, dom);

    auto fails = [&](const char* eq, std::vector<Scalar> lhs,
                     std::vector<Scalar> rhs) -> std::optional<CheckWitness> {
        if (vec_eq(lhs, rhs)) return std::nullopt;
        return CheckWitness{i, j, k, eq, std::move(lhs), std::move(rhs)};
    };

    if (kind == IdentityKind::associativity) {
        auto s1 = alg.star.product(alg.star.row(i, j), ek);
        auto s2 = alg.star.product(ei, alg.star.row(j, k));
        return fails("(a*b)*c = a*(b*c)", std::move(s1), std::move(s2));
    }

    // the four mixed triple products of the compatibility definitions
    auto m1 = alg.star.product(alg.dot.row(i, j), ek);   // (a.b)*c
    auto m2 = alg.dot.product(alg.star.row(i, j), ek);   // (a*b).c
    auto m3 = alg.dot.product(ei, alg.star.row(j, k));   // a.(b*c)
    auto m4 = alg.star.product(ei, alg.dot.row(j, k));   // a*(b.c)

    switch (kind) {
        case IdentityKind::compatible:
            return fails("(a.b)*c + (a*b).c = a.(b*c) + a*(b.c)", vec_add(m1, m2), vec_add(m3, m4));
        case IdentityKind::id_matching: {
            if (auto w = fails("(a.b)*c = a.(b*c)", m1, m3)) return w;
            return fails("(a*b).c = a*(b.c)", m2, m4);
        }
        case IdentityKind::twelve_matching: {
            if (auto w = fails("(a.b)*c = a*(b.c)", m1, m4)) return w;
            return fails("(a*b).c = a.(b*c)", m2, m3);
        }
        case IdentityKind::interchangeable: {
            if (auto w = fails("(a.b)*c = (a*b).c", m1, m2)) return w;
            return fails("a.(b*c) = a*(b.c)", m3, m4);
        }
        case IdentityKind::totally_compatible: {
            if (auto w = fails("(a.b)*c = (a*b).c", m1, m2)) return w;
            if (auto w = fails("(a*b).c = a.(b*c)", m2, m3)) return w;
            return fails("a.(b*c) = a*(b.c)", m3, m4);
        }
        default: break;
    }
    fail(ErrorCode::invalid_argument, "bad identity kind");
}

}  // namespace

CheckResult check_identity(const BiAlgebra& alg, IdentityKind kind, int threads) {
    const size_t n = size_t(alg.dim());
    const size_t total = n * n * n;

    auto scan = [&](size_t begin, size_t end) -> std::optional<FlatWitness> {
        for (size_t t = begin; t < end; ++t) {
            int i = int(t / (n * n)) + 1;
            int j = int((t / n) % n) + 1;
            int k = int(t % n) + 1;
            if (auto w = check_triple(alg, kind, i, j, k)) return FlatWitness{t, std::move(*w)};
        }
        return std::nullopt;
    };

    auto chunks = parallel_chunks<std::optional<FlatWitness>>(total, threads, scan);
    for (auto& c : chunks) {
        if (c) return CheckResult{false, std::move(c->w)};  // chunk order = triple order
    }
    return CheckResult{true, std::nullopt};
}

BiAlgebra quotient_by_last(const BiAlgebra& alg) {
    const int n = alg.dim();
    if (n < 2) fail(ErrorCode::invalid_argument, "quotient needs dimension >= 2");
    auto check_annihilates = [&](const StructureTensor& t, const char* name) {
        for (int i = 1; i <= n; ++i) {
            for (int k = 1; k <= n; ++k) {
                if (!t.at(i, n, k).is_zero())
                    fail(ErrorCode::not_central,
                         std::string("e_n not central: e_") + std::to_string(i) + " " + name + " e_n != 0");
                if (!t.at(n, i, k).is_zero())
                    fail(ErrorCode::not_central,
                         std::string("e_n not central: e_n ") + name + " e_" + std::to_string(i) + " != 0");
            }
        }
    };
    check_annihilates(alg.dot, ".");
    check_annihilates(alg.star, "*");

    StructureTensor dot(n - 1, alg.domain()), star(n - 1, alg.domain());
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            for (int k = 1; k < n; ++k) {
                dot.set(i, j, k, alg.dot.at(i, j, k));
                star.set(i, j, k, alg.star.at(i, j, k));
            }
    return BiAlgebra(std::move(dot), std::move(star));
}

}  // namespace nfa
