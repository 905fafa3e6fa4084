#include "canonical.hpp"

#include <algorithm>
#include <sstream>

#include "numbers.hpp"

namespace nfa {

const char* family_tag_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::B1: return "B1";
        case FamilyTag::B2: return "B2";
        case FamilyTag::Bs: return "Bs";
        case FamilyTag::A1: return "A1";
        case FamilyTag::A2: return "A2";
        case FamilyTag::A3r: return "A3r";
        case FamilyTag::A4s: return "A4s";
        case FamilyTag::A5sr: return "A5sr";
        case FamilyTag::A6s: return "A6s";
        case FamilyTag::A7s: return "A7s";
    }
    return "?";
}

std::optional<FamilyTag> parse_family_tag(std::string_view name) {
    for (FamilyTag t : {FamilyTag::B1, FamilyTag::B2, FamilyTag::Bs, FamilyTag::A1, FamilyTag::A2,
                        FamilyTag::A3r, FamilyTag::A4s, FamilyTag::A5sr, FamilyTag::A6s, FamilyTag::A7s})
        if (name == family_tag_name(t)) return t;
    return std::nullopt;
}

std::string CanonicalForm::to_string() const {
    std::ostringstream os;
    os << family_tag_name(tag) << "[n=" << n;
    if (s) os << ",s=" << s;
    if (r) os << ",r=" << r;
    if (alpha) os << ",alpha=" << alpha->to_string();
    if (scale) os << ",scale=" << scale->to_string();
    if (!betas.empty()) {
        os << ",beta={";
        for (size_t i = 0; i < betas.size(); ++i) {
            if (i) os << ",";
            os << betas[i].first << ":" << betas[i].second.to_string();
        }
        os << "}";
    }
    os << "]";
    return os.str();
}

bool canonical_equal(const CanonicalForm& f, const CanonicalForm& g) {
    if (f.n != g.n) fail(ErrorCode::invalid_argument, "canonical_equal requires equal dimensions");
    if (f.tag != g.tag || f.s != g.s || f.r != g.r) return false;
    if (f.alpha.has_value() != g.alpha.has_value()) return false;
    if (f.alpha && !(*f.alpha == *g.alpha)) return false;
    if (f.scale.has_value() != g.scale.has_value()) return false;
    if (f.scale && !(*f.scale == *g.scale)) return false;
    if (f.betas.size() != g.betas.size()) return false;
    for (size_t i = 0; i < f.betas.size(); ++i)
        if (f.betas[i].first != g.betas[i].first || !(f.betas[i].second == g.betas[i].second)) return false;
    return true;
}

// ------------------------------------------------------------------- helpers

namespace {

AutoParams unit_step(int n, const Domain& dom, int pos, const Scalar& val) {
    AutoParams a = AutoParams::identity(n, dom);
    a.A[size_t(pos) - 1] = val;
    return a;
}

AutoParams scale_step(int n, const Domain& dom, const Scalar& a1) {
    AutoParams a = AutoParams::identity(n, dom);
    a.A[0] = a1;
    return a;
}

void require_concrete(const Domain& dom, int n) {
    if (dom.is_symbolic())
        fail(ErrorCode::invalid_argument, "normalization requires concrete scalars (Q or F_p)");
    if (dom.kind() == DomainKind::prime_field && dom.prime() <= uint64_t(n))
        fail(ErrorCode::invalid_argument, "normalization over F_p requires p > n");
}

// ---------------------------------------------------------- scaling canonics

struct ScaleItem {
    Scalar value;
    long long exp;  // value' = a^exp * value under the scaling step A = (a, 0, ..., 0)
};

std::map<uint64_t, long long> rational_prime_exponents(const Rational& v) {
    auto num = v.num().to_u64_abs();
    auto den = v.den().to_u64_abs();
    if (!num || !den)
        fail(ErrorCode::invalid_argument, "scaling canonicalization needs desk-scale values");
    std::map<uint64_t, long long> e;
    for (auto [p, m] : factor_u64(*num)) e[p] += m;
    for (auto [p, m] : factor_u64(*den)) e[p] -= m;
    return e;
}

Rational rat_pow(const Rational& v, long long e) {
    if (e >= 0) {
        Rational r(1);
        for (long long i = 0; i < e; ++i) r = r * v;
        return r;
    }
    return Rational(1) / rat_pow(v, -e);
}

// Canonical scaling factor for the residual one-parameter action
// (v_i) -> (a^{e_i} v_i): over F_p the lexicographic minimum of the finite
// orbit, over Q a power-free pivot reduction. Deterministic and constant on
// orbits.
Scalar canonical_scale_factor(const std::vector<ScaleItem>& items, const Domain& dom) {
    const ScaleItem* pivot = nullptr;
    for (const auto& it : items)
        if (!it.value.is_zero() && it.exp != 0) { pivot = &it; break; }
    if (!pivot) return Scalar::one(dom);

    if (dom.kind() == DomainKind::prime_field) {
        const uint64_t p = dom.prime();
        auto tuple_for = [&](uint64_t a) {
            std::vector<uint64_t> t;
            for (const auto& it : items) {
                if (it.value.is_zero() || it.exp == 0) continue;
                long long e = it.exp % (long long)(p - 1);
                if (e < 0) e += (long long)(p - 1);
                t.push_back(mulmod_u64(it.value.as_fp(), powmod_u64(a, uint64_t(e), p), p));
            }
            return t;
        };
        uint64_t best_a = 1;
        auto best = tuple_for(1);
        for (uint64_t a = 2; a < p; ++a) {
            auto t = tuple_for(a);
            if (t < best) { best = std::move(t); best_a = a; }
        }
        return Scalar::fp(dom, best_a);
    }

    // rationals: reduce the pivot modulo d-th powers, d = |exp|
    const long long d = pivot->exp > 0 ? pivot->exp : -pivot->exp;
    const Rational v = pivot->value.as_rational();
    auto exps = rational_prime_exponents(v);
    Rational u(1);
    for (auto [prime, m] : exps) {
        long long md = ((m % d) + d) % d;
        long long k = (m - md) / d;
        u = u * rat_pow(Rational((long long)prime), k);
    }
    if (d % 2 == 1 && v.num().is_negative()) u = -u;  // odd d: sign is removable
    Rational a = pivot->exp > 0 ? Rational(1) / u : u;

    if (d % 2 == 0) {
        // residual sign: make the first odd-exponent survivor positive
        for (const auto& it : items) {
            if (it.value.is_zero() || it.exp % 2 == 0) continue;
            Rational moved = rat_pow(a, it.exp) * it.value.as_rational();
            if (moved.num().is_negative()) a = -a;
            break;
        }
    }
    return Scalar::of_rational(dom, a);
}

}  // namespace

// ---------------------------------------------------------------- normalize_id

NormalizeResult normalize_id(const IdParams& p) {
    const int n = p.dim();
    if (n < 1) fail(ErrorCode::invalid_argument, "empty parameter vector");
    const Domain dom = p.alpha[0].domain();
    require_concrete(dom, n);

    IdParams cur = p;
    Witness wit;
    auto apply = [&](const AutoParams& A, std::string note) {
        cur = transform_id_params(cur, A);
        wit.steps.push_back({A, std::move(note)});
    };

    CanonicalForm form;
    form.n = n;

    if (!cur.alpha[0].is_zero()) {
        form.tag = FamilyTag::B1;
        if (!cur.alpha[0].is_one())
            apply(scale_step(n, dom, cur.alpha[0].inverse()), "pin alpha_1 = 1 via A_1");
        for (int t = 2; t <= n; ++t) {
            if (cur.alpha[size_t(t) - 1].is_zero()) continue;
            std::string name = "A_" + std::to_string(t);
            Scalar x = solve_affine_probe(
                [&](const Scalar& X) {
                    return transform_id_params(cur, unit_step(n, dom, t, X)).alpha[size_t(t) - 1];
                },
                dom, name);
            apply(unit_step(n, dom, t, x), "annihilate alpha_" + std::to_string(t) + " via " + name);
        }
        return {form, wit};
    }

    int s = 0;
    for (int i = 3; i <= n; ++i)
        if (!cur.alpha[size_t(i) - 1].is_zero()) { s = i; break; }
    Scalar alpha2 = n >= 2 ? cur.alpha[1] : Scalar::zero(dom);

    if (s == 0) {
        form.tag = FamilyTag::B2;
        form.alpha = alpha2;
        return {form, wit};
    }

    form.tag = FamilyTag::Bs;
    form.s = s;
    form.alpha = alpha2;
    for (int t = s + 1; t <= n; ++t) {
        if (cur.alpha[size_t(t) - 1].is_zero()) continue;
        int q = t - s + 1;
        std::string name = "A_" + std::to_string(q);
        Scalar x = solve_affine_probe(
            [&](const Scalar& X) {
                return transform_id_params(cur, unit_step(n, dom, q, X)).alpha[size_t(t) - 1];
            },
            dom, name);
        apply(unit_step(n, dom, q, x), "annihilate alpha_" + std::to_string(t) + " via " + name);
    }
    Scalar lead = cur.alpha[size_t(s) - 1];
    if (!lead.is_one()) {
        auto root = lead.kth_root(unsigned(s - 2));
        if (root) {
            apply(scale_step(n, dom, *root), "pin alpha_" + std::to_string(s) + " = 1 via A_1");
        } else {
            wit.full = false;
            wit.partial_reason = "no exact " + std::to_string(s - 2) + "-th root of alpha_" +
                                 std::to_string(s) + " = " + lead.to_string() + " in " + dom.to_string();
        }
    }
    return {form, wit};
}

// ---------------------------------------------------------------- normalize_12

NormalizeResult normalize_12(const TwelveParams& p) {
    const int n = p.dim();
    if (n < 2) fail(ErrorCode::invalid_argument, "twelve-family parameters need dimension >= 2");
    if (int(p.beta.size()) != n - 1)
        fail(ErrorCode::dimension_mismatch, "twelve-family parameter lengths differ");
    const Domain dom = p.alpha[0].domain();
    require_concrete(dom, n);

    // id-matching overlap: the table is also an id structure; classify there
    bool overlap = p.alpha[0].is_zero();
    for (int i = 2; overlap && i <= n - 1; ++i)
        if (!(p.beta[size_t(i) - 1] == p.alpha[size_t(n - i + 1) - 1])) overlap = false;
    if (overlap) {
        IdParams as_id;
        as_id.alpha = p.alpha;
        as_id.alpha.push_back(p.beta[0]);
        return normalize_id(as_id);
    }

    TwelveParams cur = p;
    Witness wit;
    auto apply = [&](const AutoParams& A, std::string note) {
        cur = transform_12_params(cur, A);
        wit.steps.push_back({A, std::move(note)});
    };
    auto annihilate_beta = [&](int target, int pos) {
        if (cur.beta[size_t(target) - 1].is_zero()) return;
        std::string name = "A_" + std::to_string(pos);
        Scalar x = solve_affine_probe(
            [&](const Scalar& X) {
                return transform_12_params(cur, unit_step(n, dom, pos, X)).beta[size_t(target) - 1];
            },
            dom, name);
        apply(unit_step(n, dom, pos, x), "annihilate beta_" + std::to_string(target) + " via " + name);
    };

    CanonicalForm form;
    form.n = n;

    if (!cur.alpha[0].is_zero()) {
        // quotient tag B1 -> A1
        if (!cur.alpha[0].is_one())
            apply(scale_step(n, dom, cur.alpha[0].inverse()), "pin alpha_1 = 1 via A_1");
        for (int t = 2; t <= n - 1; ++t) {
            if (cur.alpha[size_t(t) - 1].is_zero()) continue;
            std::string name = "A_" + std::to_string(t);
            Scalar x = solve_affine_probe(
                [&](const Scalar& X) {
                    return transform_12_params(cur, unit_step(n, dom, t, X)).alpha[size_t(t) - 1];
                },
                dom, name);
            apply(unit_step(n, dom, t, x), "annihilate alpha_" + std::to_string(t) + " via " + name);
        }
        annihilate_beta(1, n);  // A_n shifts beta_1 and nothing else
        form.tag = FamilyTag::A1;
        for (int i = 2; i <= n - 1; ++i) form.betas.push_back({i, cur.beta[size_t(i) - 1]});
        return {form, wit};
    }

    Scalar alpha2 = cur.alpha.size() >= 2 ? cur.alpha[1] : Scalar::zero(dom);
    int s = 0;
    for (int i = 3; i <= n - 1; ++i)
        if (!cur.alpha[size_t(i) - 1].is_zero()) { s = i; break; }

    if (s == 0) {
        // quotient tag B2: the alpha part (0, alpha, 0, ..., 0) is stable under
        // the whole group; dispatch on beta_{n-1} vs alpha
        form.alpha = alpha2;
        if (!(cur.beta[size_t(n - 1) - 1] == alpha2)) {
            form.tag = FamilyTag::A2;
            for (int k = 2; k <= n - 1; ++k) annihilate_beta(n - k, k);
            form.betas.push_back({n - 1, cur.beta[size_t(n - 1) - 1]});
            return {form, wit};
        }
        int r = 0;
        for (int k = 2; k <= n - 1; ++k)
            if (!cur.beta[size_t(n - k) - 1].is_zero()) { r = k; break; }
        if (r == 0)
            fail(ErrorCode::unrecognized_family,
                 "beta vector coincides with the id-matching overlap; input is not a (12)-only structure");
        form.tag = FamilyTag::A3r;
        form.r = r;
        for (int k = r + 1; k <= n - 1; ++k) annihilate_beta(n - k, k - r + 1);
        Scalar lead = cur.beta[size_t(n - r) - 1];
        if (!lead.is_one()) {
            auto root = lead.kth_root(unsigned(r - 1));
            if (root) {
                apply(scale_step(n, dom, *root), "pin beta_" + std::to_string(n - r) + " = 1 via A_1");
            } else {
                wit.full = false;
                wit.partial_reason = "no exact " + std::to_string(r - 1) + "-th root of beta_" +
                                     std::to_string(n - r) + " = " + lead.to_string() + " in " +
                                     dom.to_string();
            }
        }
        return {form, wit};
    }

    // quotient tag Bs: annihilate the alpha tail (rational steps), keep the
    // unscaled leading coefficient, then dispatch on the scaling-invariant keys
    form.alpha = alpha2;
    form.s = s;
    for (int t = s + 1; t <= n - 1; ++t) {
        if (cur.alpha[size_t(t) - 1].is_zero()) continue;
        int q = t - s + 1;
        std::string name = "A_" + std::to_string(q);
        Scalar x = solve_affine_probe(
            [&](const Scalar& X) {
                return transform_12_params(cur, unit_step(n, dom, q, X)).alpha[size_t(t) - 1];
            },
            dom, name);
        apply(unit_step(n, dom, q, x), "annihilate alpha_" + std::to_string(t) + " via " + name);
    }

    int beta_lo = 0, beta_hi = 0;  // surviving beta window, per family
    if (!(cur.beta[size_t(n - 1) - 1] == alpha2)) {
        form.tag = FamilyTag::A4s;
        for (int k = 1; k <= s - 1; ++k) annihilate_beta(s - k, n - s + k);
        beta_lo = s;
        beta_hi = n - 1;
    } else {
        int r = 0;
        for (int k = 2; k <= s - 2; ++k)
            if (!cur.beta[size_t(n - k) - 1].is_zero()) { r = k; break; }
        if (r) {
            form.tag = FamilyTag::A5sr;
            form.r = r;
            for (int k = 1; k <= s - r; ++k) annihilate_beta(s - r - k + 1, n - s + k);
            beta_lo = s - r + 1;
            beta_hi = n - r;
        } else {
            Scalar lead = cur.alpha[size_t(s) - 1];
            Scalar half_s = Scalar::of_int(dom, s) / Scalar::of_int(dom, 2);
            if (!(cur.beta[size_t(n - s + 1) - 1] == half_s * lead)) {
                form.tag = FamilyTag::A6s;
                annihilate_beta(1, n - s + 1);
                beta_lo = 2;
                beta_hi = n - s + 1;
            } else {
                form.tag = FamilyTag::A7s;
                beta_lo = 1;
                beta_hi = n - s;
            }
        }
    }

    // canonicalize the residual scaling on (leading coefficient; survivors)
    std::vector<ScaleItem> items;
    items.push_back({cur.alpha[size_t(s) - 1], 2 - s});
    for (int i = beta_lo; i <= beta_hi; ++i) items.push_back({cur.beta[size_t(i) - 1], i + 1 - n});
    Scalar a = canonical_scale_factor(items, dom);
    if (!a.is_one()) apply(scale_step(n, dom, a), "canonical scaling via A_1");

    form.scale = cur.alpha[size_t(s) - 1];
    for (int i = beta_lo; i <= beta_hi; ++i) form.betas.push_back({i, cur.beta[size_t(i) - 1]});
    return {form, wit};
}

// ------------------------------------------------------------------- realize

namespace {

Scalar beta_at(const CanonicalForm& f, int idx, const Domain& dom) {
    for (const auto& [i, v] : f.betas)
        if (i == idx) return v;
    return Scalar::zero(dom);
}

void require_betas_within(const CanonicalForm& f, int lo, int hi) {
    for (const auto& [i, v] : f.betas)
        if (i < lo || i > hi)
            fail(ErrorCode::invalid_indices, std::string(family_tag_name(f.tag)) + ": beta_" +
                                                 std::to_string(i) + " outside the surviving window");
}

}  // namespace

std::variant<IdParams, TwelveParams> canonical_params(const CanonicalForm& f, int n, const Domain& dom) {
    if (f.n != 0 && f.n != n) fail(ErrorCode::invalid_indices, "form dimension disagrees with n");
    if (n < 1) fail(ErrorCode::invalid_indices, "dimension must be positive");
    auto zero = Scalar::zero(dom);
    auto one = Scalar::one(dom);
    auto need_alpha = [&]() -> Scalar {
        if (!f.alpha) fail(ErrorCode::invalid_indices, std::string(family_tag_name(f.tag)) + " needs alpha");
        if (f.alpha->domain() != dom) fail(ErrorCode::domain_mismatch, "alpha in wrong domain");
        return *f.alpha;
    };
    auto scale_or_one = [&]() -> Scalar {
        if (!f.scale) return one;
        if (f.scale->domain() != dom) fail(ErrorCode::domain_mismatch, "scale in wrong domain");
        if (f.scale->is_zero()) fail(ErrorCode::invalid_indices, "scale must be nonzero");
        return *f.scale;
    };

    switch (f.tag) {
        case FamilyTag::B1: {
            IdParams id;
            id.alpha.assign(size_t(n), zero);
            id.alpha[0] = one;
            return id;
        }
        case FamilyTag::B2: {
            if (n < 2) fail(ErrorCode::invalid_indices, "B2 needs n >= 2");
            IdParams id;
            id.alpha.assign(size_t(n), zero);
            id.alpha[1] = need_alpha();
            return id;
        }
        case FamilyTag::Bs: {
            if (f.s < 3 || f.s > n) fail(ErrorCode::invalid_indices, "Bs needs 3 <= s <= n");
            IdParams id;
            id.alpha.assign(size_t(n), zero);
            id.alpha[1] = need_alpha();
            id.alpha[size_t(f.s) - 1] = one;
            return id;
        }
        case FamilyTag::A1: {
            if (n < 2) fail(ErrorCode::invalid_indices, "A1 needs n >= 2");
            require_betas_within(f, 2, n - 1);
            TwelveParams tw;
            tw.alpha.assign(size_t(n) - 1, zero);
            tw.alpha[0] = one;
            tw.beta.assign(size_t(n) - 1, zero);
            for (int i = 2; i <= n - 1; ++i) tw.beta[size_t(i) - 1] = beta_at(f, i, dom);
            return tw;
        }
        case FamilyTag::A2: {
            if (n < 3) fail(ErrorCode::invalid_indices, "A2 needs n >= 3");
            require_betas_within(f, n - 1, n - 1);
            Scalar alpha = need_alpha();
            Scalar b = beta_at(f, n - 1, dom);
            if (b == alpha) fail(ErrorCode::invalid_indices, "A2 requires beta != alpha");
            TwelveParams tw;
            tw.alpha.assign(size_t(n) - 1, zero);
            tw.alpha[1] = alpha;
            tw.beta.assign(size_t(n) - 1, zero);
            tw.beta[size_t(n - 1) - 1] = b;
            return tw;
        }
        case FamilyTag::A3r: {
            // r = n-1 would put the pivot at beta_1, outside the family
            // inequality's window; that member is the id structure B_n(alpha)
            if (n < 4 || f.r < 2 || f.r > n - 2) fail(ErrorCode::invalid_indices, "A3r needs 2 <= r <= n-2");
            Scalar alpha = need_alpha();
            TwelveParams tw;
            tw.alpha.assign(size_t(n) - 1, zero);
            tw.alpha[1] = alpha;
            tw.beta.assign(size_t(n) - 1, zero);
            tw.beta[size_t(n - f.r) - 1] = one;
            tw.beta[size_t(n - 1) - 1] = alpha;
            return tw;
        }
        case FamilyTag::A4s:
        case FamilyTag::A5sr:
        case FamilyTag::A6s:
        case FamilyTag::A7s: {
            if (f.s < 3 || f.s > n - 1)
                fail(ErrorCode::invalid_indices, "the (12)_s families need 3 <= s <= n-1");
            Scalar alpha = need_alpha();
            Scalar scale = scale_or_one();
            TwelveParams tw;
            tw.alpha.assign(size_t(n) - 1, zero);
            tw.alpha[1] = alpha;
            tw.alpha[size_t(f.s) - 1] = scale;
            tw.beta.assign(size_t(n) - 1, zero);
            const int s = f.s;
            if (f.tag == FamilyTag::A4s) {
                require_betas_within(f, s, n - 1);
                for (int i = s; i <= n - 1; ++i) tw.beta[size_t(i) - 1] = beta_at(f, i, dom);
                if (tw.beta[size_t(n - 1) - 1] == alpha)
                    fail(ErrorCode::invalid_indices, "A4s requires beta_{n-1} != alpha");
            } else if (f.tag == FamilyTag::A5sr) {
                if (s < 4 || f.r < 2 || f.r > s - 2)
                    fail(ErrorCode::invalid_indices, "A5sr needs 4 <= s <= n-1 and 2 <= r <= s-2");
                require_betas_within(f, s - f.r + 1, n - f.r);
                for (int i = s - f.r + 1; i <= n - f.r; ++i) tw.beta[size_t(i) - 1] = beta_at(f, i, dom);
                if (tw.beta[size_t(n - f.r) - 1].is_zero())
                    fail(ErrorCode::invalid_indices, "A5sr requires beta_{n-r} != 0");
                tw.beta[size_t(n - 1) - 1] = alpha;
            } else if (f.tag == FamilyTag::A6s) {
                require_betas_within(f, 2, n - s + 1);
                for (int i = 2; i <= n - s + 1; ++i) tw.beta[size_t(i) - 1] = beta_at(f, i, dom);
                Scalar pin = Scalar::of_int(dom, s) / Scalar::of_int(dom, 2) * scale;
                if (tw.beta[size_t(n - s + 1) - 1] == pin)
                    fail(ErrorCode::invalid_indices, "A6s requires beta_{n-s+1} != (s/2)*scale");
                bool lower_zero = true;
                for (int i = 2; i <= n - s; ++i)
                    if (!tw.beta[size_t(i) - 1].is_zero()) { lower_zero = false; break; }
                if (lower_zero && tw.beta[size_t(n - s + 1) - 1] == scale)
                    fail(ErrorCode::invalid_indices,
                         "A6s with beta_{n-s+1} = scale and zero lower betas is the id structure "
                         "B_s(alpha)");
                tw.beta[size_t(n - 1) - 1] = alpha;
            } else {  // A7s
                require_betas_within(f, 1, n - s);
                for (int i = 1; i <= n - s; ++i) tw.beta[size_t(i) - 1] = beta_at(f, i, dom);
                tw.beta[size_t(n - s + 1) - 1] = Scalar::of_int(dom, s) / Scalar::of_int(dom, 2) * scale;
                tw.beta[size_t(n - 1) - 1] = alpha;
            }
            return tw;
        }
    }
    fail(ErrorCode::invalid_argument, "bad family tag");
}

BiAlgebra realize(const CanonicalForm& f, int n, const Domain& dom) {
    auto params = canonical_params(f, n, dom);
    StructureTensor dot = StructureTensor::null_filiform(n, dom);
    if (std::holds_alternative<IdParams>(params)) {
        IdSeed seed{std::get<IdParams>(params).alpha};
        return BiAlgebra(std::move(dot), derive_id_star(seed));
    }
    const auto& tw = std::get<TwelveParams>(params);
    TwelveSeed seed;
    seed.alpha = tw.alpha;
    seed.beta = tw.beta;
    seed.beta.push_back(Scalar::zero(dom));  // beta_n = 0 throughout the family
    auto result = derive_12_star(seed);
    return BiAlgebra(std::move(dot), std::move(result.star));
}

}  // namespace nfa
