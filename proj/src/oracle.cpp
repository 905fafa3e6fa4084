#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "parallel.hpp"

namespace nfa {

namespace {

uint64_t pow_u64_checked(uint64_t base, int exp, uint64_t cap) {
    uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

void require_field(int n, uint64_t p) {
    if (n < 1) fail(ErrorCode::invalid_argument, "dimension must be positive");
    if (p <= uint64_t(n)) fail(ErrorCode::invalid_argument, "requires p > n");
    (void)Domain::prime_field(p);  // validates primality
}

}  // namespace

std::vector<IdParams> enumerate_id_structures(int n, uint64_t p) {
    require_field(n, p);
    if (n > 5)
        fail(ErrorCode::search_space_too_large,
             "id-matching enumeration needs n <= 5 (space p^n = " + std::to_string(p) + "^" +
                 std::to_string(n) + ")");
    uint64_t total = pow_u64_checked(p, n, 1u << 22);
    if (total > (1u << 22))
        fail(ErrorCode::search_space_too_large, "id-matching enumeration space exceeds the budget");

    Domain dom = Domain::prime_field(p);
    std::vector<IdParams> out;
    out.reserve(size_t(total));
    std::vector<uint64_t> digits(size_t(n), 0);
    for (uint64_t t = 0; t < total; ++t) {
        IdParams params;
        params.alpha.reserve(size_t(n));
        for (int i = 0; i < n; ++i) params.alpha.push_back(Scalar::fp(dom, digits[size_t(i)]));
        out.push_back(std::move(params));
        for (int i = n - 1; i >= 0; --i) {
            if (++digits[size_t(i)] < p) break;
            digits[size_t(i)] = 0;
        }
    }
    return out;
}

std::vector<TwelveSeed> enumerate_12_structures(int n, uint64_t p) {
    require_field(n, p);
    if (n < 2) fail(ErrorCode::invalid_argument, "twelve-matching enumeration needs n >= 2");
    if (n > 4)
        fail(ErrorCode::search_space_too_large,
             "twelve-matching enumeration needs n <= 4 (space p^(2n-1) = " + std::to_string(p) + "^" +
                 std::to_string(2 * n - 1) + ")");
    uint64_t branch_a = pow_u64_checked(p, 2 * n - 2, 1u << 22);
    if (branch_a > (1u << 22))
        fail(ErrorCode::search_space_too_large, "twelve-matching enumeration space exceeds the budget");

    Domain dom = Domain::prime_field(p);
    std::vector<TwelveSeed> out;

    // branch beta_n = 0: alpha and beta_1..beta_{n-1} free
    {
        std::vector<uint64_t> digits(size_t(2 * n - 2), 0);
        for (uint64_t t = 0; t < branch_a; ++t) {
            TwelveSeed seed;
            for (int i = 0; i < n - 1; ++i) seed.alpha.push_back(Scalar::fp(dom, digits[size_t(i)]));
            for (int i = 0; i < n - 1; ++i)
                seed.beta.push_back(Scalar::fp(dom, digits[size_t(n - 1 + i)]));
            seed.beta.push_back(Scalar::zero(dom));
            out.push_back(std::move(seed));
            for (int i = 2 * n - 3; i >= 0; --i) {
                if (++digits[size_t(i)] < p) break;
                digits[size_t(i)] = 0;
            }
        }
    }

    // branch beta_i = alpha_{n-i+1}: determined by alpha (alpha_1 != 0 for
    // disjointness, since beta_n = alpha_1) and the free beta_1
    {
        std::vector<uint64_t> digits(size_t(n), 0);  // alpha_1..alpha_{n-1}, beta_1
        uint64_t branch_b = pow_u64_checked(p, n, 1u << 22);
        for (uint64_t t = 0; t < branch_b; ++t) {
            if (digits[0] != 0) {
                TwelveSeed seed;
                for (int i = 0; i < n - 1; ++i) seed.alpha.push_back(Scalar::fp(dom, digits[size_t(i)]));
                seed.beta.push_back(Scalar::fp(dom, digits[size_t(n) - 1]));
                for (int i = 2; i <= n; ++i) seed.beta.push_back(seed.alpha[size_t(n - i + 1) - 1]);
                out.push_back(std::move(seed));
            }
            for (int i = n - 1; i >= 0; --i) {
                if (++digits[size_t(i)] < p) break;
                digits[size_t(i)] = 0;
            }
        }
    }
    return out;
}

std::optional<AutoParams> brute_force_isomorphism(const BiAlgebra& a, const BiAlgebra& b, uint64_t p) {
    if (a.dim() != b.dim()) fail(ErrorCode::dimension_mismatch, "isomorphism search needs equal dimensions");
    Domain dom = Domain::prime_field(p);
    if (a.domain() != dom || b.domain() != dom)
        fail(ErrorCode::domain_mismatch, "isomorphism search expects both algebras over F_p");
    const int n = a.dim();
    if (n > 4 || p > 11)
        fail(ErrorCode::search_space_too_large,
             "isomorphism search budget is n <= 4, p <= 11 ((p-1) p^{n-1} candidates)");

    const uint64_t tail = pow_u64_checked(p, n - 1, ~0ull);
    for (uint64_t a1 = 1; a1 < p; ++a1) {
        for (uint64_t rest = 0; rest < tail; ++rest) {
            AutoParams A;
            A.A.reserve(size_t(n));
            A.A.push_back(Scalar::fp(dom, a1));
            uint64_t r = rest;
            for (int i = 1; i < n; ++i) {
                A.A.push_back(Scalar::fp(dom, r % p));
                r /= p;
            }
            auto phi = build_automorphism(A, n);
            if (transport(b.star, phi) == a.star) return A;
        }
    }
    return std::nullopt;
}

namespace {

bool tag_has_proven_converse(FamilyTag t) {
    switch (t) {
        case FamilyTag::B1:
        case FamilyTag::B2:
        case FamilyTag::Bs:
        case FamilyTag::A1:
        case FamilyTag::A2:
        case FamilyTag::A3r:
            return true;
        default:
            return false;  // A4s..A7s parameters are as-reported
    }
}

}  // namespace

OrbitReport verify_classification(int n, IdentityKind kind, uint64_t p, int threads) {
    if (kind != IdentityKind::id_matching && kind != IdentityKind::twelve_matching)
        fail(ErrorCode::invalid_argument, "census kinds: id-matching, twelve-matching");
    Domain dom = Domain::prime_field(p);

    // enumerate tables and canonical labels
    std::vector<BiAlgebra> algebras;
    std::vector<CanonicalForm> labels;
    StructureTensor dot = StructureTensor::null_filiform(n, dom);

    if (kind == IdentityKind::id_matching) {
        auto params = enumerate_id_structures(n, p);
        algebras.reserve(params.size());
        labels.reserve(params.size());
        auto chunk_labels = parallel_chunks<std::vector<CanonicalForm>>(
            params.size(), threads, [&](size_t lo, size_t hi) {
                std::vector<CanonicalForm> out;
                out.reserve(hi - lo);
                for (size_t t = lo; t < hi; ++t) out.push_back(normalize_id(params[t]).form);
                return out;
            });
        for (auto& c : chunk_labels)
            for (auto& f : c) labels.push_back(std::move(f));
        for (auto& q : params) algebras.emplace_back(dot, derive_id_star(IdSeed{q.alpha}));
    } else {
        auto seeds = enumerate_12_structures(n, p);
        algebras.reserve(seeds.size());
        labels.reserve(seeds.size());
        auto chunk_labels = parallel_chunks<std::vector<CanonicalForm>>(
            seeds.size(), threads, [&](size_t lo, size_t hi) {
                std::vector<CanonicalForm> out;
                out.reserve(hi - lo);
                for (size_t t = lo; t < hi; ++t) {
                    auto res = derive_12_star(seeds[t]);
                    if (res.branch == Branch::id_matching)
                        out.push_back(normalize_id(*res.id_params).form);
                    else
                        out.push_back(normalize_12(*res.twelve_params).form);
                }
                return out;
            });
        for (auto& c : chunk_labels)
            for (auto& f : c) labels.push_back(std::move(f));
        for (auto& seed : seeds) algebras.emplace_back(dot, derive_12_star(seed).star);
    }

    OrbitReport report;
    report.n = n;
    report.p = p;
    report.kind = kind;
    report.total = algebras.size();

    // bucket by canonical label, then partition each bucket by exhaustive search
    std::map<std::string, std::vector<size_t>> buckets;
    for (size_t i = 0; i < labels.size(); ++i) buckets[labels[i].to_string()].push_back(i);

    struct Component {
        size_t rep;
        uint64_t size = 0;
        std::string label;
    };
    std::vector<Component> comps;
    for (const auto& [label, members] : buckets) {
        std::vector<size_t> local_reps;
        for (size_t idx : members) {
            bool placed = false;
            for (size_t ci : local_reps) {
                if (brute_force_isomorphism(algebras[idx], algebras[comps[ci].rep], p)) {
                    comps[ci].size++;
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                comps.push_back({idx, 1, label});
                local_reps.push_back(comps.size() - 1);
            }
        }
        if (local_reps.size() > 1)
            report.findings.push_back(label + " splits into " + std::to_string(local_reps.size()) +
                                      " orbits over F_" + std::to_string(p));
    }

    // cross-bucket sweep over component representatives: distinct canonical
    // labels must never be isomorphic (finding only when both tags lack the
    // proven converse)
    std::vector<bool> merged(comps.size(), false);
    for (size_t i = 0; i < comps.size(); ++i) {
        if (merged[i]) continue;
        for (size_t j = i + 1; j < comps.size(); ++j) {
            if (merged[j] || comps[i].label == comps[j].label) continue;
            if (brute_force_isomorphism(algebras[comps[i].rep], algebras[comps[j].rep], p)) {
                std::string msg = "distinct canonical forms isomorphic over F_" + std::to_string(p) +
                                  ": " + comps[i].label + " ~ " + comps[j].label;
                if (tag_has_proven_converse(labels[comps[i].rep].tag) ||
                    tag_has_proven_converse(labels[comps[j].rep].tag))
                    report.anomalies.push_back(msg);
                else
                    report.findings.push_back(msg);
                comps[i].size += comps[j].size;
                merged[j] = true;
            }
        }
    }

    for (size_t i = 0; i < comps.size(); ++i) {
        if (merged[i]) continue;
        report.orbits.push_back({labels[comps[i].rep], comps[i].size});
    }
    std::sort(report.orbits.begin(), report.orbits.end(), [](const OrbitEntry& a, const OrbitEntry& b) {
        auto ka = a.form.to_string(), kb = b.form.to_string();
        if (ka != kb) return ka < kb;
        return a.size > b.size;
    });

    uint64_t sum = 0;
    for (const auto& o : report.orbits) sum += o.size;
    if (sum != report.total)
        report.anomalies.push_back("orbit sizes sum to " + std::to_string(sum) + " != total " +
                                   std::to_string(report.total));
    return report;
}

// ------------------------------------------------------------------- audit

namespace {

struct AuditCtx {
    std::map<std::pair<std::string, std::string>, AuditStep> steps;

    void record(const std::string& lemma, const std::string& step, bool agree, bool flagged = false,
                const std::string& note = "") {
        auto& s = steps[{lemma, step}];
        s.lemma = lemma;
        s.step = step;
        s.trials++;
        if (agree) s.agreements++;
        if (flagged) s.flagged = true;
        if (!note.empty() && s.note.find(note) == std::string::npos) {
            if (!s.note.empty()) s.note += " | ";
            s.note += note;
        }
    }
};

Scalar rnd_q(std::mt19937_64& rng, bool nonzero = false) {
    const Domain Q = Domain::rational();
    long long v = (long long)(rng() % 9) - 4;
    if (nonzero && v == 0) v = 1 + (long long)(rng() % 3);
    return Scalar::of_int(Q, v);
}

AutoParams unit_step(int n, const Domain& dom, int pos, const Scalar& val) {
    AutoParams a = AutoParams::identity(n, dom);
    a.A[size_t(pos) - 1] = val;
    return a;
}

// stratum alpha_1 != 0: normalize to B1
void audit_id_b1_stratum(AuditCtx& ctx, int n, std::mt19937_64& rng) {
    if (n < 3) return;
    const Domain Q = Domain::rational();
    IdParams p;
    for (int i = 0; i < n; ++i) p.alpha.push_back(rnd_q(rng, i <= 1));

    // step A1 = 1/alpha_1
    {
        Scalar closed_form = p.alpha[0].inverse();
        Scalar solved = solve_affine(LinearEquation{{{"A1", p.alpha[0]}}, -Scalar::one(Q)}, "A1");
        ctx.record("id family, alpha_1 != 0", "A1 = 1/alpha_1", closed_form == solved);
        IdParams original = p;
        p = transform_id_params(p, unit_step(n, Q, 1, solved));

        // step A2: closed form -alpha_2/alpha_1; flagged location. Sequentially
        // (after the A1 step, where alpha_1 = 1) the closed-form value solves the
        // step; as a one-shot choice combined with A1 the annihilating value is
        // -alpha_2/alpha_1^2.
        Scalar closed_form_a2 = -(p.alpha[1] / p.alpha[0]);
        Scalar solved_a2 = solve_affine_probe(
            [&](const Scalar& X) { return transform_id_params(p, unit_step(n, Q, 2, X)).alpha[1]; }, Q,
            "A2");
        AutoParams combined_naive = unit_step(n, Q, 1, original.alpha[0].inverse());
        combined_naive.A[1] = -(original.alpha[1] / original.alpha[0]);
        AutoParams combined_corrected = unit_step(n, Q, 1, original.alpha[0].inverse());
        combined_corrected.A[1] = -(original.alpha[1] / original.alpha[0].pow(2));
        bool naive_oneshot = transform_id_params(original, combined_naive).alpha[1].is_zero();
        bool corrected_oneshot = transform_id_params(original, combined_corrected).alpha[1].is_zero();
        std::string note =
            "sequential reading agrees; as a simultaneous choice with A1 = 1/alpha_1 the closed form "
            "-alpha_2/alpha_1 " +
            std::string(naive_oneshot ? "annihilates" : "does not annihilate") +
            " alpha_2', while solve_affine's -alpha_2/alpha_1^2 " +
            std::string(corrected_oneshot ? "does" : "does not");
        ctx.record("id family, alpha_1 != 0", "A2 = -alpha_2/alpha_1", closed_form_a2 == solved_a2, true, note);
        p = transform_id_params(p, unit_step(n, Q, 2, solved_a2));
    }

    // steps A_k = -alpha_k for k >= 3
    for (int k = 3; k <= n; ++k) {
        Scalar closed_form = -p.alpha[size_t(k) - 1];
        Scalar solved = solve_affine_probe(
            [&](const Scalar& X) {
                return transform_id_params(p, unit_step(n, Q, k, X)).alpha[size_t(k) - 1];
            },
            Q, "A_k");
        ctx.record("id family, alpha_1 != 0", "A_k = -alpha_k (k >= 3)", closed_form == solved);
        p = transform_id_params(p, unit_step(n, Q, k, solved));
    }
}

// stratum alpha_1 = 0 with first nonzero alpha_s, s >= 3: normalize to B_s
void audit_id_bs_stratum(AuditCtx& ctx, int n, std::mt19937_64& rng) {
    const Domain Q = Domain::rational();
    for (int s = 3; s <= n; ++s) {
        IdParams p;
        p.alpha.assign(size_t(n), Scalar::zero(Q));
        p.alpha[1] = rnd_q(rng);
        long long t = 2 + (long long)(rng() % 2);
        p.alpha[size_t(s) - 1] = Scalar::of_int(Q, t).pow(s - 2);  // exact root exists
        for (int i = s + 1; i <= n; ++i) p.alpha[size_t(i) - 1] = rnd_q(rng);

        // base: A1 = (s-2)-th root of alpha_s together with
        // A2 = A1 alpha_{s+1} / ((s-2) alpha_s); afterwards alpha_s' = 1 and
        // alpha_{s+1}' = 0
        AutoParams base = unit_step(n, Q, 1, Scalar::of_int(Q, t));
        if (s + 1 <= n)
            base.A[1] = base.A[0] * p.alpha[size_t(s + 1) - 1] /
                        (Scalar::of_int(Q, s - 2) * p.alpha[size_t(s) - 1]);
        auto moved = transform_id_params(p, base);
        bool ok = moved.alpha[size_t(s) - 1].is_one() &&
                  (s + 1 > n || moved.alpha[size_t(s + 1) - 1].is_zero());
        ctx.record("id family, leading alpha_s", "A1 = root(alpha_s), A2 = A1 alpha_{s+1}/((s-2) alpha_s)", ok);
        p = moved;

        // induction: closed form A_{k+2} = alpha_{s+k+1}. The general annihilator
        // carries the (s-2) factor of the base step, so this value works only
        // for s = 3; the audit records the resolution
        for (int k = 1; s + k + 1 <= n; ++k) {
            int target = s + k + 1, pos = k + 2;
            Scalar closed_form = p.alpha[size_t(target) - 1];
            Scalar solved = solve_affine_probe(
                [&](const Scalar& X) {
                    return transform_id_params(p, unit_step(n, Q, pos, X)).alpha[size_t(target) - 1];
                },
                Q, "A");
            ctx.record("id family, leading alpha_s",
                       s == 3 ? "A_{k+2} = alpha_{s+k+1} (induction, s = 3)"
                              : "A_{k+2} = alpha_{s+k+1} (induction, s >= 4)",
                       closed_form == solved, false,
                       s == 3 ? ""
                              : "the closed-form choice misses the (s-2) factor of the base-step "
                                "relation; solve_affine gives alpha_{s+k+1}/(s-2)");
            p = transform_id_params(p, unit_step(n, Q, pos, solved));
        }
    }
}

// twelve family over quotient tag B1: A_n shifts beta_1
void audit_12_b1_stratum(AuditCtx& ctx, int n, std::mt19937_64& rng) {
    if (n < 3) return;
    const Domain Q = Domain::rational();
    TwelveParams p;
    p.alpha.assign(size_t(n) - 1, Scalar::zero(Q));
    p.alpha[0] = Scalar::one(Q);
    for (int i = 0; i < n - 1; ++i) p.beta.push_back(rnd_q(rng));

    Scalar closed_form = p.beta[0];
    Scalar solved = solve_affine_probe(
        [&](const Scalar& X) { return transform_12_params(p, unit_step(n, Q, n, X)).beta[0]; }, Q, "A_n");
    ctx.record("twelve family, quotient B1", "A_n = beta_1", closed_form == solved);
}

// twelve family over quotient tag B2, case 1: beta_{n-1} != alpha.
void audit_12_b2_case1(AuditCtx& ctx, int n, std::mt19937_64& rng) {
    if (n < 3) return;
    const Domain Q = Domain::rational();
    TwelveParams p;
    p.alpha.assign(size_t(n) - 1, Scalar::zero(Q));
    Scalar alpha = rnd_q(rng);
    p.alpha[1] = alpha;
    for (int i = 0; i < n - 1; ++i) p.beta.push_back(rnd_q(rng));
    if (p.beta[size_t(n - 1) - 1] == alpha) p.beta[size_t(n - 1) - 1] = alpha + Scalar::one(Q);

    for (int k = 2; k <= n - 1; ++k) {
        int target = n - k;
        Scalar closed_form = p.beta[size_t(target) - 1] /
                           (Scalar::of_int(Q, n - k + 1) * (alpha - p.beta[size_t(n - 1) - 1]));
        Scalar solved = solve_affine_probe(
            [&](const Scalar& X) {
                return transform_12_params(p, unit_step(n, Q, k, X)).beta[size_t(target) - 1];
            },
            Q, "A_k");
        ctx.record("twelve family, quotient B2, case 1", "A_k = A1 beta_{n-k}/((n-k+1)(alpha - beta_{n-1}))",
                   closed_form == solved);
        p = transform_12_params(p, unit_step(n, Q, k, solved));
    }
}

// twelve family over quotient tag B2, case 2: beta_{n-1} = alpha, pivot beta_{n-r}.
void audit_12_b2_case2(AuditCtx& ctx, int n, std::mt19937_64& rng) {
    const Domain Q = Domain::rational();
    for (int r = 2; r <= n - 2; ++r) {
        TwelveParams p;
        p.alpha.assign(size_t(n) - 1, Scalar::zero(Q));
        Scalar alpha = rnd_q(rng);
        p.alpha[1] = alpha;
        p.beta.assign(size_t(n) - 1, Scalar::zero(Q));
        p.beta[size_t(n - 1) - 1] = alpha;
        long long t = 2 + (long long)(rng() % 2);
        p.beta[size_t(n - r) - 1] = Scalar::of_int(Q, t).pow(r - 1);  // exact root exists
        for (int i = 1; i <= n - r - 1; ++i) p.beta[size_t(i) - 1] = rnd_q(rng);
        TwelveParams original = p;

        // scaling step: A1 = (r-1)-th root of beta_{n-r}
        {
            auto moved = transform_12_params(p, unit_step(n, Q, 1, Scalar::of_int(Q, t)));
            ctx.record("twelve family, quotient B2, case 2", "A1 = root(beta_{n-r})",
                       moved.beta[size_t(n - r) - 1].is_one());
            p = moved;
        }

        // base: A2 = -beta_{n-r-1}/(n-r), stated together with the A1 root
        {
            Scalar closed_form = -(p.beta[size_t(n - r - 1) - 1] / Scalar::of_int(Q, n - r));
            Scalar solved = solve_affine_probe(
                [&](const Scalar& X) {
                    return transform_12_params(p, unit_step(n, Q, 2, X)).beta[size_t(n - r - 1) - 1];
                },
                Q, "A2");
            AutoParams combined = unit_step(n, Q, 1, Scalar::of_int(Q, t));
            combined.A[1] = -(original.beta[size_t(n - r - 1) - 1] / Scalar::of_int(Q, n - r));
            bool oneshot =
                transform_12_params(original, combined).beta[size_t(n - r - 1) - 1].is_zero();
            ctx.record("twelve family, quotient B2, case 2", "A2 = -beta_{n-r-1}/(n-r)", closed_form == solved, false,
                       oneshot ? "" :
                           "the closed-form value works sequentially (after the A1 root step); as a "
                           "simultaneous pair with A1 it does not annihilate beta_{n-r-1}");
            p = transform_12_params(p, unit_step(n, Q, 2, solved));
        }

        // induction: closed form "A_k = -beta_{n-k}/(n-k+1)"; the effective pivot
        // in this stratum is A_{k-r+1} (A_k itself has a vanishing coefficient)
        for (int k = r + 2; k <= n - 1; ++k) {
            int target = n - k, pos = k - r + 1;
            Scalar closed_form = -(p.beta[size_t(target) - 1] / Scalar::of_int(Q, n - k + 1));
            Scalar solved = solve_affine_probe(
                [&](const Scalar& X) {
                    return transform_12_params(p, unit_step(n, Q, pos, X)).beta[size_t(target) - 1];
                },
                Q, "A");
            // pivot check: the coefficient of A_k on beta_{n-k}'
            Scalar at0 = transform_12_params(p, unit_step(n, Q, k, Scalar::zero(Q))).beta[size_t(target) - 1];
            Scalar at1 = transform_12_params(p, unit_step(n, Q, k, Scalar::one(Q))).beta[size_t(target) - 1];
            bool closed_form_pivot_vacuous = (at1 - at0).is_zero();
            ctx.record("twelve family, quotient B2, case 2", "A_k = -beta_{n-k}/(n-k+1) (induction)",
                       closed_form == solved, false,
                       closed_form_pivot_vacuous
                           ? "the case-1 pivot subscript A_k has a vanishing coefficient in this "
                             "stratum; the value matches solve_affine at the effective pivot A_{k-r+1}"
                           : "");
            p = transform_12_params(p, unit_step(n, Q, pos, solved));
        }
    }
}

// twelve family over quotient tag Bs, cases 1-4.
void audit_12_bs_cases(AuditCtx& ctx, int n, std::mt19937_64& rng) {
    const Domain Q = Domain::rational();
    for (int s = 3; s <= n - 1; ++s) {
        // case 1: beta_{n-1} != alpha
        {
            TwelveParams p;
            p.alpha.assign(size_t(n) - 1, Scalar::zero(Q));
            Scalar alpha = rnd_q(rng);
            p.alpha[1] = alpha;
            p.alpha[size_t(s) - 1] = Scalar::one(Q);
            p.beta.assign(size_t(n) - 1, Scalar::zero(Q));
            for (int i = 1; i <= n - 1; ++i) p.beta[size_t(i) - 1] = rnd_q(rng);
            if (p.beta[size_t(n - 1) - 1] == alpha)
                p.beta[size_t(n - 1) - 1] = alpha + Scalar::one(Q);

            for (int k = 1; k <= s - 1; ++k) {
                int target = s - k, pos = n - s + k;
                Scalar closed_form = p.beta[size_t(target) - 1] /
                                   (Scalar::of_int(Q, s - k + 1) * (alpha - p.beta[size_t(n - 1) - 1]));
                Scalar solved = solve_affine_probe(
                    [&](const Scalar& X) {
                        return transform_12_params(p, unit_step(n, Q, pos, X)).beta[size_t(target) - 1];
                    },
                    Q, "A");
                ctx.record("twelve family, quotient Bs, case 1",
                           "A_{n-s+k} = beta_{s-k}/((s-k+1)(alpha - beta_{n-1}))", closed_form == solved);
                p = transform_12_params(p, unit_step(n, Q, pos, solved));
            }
        }

        // case 2: beta_{n-1} = alpha, pivot beta_{n-r}, 2 <= r <= s-2
        for (int r = 2; r <= s - 2; ++r) {
            TwelveParams p;
            p.alpha.assign(size_t(n) - 1, Scalar::zero(Q));
            Scalar alpha = rnd_q(rng);
            p.alpha[1] = alpha;
            p.alpha[size_t(s) - 1] = Scalar::one(Q);
            p.beta.assign(size_t(n) - 1, Scalar::zero(Q));
            p.beta[size_t(n - 1) - 1] = alpha;
            p.beta[size_t(n - r) - 1] = rnd_q(rng, true);
            for (int i = 1; i <= s - r; ++i) p.beta[size_t(i) - 1] = rnd_q(rng);

            for (int k = 1; k <= s - r; ++k) {
                int target = s - (r + k - 1), pos = n - s + k;
                if (target < 1) break;
                Scalar closed_form =
                    -(p.beta[size_t(target) - 1] /
                      (Scalar::of_int(Q, s - (r + k - 1) + 1) * p.beta[size_t(n - r) - 1]));
                Scalar solved = solve_affine_probe(
                    [&](const Scalar& X) {
                        return transform_12_params(p, unit_step(n, Q, pos, X)).beta[size_t(target) - 1];
                    },
                    Q, "A");
                ctx.record("twelve family, quotient Bs, case 2",
                           "A_{n-s+k} = -beta_{s-(r+k-1)}/((s-(r+k-1)+1) beta_{n-r})",
                           closed_form == solved, true,
                           "the closed-form pivot subscript for this step is ambiguous; resolved "
                           "by solve_affine to the pivot A_{n-s+k} with the value shown");
                p = transform_12_params(p, unit_step(n, Q, pos, solved));
            }
        }

        // case 3: beta_{n-1} = alpha, scan empty, beta_{n-s+1} != s/2
        {
            TwelveParams p;
            p.alpha.assign(size_t(n) - 1, Scalar::zero(Q));
            Scalar alpha = rnd_q(rng);
            p.alpha[1] = alpha;
            p.alpha[size_t(s) - 1] = Scalar::one(Q);
            p.beta.assign(size_t(n) - 1, Scalar::zero(Q));
            p.beta[size_t(n - 1) - 1] = alpha;
            Scalar half_s = Scalar::of_int(Q, s) / Scalar::of_int(Q, 2);
            for (int i = 1; i <= n - s + 1; ++i) p.beta[size_t(i) - 1] = rnd_q(rng);
            if (p.beta[size_t(n - s + 1) - 1] == half_s)
                p.beta[size_t(n - s + 1) - 1] = half_s + Scalar::one(Q);
            p.beta[0] = rnd_q(rng, true);

            int pos = n - s + 1;
            Scalar closed_form =
                p.beta[0] / (Scalar::of_int(Q, s) -
                             Scalar::of_int(Q, 2) * p.beta[size_t(n - s + 1) - 1]);
            Scalar solved = solve_affine_probe(
                [&](const Scalar& X) { return transform_12_params(p, unit_step(n, Q, pos, X)).beta[0]; },
                Q, "A");
            ctx.record("twelve family, quotient Bs, case 3", "A_{n-s+1} = beta_1/(s - 2 beta_{n-s+1})",
                       closed_form == solved);
        }
    }
}

}  // namespace

AuditReport audit_normalization_steps(int n, int trials, uint64_t seed) {
    if (n < 3) fail(ErrorCode::invalid_argument, "audit needs n >= 3");
    AuditReport report;
    report.n = n;
    report.trials = trials;
    if (trials <= 0) return report;

    std::mt19937_64 rng(seed);
    AuditCtx ctx;
    for (int t = 0; t < trials; ++t) {
        audit_id_b1_stratum(ctx, n, rng);
        audit_id_bs_stratum(ctx, n, rng);
        audit_12_b1_stratum(ctx, n, rng);
        audit_12_b2_case1(ctx, n, rng);
        audit_12_b2_case2(ctx, n, rng);
        audit_12_bs_cases(ctx, n, rng);
    }
    for (auto& [key, step] : ctx.steps) report.steps.push_back(step);
    return report;
}

}  // namespace nfa
