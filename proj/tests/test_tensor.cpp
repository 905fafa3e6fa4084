#include <random>

#include "doctest.h"
#include "tensor.hpp"

using namespace nfa;

namespace {
const Domain Q = Domain::rational();

std::vector<Scalar> basis(int n, int i) {
    std::vector<Scalar> v(size_t(n), Scalar::zero(Q));
    v[size_t(i) - 1] = Scalar::one(Q);
    return v;
}
}  // namespace

TEST_CASE("degenerate dimensions are rejected") {
    CHECK_THROWS_AS(StructureTensor(0, Q), Error);
    CHECK_THROWS_AS(StructureTensor(-2, Q), Error);
    auto t1 = StructureTensor::null_filiform(1, Q);
    CHECK_THROWS_AS((void)quotient_by_last(BiAlgebra(t1, t1)), Error);
}

TEST_CASE("null-filiform constructor") {
    auto t3 = StructureTensor::null_filiform(3, Q);
    int nonzero = 0;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k)
                if (!t3.at(i, j, k).is_zero()) ++nonzero;
    CHECK(nonzero == 3);
    CHECK(t3.at(1, 1, 2).is_one());
    CHECK(t3.at(1, 2, 3).is_one());
    CHECK(t3.at(2, 1, 3).is_one());

    CHECK(StructureTensor::null_filiform(1, Q).is_zero());

    auto t4 = StructureTensor::null_filiform(4, Q);
    CHECK(t4.at(2, 2, 4).is_one());
    for (int k = 1; k <= 4; ++k) CHECK(t4.at(2, 3, k).is_zero());
}

TEST_CASE("bilinear product") {
    auto t = StructureTensor::null_filiform(3, Q);
    CHECK(t.product(basis(3, 1), basis(3, 2)) == basis(3, 3));
    std::vector<Scalar> zero(3, Scalar::zero(Q));
    CHECK(t.product(zero, basis(3, 2)) == zero);

    // (e1+e2) o (e1+e2) = e2 + 2 e3
    std::vector<Scalar> x = basis(3, 1);
    x[1] = Scalar::one(Q);
    auto z = t.product(x, x);
    CHECK(z[0].is_zero());
    CHECK(z[1].is_one());
    CHECK(z[2] == Scalar::of_int(Q, 2));

    CHECK_THROWS_AS((void)t.product(basis(3, 1), std::vector<Scalar>(2, Scalar::zero(Q))), Error);
}

TEST_CASE("null-filiform dot is associative up to n = 10") {
    for (int n = 1; n <= 10; ++n) {
        auto dot = StructureTensor::null_filiform(n, Q);
        BiAlgebra alg(dot, dot);
        CHECK(check_identity(alg, IdentityKind::associativity).holds);
    }
}

TEST_CASE("identity checks on simple pairs") {
    auto dot = StructureTensor::null_filiform(3, Q);
    // star = dot is interchangeable with itself
    CHECK(check_identity(BiAlgebra(dot, dot), IdentityKind::interchangeable).holds);
    // star = 0 is totally compatible
    StructureTensor zero(3, Q);
    CHECK(check_identity(BiAlgebra(dot, zero), IdentityKind::totally_compatible).holds);
    CHECK(check_identity(BiAlgebra(dot, zero), IdentityKind::compatible).holds);
}

TEST_CASE("B1 table is totally compatible, confirmed by an independent sweep") {
    const int n = 4;
    auto dot = StructureTensor::null_filiform(n, Q);
    StructureTensor star(n, Q);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i + j - 1 <= n && i + j >= 2) star.set(i, j, i + j - 1, Scalar::one(Q));
    BiAlgebra alg(dot, star);
    CHECK(check_identity(alg, IdentityKind::totally_compatible).holds);

    // independent oracle: evaluate all four mixed products on all 64 triples
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                auto m1 = star.product(dot.row(i, j), basis(n, k));
                auto m2 = dot.product(star.row(i, j), basis(n, k));
                auto m3 = dot.product(basis(n, i), star.row(j, k));
                auto m4 = star.product(basis(n, i), dot.row(j, k));
                CHECK(m1 == m2);
                CHECK(m2 == m3);
                CHECK(m3 == m4);
            }
}

TEST_CASE("witness is the least failing triple and is deterministic") {
    const int n = 3;
    auto dot = StructureTensor::null_filiform(n, Q);
    StructureTensor star(n, Q);  // zero star passes everything
    star.set(2, 2, 1, Scalar::one(Q));  // break it: e2 * e2 = e1
    BiAlgebra alg(dot, star);
    auto res = check_identity(alg, IdentityKind::id_matching, 1);
    REQUIRE(!res.holds);
    REQUIRE(res.witness.has_value());
    // (a*b).c = a*(b.c) fails first at (1,1,2): (e1*e1).e2 = 0 vs e1*(e1.e2) = e1*e2... both 0;
    // the actual least failing triple is computed; assert determinism across thread counts
    auto res3 = check_identity(alg, IdentityKind::id_matching, 3);
    REQUIRE(res3.witness.has_value());
    CHECK(res.witness->i == res3.witness->i);
    CHECK(res.witness->j == res3.witness->j);
    CHECK(res.witness->k == res3.witness->k);
    CHECK(res.witness->equation == res3.witness->equation);
    // and that it is minimal: no earlier triple fails
    bool found_earlier = false;
    for (int i = 1; i <= n && !found_earlier; ++i)
        for (int j = 1; j <= n && !found_earlier; ++j)
            for (int k = 1; k <= n && !found_earlier; ++k) {
                if (std::tuple(i, j, k) >= std::tuple(res.witness->i, res.witness->j, res.witness->k))
                    continue;
                auto m1 = star.product(dot.row(i, j), basis(n, k));
                auto m2 = dot.product(star.row(i, j), basis(n, k));
                auto m3 = dot.product(basis(n, i), star.row(j, k));
                auto m4 = star.product(basis(n, i), dot.row(j, k));
                if (!(m1 == m3) || !(m2 == m4)) found_earlier = true;
            }
    CHECK(!found_earlier);
}

TEST_CASE("symbolic residuals vanish identically for a derived-like table") {
    // star entries as indeterminates constrained to the dot: residual polynomials
    Domain P = Domain::polynomial({"c"});
    auto dot = StructureTensor::null_filiform(2, P);
    StructureTensor star(2, P);
    star.set(1, 1, 2, Scalar::variable(P, "c"));  // e1*e1 = c e2
    BiAlgebra alg(dot, star);
    CHECK(check_identity(alg, IdentityKind::totally_compatible).holds);
}

TEST_CASE("quotient by the last basis vector") {
    // dot quotient: null-filiform n -> n-1
    for (int n = 2; n <= 6; ++n) {
        auto dot = StructureTensor::null_filiform(n, Q);
        StructureTensor zero(n, Q);
        auto q = quotient_by_last(BiAlgebra(dot, zero));
        CHECK(q.dot == StructureTensor::null_filiform(n - 1, Q));
    }
    // violating table: e1 * en = e1
    auto dot = StructureTensor::null_filiform(3, Q);
    StructureTensor star(3, Q);
    star.set(1, 3, 1, Scalar::one(Q));
    CHECK_THROWS_AS((void)quotient_by_last(BiAlgebra(dot, star)), Error);
    try {
        (void)quotient_by_last(BiAlgebra(dot, star));
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::not_central);
    }
}

TEST_CASE("for associative pairs: interchangeable and id-matching iff totally compatible") {
    // instances with both products associative: derived id-matching tables
    // (all identities hold), genuine (12)-branch tables (none of the three
    // hold), and the zero/dot edge cases
    std::mt19937_64 rng(71);
    auto rnd = [&]() { return Scalar::of_int(Q, (long long)(rng() % 9) - 4); };

    for (int n = 3; n <= 6; ++n) {
        auto dot = StructureTensor::null_filiform(n, Q);
        std::vector<StructureTensor> stars;
        stars.push_back(StructureTensor(n, Q));  // zero
        stars.push_back(dot);                    // star = dot
        for (int trial = 0; trial < 10; ++trial) {
            // id-derived table: e_i * e_j = sum alpha_{t-i-j+2} e_t
            StructureTensor s(n, Q);
            std::vector<Scalar> alpha;
            for (int i = 0; i < n; ++i) alpha.push_back(rnd());
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n && i + j <= n + 1; ++j)
                    for (int t = i + j - 1; t <= n; ++t)
                        if (!alpha[size_t(t - i - j + 2) - 1].is_zero())
                            s.set(i, j, t, alpha[size_t(t - i - j + 2) - 1]);
            stars.push_back(std::move(s));

            // (12)-branch table: alpha-chain capped at n-1 plus a beta column
            StructureTensor s12(n, Q);
            std::vector<Scalar> a2, b2;
            for (int i = 0; i < n - 1; ++i) a2.push_back(rnd());
            for (int i = 0; i < n - 1; ++i) b2.push_back(rnd());
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n && i + j <= n; ++j) {
                    for (int t = i + j - 1; t <= n - 1; ++t)
                        if (!a2[size_t(t - i - j + 2) - 1].is_zero())
                            s12.set(i, j, t, a2[size_t(t - i - j + 2) - 1]);
                    if (!b2[size_t(i + j - 1) - 1].is_zero())
                        s12.set(i, j, n, b2[size_t(i + j - 1) - 1]);
                }
            stars.push_back(std::move(s12));
        }

        for (const auto& star : stars) {
            BiAlgebra alg(dot, star);
            if (!check_identity(alg, IdentityKind::associativity).holds) continue;
            bool inter = check_identity(alg, IdentityKind::interchangeable).holds;
            bool idm = check_identity(alg, IdentityKind::id_matching).holds;
            bool total = check_identity(alg, IdentityKind::totally_compatible).holds;
            CHECK((inter && idm) == total);
            if (total) {
                CHECK(check_identity(alg, IdentityKind::twelve_matching).holds);
                CHECK(check_identity(alg, IdentityKind::compatible).holds);
            }
        }
    }
}

TEST_CASE("identity kind names round trip") {
    for (IdentityKind k : {IdentityKind::associativity, IdentityKind::compatible, IdentityKind::id_matching,
                           IdentityKind::twelve_matching, IdentityKind::interchangeable,
                           IdentityKind::totally_compatible}) {
        auto back = parse_identity_kind(identity_kind_name(k));
        REQUIRE(back.has_value());
        CHECK(*back == k);
    }
    CHECK(parse_identity_kind("id_matching").has_value());
    CHECK(!parse_identity_kind("nope").has_value());
}
