// Exercises the shared-library surface exactly as an external client would:
// only nfa/nfa.h, no internal headers.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "nfa/nfa.h"

using nlohmann::json;

namespace {
std::string take(char* s) {
    std::string out = s ? s : "";
    nfa_string_free(s);
    return out;
}
}  // namespace

TEST_CASE("version and error text") {
    CHECK(std::strlen(nfa_version()) > 0);
    nfa_algebra* alg = nullptr;
    CHECK(nfa_algebra_make_null_filiform(3, "fp:4", &alg) == NFA_ERR_INVALID_ARGUMENT);
    CHECK(std::strlen(nfa_last_error_message()) > 0);
}

TEST_CASE("algebra lifecycle: make, serialize, parse, check, quotient") {
    nfa_algebra* alg = nullptr;
    REQUIRE(nfa_algebra_make_null_filiform(4, "q", &alg) == NFA_OK);

    char* text = nullptr;
    REQUIRE(nfa_algebra_to_json(alg, &text) == NFA_OK);
    std::string doc = take(text);
    json j = json::parse(doc);
    CHECK(j.at("dim") == 4);
    CHECK(j.at("star").empty());

    nfa_algebra* back = nullptr;
    REQUIRE(nfa_algebra_from_json(doc.c_str(), &back) == NFA_OK);

    int holds = -1;
    char* report = nullptr;
    REQUIRE(nfa_algebra_check(back, "totally-compatible", 1, &report, &holds) == NFA_OK);
    CHECK(holds == 1);  // zero star is totally compatible
    CHECK(json::parse(take(report)).at("holds") == true);

    nfa_algebra* quot = nullptr;
    REQUIRE(nfa_algebra_quotient_by_last(back, &quot) == NFA_OK);
    char* qtext = nullptr;
    REQUIRE(nfa_algebra_to_json(quot, &qtext) == NFA_OK);
    CHECK(json::parse(take(qtext)).at("dim") == 3);

    CHECK(nfa_algebra_check(back, "no-such-kind", 1, nullptr, &holds) == NFA_ERR_INVALID_ARGUMENT);

    nfa_algebra_free(alg);
    nfa_algebra_free(back);
    nfa_algebra_free(quot);
}

TEST_CASE("derive, transform, normalize, realize round trip") {
    // derive the B1 table from its id seed
    json seed{{"kind", "id"}, {"domain", "q"}, {"alpha", {"1", "0", "0", "0"}}};
    char* derived = nullptr;
    REQUIRE(nfa_derive(seed.dump().c_str(), &derived) == NFA_OK);
    std::string algebra_doc = take(derived);

    nfa_algebra* alg = nullptr;
    REQUIRE(nfa_algebra_from_json(algebra_doc.c_str(), &alg) == NFA_OK);
    int holds = 0;
    REQUIRE(nfa_algebra_check(alg, "totally-compatible", 1, nullptr, &holds) == NFA_OK);
    CHECK(holds == 1);
    nfa_algebra_free(alg);

    // transform id params and normalize both sides to the same form
    json params{{"kind", "id"}, {"domain", "q"}, {"alpha", {"0", "7", "1", "0", "0"}}};
    json aut{{"A", {"2", "1", "0", "1", "3"}}};
    char* moved = nullptr;
    REQUIRE(nfa_transform(params.dump().c_str(), aut.dump().c_str(), &moved) == NFA_OK);
    std::string moved_doc = take(moved);

    char* norm_a = nullptr;
    char* norm_b = nullptr;
    REQUIRE(nfa_normalize(params.dump().c_str(), &norm_a) == NFA_OK);
    REQUIRE(nfa_normalize(moved_doc.c_str(), &norm_b) == NFA_OK);
    json fa = json::parse(take(norm_a)).at("form");
    json fb = json::parse(take(norm_b)).at("form");
    CHECK(fa == fb);
    CHECK(fa.at("tag") == "Bs");
    CHECK(fa.at("s") == 3);
    CHECK(fa.at("params").at("alpha") == "7");

    // realize the form and re-check the defining identity
    char* realized = nullptr;
    REQUIRE(nfa_realize(fa.dump().c_str(), 5, "q", &realized) == NFA_OK);
    nfa_algebra* ra = nullptr;
    REQUIRE(nfa_algebra_from_json(take(realized).c_str(), &ra) == NFA_OK);
    REQUIRE(nfa_algebra_check(ra, "totally-compatible", 1, nullptr, &holds) == NFA_OK);
    CHECK(holds == 1);
    nfa_algebra_free(ra);
}

TEST_CASE("twelve seed branches and the inconsistent-seed error") {
    json good{{"kind", "twelve"},
              {"domain", "q"},
              {"alpha", {"1", "2", "3"}},
              {"beta", {"7", "5", "2", "0"}}};
    char* out = nullptr;
    REQUIRE(nfa_derive(good.dump().c_str(), &out) == NFA_OK);
    json res = json::parse(take(out));
    CHECK(res.at("branch") == "twelve");
    CHECK(res.at("constraints").size() == 3);

    json bad{{"kind", "twelve"},
             {"domain", "q"},
             {"alpha", {"1", "2", "3"}},
             {"beta", {"7", "9", "2", "1"}}};
    CHECK(nfa_derive(bad.dump().c_str(), &out) == NFA_ERR_INCONSISTENT_SEED);
}

TEST_CASE("oracle surface") {
    int dim = 0;
    REQUIRE(nfa_oracle_dims(3, "id-matching", 7, &dim) == NFA_OK);
    CHECK(dim == 3);
    REQUIRE(nfa_oracle_dims(3, "twelve-matching", 7, &dim) == NFA_OK);
    CHECK(dim == 5);

    char* census = nullptr;
    REQUIRE(nfa_oracle_census(2, "id-matching", 5, 1, &census) == NFA_OK);
    json cj = json::parse(take(census));
    CHECK(cj.at("anomalies").empty());
    CHECK(cj.at("total") == 25);

    // iso: two differently-tagged members are not isomorphic
    json form_b1{{"tag", "B1"}, {"n", 4}};
    json form_b2{{"tag", "B2"}, {"n", 4}, {"params", {{"alpha", "2"}}}};
    char* a_doc = nullptr;
    char* b_doc = nullptr;
    REQUIRE(nfa_realize(form_b1.dump().c_str(), 4, "fp:7", &a_doc) == NFA_OK);
    REQUIRE(nfa_realize(form_b2.dump().c_str(), 4, "fp:7", &b_doc) == NFA_OK);
    std::string a = take(a_doc), b = take(b_doc);
    int found = -1;
    char* witness = nullptr;
    REQUIRE(nfa_oracle_iso(a.c_str(), b.c_str(), 7, &witness, &found) == NFA_OK);
    CHECK(found == 0);
    CHECK(witness == nullptr);
    REQUIRE(nfa_oracle_iso(a.c_str(), a.c_str(), 7, &witness, &found) == NFA_OK);
    CHECK(found == 1);
    json wj = json::parse(take(witness));
    CHECK(wj.at("A").size() == 4);

    char* audit = nullptr;
    REQUIRE(nfa_oracle_audit(4, 2, 7, &audit) == NFA_OK);
    CHECK(!json::parse(take(audit)).at("steps").empty());
}
