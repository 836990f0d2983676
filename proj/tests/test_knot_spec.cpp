#include "doctest.h"

#include "l2alex/errors.hpp"
#include "l2alex/knot_spec.hpp"

using namespace l2alex;

TEST_CASE("knot spec JSON round trip") {
    const std::string text =
        R"({"type":"cable","p":2,"q":1,"companion":{"type":"catalog","name":"4_1"}})";
    KnotSpec k = KnotSpec::parse(text);
    CHECK(k.kind() == KnotSpec::Kind::cable);
    CHECK(k.p() == 2);
    CHECK(k.q() == 1);
    CHECK(k.inner().kind() == KnotSpec::Kind::catalog);
    CHECK(k.inner().name() == "4_1");

    nlohmann::json j = k.to_json();
    KnotSpec back = KnotSpec::from_json(j);
    CHECK(back.to_json() == j);
}

TEST_CASE("spec shorthands and validation") {
    CHECK(KnotSpec::parse("catalog:unknot").name() == "unknot");
    CHECK(KnotSpec::parse("braid:s1 s1 s1").kind() == KnotSpec::Kind::braid);

    CHECK_THROWS_AS(KnotSpec::catalog("bogus"), validation_error);
    CHECK_THROWS_AS(KnotSpec::cable(0, 1, KnotSpec::catalog("4_1")), validation_error);
    CHECK_THROWS_AS(KnotSpec::cable(2, 4, KnotSpec::catalog("4_1")), validation_error);
    CHECK_THROWS_AS(KnotSpec::parse("{\"type\":\"nope\"}"), validation_error);
    CHECK_THROWS_AS(KnotSpec::parse("{not json"), parse_error);
}

TEST_CASE("mirror and reverse nest") {
    KnotSpec m = KnotSpec::mirror(KnotSpec::reverse(KnotSpec::catalog("3_1")));
    CHECK(m.kind() == KnotSpec::Kind::mirror);
    CHECK(m.inner().kind() == KnotSpec::Kind::reverse);
    CHECK(m.inner().inner().name() == "3_1");
}

TEST_CASE("primes by trial division") {
    CHECK(nth_prime(0) == 2);
    CHECK(nth_prime(1) == 3);
    CHECK(nth_prime(2) == 5);
    CHECK(nth_prime(4) == 11);
    CHECK(nth_prime(10) == 31);
}

TEST_CASE("family construction") {
    auto [j0, k0] = build_family(0);
    CHECK(j0.kind() == KnotSpec::Kind::sum);
    CHECK(j0.left().name() == "4_1");
    CHECK(j0.right().name() == "3_1");
    CHECK(k0.kind() == KnotSpec::Kind::cable);
    CHECK(k0.p() == 2);
    CHECK(k0.q() == 1);
    CHECK(k0.inner().name() == "4_1");

    auto [j2, k2] = build_family(2);
    int trefoils = 0;
    const KnotSpec* cur = &j2;
    while (cur->kind() == KnotSpec::Kind::sum) {
        CHECK(cur->right().name() == "3_1");
        ++trefoils;
        cur = &cur->left();
    }
    CHECK(cur->name() == "4_1");
    CHECK(trefoils == 4);
    CHECK(k2.p() == 5);
}
