#include "doctest.h"

#include <random>

#include "l2alex/group_ring.hpp"

using namespace l2alex;

namespace {

GroupRingElement gen(int g, int e = 1) { return GroupRingElement::term(Word::generator(g, e), 1.0); }

GroupRingElement random_element(std::mt19937& rng, int gens = 2, int maxTerms = 3,
                                int maxLen = 3) {
    std::vector<GroupRingElement::Term> terms;
    int n = 1 + static_cast<int>(rng() % maxTerms);
    for (int i = 0; i < n; ++i) {
        Word w;
        int len = static_cast<int>(rng() % (maxLen + 1));
        for (int k = 0; k < len; ++k)
            w.append_run(static_cast<int>(rng() % gens), (rng() % 2) ? 1 : -1);
        double c = static_cast<double>(static_cast<int>(rng() % 7) - 3);
        if (c == 0.0) c = 1.0;
        terms.push_back({w, c});
    }
    return GroupRingElement::from_terms(std::move(terms));
}

} // namespace

TEST_CASE("ring multiplication examples") {
    GroupRingElement e = GroupRingElement::one();
    CHECK(gen(0) * gen(0, -1) == e);
    // (1 - g)(1 + g) = 1 - g^2
    GroupRingElement g = gen(0);
    CHECK((e - g) * (e + g) == e - gen(0, 2));
    // (g + h) g^{-1} = e + h g^{-1}
    GroupRingElement h = gen(1);
    GroupRingElement hginv = GroupRingElement::term(
        Word::generator(1) * Word::generator(0, -1), 1.0);
    CHECK((g + h) * gen(0, -1) == e + hginv);
}

TEST_CASE("adjoint examples and involution") {
    GroupRingElement x = 2.0 * gen(0) - 3.0 * gen(1);
    GroupRingElement expected = 2.0 * gen(0, -1) - 3.0 * gen(1, -1);
    CHECK(x.adjoint() == expected);
    CHECK(GroupRingElement::one().adjoint() == GroupRingElement::one());

    std::mt19937 rng(11);
    for (int i = 0; i < 50; ++i) {
        GroupRingElement r = random_element(rng);
        CHECK(r.adjoint().adjoint() == r);
        CHECK(r.adjoint().l1_norm() == doctest::Approx(r.l1_norm()).epsilon(1e-12));
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(23);
    GroupRingElement e = GroupRingElement::one();
    for (int i = 0; i < 60; ++i) {
        GroupRingElement a = random_element(rng);
        GroupRingElement b = random_element(rng);
        GroupRingElement c = random_element(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * e == a);
        CHECK(e * a == a);
    }
}

TEST_CASE("l1 norm is submultiplicative and adjoint-invariant") {
    std::mt19937 rng(37);
    for (int i = 0; i < 60; ++i) {
        GroupRingElement a = random_element(rng);
        GroupRingElement b = random_element(rng);
        CHECK((a * b).l1_norm() <= a.l1_norm() * b.l1_norm() + 1e-9);
    }
}

TEST_CASE("coefficient access") {
    GroupRingElement x = 2.5 * gen(0) + GroupRingElement::one();
    CHECK(x.identity_coeff() == 1.0);
    CHECK(x.coeff(Word::generator(0)) == 2.5);
    CHECK(x.coeff(Word::generator(1)) == 0.0);
    CHECK(x.size() == 2);
    CHECK(GroupRingElement::zero().is_zero());
    // zero coefficients are dropped
    CHECK((x - x).is_zero());
}
