#include "doctest.h"

#include <cmath>
#include <random>

#include "l2alex/catalog.hpp"
#include "l2alex/errors.hpp"
#include "l2alex/invariant_expr.hpp"

using namespace l2alex;

namespace {

KnotSpec random_spec(std::mt19937& rng, int depth) {
    if (depth == 0 || rng() % 3 == 0) {
        const char* leaves[] = {"unknot", "3_1", "4_1", "5_2", "T(2,5)", "T(3,5)"};
        return KnotSpec::catalog(leaves[rng() % 6]);
    }
    switch (rng() % 4) {
        case 0:
            return KnotSpec::sum(random_spec(rng, depth - 1), random_spec(rng, depth - 1));
        case 1: {
            static const int ps[] = {2, 3, -2, 5, 1};
            static const int qs[] = {1, 3, 5, -3};
            int p = ps[rng() % 5];
            int q = qs[rng() % 4];
            while (std::gcd(p, q) != 1) q = (q % 7) + 1;
            return KnotSpec::cable(p, q, random_spec(rng, depth - 1));
        }
        case 2:
            return KnotSpec::mirror(random_spec(rng, depth - 1));
        default:
            return KnotSpec::reverse(random_spec(rng, depth - 1));
    }
}

} // namespace

TEST_CASE("expression construction from knot specs") {
    CHECK(expr_of(KnotSpec::catalog("unknot")).kind() == InvariantExpr::Kind::torus_base);
    CHECK(expr_of(KnotSpec::catalog("unknot")).base_genus() == 0);
    CHECK(expr_of(KnotSpec::catalog("3_1")).base_genus() == 1);
    CHECK(expr_of(KnotSpec::catalog("4_1")).kind() == InvariantExpr::Kind::hyperbolic_base);

    InvariantExpr k0 = expr_of(KnotSpec::cable(2, 1, KnotSpec::catalog("4_1")));
    CHECK(k0.kind() == InvariantExpr::Kind::cable_map);
    CHECK((std::abs(k0.p()) - 1) * (std::abs(k0.q()) - 1) == 0);

    CHECK(expr_of(KnotSpec::mirror(KnotSpec::catalog("3_1"))).kind() ==
          InvariantExpr::Kind::recip);

    CHECK_THROWS_AS(expr_of(KnotSpec::catalog("K12n242")), validation_error);
    CHECK_THROWS_AS(expr_of(KnotSpec::braid(parse_braid("s1"))), validation_error);
}

TEST_CASE("genus, volume and value at 1") {
    for (int n : {0, 2, 4}) {
        auto [jn, kn] = build_family(n);
        long long p = nth_prime(n);
        InvariantExpr je = expr_of(jn);
        InvariantExpr ke = expr_of(kn);
        CHECK(genus_of(je) == p);
        CHECK(genus_of(ke) == p);
        CHECK(volume_of(je) == doctest::Approx(kVolumeFigureEight).epsilon(1e-12));
        CHECK(volume_of(ke) == doctest::Approx(kVolumeFigureEight).epsilon(1e-12));
    }
    // g(C_{2,3}(unknot)) = 1, the trefoil pattern
    CHECK(genus_of(expr_of(KnotSpec::cable(2, 3, KnotSpec::catalog("unknot")))) == 1);
    CHECK(volume_of(expr_of(KnotSpec::cable(2, 3, KnotSpec::catalog("unknot")))) == 0.0);
    CHECK(value_at_1(expr_of(KnotSpec::catalog("4_1"))) ==
          doctest::Approx(1.113).epsilon(1e-3));
}

TEST_CASE("lambda extraction") {
    auto [j2, k2] = build_family(2);  // p = 5
    CHECK(lambda_of(expr_of(j2)) == Lambda::power(Rational::integer(1)));
    CHECK(lambda_of(expr_of(k2)) == Lambda::power(Rational(1, 5)));
    CHECK(lambda_of(expr_of(KnotSpec::cable(2, 3, KnotSpec::catalog("3_1")))) ==
          Lambda::one());
    CHECK_THROWS_AS(lambda_of(expr_of(KnotSpec::catalog("5_2"))), undefined_lambda_error);

    // sums with iterated torus knots preserve lambda
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        KnotSpec spec = random_spec(rng, 3);
        InvariantExpr e = expr_of(spec);
        Lambda l;
        try {
            l = lambda_of(e);
        } catch (const undefined_lambda_error&) {
            continue;
        }
        InvariantExpr summed =
            InvariantExpr::product(e, InvariantExpr::torus_base(1 + trial % 3));
        CHECK(lambda_of(summed) == l);
    }
}

TEST_CASE("lambda string round trip") {
    for (Lambda l : {Lambda::one(), Lambda::power(Rational::integer(1)),
                     Lambda::power(Rational(1, 7)), Lambda::unknown(), Lambda::undefined()}) {
        CHECK(Lambda::from_string(l.to_string()) == l);
    }
    CHECK_THROWS_AS(Lambda::from_string("garbage"), validation_error);
}

TEST_CASE("formula genus equals half the semantic tail span on random trees") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        KnotSpec spec = random_spec(rng, 5);
        InvariantExpr e = expr_of(spec);
        TailDegrees d = tail_degrees(e);
        CHECK(d.deg_inf - d.deg_zero == 2LL * genus_of(e));
    }
}

TEST_CASE("volume is invariant under cables and recips, additive under products") {
    std::mt19937 rng(67);
    for (int trial = 0; trial < 50; ++trial) {
        KnotSpec spec = random_spec(rng, 3);
        InvariantExpr e = expr_of(spec);
        double v = volume_of(e);
        CHECK(volume_of(InvariantExpr::cable_map(3, 2, e)) == doctest::Approx(v));
        CHECK(volume_of(InvariantExpr::recip(e)) == doctest::Approx(v));
        CHECK(volume_of(InvariantExpr::product(e, e)) == doctest::Approx(2 * v));
    }
}

TEST_CASE("pointwise evaluation in certified regions") {
    InvariantExpr tref = expr_of(KnotSpec::catalog("3_1"));
    CHECK(eval_expr(tref, 0.5)->value == doctest::Approx(1.0));
    CHECK(eval_expr(tref, 2.0)->value == doctest::Approx(4.0));
    CHECK(eval_expr(tref, 2.0)->exact);

    InvariantExpr fig8 = expr_of(KnotSpec::catalog("4_1"));
    CHECK(eval_expr(fig8, 0.25)->value == doctest::Approx(1.0));
    CHECK(eval_expr(fig8, 4.0)->value == doctest::Approx(16.0));
    CHECK(eval_expr(fig8, 1.0)->value == doctest::Approx(1.1137).epsilon(1e-4));
    CHECK_FALSE(eval_expr(fig8, 2.0).has_value());  // inside the uncertified window
}

TEST_CASE("equivalence decisions") {
    auto [j0, k0] = build_family(0);
    EquivalenceResult jk = equivalent(expr_of(j0), expr_of(k0));
    CHECK_FALSE(jk.equivalent);
    CHECK(jk.exact);

    // monomial shifts are invisible: recip of a torus base is a shifted copy
    InvariantExpr t1 = InvariantExpr::torus_base(1);
    EquivalenceResult shifted = equivalent(t1, InvariantExpr::recip(t1));
    CHECK(shifted.equivalent);
    CHECK(shifted.exact);
    CHECK(shifted.shift == 2);

    CHECK_FALSE(equivalent(InvariantExpr::torus_base(1), InvariantExpr::torus_base(2))
                    .equivalent);

    // Recip(Recip(e)) is equivalent to e, including hyperbolic leaves
    std::mt19937 rng(91);
    for (int trial = 0; trial < 30; ++trial) {
        InvariantExpr e = expr_of(random_spec(rng, 3));
        InvariantExpr rr = InvariantExpr::recip(InvariantExpr::recip(e));
        EquivalenceResult res = equivalent(e, rr);
        CHECK(res.equivalent);
    }
}

TEST_CASE("summaries validate and round trip through JSON") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        InvariantExpr e = expr_of(random_spec(rng, 4));
        InvariantSummary s = summarize(e);
        s.validate();
        CHECK(std::abs(s.value_at_1 - exp_vol_over_6pi(s.volume)) <= 1e-9);
        InvariantSummary back = InvariantSummary::from_json(s.to_json());
        CHECK(back.genus == s.genus);
        CHECK(back.volume == doctest::Approx(s.volume).epsilon(1e-12));
        CHECK(back.lambda == s.lambda);
        CHECK(back.leading_C == s.leading_C);
        CHECK(back.monomial_tails == s.monomial_tails);
    }
}

TEST_CASE("summary JSON error paths") {
    CHECK_THROWS_AS(InvariantSummary::from_json(nlohmann::json::object()), validation_error);
    CHECK_THROWS_AS(
        InvariantSummary::from_json({{"genus", 1}, {"volume", 2.0}, {"value_at_1", 9.0}}),
        validation_error);
    // volume alone is enough
    InvariantSummary s =
        InvariantSummary::from_json({{"genus", 1}, {"volume", kVolumeFigureEight}});
    CHECK(s.value_at_1 == doctest::Approx(1.1137).epsilon(1e-4));
}

TEST_CASE("catalog summaries") {
    InvariantSummary fig8 = summary_of_catalog("4_1");
    CHECK(fig8.lambda == Lambda::power(Rational::integer(1)));
    CHECK(fig8.monomial_tails == true);
    CHECK(fig8.leading_C == 1.0);

    InvariantSummary fiveTwo = summary_of_catalog("5_2");
    CHECK(fiveTwo.lambda == Lambda::undefined());
    CHECK_FALSE(fiveTwo.monomial_tails.has_value());

    InvariantSummary k12 = summary_of_catalog("K12n242");
    CHECK(k12.genus == 5);
    CHECK(k12.lambda == Lambda::unknown());
    CHECK(k12.monomial_tails == true);
}
