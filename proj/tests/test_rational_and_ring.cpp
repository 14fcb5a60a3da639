#include <catch2/catch_amalgamated.hpp>

#include <gwkappa/frobenius_ring.hpp>
#include <gwkappa/rational.hpp>
#include <gwkappa/serialization.hpp>

#include "support/ring_axiom_sweep.hpp"

using namespace gwk;

TEST_CASE("rational string round trips")
{
    CHECK(rational_to_string(rational(3, 2)) == "3/2");
    CHECK(rational_to_string(rational(-7)) == "-7");
    CHECK(rational_to_string(rational(0)) == "0");

    CHECK(rational_from_string("3/2") == rational(3, 2));
    CHECK(rational_from_string("-7") == rational(-7));
    CHECK(rational_from_string("0") == 0);
    CHECK(rational_from_string("2/4") == rational(1, 2));   // canonicalized
    CHECK(rational_from_string("-2/-4") == rational(1, 2)); // sign normalized
    CHECK(rational_from_string("4/-6") == rational(-2, 3));

    for (const char* bad : {"", "1/", "/2", "1/0", "abc", "1 /2", "1/2/3", "1.5"})
        CHECK_THROWS_AS(rational_from_string(bad), std::invalid_argument);

    /* the canonical form survives a full loop */
    for (const rational& x : {rational(0), rational(5), rational(-1, 24), rational(87304, 120)})
        CHECK(rational_from_string(rational_to_string(x)) == x);
}

TEST_CASE("factorial and binomial")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(12) == 479001600);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(10, 10) == 1);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(40, 20) == bigint("137846528820"));
    /* Pascal rule on a grid */
    for (unsigned n = 1; n <= 12; ++n)
        for (unsigned k = 1; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("shipped rings pass validation")
{
    for (const FrobeniusRing& ring : {make_point_ring(), make_projective_ring(1), make_projective_ring(2)}) {
        RingValidation v = validate_ring(ring);
        INFO((v.violations.empty() ? std::string("ok") : v.violations.front()));
        CHECK(v.pass);
    }
    CHECK_THROWS_AS(make_projective_ring(3), std::invalid_argument);
    CHECK(make_point_ring().dimension() == 0);
    CHECK(make_projective_ring(1).dimension() == 1);
    CHECK(make_projective_ring(2).dimension() == 2);
}

TEST_CASE("ring products and pairing behave like H*(P^2)")
{
    FrobeniusRing r = make_projective_ring(2);
    RingElement e1 = {0, 1, 0};
    RingElement e2 = {0, 0, 1};
    RingElement h2 = multiply(r, e1, e1);
    CHECK(h2 == e2);
    RingElement h3 = multiply(r, e1, e2);
    CHECK(h3 == RingElement{0, 0, 0}); // H^3 = 0

    CHECK(multiply_iterated(r, {1, 1}) == e2);
    CHECK(multiply_iterated(r, {1, 1, 1}) == RingElement{0, 0, 0});
    CHECK_THROWS(multiply_iterated(r, {}));
    CHECK_THROWS(multiply_iterated(r, {3}));

    /* integration picks out the top-degree coefficient */
    CHECK(integrate(r, {5, 7, 11}) == 11);

    /* index raising then lowering is the identity */
    for (int a = 0; a < r.rank; ++a) {
        RingElement basis(static_cast<std::size_t>(r.rank), 0);
        basis[static_cast<std::size_t>(a)] = 1;
        CHECK(lower_index(r, raise_index(r, basis)) == basis);
    }
}

TEST_CASE("every single-constant perturbation of the projective-plane ring is caught")
{
    auto undetected = gwk_tests::undetected_ring_perturbations(make_projective_ring(2));
    INFO((undetected.empty() ? std::string("all caught") : undetected.front()));
    CHECK(undetected.empty());
}

TEST_CASE("perturbation sweep also covers the line and the point")
{
    CHECK(gwk_tests::undetected_ring_perturbations(make_projective_ring(1)).empty());
    /* rank one: the three perturbations that exist are all caught */
    CHECK(gwk_tests::undetected_ring_perturbations(make_point_ring()).empty());
}

TEST_CASE("specific perturbations fail for the expected reasons")
{
    /* e_1 e_1 = e_2 + e_1 is a Frobenius algebra; only the grading axiom
       rejects it */
    FrobeniusRing r = make_projective_ring(2);
    r.c(1, 1, 1) += 1;
    RingValidation v = validate_ring(r);
    CHECK_FALSE(v.pass);
    bool grading_mentioned = false;
    for (const auto& s : v.violations)
        grading_mentioned = grading_mentioned || s.find("grading") != std::string::npos;
    CHECK(grading_mentioned);

    /* losing commutativity */
    FrobeniusRing r2 = make_projective_ring(2);
    r2.c(1, 2, 0) += 1;
    CHECK_FALSE(validate_ring(r2).pass);

    /* breaking the pairing inverse */
    FrobeniusRing r3 = make_projective_ring(2);
    r3.pairing_inverse[1] += 1;
    CHECK_FALSE(validate_ring(r3).pass);
}

TEST_CASE("ring JSON round trip")
{
    for (const FrobeniusRing& ring : {make_point_ring(), make_projective_ring(1), make_projective_ring(2)}) {
        ordered_json j = ring_to_json(ring);
        FrobeniusRing back = ring_from_json(j);
        CHECK(back == ring); // includes the recomputed pairing inverse
        CHECK(validate_ring(back).pass);
    }
}

TEST_CASE("ring JSON rejects malformed input")
{
    ordered_json j = ring_to_json(make_projective_ring(1));
    ordered_json wrong_rank = j;
    wrong_rank["rank"] = 3;
    CHECK_THROWS_AS(ring_from_json(wrong_rank), std::invalid_argument);

    ordered_json missing = j;
    missing.erase("pairing");
    CHECK_THROWS_AS(ring_from_json(missing), std::invalid_argument);

    ordered_json bad_coeff = j;
    bad_coeff["structure_constants"][0][0][0] = "1/";
    CHECK_THROWS_AS(ring_from_json(bad_coeff), std::invalid_argument);

    /* a singular pairing loads with a zero inverse, and the audit flags it */
    ordered_json singular = j;
    for (auto& row : singular["pairing"])
        for (auto& cell : row)
            cell = "0";
    FrobeniusRing degenerate = ring_from_json(singular);
    CHECK_FALSE(validate_ring(degenerate).pass);
}
