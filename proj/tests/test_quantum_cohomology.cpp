#include <catch2/catch_amalgamated.hpp>

#include <gwkappa/correlators.hpp>
#include <gwkappa/quantum_cohomology.hpp>

#include <vector>

using namespace gwk;

namespace {

/* Rational-curve counts recomputed from scratch: local Pascal triangle,
   local memo, no shared helpers with the library. */
bigint local_nd(int d)
{
    static std::vector<std::vector<bigint>> pascal{{1}};
    auto choose = [&](int n, int k) -> bigint {
        if (k < 0 || k > n)
            return 0;
        while (static_cast<int>(pascal.size()) <= n) {
            const auto& prev = pascal.back();
            std::vector<bigint> row(prev.size() + 1, bigint(1));
            for (std::size_t i = 1; i < prev.size(); ++i)
                row[i] = prev[i - 1] + prev[i];
            pascal.push_back(std::move(row));
        }
        return pascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    };
    static std::vector<bigint> memo{0, 1}; // memo[d], d >= 1
    while (static_cast<int>(memo.size()) <= d) {
        const int m = static_cast<int>(memo.size());
        bigint total = 0;
        for (int d1 = 1; d1 < m; ++d1) {
            const int d2 = m - d1;
            bigint square = bigint(d1) * d1 * bigint(d2) * d2 * choose(3 * m - 4, 3 * d1 - 2);
            bigint cube = bigint(d1) * bigint(d1) * d1 * bigint(d2) * choose(3 * m - 4, 3 * d1 - 1);
            total += memo[static_cast<std::size_t>(d1)] * memo[static_cast<std::size_t>(d2)] * (square - cube);
        }
        memo.push_back(total);
    }
    return memo[static_cast<std::size_t>(d)];
}

} // namespace

TEST_CASE("rational curve counts: frozen values and an independent recursion")
{
    CHECK(kontsevich_nd(1) == 1);
    CHECK(kontsevich_nd(2) == 1);
    CHECK(kontsevich_nd(3) == 12);
    CHECK(kontsevich_nd(4) == 620);
    CHECK(kontsevich_nd(5) == 87304);

    for (int d = 1; d <= 7; ++d)
        CHECK(kontsevich_nd(d) == local_nd(d));

    CHECK_THROWS_AS(kontsevich_nd(0), std::invalid_argument);
    CHECK_THROWS_AS(kontsevich_nd(-3), std::invalid_argument);
}

TEST_CASE("curve counts agree with point-condition correlators")
{
    /* same numbers out of a different pipeline: the genus-0 recursion on
       descendent correlators, with 3d-1 point-class insertions */
    CorrelatorEngine engine(make_projective_ring(2));
    for (int d = 1; d <= 4; ++d) {
        CorrelatorKey k;
        k.genus = 0;
        k.degree = d;
        k.sigma.assign(static_cast<std::size_t>(3 * d - 1), 2);
        CHECK(engine.correlator(k) == rational(kontsevich_nd(d)));
    }
}

TEST_CASE("small-phase potential of the point")
{
    TruncatedSeries phi = small_potential(make_point_ring(), 5, 0);
    CHECK(phi.terms.size() == 1);
    CHECK(coefficient(phi, monomial(xvar(0), 3)) == rational(1, 6));
}

TEST_CASE("small-phase potential of the line")
{
    TruncatedSeries phi = small_potential(make_projective_ring(1), 6, 2);
    CHECK(coefficient(phi, monomial(xvar(0), 2).times(xvar(1), 1)) == rational(1, 2));
    CHECK(coefficient(phi, monomial(xvar(0), 3)) == 0);
    CHECK(coefficient(phi, monomial(qvar())) == 1);
    CHECK(coefficient(phi, monomial(qvar()).times(xvar(1), 1)) == 1);
    CHECK(coefficient(phi, monomial(qvar()).times(xvar(1), 3)) == rational(1, 6));
    for (const auto& [m, c] : phi.terms)
        CHECK(m.q_exponent() <= 1); // no multiple covers contribute
}

TEST_CASE("small-phase potential of the plane")
{
    TruncatedSeries phi = small_potential(make_projective_ring(2), 6, 2);
    CHECK(coefficient(phi, monomial(xvar(0), 2).times(xvar(2), 1)) == rational(1, 2));
    CHECK(coefficient(phi, monomial(xvar(0), 1).times(xvar(1), 2)) == rational(1, 2));
    CHECK(coefficient(phi, monomial(xvar(0), 3)) == 0);
    /* degree d contributes N_d q^d e^{d x1} x2^{3d-1} / (3d-1)! */
    CHECK(coefficient(phi, monomial(qvar()).times(xvar(2), 2)) == rational(1, 2));
    CHECK(coefficient(phi, monomial(qvar()).times(xvar(1), 1).times(xvar(2), 2)) == rational(1, 2));
    CHECK(coefficient(phi, monomial(qvar()).times(xvar(1), 2).times(xvar(2), 2)) == rational(1, 4));
    CHECK(coefficient(phi, monomial(qvar(), 2).times(xvar(2), 5)) == rational(1, 120));
    CHECK(coefficient(phi, monomial(qvar(), 2).times(xvar(1), 1).times(xvar(2), 5)) == rational(1, 60));
}

TEST_CASE("associativity holds for the shipped potentials and fails when tampered")
{
    CHECK(wdvv_violations(make_point_ring(), small_potential(make_point_ring(), 5, 0)).empty());
    CHECK(wdvv_violations(make_projective_ring(1), small_potential(make_projective_ring(1), 6, 2)).empty());

    FrobeniusRing plane = make_projective_ring(2);
    TruncatedSeries phi = small_potential(plane, 6, 2);
    CHECK(wdvv_violations(plane, phi).empty());

    /* quadratic-in-x terms are invisible to the associativity equation (it
       only sees third derivatives), so corrupt a cubic-reachable one: the
       degree-2 count, which the degree-1 block forces */
    TruncatedSeries bad = add(phi, series_monomial(phi.policy, monomial(qvar(), 2).times(xvar(2), 5), rational(1, 7)));
    auto violations = wdvv_violations(plane, bad);
    REQUIRE(!violations.empty());
    for (const auto& v : violations)
        CHECK(v.lhs != v.rhs);
}
