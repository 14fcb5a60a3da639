#ifndef GWKAPPA_QUANTUM_COHOMOLOGY_HPP
#define GWKAPPA_QUANTUM_COHOMOLOGY_HPP

#include <gwkappa/formal_series.hpp>
#include <gwkappa/frobenius_ring.hpp>
#include <gwkappa/rational.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gwk {

/* Number of rational plane curves of degree d through 3d-1 general points:
   1, 1, 12, 620, 87304, ...  Computed by the quadratic recursion that WDVV
   forces on the degree-d counts. */
inline bigint kontsevich_nd(int d)
{
    if (d < 1)
        throw std::invalid_argument("kontsevich_nd: degree must be >= 1");
    static std::map<int, bigint> cache{{1, bigint(1)}};
    auto it = cache.find(d);
    if (it != cache.end())
        return it->second;
    bigint nd = 0;
    for (int d1 = 1; d1 < d; ++d1) {
        int d2 = d - d1;
        bigint a = kontsevich_nd(d1) * kontsevich_nd(d2);
        bigint b = bigint(d1) * d1 * bigint(d2) * d2 * binomial(3 * d - 4, 3 * d1 - 2);
        bigint c = bigint(d1) * d1 * d1 * bigint(d2) * binomial(3 * d - 4, 3 * d1 - 1);
        nd += a * (b - c);
    }
    cache.emplace(d, nd);
    return nd;
}

/* ------------------------------------------------------------------ *
 * The genus-zero primary potential on the small phase space: the classical
 * triple-product cubic plus the quantum corrections.
 *
 *   point:  x0^3/6
 *   line:   x0^2 x1 / 2 + q e^{x1}
 *   plane:  (x0^2 x2 + x0 x1^2)/2 + sum_d N_d q^d e^{d x1} x2^{3d-1}/(3d-1)!
 * ------------------------------------------------------------------ */

inline TruncatedSeries small_potential(const FrobeniusRing& ring, int max_order, int max_q)
{
    TruncationPolicy p = make_policy(max_order, 0, max_q);
    TruncatedSeries phi = series_zero(p);

    /* classical part: sum over unordered triples, divided by the number of
       repetitions, so that coefficients are those of the exponential
       generating function */
    for (int a = 0; a < ring.rank; ++a)
        for (int b = a; b < ring.rank; ++b)
            for (int c = b; c < ring.rank; ++c) {
                rational cubic = 0;
                for (int m = 0; m < ring.rank; ++m)
                    cubic += ring.c(a, b, m) * ring.eta(m, c);
                if (cubic == 0)
                    continue;
                int rep = 1;
                if (a == b && b == c)
                    rep = 6;
                else if (a == b || b == c)
                    rep = 2;
                Monomial mono = monomial(xvar(a)).times(xvar(b), 1).times(xvar(c), 1);
                phi = add(phi, series_monomial(p, mono, cubic / rep));
            }

    if (ring.rank == 2 && max_q >= 1) {
        /* q * exp(x1): one section count in each degree-one configuration */
        for (int k = 0; k <= max_order; ++k) {
            Monomial mono = monomial(qvar()).times(xvar(1), k);
            phi = add(phi, series_monomial(p, mono, rational(1) / rational(factorial(static_cast<unsigned>(k)))));
        }
    } else if (ring.rank == 3) {
        for (int d = 1; d <= max_q; ++d) {
            if (3 * d - 1 > max_order)
                break;
            rational base = rational(kontsevich_nd(d)) / rational(factorial(static_cast<unsigned>(3 * d - 1)));
            rational dpow = 1; // d^k / k!, built incrementally
            for (int k = 0; 3 * d - 1 + k <= max_order; ++k) {
                if (k > 0)
                    dpow = dpow * d / k;
                Monomial mono = monomial(qvar(), d).times(xvar(1), k).times(xvar(2), 3 * d - 1);
                phi = add(phi, series_monomial(p, mono, base * dpow));
            }
        }
    }
    return phi;
}

/* ------------------------------------------------------------------ *
 * Associativity of the quantum product, as the symmetry of
 *     W(a,b;c,d) = sum_{e,f} phi_abe eta^{ef} phi_fcd
 * under swapping a and c.  Violations are reported coefficientwise.
 * ------------------------------------------------------------------ */

struct WdvvViolation {
    int a = 0, b = 0, c = 0, d = 0;
    Monomial monomial;
    rational lhs, rhs;
};

inline std::vector<WdvvViolation> wdvv_violations(const FrobeniusRing& ring, const TruncatedSeries& phi)
{
    const int r = ring.rank;
    std::vector<std::vector<std::vector<TruncatedSeries>>> third(
        r, std::vector<std::vector<TruncatedSeries>>(r, std::vector<TruncatedSeries>(r, series_zero(phi.policy))));
    for (int a = 0; a < r; ++a) {
        TruncatedSeries da = partial_derivative(phi, xvar(a));
        for (int b = a; b < r; ++b) {
            TruncatedSeries dab = partial_derivative(da, xvar(b));
            for (int c = b; c < r; ++c) {
                TruncatedSeries dabc = partial_derivative(dab, xvar(c));
                int idx[3] = {a, b, c};
                /* store under every permutation */
                std::sort(idx, idx + 3);
                do
                    third[idx[0]][idx[1]][idx[2]] = dabc;
                while (std::next_permutation(idx, idx + 3));
            }
        }
    }
    auto w = [&](int a, int b, int c, int d) {
        TruncatedSeries acc = series_zero(phi.policy);
        for (int e = 0; e < r; ++e)
            for (int f = 0; f < r; ++f) {
                const rational& ef = ring.eta_inv(e, f);
                if (ef == 0)
                    continue;
                acc = add(acc, mul_scalar(mul(third[a][b][e], third[f][c][d]), ef));
            }
        return acc;
    };
    std::vector<WdvvViolation> out;
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                for (int d = 0; d < r; ++d) {
                    if (a >= c)
                        continue; // swap symmetry is trivial or already covered
                    for (const auto& mm : trusted_mismatches(w(a, b, c, d), w(c, b, a, d)))
                        out.push_back({a, b, c, d, mm.monomial, mm.lhs, mm.rhs});
                }
    return out;
}

} // namespace gwk

#endif
