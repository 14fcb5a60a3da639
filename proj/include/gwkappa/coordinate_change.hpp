#ifndef GWKAPPA_COORDINATE_CHANGE_HPP
#define GWKAPPA_COORDINATE_CHANGE_HPP

#include <gwkappa/formal_series.hpp>
#include <gwkappa/frobenius_ring.hpp>

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gwk {

/* ------------------------------------------------------------------ *
 * The change of coordinates between descendent times t_d^mu and the
 * modified-kappa times s_a^alpha.  Both directions are cut out by one
 * ring-valued identity in an even parameter theta:
 *
 *     e_0 - sum_{d>=1} theta^{d-1} t_d^mu e_mu
 *         = exp( - sum_{a>=0} theta^a s_a^alpha e_alpha ).
 *
 * Reading off theta coefficients of the exponential gives t(s); solving
 * with the logarithm gives s(t).  Both are exact polynomial tables up to
 * the configured adic order.
 * ------------------------------------------------------------------ */

namespace detail {

using RingSeries = std::vector<TruncatedSeries>; // one scalar series per basis coordinate

inline RingSeries ring_series_zero(const FrobeniusRing& ring, const TruncationPolicy& p)
{
    return RingSeries(static_cast<std::size_t>(ring.rank), series_zero(p));
}

inline RingSeries ring_series_mul(const FrobeniusRing& ring, const RingSeries& a, const RingSeries& b)
{
    RingSeries out = ring_series_zero(ring, a.at(0).policy);
    for (int i = 0; i < ring.rank; ++i)
        for (int j = 0; j < ring.rank; ++j) {
            if (a[i].is_zero() || b[j].is_zero())
                continue;
            TruncatedSeries prod = mul(a[i], b[j]);
            for (int m = 0; m < ring.rank; ++m) {
                const rational& cijm = ring.c(i, j, m);
                if (cijm != 0)
                    out[m] = add(out[m], mul_scalar(prod, cijm));
            }
        }
    return out;
}

inline bool ring_series_is_zero(const RingSeries& a)
{
    for (const auto& s : a)
        if (!s.is_zero())
            return false;
    return true;
}

/* exp of a constant-free ring-valued series (componentwise constant-free) */
inline RingSeries ring_series_exp(const FrobeniusRing& ring, const RingSeries& a)
{
    const TruncationPolicy& p = a.at(0).policy;
    RingSeries out = ring_series_zero(ring, p);
    out[0] = series_constant(p, 1); // the ring identity e_0
    RingSeries power = out;
    const int bound = p.max_order + p.max_theta + p.max_q;
    rational kfact = 1;
    for (int k = 1; k <= bound; ++k) {
        power = ring_series_mul(ring, power, a);
        if (ring_series_is_zero(power))
            break;
        kfact *= k;
        for (int m = 0; m < ring.rank; ++m)
            out[m] = add(out[m], mul_scalar(power[m], rational(1) / kfact));
    }
    return out;
}

/* log(e_0 + u) for a constant-free ring-valued u */
inline RingSeries ring_series_log1p(const FrobeniusRing& ring, const RingSeries& u)
{
    const TruncationPolicy& p = u.at(0).policy;
    RingSeries out = ring_series_zero(ring, p);
    RingSeries power = ring_series_zero(ring, p);
    power[0] = series_constant(p, 1);
    const int bound = p.max_order + p.max_theta + p.max_q;
    for (int k = 1; k <= bound; ++k) {
        power = ring_series_mul(ring, power, u);
        if (ring_series_is_zero(power))
            break;
        rational c = rational((k % 2 == 1) ? 1 : -1) / k;
        for (int m = 0; m < ring.rank; ++m)
            out[m] = add(out[m], mul_scalar(power[m], c));
    }
    return out;
}

/* Coefficient of theta^k, as a series over the remaining variables.  Claims
   full trust on the slice; sound here because both defining equations are
   theta-graded (a theta^k slice only holds monomials of theta weight k, so
   the doubled internal budget of the caller retains every contribution). */
inline TruncatedSeries theta_slice(const TruncatedSeries& a, int k, const TruncationPolicy& slice_policy)
{
    TruncatedSeries out = series_zero(slice_policy);
    out.policy.trust_order = slice_policy.max_order;
    out.policy.trust_theta = slice_policy.max_theta;
    out.policy.trust_q = slice_policy.max_q;
    for (const auto& [m, c] : a.terms) {
        if (m.exponent(theta_var()) != k)
            continue;
        out.terms[m.times(theta_var(), -k)] = c;
    }
    out.val = {0, 0, 0};
    detail::prune(out);
    return out;
}

} // namespace detail

struct CoordinateChange {
    FrobeniusRing ring;
    int order = 0;     // adic order of the tables in the s (resp. t) variables
    int theta_cap = 0; // levels kept: t_d for 1 <= d <= theta_cap+1, s_a for 0 <= a <= theta_cap
    std::map<std::pair<int, int>, TruncatedSeries> t_of_s; // (d, mu)    -> polynomial in s
    std::map<std::pair<int, int>, TruncatedSeries> s_of_t; // (a, alpha) -> polynomial in t

    const TruncatedSeries& t_table(int d, int mu) const
    {
        auto it = t_of_s.find({d, mu});
        if (it == t_of_s.end())
            throw std::out_of_range("t table: level/index not materialized");
        return it->second;
    }
    const TruncatedSeries& s_table(int a, int alpha) const
    {
        auto it = s_of_t.find({a, alpha});
        if (it == s_of_t.end())
            throw std::out_of_range("s table: level/index not materialized");
        return it->second;
    }
};

inline CoordinateChange compute_coordinate_change(const FrobeniusRing& ring, int order, int theta_cap)
{
    if (order < 0 || theta_cap < 0)
        throw std::invalid_argument("coordinate change: order and theta cap must be nonnegative");
    CoordinateChange out;
    out.ring = ring;
    out.order = order;
    out.theta_cap = theta_cap;

    /* Internal budget: a term theta^a s_a carries theta weight 2a, and only
       theta exponents <= theta_cap are read off at the end, so weight
       2*theta_cap retains every contributing product. */
    TruncationPolicy wide = make_policy(order, 2 * theta_cap, 0);
    TruncationPolicy table = make_policy(order, theta_cap, 0);

    /* t(s): coefficients of  e_0 - exp(-sum theta^a s_a^alpha e_alpha) */
    {
        detail::RingSeries arg = detail::ring_series_zero(ring, wide);
        for (int a = 0; a <= theta_cap; ++a)
            for (int alpha = 0; alpha < ring.rank; ++alpha) {
                Monomial m = monomial(theta_var(), a).times(svar(a, alpha), 1);
                arg[alpha] = add(arg[alpha], series_monomial(wide, m, rational(-1)));
            }
        detail::RingSeries e = detail::ring_series_exp(ring, arg);
        detail::RingSeries diff = e;
        for (auto& s : diff)
            s = negate(s);
        diff[0] = add(diff[0], series_constant(wide, 1));
        for (int d = 1; d <= theta_cap + 1; ++d)
            for (int mu = 0; mu < ring.rank; ++mu)
                out.t_of_s[{d, mu}] = detail::theta_slice(diff[mu], d - 1, table);
    }

    /* s(t): coefficients of  -log(e_0 - sum theta^{d-1} t_d^mu e_mu) */
    {
        detail::RingSeries u = detail::ring_series_zero(ring, wide);
        for (int d = 1; d <= theta_cap + 1; ++d)
            for (int mu = 0; mu < ring.rank; ++mu) {
                Monomial m = monomial(theta_var(), d - 1).times(tvar(d, mu), 1);
                u[mu] = add(u[mu], series_monomial(wide, m, rational(-1)));
            }
        detail::RingSeries lg = detail::ring_series_log1p(ring, u);
        for (int a = 0; a <= theta_cap; ++a)
            for (int alpha = 0; alpha < ring.rank; ++alpha)
                out.s_of_t[{a, alpha}] = negate(detail::theta_slice(lg[alpha], a, table));
    }
    return out;
}

/* Closed-form Taylor coefficient of t_d^mu at s = 0 with respect to the
   (unordered) list of first-order directions (a_1,alpha_1),...,(a_k,alpha_k):
   it equals (-1)^{k+1} times the mu-coordinate of e_{alpha_1}...e_{alpha_k}
   when d = a_1+...+a_k+1, and vanishes otherwise. */
inline rational taylor_coefficient(const FrobeniusRing& ring, int d, int mu,
                                   const std::vector<std::pair<int, int>>& directions)
{
    if (directions.empty())
        return 0; // t(0) = 0
    int level_sum = 0;
    std::vector<int> classes;
    classes.reserve(directions.size());
    for (const auto& [a, alpha] : directions) {
        if (a < 0 || alpha < 0 || alpha >= ring.rank)
            throw std::invalid_argument("taylor_coefficient: direction out of range");
        level_sum += a;
        classes.push_back(alpha);
    }
    if (d != level_sum + 1)
        return 0;
    RingElement prod = multiply_iterated(ring, classes);
    rational sign = (directions.size() % 2 == 1) ? 1 : -1;
    return sign * prod.at(static_cast<std::size_t>(mu));
}

/* ------------------------------------------------------------------ *
 * First-order consistency of the t(s) tables:
 *
 *     d t_d^mu / d s_a^alpha  =  - tdot_{d-a}^nu c_{nu,alpha}^mu   (d >= a+1)
 *                             =  0                                 (d <= a)
 *
 * where tdot agrees with t except tdot_1^0 = t_1^0 - 1.
 * ------------------------------------------------------------------ */

struct TermRuleViolation {
    int d = 0, mu = 0, a = 0, alpha = 0;
    Monomial monomial;
    rational lhs, rhs;
};

inline std::vector<TermRuleViolation> check_term_rule(const CoordinateChange& cc)
{
    std::vector<TermRuleViolation> out;
    const FrobeniusRing& ring = cc.ring;
    for (const auto& [key, table] : cc.t_of_s) {
        const auto [d, mu] = key;
        for (int a = 0; a <= cc.theta_cap; ++a)
            for (int alpha = 0; alpha < ring.rank; ++alpha) {
                TruncatedSeries lhs = partial_derivative(table, svar(a, alpha));
                /* rhs inherits the derivative's trust box so the comparison
                   runs exactly where lhs is meaningful */
                TruncatedSeries rhs = series_zero(lhs.policy);
                if (d >= a + 1) {
                    for (int nu = 0; nu < ring.rank; ++nu) {
                        const rational& c = ring.c(nu, alpha, mu);
                        if (c == 0)
                            continue;
                        TruncatedSeries tdot = cc.t_table(d - a, nu);
                        if (d - a == 1 && nu == 0)
                            tdot = add(rewrap_exact(tdot, tdot.policy), series_constant(tdot.policy, -1));
                        rhs = add(rhs, mul_scalar(rewrap_exact(tdot, lhs.policy), -c));
                    }
                }
                for (const auto& mm : trusted_mismatches(lhs, rhs))
                    out.push_back({d, mu, a, alpha, mm.monomial, mm.lhs, mm.rhs});
            }
    }
    return out;
}

} // namespace gwk

#endif
