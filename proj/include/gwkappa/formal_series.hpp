#ifndef GWKAPPA_FORMAL_SERIES_HPP
#define GWKAPPA_FORMAL_SERIES_HPP

#include <gwkappa/rational.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gwk {

/* ------------------------------------------------------------------ *
 * Variables
 *
 * X:      x^nu, the small phase space (one per basis class)
 * T:      t_d^mu, descendent times, level d >= 1 (x plays the role of t_0)
 * S:      s_a^alpha, kappa times, level a >= 0
 * Theta:  the even formal parameter of the defining equation of t(s)
 * Q:      the Novikov variable (curve degree)
 * ------------------------------------------------------------------ */

enum class VarKind : std::uint8_t { X = 0, T = 1, S = 2, Theta = 3, Q = 4 };

struct Variable {
    VarKind kind = VarKind::X;
    int level = 0; // d for T, a for S; 0 otherwise
    int index = 0; // basis index; 0 for Theta/Q
    auto operator<=>(const Variable&) const = default;
};

inline Variable xvar(int index) { return {VarKind::X, 0, index}; }
inline Variable tvar(int level, int index)
{
    if (level < 1)
        throw std::invalid_argument("t variables require level >= 1");
    return {VarKind::T, level, index};
}
inline Variable svar(int level, int index)
{
    if (level < 0)
        throw std::invalid_argument("s variables require level >= 0");
    return {VarKind::S, level, index};
}
inline Variable theta_var() { return {VarKind::Theta, 0, 0}; }
inline Variable qvar() { return {VarKind::Q, 0, 0}; }

/* contribution of one power of v to the total order (X/T/S only) */
inline int order_contribution(const Variable& v)
{
    switch (v.kind) {
    case VarKind::X:
    case VarKind::T:
    case VarKind::S:
        return 1;
    default:
        return 0;
    }
}

/* theta weight of one power of v.  This is the budget that bounds both
   literal theta powers and the t/s level range a truncated computation can
   see: theta itself counts 1, t_d counts d-1 (it pairs with theta^{d-1} in
   the defining equation), s_a counts a. */
inline int theta_weight(const Variable& v)
{
    switch (v.kind) {
    case VarKind::T:
        return v.level - 1;
    case VarKind::S:
        return v.level;
    case VarKind::Theta:
        return 1;
    default:
        return 0;
    }
}

inline std::string encode_variable(const Variable& v)
{
    switch (v.kind) {
    case VarKind::X:
        return "x:" + std::to_string(v.index);
    case VarKind::T:
        return "t:" + std::to_string(v.level) + ":" + std::to_string(v.index);
    case VarKind::S:
        return "s:" + std::to_string(v.level) + ":" + std::to_string(v.index);
    case VarKind::Theta:
        return "theta";
    case VarKind::Q:
        return "q";
    }
    throw std::logic_error("unreachable");
}

inline Variable decode_variable(std::string_view s)
{
    auto split = [&](std::string_view in) {
        std::vector<std::string> parts;
        std::size_t pos = 0;
        while (true) {
            std::size_t next = in.find(':', pos);
            if (next == std::string_view::npos) {
                parts.emplace_back(in.substr(pos));
                break;
            }
            parts.emplace_back(in.substr(pos, next - pos));
            pos = next + 1;
        }
        return parts;
    };
    auto parts = split(s);
    try {
        if (parts.size() == 1 && parts[0] == "theta")
            return theta_var();
        if (parts.size() == 1 && parts[0] == "q")
            return qvar();
        if (parts.size() == 2 && parts[0] == "x")
            return xvar(std::stoi(parts[1]));
        if (parts.size() == 3 && parts[0] == "t")
            return tvar(std::stoi(parts[1]), std::stoi(parts[2]));
        if (parts.size() == 3 && parts[0] == "s")
            return svar(std::stoi(parts[1]), std::stoi(parts[2]));
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
    throw std::invalid_argument("malformed variable encoding: " + std::string(s));
}

/* ------------------------------------------------------------------ *
 * Monomials: sorted factor lists, no zero exponents.
 * ------------------------------------------------------------------ */

struct Monomial {
    std::vector<std::pair<Variable, int>> factors; // sorted by Variable

    auto operator<=>(const Monomial&) const = default;

    bool empty() const { return factors.empty(); }

    int exponent(const Variable& v) const
    {
        for (const auto& [w, e] : factors)
            if (w == v)
                return e;
        return 0;
    }
    int order() const
    {
        int s = 0;
        for (const auto& [v, e] : factors)
            s += order_contribution(v) * e;
        return s;
    }
    int theta_weight() const
    {
        int s = 0;
        for (const auto& [v, e] : factors)
            s += gwk::theta_weight(v) * e;
        return s;
    }
    int q_exponent() const { return exponent(qvar()); }
    int x_order() const
    {
        int s = 0;
        for (const auto& [v, e] : factors)
            if (v.kind == VarKind::X)
                s += e;
        return s;
    }

    /* this * v^e (e may be negative when dividing factors out) */
    Monomial times(const Variable& v, int e) const
    {
        Monomial out;
        out.factors.reserve(factors.size() + 1);
        bool placed = false;
        for (const auto& f : factors) {
            if (!placed && v < f.first) {
                if (e != 0)
                    out.factors.emplace_back(v, e);
                placed = true;
            }
            if (f.first == v) {
                placed = true;
                int ne = f.second + e;
                if (ne < 0)
                    throw std::invalid_argument("negative exponent");
                if (ne != 0)
                    out.factors.emplace_back(v, ne);
            } else {
                out.factors.push_back(f);
            }
        }
        if (!placed) {
            if (e < 0)
                throw std::invalid_argument("negative exponent");
            if (e != 0)
                out.factors.emplace_back(v, e);
        }
        return out;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b)
    {
        Monomial out;
        out.factors.reserve(a.factors.size() + b.factors.size());
        std::size_t i = 0, j = 0;
        while (i < a.factors.size() && j < b.factors.size()) {
            if (a.factors[i].first < b.factors[j].first)
                out.factors.push_back(a.factors[i++]);
            else if (b.factors[j].first < a.factors[i].first)
                out.factors.push_back(b.factors[j++]);
            else {
                out.factors.emplace_back(a.factors[i].first, a.factors[i].second + b.factors[j].second);
                ++i;
                ++j;
            }
        }
        for (; i < a.factors.size(); ++i)
            out.factors.push_back(a.factors[i]);
        for (; j < b.factors.size(); ++j)
            out.factors.push_back(b.factors[j]);
        return out;
    }
};

inline Monomial monomial_one() { return {}; }
inline Monomial monomial(const Variable& v, int e = 1) { return monomial_one().times(v, e); }

/* weighted cohomological degree of a monomial, given the basis class degrees
   and the chern number of the target (|x^nu| = |nu|-2, |t_d^mu| = 2(d-1)+|mu|,
   |s_a^alpha| = 2a+|alpha|, |theta| = -2, |q| = -2*chern).  Exposed for the
   homogeneity audit of assembled potentials. */
inline int weighted_degree(const Monomial& m, const std::vector<int>& class_degrees, int chern_degree)
{
    int s = 0;
    for (const auto& [v, e] : m.factors) {
        int w = 0;
        switch (v.kind) {
        case VarKind::X:
            w = class_degrees.at(v.index) - 2;
            break;
        case VarKind::T:
            w = 2 * (v.level - 1) + class_degrees.at(v.index);
            break;
        case VarKind::S:
            w = 2 * v.level + class_degrees.at(v.index);
            break;
        case VarKind::Theta:
            w = -2;
            break;
        case VarKind::Q:
            w = -2 * chern_degree;
            break;
        }
        s += w * e;
    }
    return s;
}

/* ------------------------------------------------------------------ *
 * Truncation policy and trust
 *
 * Caps bound what a series can represent: total order in X/T/S variables,
 * theta weight, q exponent.  Trust bounds where the stored terms are known
 * to agree with the mathematical referent: differentiation, multiplication
 * against low-valuation factors, etc. shrink it.  Stored terms are always
 * pruned to the trust box, so everything a series holds is meaningful.
 * ------------------------------------------------------------------ */

struct TruncationPolicy {
    int max_order = 0;
    int max_theta = 0;
    int max_q = 0;
    int trust_order = 0;
    int trust_theta = 0;
    int trust_q = 0;

    bool same_caps(const TruncationPolicy& o) const
    {
        return max_order == o.max_order && max_theta == o.max_theta && max_q == o.max_q;
    }
};

inline TruncationPolicy make_policy(int max_order, int max_theta, int max_q)
{
    if (max_order < 0 || max_theta < 0 || max_q < 0)
        throw std::invalid_argument("truncation caps must be nonnegative");
    return {max_order, max_theta, max_q, max_order, max_theta, max_q};
}

/* componentwise lower bound on (order, theta weight, q exponent) over the
   terms of the referent; sentinel kValuationInf for the zero series */
inline constexpr int kValuationInf = 1 << 20;

struct Valuation {
    int order = 0;
    int theta = 0;
    int q = 0;
};

struct TruncatedSeries {
    TruncationPolicy policy;
    Valuation val;
    std::map<Monomial, rational> terms;

    bool is_zero() const { return terms.empty(); }
    rational coefficient_or_zero(const Monomial& m) const
    {
        auto it = terms.find(m);
        return it == terms.end() ? rational(0) : it->second;
    }
};

namespace detail {

inline int clamp_trust(int t, int cap)
{
    if (t > cap)
        t = cap;
    if (t < -1)
        t = -1;
    return t;
}

inline void clamp_policy_trust(TruncationPolicy& p)
{
    p.trust_order = clamp_trust(p.trust_order, p.max_order);
    p.trust_theta = clamp_trust(p.trust_theta, p.max_theta);
    p.trust_q = clamp_trust(p.trust_q, p.max_q);
}

inline bool within_trust(const Monomial& m, const TruncationPolicy& p)
{
    return m.order() <= p.trust_order && m.theta_weight() <= p.trust_theta && m.q_exponent() <= p.trust_q;
}

/* drop zero coefficients and terms outside the trust box */
inline void prune(TruncatedSeries& s)
{
    clamp_policy_trust(s.policy);
    for (auto it = s.terms.begin(); it != s.terms.end();)
        if (it->second == 0 || !within_trust(it->first, s.policy))
            it = s.terms.erase(it);
        else
            ++it;
}

inline int sat_add(int a, int b)
{
    long long s = static_cast<long long>(a) + b;
    if (s > kValuationInf)
        s = kValuationInf;
    return static_cast<int>(s);
}

} // namespace detail

inline TruncatedSeries series_zero(const TruncationPolicy& p)
{
    TruncatedSeries s;
    s.policy = p;
    detail::clamp_policy_trust(s.policy);
    s.val = {kValuationInf, kValuationInf, kValuationInf};
    return s;
}

/* exact single-term series; full trust, exact valuation */
inline TruncatedSeries series_monomial(const TruncationPolicy& p, const Monomial& m, const rational& c)
{
    TruncatedSeries s;
    s.policy = p;
    s.policy.trust_order = p.max_order;
    s.policy.trust_theta = p.max_theta;
    s.policy.trust_q = p.max_q;
    if (c == 0)
        return series_zero(s.policy);
    s.val = {m.order(), m.theta_weight(), m.q_exponent()};
    s.terms[m] = c;
    detail::prune(s);
    return s;
}

inline TruncatedSeries series_constant(const TruncationPolicy& p, const rational& c)
{
    return series_monomial(p, monomial_one(), c);
}

inline TruncatedSeries series_variable(const TruncationPolicy& p, const Variable& v)
{
    return series_monomial(p, monomial(v), rational(1));
}

inline TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (!a.policy.same_caps(b.policy))
        throw std::invalid_argument("add: truncation policies disagree");
    TruncatedSeries out;
    out.policy = a.policy;
    out.policy.trust_order = std::min(a.policy.trust_order, b.policy.trust_order);
    out.policy.trust_theta = std::min(a.policy.trust_theta, b.policy.trust_theta);
    out.policy.trust_q = std::min(a.policy.trust_q, b.policy.trust_q);
    out.val = {std::min(a.val.order, b.val.order), std::min(a.val.theta, b.val.theta), std::min(a.val.q, b.val.q)};
    out.terms = a.terms;
    for (const auto& [m, c] : b.terms) {
        auto [it, inserted] = out.terms.emplace(m, c);
        if (!inserted)
            it->second += c;
    }
    detail::prune(out);
    return out;
}

inline TruncatedSeries negate(const TruncatedSeries& a)
{
    TruncatedSeries out = a;
    for (auto& [m, c] : out.terms)
        c = -c;
    return out;
}

inline TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, negate(b)); }

inline TruncatedSeries mul_scalar(const TruncatedSeries& a, const rational& c)
{
    if (c == 0)
        return series_zero(a.policy);
    TruncatedSeries out = a;
    for (auto& [m, coeff] : out.terms)
        coeff *= c;
    return out;
}

/* Trust of a product: a coefficient of the product at monomial m is complete
   as soon as every contributing split m = m_A * m_B has both halves inside
   the factors' trust boxes.  Since all terms of A sit at valuation >= val_A
   (componentwise), the product is trusted up to min(T_A + val_B, T_B + val_A)
   in each component. */
inline TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (!a.policy.same_caps(b.policy))
        throw std::invalid_argument("mul: truncation policies disagree");
    TruncatedSeries out;
    out.policy = a.policy;
    out.policy.trust_order =
        std::min(detail::sat_add(a.policy.trust_order, b.val.order), detail::sat_add(b.policy.trust_order, a.val.order));
    out.policy.trust_theta =
        std::min(detail::sat_add(a.policy.trust_theta, b.val.theta), detail::sat_add(b.policy.trust_theta, a.val.theta));
    out.policy.trust_q =
        std::min(detail::sat_add(a.policy.trust_q, b.val.q), detail::sat_add(b.policy.trust_q, a.val.q));
    out.val = {detail::sat_add(a.val.order, b.val.order), detail::sat_add(a.val.theta, b.val.theta),
               detail::sat_add(a.val.q, b.val.q)};
    detail::clamp_policy_trust(out.policy);

    const int max_order = out.policy.max_order;
    const int max_theta = out.policy.max_theta;
    const int max_q = out.policy.max_q;
    for (const auto& [ma, ca] : a.terms) {
        const int oa = ma.order(), ta = ma.theta_weight(), qa = ma.q_exponent();
        for (const auto& [mb, cb] : b.terms) {
            if (oa + mb.order() > max_order || ta + mb.theta_weight() > max_theta || qa + mb.q_exponent() > max_q)
                continue;
            Monomial m = ma * mb;
            auto [it, inserted] = out.terms.emplace(std::move(m), ca * cb);
            if (!inserted)
                it->second += ca * cb;
        }
    }
    detail::prune(out);
    return out;
}

/* formal partial derivative; trust shrinks by the variable's contribution */
inline TruncatedSeries partial_derivative(const TruncatedSeries& a, const Variable& v)
{
    if (v.kind != VarKind::X && v.kind != VarKind::T && v.kind != VarKind::S)
        throw std::invalid_argument("partial_derivative: only x/t/s variables are differentiated");
    TruncatedSeries out;
    out.policy = a.policy;
    out.policy.trust_order = a.policy.trust_order - order_contribution(v);
    out.policy.trust_theta = a.policy.trust_theta - theta_weight(v);
    out.policy.trust_q = a.policy.trust_q;
    out.val = {std::max(0, a.val.order - order_contribution(v)), std::max(0, a.val.theta - theta_weight(v)), a.val.q};
    for (const auto& [m, c] : a.terms) {
        int e = m.exponent(v);
        if (e == 0)
            continue;
        out.terms[m.times(v, -1)] = c * e;
    }
    detail::prune(out);
    return out;
}

/* exact coefficient lookup; querying beyond the representation caps signals
   a logic error upstream, so it throws */
inline rational coefficient(const TruncatedSeries& a, const Monomial& m)
{
    if (m.order() > a.policy.max_order || m.theta_weight() > a.policy.max_theta || m.q_exponent() > a.policy.max_q)
        throw std::domain_error("coefficient: monomial outside the truncation policy");
    return a.coefficient_or_zero(m);
}

/* restrict to smaller caps (monotone re-truncation) */
inline TruncatedSeries truncate_to(const TruncatedSeries& a, int max_order, int max_theta, int max_q)
{
    TruncatedSeries out = a;
    out.policy.max_order = std::min(a.policy.max_order, max_order);
    out.policy.max_theta = std::min(a.policy.max_theta, max_theta);
    out.policy.max_q = std::min(a.policy.max_q, max_q);
    detail::prune(out);
    return out;
}

/* Re-wrap an exact polynomial table in a fresh policy.  Sound only when the
   caller knows the referent has no content outside the stored terms (e.g.
   the coordinate-change tables, which are exact polynomials in s or t with
   no q and no theta); asserted by pruning nothing. */
inline TruncatedSeries rewrap_exact(const TruncatedSeries& a, const TruncationPolicy& p)
{
    TruncatedSeries out;
    out.policy = p;
    out.policy.trust_order = p.max_order;
    out.policy.trust_theta = p.max_theta;
    out.policy.trust_q = p.max_q;
    out.val = a.val;
    for (const auto& [m, c] : a.terms) {
        if (m.order() > p.max_order || m.theta_weight() > p.max_theta || m.q_exponent() > p.max_q)
            throw std::invalid_argument("rewrap_exact: stored term falls outside the new caps");
        out.terms.emplace(m, c);
    }
    return out;
}

/* exp of a constant-free series: partial sums of sum a^k / k! .  Any term of
   a contributes at least 1 to order + theta weight + q, so powers beyond the
   summed caps vanish. */
inline TruncatedSeries exp_series(const TruncatedSeries& a)
{
    if (a.coefficient_or_zero(monomial_one()) != 0)
        throw std::domain_error("exp_series: argument has a nonzero constant term");
    TruncatedSeries out = series_constant(a.policy, 1);
    out.policy.trust_order = a.policy.trust_order;
    out.policy.trust_theta = a.policy.trust_theta;
    out.policy.trust_q = a.policy.trust_q;
    out.val = {0, 0, 0};
    TruncatedSeries power = series_constant(a.policy, 1);
    const int bound = a.policy.max_order + a.policy.max_theta + a.policy.max_q;
    rational kfact = 1;
    for (int k = 1; k <= bound; ++k) {
        power = mul(power, a);
        if (power.is_zero())
            break;
        kfact *= k;
        out = add(out, mul_scalar(power, rational(1) / kfact));
    }
    detail::prune(out);
    return out;
}

/* log of a series with constant term 1 */
inline TruncatedSeries log_series(const TruncatedSeries& a)
{
    if (a.coefficient_or_zero(monomial_one()) != 1)
        throw std::domain_error("log_series: argument must have constant term 1");
    TruncatedSeries u = sub(a, series_constant(a.policy, 1));
    TruncatedSeries out = series_zero(a.policy);
    out.policy.trust_order = a.policy.trust_order;
    out.policy.trust_theta = a.policy.trust_theta;
    out.policy.trust_q = a.policy.trust_q;
    out.val = {0, 0, 0};
    TruncatedSeries power = series_constant(a.policy, 1);
    const int bound = a.policy.max_order + a.policy.max_theta + a.policy.max_q;
    for (int k = 1; k <= bound; ++k) {
        power = mul(power, u);
        if (power.is_zero())
            break;
        rational c = rational((k % 2 == 1) ? 1 : -1) / k;
        out = add(out, mul_scalar(power, c));
    }
    detail::prune(out);
    return out;
}

/* Simultaneous substitution.  Bindings must be constant-free, must not lower
   total order, and must not lower theta weight relative to the variable they
   replace; unbound variables pass through.  These conditions make the trust
   of the composite the componentwise min over the inputs. */
inline TruncatedSeries substitute(const TruncatedSeries& a, const std::map<Variable, TruncatedSeries>& bindings)
{
    for (const auto& [v, s] : bindings) {
        if (!s.policy.same_caps(a.policy))
            throw std::invalid_argument("substitute: binding policy caps disagree");
        if (s.coefficient_or_zero(monomial_one()) != 0)
            throw std::domain_error("substitute: binding has a nonzero constant term");
        const int w = theta_weight(v);
        for (const auto& [m, c] : s.terms) {
            (void)c;
            if (m.order() < 1)
                throw std::invalid_argument("substitute: binding term of order 0");
            if (m.theta_weight() < w)
                throw std::invalid_argument("substitute: binding lowers theta weight");
        }
    }

    TruncatedSeries out = series_zero(a.policy);
    out.policy.trust_order = a.policy.trust_order;
    out.policy.trust_theta = a.policy.trust_theta;
    out.policy.trust_q = a.policy.trust_q;
    bool any_term = false;
    for (const auto& [m, c] : a.terms) {
        TruncatedSeries term = series_constant(a.policy, c);
        for (const auto& [v, e] : m.factors) {
            auto it = bindings.find(v);
            if (it == bindings.end()) {
                term = mul(term, series_monomial(a.policy, monomial(v, e), 1));
            } else {
                out.policy.trust_order = std::min(out.policy.trust_order, it->second.policy.trust_order);
                out.policy.trust_theta = std::min(out.policy.trust_theta, it->second.policy.trust_theta);
                out.policy.trust_q = std::min(out.policy.trust_q, it->second.policy.trust_q);
                for (int k = 0; k < e; ++k)
                    term = mul(term, it->second);
            }
            if (term.is_zero())
                break;
        }
        TruncationPolicy keep = out.policy;
        out = add(out, term);
        out.policy = keep; // the per-term trust bookkeeping above is authoritative
        any_term = true;
    }
    (void)any_term;
    out.val = a.val;
    detail::prune(out);
    return out;
}

/* ------------------------------------------------------------------ *
 * Trusted comparison
 * ------------------------------------------------------------------ */

struct TrustBox {
    int order = 0;
    int theta = 0;
    int q = 0;

    bool contains(const Monomial& m) const
    {
        return m.order() <= order && m.theta_weight() <= theta && m.q_exponent() <= q;
    }
};

inline TrustBox trust_box(const TruncatedSeries& a)
{
    return {std::min(a.policy.trust_order, a.policy.max_order), std::min(a.policy.trust_theta, a.policy.max_theta),
            std::min(a.policy.trust_q, a.policy.max_q)};
}

inline TrustBox intersect(const TrustBox& a, const TrustBox& b)
{
    return {std::min(a.order, b.order), std::min(a.theta, b.theta), std::min(a.q, b.q)};
}

struct TermMismatch {
    Monomial monomial;
    rational lhs;
    rational rhs;
};

/* All coefficient disagreements inside the intersected trust boxes.  skip, if
   provided, excludes monomials from the comparison (used for the documented
   unstable-zone rule of the potential-level identities). */
template <typename SkipPred>
std::vector<TermMismatch> trusted_mismatches(const TruncatedSeries& a, const TruncatedSeries& b, SkipPred&& skip)
{
    TrustBox box = intersect(trust_box(a), trust_box(b));
    std::vector<TermMismatch> out;
    auto ia = a.terms.begin();
    auto ib = b.terms.begin();
    auto consider = [&](const Monomial& m, const rational& la, const rational& rb) {
        if (la == rb)
            return;
        if (!box.contains(m))
            return;
        if (skip(m))
            return;
        out.push_back({m, la, rb});
    };
    while (ia != a.terms.end() || ib != b.terms.end()) {
        if (ib == b.terms.end() || (ia != a.terms.end() && ia->first < ib->first)) {
            consider(ia->first, ia->second, rational(0));
            ++ia;
        } else if (ia == a.terms.end() || ib->first < ia->first) {
            consider(ib->first, rational(0), ib->second);
            ++ib;
        } else {
            consider(ia->first, ia->second, ib->second);
            ++ia;
            ++ib;
        }
    }
    return out;
}

inline std::vector<TermMismatch> trusted_mismatches(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return trusted_mismatches(a, b, [](const Monomial&) { return false; });
}

inline bool trusted_equal(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return trusted_mismatches(a, b).empty();
}

/* ------------------------------------------------------------------ *
 * Plain-text rendering (stable, used by the CLI table output)
 * ------------------------------------------------------------------ */

inline std::string pretty_name(const Variable& v)
{
    switch (v.kind) {
    case VarKind::X:
        return "x" + std::to_string(v.index);
    case VarKind::T:
        return "t" + std::to_string(v.level) + "_" + std::to_string(v.index);
    case VarKind::S:
        return "s" + std::to_string(v.level) + "_" + std::to_string(v.index);
    case VarKind::Theta:
        return "th";
    case VarKind::Q:
        return "q";
    }
    throw std::logic_error("unreachable");
}

inline std::string to_pretty_string(const Monomial& m)
{
    if (m.empty())
        return "1";
    std::string out;
    for (const auto& [v, e] : m.factors) {
        if (!out.empty())
            out += "*";
        out += pretty_name(v);
        if (e != 1)
            out += "^" + std::to_string(e);
    }
    return out;
}

inline std::string to_pretty_string(const TruncatedSeries& s)
{
    if (s.terms.empty())
        return "0";
    std::string out;
    for (const auto& [m, c] : s.terms) {
        rational a = c;
        bool neg = a < 0;
        if (neg)
            a = -a;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string cs = rational_to_string(a);
        if (m.empty())
            out += cs;
        else if (cs == "1")
            out += to_pretty_string(m);
        else
            out += cs + "*" + to_pretty_string(m);
    }
    return out;
}

} // namespace gwk

#endif
