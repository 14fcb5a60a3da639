#ifndef GWKAPPA_POTENTIALS_HPP
#define GWKAPPA_POTENTIALS_HPP

#include <gwkappa/correlators.hpp>
#include <gwkappa/formal_series.hpp>

#include <utility>
#include <vector>

namespace gwk {

/* Which family of times the generating function carries besides the small
   phase space x: descendent times t, kappa times s, or both. */
enum class PotentialKind { Psi, Kappa, Joint };

struct Potential {
    Target target = Target::Point;
    int genus = 0;
    PotentialKind kind = PotentialKind::Joint;
    int theta_cap = 0;
    TruncatedSeries body;
};

namespace detail {

struct AssemblyState {
    CorrelatorEngine* engine = nullptr;
    int genus = 0;
    int max_q = 0;
    std::vector<Variable> vars;
    std::vector<int> exps;
    TruncatedSeries* body = nullptr;
};

/* Finish one x/t/s monomial: the dimension constraint fixes the curve degree
   (uniquely when the target has curve classes, zero otherwise), and the
   coefficient is the correlator divided by the exponent factorials. */
inline void assemble_leaf(AssemblyState& st)
{
    const FrobeniusRing& ring = st.engine->ring();
    CorrelatorKey key;
    key.genus = st.genus;
    long long deg_sum = 0;
    Monomial mono;
    rational denom = 1;
    for (std::size_t i = 0; i < st.vars.size(); ++i) {
        const int e = st.exps[i];
        if (e == 0)
            continue;
        const Variable& v = st.vars[i];
        mono = mono.times(v, e);
        denom *= rational(factorial(static_cast<unsigned>(e)));
        for (int k = 0; k < e; ++k) {
            switch (v.kind) {
            case VarKind::X:
                key.sigma.push_back(v.index);
                deg_sum += ring.degrees[v.index];
                break;
            case VarKind::T:
                key.tau.emplace_back(v.level, v.index);
                deg_sum += 2LL * v.level + ring.degrees[v.index];
                break;
            default:
                key.kappa.emplace_back(v.level, v.index);
                deg_sum += 2LL * v.level + ring.degrees[v.index];
                break;
            }
        }
    }
    const int n = key.insertion_count();
    const long long base = (ring.dimension() - 3) * (1 - st.genus) + n;
    if (ring.chern_degree == 0) {
        if (deg_sum != 2 * base)
            return;
        key.degree = 0;
    } else {
        const long long num = deg_sum / 2 - base;
        if (deg_sum % 2 != 0 || num % ring.chern_degree != 0)
            return;
        const long long d = num / ring.chern_degree;
        if (d < 0 || d > st.max_q)
            return;
        key.degree = static_cast<int>(d);
        mono = mono.times(qvar(), key.degree);
    }
    rational value = st.engine->correlator(key);
    if (value == 0)
        return;
    st.body->terms[mono] = value / denom;
}

inline void assemble_recurse(AssemblyState& st, std::size_t idx, int order_left, int theta_left)
{
    if (idx == st.vars.size()) {
        assemble_leaf(st);
        return;
    }
    const Variable& v = st.vars[idx];
    const int w = theta_weight(v);
    for (int e = 0;; ++e) {
        if (e * order_contribution(v) > order_left || e * w > theta_left)
            break;
        st.exps[idx] = e;
        assemble_recurse(st, idx + 1, order_left - e * order_contribution(v), theta_left - e * w);
    }
    st.exps[idx] = 0;
}

} // namespace detail

/* Assemble the genus-g generating function with exact coefficients: the
   coefficient of prod v^{e_v} q^d is the correlator of the corresponding
   insertions divided by prod e_v!. */
inline Potential assemble_potential(CorrelatorEngine& engine, int genus, PotentialKind kind, int max_order,
                                    int theta_cap, int max_q)
{
    if (max_order < 0 || theta_cap < 0 || max_q < 0)
        throw std::invalid_argument("assemble_potential: caps must be nonnegative");
    if (engine.target() == Target::Point)
        max_q = 0;

    Potential out;
    out.target = engine.target();
    out.genus = genus;
    out.kind = kind;
    out.theta_cap = theta_cap;
    out.body = series_zero(make_policy(max_order, theta_cap, max_q));
    out.body.val = {0, 0, 0};

    detail::AssemblyState st;
    st.engine = &engine;
    st.genus = genus;
    st.max_q = max_q;
    const int rank = engine.ring().rank;
    for (int i = 0; i < rank; ++i)
        st.vars.push_back(xvar(i));
    if (kind != PotentialKind::Kappa)
        for (int d = 1; d <= theta_cap + 1; ++d)
            for (int i = 0; i < rank; ++i)
                st.vars.push_back(tvar(d, i));
    if (kind != PotentialKind::Psi)
        for (int a = 0; a <= theta_cap; ++a)
            for (int i = 0; i < rank; ++i)
                st.vars.push_back(svar(a, i));
    st.exps.assign(st.vars.size(), 0);
    st.body = &out.body;
    detail::assemble_recurse(st, 0, max_order, theta_cap);
    return out;
}

} // namespace gwk

#endif
