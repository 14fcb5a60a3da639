#ifndef GWKAPPA_FROBENIUS_RING_HPP
#define GWKAPPA_FROBENIUS_RING_HPP

#include <gwkappa/rational.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace gwk {

/* The even-degree cohomology ring of the target, with its Poincare pairing.
   Basis e_0 .. e_{rank-1}, e_0 the identity.  Products are routed through the
   structure constants c[a][b][m]: e_a e_b = sum_m c[a][b][m] e_m.

   Curve classes are multiples of a single generator beta_0; chern_degree is
   the integral of c_1 over beta_0 (0 for the point, n+1 for P^n), which fixes
   the Novikov weight of q as -2*chern_degree.  divisor_degrees[a] is the
   integral of e_a over beta_0 when |e_a| = 2 and 0 otherwise. */
struct FrobeniusRing {
    int rank = 0;
    std::vector<int> degrees;                // degrees[a] = |e_a|, even
    std::vector<rational> structure_constants; // rank^3, index (a*rank+b)*rank+m
    std::vector<rational> pairing;             // rank^2, eta_{ab}
    std::vector<rational> pairing_inverse;     // rank^2, eta^{ab}
    std::vector<rational> divisor_degrees;     // rank
    int chern_degree = 0;

    const rational& c(int a, int b, int m) const
    {
        return structure_constants[(static_cast<std::size_t>(a) * rank + b) * rank + m];
    }
    rational& c(int a, int b, int m)
    {
        return structure_constants[(static_cast<std::size_t>(a) * rank + b) * rank + m];
    }
    const rational& eta(int a, int b) const { return pairing[static_cast<std::size_t>(a) * rank + b]; }
    const rational& eta_inv(int a, int b) const { return pairing_inverse[static_cast<std::size_t>(a) * rank + b]; }

    int max_degree() const
    {
        int m = 0;
        for (int d : degrees)
            if (d > m)
                m = d;
        return m;
    }
    /* complex dimension of the target */
    int dimension() const { return max_degree() / 2; }

    bool operator==(const FrobeniusRing&) const = default;
};

using RingElement = std::vector<rational>; // coefficients in the basis {e_a}

struct RingValidation {
    bool pass = true;
    std::vector<std::string> violations;

    void fail(std::string what)
    {
        pass = false;
        violations.push_back(std::move(what));
    }
};

inline FrobeniusRing make_point_ring()
{
    FrobeniusRing r;
    r.rank = 1;
    r.degrees = {0};
    r.structure_constants = {rational(1)};
    r.pairing = {rational(1)};
    r.pairing_inverse = {rational(1)};
    r.divisor_degrees = {rational(0)};
    r.chern_degree = 0;
    return r;
}

/* Q[H]/(H^{n+1}) with the antidiagonal Poincare pairing; supported n: 1, 2. */
inline FrobeniusRing make_projective_ring(int n)
{
    if (n != 1 && n != 2)
        throw std::invalid_argument("make_projective_ring: n must be 1 or 2");
    FrobeniusRing r;
    r.rank = n + 1;
    r.degrees.resize(r.rank);
    for (int a = 0; a <= n; ++a)
        r.degrees[a] = 2 * a;
    r.structure_constants.assign(static_cast<std::size_t>(r.rank) * r.rank * r.rank, rational(0));
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b)
            if (a + b <= n)
                r.c(a, b, a + b) = 1;
    r.pairing.assign(static_cast<std::size_t>(r.rank) * r.rank, rational(0));
    r.pairing_inverse.assign(static_cast<std::size_t>(r.rank) * r.rank, rational(0));
    for (int a = 0; a <= n; ++a) {
        r.pairing[static_cast<std::size_t>(a) * r.rank + (n - a)] = 1;
        r.pairing_inverse[static_cast<std::size_t>(a) * r.rank + (n - a)] = 1;
    }
    r.divisor_degrees.assign(r.rank, rational(0));
    r.divisor_degrees[1] = 1; // the line class meets H once
    r.chern_degree = n + 1;   // c_1(P^n) = (n+1) H
    return r;
}

/* Axiom check.  Reports every violated invariant with a witnessing index
   tuple; never throws.  Beyond the Frobenius axioms proper this includes the
   cohomological grading of the structure constants: without it a perturbation
   like e_1 e_1 = e_2 + e_1 would still be a perfectly good Frobenius algebra
   and single-constant corruptions could slip through. */
inline RingValidation validate_ring(const FrobeniusRing& r)
{
    RingValidation v;
    const int n = r.rank;
    if (n <= 0) {
        v.fail("rank must be positive");
        return v;
    }
    const std::size_t nn = static_cast<std::size_t>(n);
    if (r.degrees.size() != nn || r.structure_constants.size() != nn * nn * nn ||
        r.pairing.size() != nn * nn || r.pairing_inverse.size() != nn * nn ||
        r.divisor_degrees.size() != nn) {
        v.fail("table shapes inconsistent with rank");
        return v;
    }

    for (int a = 0; a < n; ++a) {
        if (r.degrees[a] < 0 || r.degrees[a] % 2 != 0)
            v.fail("degrees[" + std::to_string(a) + "] is not an even nonnegative integer");
    }
    if (r.degrees[0] != 0)
        v.fail("identity class e_0 must have degree 0");

    /* e_0 is a two-sided identity */
    for (int b = 0; b < n; ++b)
        for (int m = 0; m < n; ++m) {
            rational want = (b == m) ? 1 : 0;
            if (r.c(0, b, m) != want)
                v.fail("identity axiom violated at c[0][" + std::to_string(b) + "][" + std::to_string(m) + "]");
        }

    /* commutativity (even classes only) */
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int m = 0; m < n; ++m)
                if (r.c(a, b, m) != r.c(b, a, m))
                    v.fail("commutativity violated at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(m) + ")");

    /* grading: e_a e_b lives in degree |e_a| + |e_b| */
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int m = 0; m < n; ++m)
                if (r.c(a, b, m) != 0 && r.degrees[m] != r.degrees[a] + r.degrees[b])
                    v.fail("grading violated at c[" + std::to_string(a) + "][" + std::to_string(b) + "][" +
                           std::to_string(m) + "]");

    /* associativity */
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int g = 0; g < n; ++g)
                for (int m = 0; m < n; ++m) {
                    rational lhs = 0, rhs = 0;
                    for (int e = 0; e < n; ++e) {
                        lhs += r.c(a, b, e) * r.c(e, g, m);
                        rhs += r.c(b, g, e) * r.c(a, e, m);
                    }
                    if (lhs != rhs)
                        v.fail("associativity violated at (a,b,g,m)=(" + std::to_string(a) + "," + std::to_string(b) +
                               "," + std::to_string(g) + "," + std::to_string(m) + ")");
                }

    /* Frobenius compatibility: eta(e_a e_b, e_g) totally symmetric */
    auto cubic = [&](int a, int b, int g) {
        rational s = 0;
        for (int m = 0; m < n; ++m)
            s += r.c(a, b, m) * r.eta(m, g);
        return s;
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int g = 0; g < n; ++g) {
                rational base = cubic(a, b, g);
                if (base != cubic(a, g, b) || base != cubic(g, b, a))
                    v.fail("Frobenius compatibility violated at (" + std::to_string(a) + "," + std::to_string(b) +
                           "," + std::to_string(g) + ")");
            }

    /* pairing symmetric; inverse exact both ways (this is the nondegeneracy
       check: a singular pairing has no two-sided inverse) */
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (r.eta(a, b) != r.eta(b, a))
                v.fail("pairing not symmetric at (" + std::to_string(a) + "," + std::to_string(b) + ")");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            rational s1 = 0, s2 = 0;
            for (int e = 0; e < n; ++e) {
                s1 += r.eta(a, e) * r.eta_inv(e, b);
                s2 += r.eta_inv(a, e) * r.eta(e, b);
            }
            rational want = (a == b) ? 1 : 0;
            if (s1 != want || s2 != want)
                v.fail("pairing nondegeneracy/inverse violated at (" + std::to_string(a) + "," + std::to_string(b) +
                       ")");
        }

    /* Poincare duality shape */
    const int top = r.max_degree();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (r.eta(a, b) != 0 && r.degrees[a] + r.degrees[b] != top)
                v.fail("pairing degree shape violated at (" + std::to_string(a) + "," + std::to_string(b) + ")");

    for (int a = 0; a < n; ++a)
        if (r.divisor_degrees[a] != 0 && r.degrees[a] != 2)
            v.fail("divisor_degrees nonzero off a degree-2 class at " + std::to_string(a));

    return v;
}

inline RingElement multiply(const FrobeniusRing& r, const RingElement& x, const RingElement& y)
{
    RingElement out(r.rank, rational(0));
    for (int a = 0; a < r.rank; ++a) {
        if (x[a] == 0)
            continue;
        for (int b = 0; b < r.rank; ++b) {
            if (y[b] == 0)
                continue;
            for (int m = 0; m < r.rank; ++m) {
                const rational& cc = r.c(a, b, m);
                if (cc != 0)
                    out[m] += x[a] * y[b] * cc;
            }
        }
    }
    return out;
}

/* e_{a_1} ... e_{a_j} expanded in the basis; its coefficients are the iterated
   structure constants c^m_{a_1..a_j}. */
inline RingElement multiply_iterated(const FrobeniusRing& r, const std::vector<int>& indices)
{
    if (indices.empty())
        throw std::invalid_argument("multiply_iterated: empty index list");
    RingElement acc(r.rank, rational(0));
    if (indices[0] < 0 || indices[0] >= r.rank)
        throw std::out_of_range("multiply_iterated: basis index out of range");
    acc[indices[0]] = 1;
    for (std::size_t i = 1; i < indices.size(); ++i) {
        if (indices[i] < 0 || indices[i] >= r.rank)
            throw std::out_of_range("multiply_iterated: basis index out of range");
        RingElement e(r.rank, rational(0));
        e[indices[i]] = 1;
        acc = multiply(r, acc, e);
    }
    return acc;
}

inline std::vector<rational> raise_index(const FrobeniusRing& r, const std::vector<rational>& covariant)
{
    if (static_cast<int>(covariant.size()) != r.rank)
        throw std::invalid_argument("raise_index: length must equal rank");
    std::vector<rational> out(r.rank, rational(0));
    for (int a = 0; a < r.rank; ++a)
        for (int b = 0; b < r.rank; ++b)
            out[a] += r.eta_inv(a, b) * covariant[b];
    return out;
}

inline std::vector<rational> lower_index(const FrobeniusRing& r, const std::vector<rational>& contravariant)
{
    if (static_cast<int>(contravariant.size()) != r.rank)
        throw std::invalid_argument("lower_index: length must equal rank");
    std::vector<rational> out(r.rank, rational(0));
    for (int a = 0; a < r.rank; ++a)
        for (int b = 0; b < r.rank; ++b)
            out[a] += r.eta(a, b) * contravariant[b];
    return out;
}

/* integral over the fundamental class: the coefficient of the top class in
   the basis expansion (the shipped bases are normalized so that the top-class
   integral is eta(e_0, e_top) = 1). */
inline rational integrate(const FrobeniusRing& r, const RingElement& x)
{
    rational s = 0;
    for (int a = 0; a < r.rank; ++a)
        s += x[a] * r.eta(0, a);
    return s;
}

} // namespace gwk

#endif
