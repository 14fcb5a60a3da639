#ifndef GWKAPPA_RATIONAL_HPP
#define GWKAPPA_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace gwk {

/* Every coefficient in the engine is an exact rational: the identities we
   verify are coefficient identities and must hold on the nose, not to a
   floating tolerance. */
using bigint   = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline bigint factorial(unsigned n)
{
    bigint r = 1;
    for (unsigned k = 2; k <= n; ++k)
        r *= k;
    return r;
}

inline bigint binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    bigint r = 1;
    for (unsigned j = 1; j <= k; ++j) {
        r *= n - k + j;
        r /= j; /* always exact: r is C(n-k+j, j) after this step */
    }
    return r;
}

/* Canonical "p/q" form: denominator omitted when 1, so integers print bare.
   This is the form used in every JSON/CSV artifact. */
inline std::string rational_to_string(const rational& x)
{
    return x.str();
}

inline rational rational_from_string(std::string_view s)
{
    auto fail = [&] { return std::invalid_argument("malformed rational literal: " + std::string(s)); };
    if (s.empty())
        throw fail();
    try {
        auto slash = s.find('/');
        if (slash == std::string_view::npos)
            return rational(bigint(std::string(s)));
        std::string num_part(s.substr(0, slash));
        std::string den_part(s.substr(slash + 1));
        if (num_part.empty() || den_part.empty())
            throw fail();
        bigint num(num_part), den(den_part);
        if (den == 0)
            throw fail();
        if (den < 0) { /* the two-argument constructor requires den > 0 */
            den = -den;
            num = -num;
        }
        return rational(num, den); /* two-argument form canonicalizes */
    } catch (const std::exception&) {
        throw fail();
    }
}

} // namespace gwk

#endif
