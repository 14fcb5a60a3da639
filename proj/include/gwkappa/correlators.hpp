#ifndef GWKAPPA_CORRELATORS_HPP
#define GWKAPPA_CORRELATORS_HPP

#include <gwkappa/frobenius_ring.hpp>
#include <gwkappa/quantum_cohomology.hpp>
#include <gwkappa/rational.hpp>

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gwk {

enum class Target { Point, P1, P2 };

inline std::string target_name(Target t)
{
    switch (t) {
    case Target::Point:
        return "pt";
    case Target::P1:
        return "p1";
    case Target::P2:
        return "p2";
    }
    throw std::logic_error("unreachable");
}

/* thrown when a requested value is outside what the engine implements
   (as opposed to being malformed input) */
struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* ------------------------------------------------------------------ *
 * Correlator keys
 *
 * sigma: primary insertions (basis index), i.e. descendent level 0
 * tau:   (level >= 1, basis index) descendent insertions
 * kappa: (level >= 0, basis index) modified-kappa insertions
 * ------------------------------------------------------------------ */

struct CorrelatorKey {
    int genus = 0;
    int degree = 0;
    std::vector<int> sigma;
    std::vector<std::pair<int, int>> tau;
    std::vector<std::pair<int, int>> kappa;

    /* sorted insertion lists; level-0 descendents are primaries */
    void canonicalize()
    {
        for (auto it = tau.begin(); it != tau.end();) {
            if (it->first == 0) {
                sigma.push_back(it->second);
                it = tau.erase(it);
            } else {
                ++it;
            }
        }
        std::sort(sigma.begin(), sigma.end());
        std::sort(tau.begin(), tau.end());
        std::sort(kappa.begin(), kappa.end());
    }

    /* marked points on the curve; kappa insertions carry none */
    int insertion_count() const { return static_cast<int>(sigma.size() + tau.size()); }

    auto operator<=>(const CorrelatorKey&) const = default;
};

inline std::string key_to_string(const CorrelatorKey& key)
{
    std::string out = "g=" + std::to_string(key.genus) + ";d=" + std::to_string(key.degree);
    auto levelled = [](const std::vector<std::pair<int, int>>& v) {
        std::string s;
        for (const auto& [l, i] : v) {
            if (!s.empty())
                s += ",";
            s += std::to_string(l) + ":" + std::to_string(i);
        }
        return s;
    };
    if (!key.sigma.empty()) {
        out += ";sigma=";
        for (std::size_t i = 0; i < key.sigma.size(); ++i)
            out += (i ? "," : "") + std::to_string(key.sigma[i]);
    }
    if (!key.tau.empty())
        out += ";tau=" + levelled(key.tau);
    if (!key.kappa.empty())
        out += ";kappa=" + levelled(key.kappa);
    return out;
}

namespace detail {

inline int parse_int(std::string_view s)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("malformed integer in correlator key: '" + std::string(s) + "'");
    return value;
}

inline std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = s.find(sep, pos);
        if (next == std::string_view::npos) {
            out.push_back(s.substr(pos));
            return out;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
}

} // namespace detail

inline CorrelatorKey key_from_string(std::string_view text)
{
    CorrelatorKey key;
    bool saw_genus = false;
    for (std::string_view section : detail::split(text, ';')) {
        if (section.empty())
            continue;
        std::size_t eq = section.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("correlator key section without '=': '" + std::string(section) + "'");
        std::string_view name = section.substr(0, eq);
        std::string_view value = section.substr(eq + 1);
        if (name == "g") {
            key.genus = detail::parse_int(value);
            saw_genus = true;
        } else if (name == "d") {
            key.degree = detail::parse_int(value);
        } else if (name == "sigma") {
            for (std::string_view item : detail::split(value, ','))
                key.sigma.push_back(detail::parse_int(item));
        } else if (name == "tau" || name == "kappa") {
            for (std::string_view item : detail::split(value, ',')) {
                auto parts = detail::split(item, ':');
                if (parts.size() != 2)
                    throw std::invalid_argument("descendent/kappa insertions use level:index: '" + std::string(item) +
                                                "'");
                auto& list = (name == "tau") ? key.tau : key.kappa;
                list.emplace_back(detail::parse_int(parts[0]), detail::parse_int(parts[1]));
            }
        } else {
            throw std::invalid_argument("unknown correlator key section: '" + std::string(name) + "'");
        }
    }
    if (!saw_genus)
        throw std::invalid_argument("correlator key must specify g=");
    key.canonicalize();
    return key;
}

/* psi-intersection numbers on the moduli of genus-0 stable curves:
   <tau_{d_1}...tau_{d_n}> = (n-3)!/prod d_i!  when sum d_i = n-3, n >= 3 */
inline rational genus0_point_psi(const std::vector<int>& levels)
{
    int n = static_cast<int>(levels.size());
    if (n < 3)
        return 0;
    long long sum = 0;
    for (int d : levels) {
        if (d < 0)
            throw std::invalid_argument("genus0_point_psi: negative level");
        sum += d;
    }
    if (sum != n - 3)
        return 0;
    rational v = rational(factorial(static_cast<unsigned>(n - 3)));
    for (int d : levels)
        v /= rational(factorial(static_cast<unsigned>(d)));
    return v;
}

/* genus-1 analogue, by the string and dilaton equations from the one-point
   base value 1/24; dimension (sum d_i = n) rules out every configuration
   these do not reach */
inline rational genus1_point_psi(std::vector<int> levels)
{
    int n = static_cast<int>(levels.size());
    if (n == 0)
        return 0; // no stable genus-1 curve without markings
    long long sum = 0;
    for (int d : levels) {
        if (d < 0)
            throw std::invalid_argument("genus1_point_psi: negative level");
        sum += d;
    }
    if (sum != n)
        return 0;
    std::sort(levels.begin(), levels.end());
    if (levels.front() == 0) {
        std::vector<int> rest(levels.begin() + 1, levels.end());
        rational v = 0;
        for (std::size_t i = 0; i < rest.size(); ++i) {
            if (rest[i] == 0)
                continue;
            std::vector<int> next = rest;
            --next[i];
            v += genus1_point_psi(std::move(next));
        }
        return v;
    }
    if (n == 1 && levels[0] == 1)
        return rational(1, 24);
    if (levels.front() == 1) {
        std::vector<int> rest(levels.begin() + 1, levels.end());
        return rational(n - 1) * genus1_point_psi(std::move(rest));
    }
    return 0; // all levels >= 2: impossible under sum d_i = n
}

/* ------------------------------------------------------------------ *
 * The correlator engine: exact values of primary/descendent/kappa
 * correlators for the point, the line, and the plane (genus 0, plus
 * genus 1 for the point), memoized across queries.
 * ------------------------------------------------------------------ */

class CorrelatorEngine {
public:
    explicit CorrelatorEngine(FrobeniusRing ring) : ring_(std::move(ring))
    {
        if (ring_ == make_point_ring())
            target_ = Target::Point;
        else if (ring_ == make_projective_ring(1))
            target_ = Target::P1;
        else if (ring_ == make_projective_ring(2))
            target_ = Target::P2;
        else
            throw CapabilityError("correlators are implemented for the point, the line, and the plane");
    }

    Target target() const { return target_; }
    const FrobeniusRing& ring() const { return ring_; }
    const std::map<CorrelatorKey, rational>& table() const { return memo_; }

    /* trusted entries computed elsewhere (e.g. a cache file) */
    void merge_table(const std::map<CorrelatorKey, rational>& entries)
    {
        for (const auto& [k, v] : entries)
            memo_.emplace(k, v);
    }

    rational correlator(CorrelatorKey key)
    {
        key.canonicalize();
        validate(key);
        if (key.genus >= 2)
            throw CapabilityError("genus >= 2 correlators are not implemented");
        if (key.genus == 1 && target_ != Target::Point)
            throw CapabilityError("genus-1 correlators are implemented for the point target only");
        const int n = key.insertion_count();
        if (key.degree == 0 && 2 * key.genus - 2 + n <= 0)
            return 0; // no stable configuration
        if (!dimension_admissible(key))
            return 0;
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second;
        rational value = key.kappa.empty() ? dispatch(key) : eliminate_kappa(key);
        memo_.emplace(std::move(key), value);
        return value;
    }

    /* Genus-0 topological recursion on the highest descendent, splitting off
       the primaries at positions s1 and s2 of key.sigma.  Exposed so tests
       can confirm the value does not depend on that choice. */
    rational trr_genus0_value(const CorrelatorKey& key, std::size_t s1, std::size_t s2)
    {
        if (key.tau.empty() || key.sigma.size() < 2 || s1 == s2)
            throw std::invalid_argument("trr_genus0_value: needs a descendent and two distinct primaries");
        const auto [a, xi] = key.tau.back();
        const int mu = key.sigma.at(s1);
        const int nu = key.sigma.at(s2);

        /* remaining insertions as one multiset of (level, index) */
        std::map<std::pair<int, int>, int> mult;
        for (std::size_t i = 0; i < key.sigma.size(); ++i)
            if (i != s1 && i != s2)
                ++mult[{0, key.sigma[i]}];
        for (std::size_t i = 0; i + 1 < key.tau.size(); ++i)
            ++mult[{key.tau[i].first, key.tau[i].second}];
        std::vector<std::pair<std::pair<int, int>, int>> items(mult.begin(), mult.end());

        rational total = 0;
        std::vector<int> chosen(items.size(), 0);
        enumerate_splits(items, chosen, 0, rational(1), [&](const rational& weight) {
            for (int d1 = 0; d1 <= key.degree; ++d1) {
                const int d2 = key.degree - d1;
                for (int rho = 0; rho < ring_.rank; ++rho) {
                    CorrelatorKey left;
                    left.genus = 0;
                    left.degree = d1;
                    left.tau.emplace_back(a - 1, xi);
                    left.sigma.push_back(rho);
                    for (std::size_t t = 0; t < items.size(); ++t)
                        for (int c = 0; c < chosen[t]; ++c)
                            left.tau.push_back(items[t].first);
                    left.canonicalize();
                    rational lv = correlator(left);
                    if (lv == 0)
                        continue;
                    for (int sg = 0; sg < ring_.rank; ++sg) {
                        const rational& ef = ring_.eta_inv(rho, sg);
                        if (ef == 0)
                            continue;
                        CorrelatorKey right;
                        right.genus = 0;
                        right.degree = d2;
                        right.sigma = {sg, mu, nu};
                        for (std::size_t t = 0; t < items.size(); ++t)
                            for (int c = 0; c < items[t].second - chosen[t]; ++c)
                                right.tau.push_back(items[t].first);
                        right.canonicalize();
                        total += weight * ef * lv * correlator(right);
                    }
                }
            }
        });
        return total;
    }

private:
    FrobeniusRing ring_;
    Target target_ = Target::Point;
    std::map<CorrelatorKey, rational> memo_;

    void validate(const CorrelatorKey& key) const
    {
        if (key.genus < 0)
            throw std::invalid_argument("correlator: negative genus");
        if (key.degree < 0)
            throw std::invalid_argument("correlator: negative degree");
        if (target_ == Target::Point && key.degree != 0)
            throw std::invalid_argument("correlator: the point target has no curve classes of positive degree");
        auto check_index = [&](int i) {
            if (i < 0 || i >= ring_.rank)
                throw std::invalid_argument("correlator: basis index out of range");
        };
        for (int i : key.sigma)
            check_index(i);
        for (const auto& [l, i] : key.tau) {
            if (l < 0)
                throw std::invalid_argument("correlator: negative descendent level");
            check_index(i);
        }
        for (const auto& [l, i] : key.kappa) {
            if (l < 0)
                throw std::invalid_argument("correlator: negative kappa level");
            check_index(i);
        }
    }

    bool dimension_admissible(const CorrelatorKey& key) const
    {
        long long lhs = 0;
        for (int i : key.sigma)
            lhs += ring_.degrees[i];
        for (const auto& [d, m] : key.tau)
            lhs += 2LL * d + ring_.degrees[m];
        for (const auto& [a, al] : key.kappa)
            lhs += 2LL * a + ring_.degrees[al];
        const int D = ring_.dimension();
        long long rhs =
            2LL * ((D - 3) * (1 - key.genus) + ring_.chern_degree * key.degree + key.insertion_count());
        return lhs == rhs;
    }

    /* One kappa insertion trades for a descendent one level up, minus one
       correction per descendent insertion with the class multiplied in. */
    rational eliminate_kappa(const CorrelatorKey& key)
    {
        const auto [a, alpha] = key.kappa.back();
        CorrelatorKey main = key;
        main.kappa.pop_back();
        main.tau.emplace_back(a + 1, alpha);
        rational value = correlator(main);
        for (std::size_t i = 0; i < key.tau.size(); ++i) {
            const auto [di, mi] = key.tau[i];
            for (int mu = 0; mu < ring_.rank; ++mu) {
                const rational& c = ring_.c(mi, alpha, mu);
                if (c == 0)
                    continue;
                CorrelatorKey corr = key;
                corr.kappa.pop_back();
                corr.tau[i] = {di + a, mu};
                value -= c * correlator(corr);
            }
        }
        return value;
    }

    rational dispatch(const CorrelatorKey& key)
    {
        if (target_ == Target::Point) {
            std::vector<int> levels(key.sigma.size(), 0);
            for (const auto& [d, m] : key.tau) {
                (void)m;
                levels.push_back(d);
            }
            return key.genus == 0 ? genus0_point_psi(levels) : genus1_point_psi(std::move(levels));
        }
        return projective_genus0(key);
    }

    rational projective_genus0(const CorrelatorKey& key)
    {
        const int d = key.degree;
        if (key.tau.empty()) {
            if (d == 0) {
                if (key.sigma.size() != 3)
                    return 0;
                rational v = 0;
                for (int m = 0; m < ring_.rank; ++m)
                    v += ring_.c(key.sigma[0], key.sigma[1], m) * ring_.eta(m, key.sigma[2]);
                return v;
            }
            for (std::size_t i = 0; i < key.sigma.size(); ++i) {
                if (ring_.degrees[key.sigma[i]] == 0)
                    return 0; // fundamental class with no descendent
                if (ring_.degrees[key.sigma[i]] == 2) {
                    CorrelatorKey rest = key;
                    rest.sigma.erase(rest.sigma.begin() + static_cast<std::ptrdiff_t>(i));
                    return rational(d) * ring_.divisor_degrees[key.sigma[i]] * correlator(rest);
                }
            }
            if (ring_.rank == 2)
                return (key.sigma.empty() && d == 1) ? rational(1) : rational(0);
            /* plane: only top classes remain; the count through 3d-1 points */
            return (static_cast<int>(key.sigma.size()) == 3 * d - 1) ? rational(kontsevich_nd(d)) : rational(0);
        }
        if (d == 0) {
            /* constant maps: moduli is a product, psi part times cup product */
            const int n = key.insertion_count();
            long long dsum = 0;
            std::vector<int> classes = key.sigma;
            std::vector<int> levels(key.sigma.size(), 0);
            for (const auto& [lvl, m] : key.tau) {
                dsum += lvl;
                classes.push_back(m);
                levels.push_back(lvl);
            }
            if (dsum != n - 3)
                return 0;
            rational integral = integrate(ring_, multiply_iterated(ring_, classes));
            if (integral == 0)
                return 0;
            return genus0_point_psi(levels) * integral;
        }
        if (key.sigma.size() >= 2)
            return trr_genus0_value(key, 0, 1);
        return divisor_inversion(key);
    }

    /* Solve the divisor equation for the descendent correlator: appending a
       hyperplane insertion multiplies by d (plus descendent corrections). */
    rational divisor_inversion(const CorrelatorKey& key)
    {
        const int h = 1; // the degree-2 generator for P^1 and P^2
        CorrelatorKey up = key;
        up.sigma.push_back(h);
        rational v = correlator(up);
        for (std::size_t i = 0; i < key.tau.size(); ++i) {
            const auto [di, mi] = key.tau[i];
            for (int mu = 0; mu < ring_.rank; ++mu) {
                const rational& c = ring_.c(mi, h, mu);
                if (c == 0)
                    continue;
                CorrelatorKey low = key;
                low.tau[i] = {di - 1, mu};
                low.canonicalize();
                v -= c * correlator(low);
            }
        }
        return v / (rational(key.degree) * ring_.divisor_degrees[h]);
    }

    /* enumerate sub-multiset choices with their binomial weights */
    template <typename Fn>
    void enumerate_splits(const std::vector<std::pair<std::pair<int, int>, int>>& items, std::vector<int>& chosen,
                          std::size_t idx, rational weight, const Fn& fn)
    {
        if (idx == items.size()) {
            fn(weight);
            return;
        }
        for (int take = 0; take <= items[idx].second; ++take) {
            chosen[idx] = take;
            enumerate_splits(items, chosen, idx + 1,
                             weight * rational(binomial(items[idx].second, take)), fn);
        }
        chosen[idx] = 0;
    }
};

/* the correlator table as stable CSV text: "key,value" per line, sorted */
inline std::string correlator_table_csv(const std::map<CorrelatorKey, rational>& table)
{
    std::string out = "key,value\n";
    std::vector<std::pair<std::string, std::string>> rows;
    rows.reserve(table.size());
    for (const auto& [k, v] : table)
        rows.emplace_back(key_to_string(k), rational_to_string(v));
    std::sort(rows.begin(), rows.end());
    for (const auto& [k, v] : rows)
        out += k + "," + v + "\n";
    return out;
}

} // namespace gwk

#endif
