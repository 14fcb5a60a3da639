#ifndef GWKAPPA_SERIALIZATION_HPP
#define GWKAPPA_SERIALIZATION_HPP

#include <gwkappa/coordinate_change.hpp>
#include <gwkappa/correlators.hpp>
#include <gwkappa/formal_series.hpp>
#include <gwkappa/frobenius_ring.hpp>
#include <gwkappa/verifiers.hpp>

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gwk {

using ordered_json = nlohmann::ordered_json;

/* ------------------------------------------------------------------ *
 * Frobenius rings
 * ------------------------------------------------------------------ */

inline ordered_json ring_to_json(const FrobeniusRing& ring)
{
    ordered_json j;
    j["rank"] = ring.rank;
    j["degrees"] = ring.degrees;
    ordered_json sc = ordered_json::array();
    for (int a = 0; a < ring.rank; ++a) {
        ordered_json row = ordered_json::array();
        for (int b = 0; b < ring.rank; ++b) {
            ordered_json cell = ordered_json::array();
            for (int m = 0; m < ring.rank; ++m)
                cell.push_back(rational_to_string(ring.c(a, b, m)));
            row.push_back(std::move(cell));
        }
        sc.push_back(std::move(row));
    }
    j["structure_constants"] = std::move(sc);
    ordered_json pr = ordered_json::array();
    for (int a = 0; a < ring.rank; ++a) {
        ordered_json row = ordered_json::array();
        for (int b = 0; b < ring.rank; ++b)
            row.push_back(rational_to_string(ring.eta(a, b)));
        pr.push_back(std::move(row));
    }
    j["pairing"] = std::move(pr);
    ordered_json dd = ordered_json::array();
    for (const auto& v : ring.divisor_degrees)
        dd.push_back(rational_to_string(v));
    j["divisor_degrees"] = std::move(dd);
    j["chern_degree"] = ring.chern_degree;
    return j;
}

/* exact inverse of a square rational matrix, if it exists */
inline std::optional<std::vector<rational>> invert_matrix(int n, const std::vector<rational>& m)
{
    std::vector<std::vector<rational>> a(n, std::vector<rational>(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            a[i][j] = m[static_cast<std::size_t>(i) * n + j];
        a[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (a[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0)
            return std::nullopt;
        std::swap(a[col], a[pivot]);
        rational inv = rational(1) / a[col][col];
        for (int j = 0; j < 2 * n; ++j)
            a[col][j] *= inv;
        for (int row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0)
                continue;
            rational f = a[row][col];
            for (int j = 0; j < 2 * n; ++j)
                a[row][j] -= f * a[col][j];
        }
    }
    std::vector<rational> out(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out[static_cast<std::size_t>(i) * n + j] = a[i][n + j];
    return out;
}

/* Parse a ring description.  Shape errors throw; algebraic axioms are NOT
   enforced here so that a structural audit can still run on the result
   (a singular pairing leaves pairing_inverse all zero for the audit to
   flag). */
inline FrobeniusRing ring_from_json(const ordered_json& j)
{
    FrobeniusRing ring;
    try {
        ring.rank = j.at("rank").get<int>();
        if (ring.rank < 1)
            throw std::invalid_argument("ring: rank must be positive");
        ring.degrees = j.at("degrees").get<std::vector<int>>();
        const auto& sc = j.at("structure_constants");
        ring.structure_constants.assign(static_cast<std::size_t>(ring.rank) * ring.rank * ring.rank, 0);
        for (int a = 0; a < ring.rank; ++a)
            for (int b = 0; b < ring.rank; ++b)
                for (int m = 0; m < ring.rank; ++m)
                    ring.c(a, b, m) = rational_from_string(sc.at(a).at(b).at(m).get<std::string>());
        const auto& pr = j.at("pairing");
        ring.pairing.assign(static_cast<std::size_t>(ring.rank) * ring.rank, 0);
        for (int a = 0; a < ring.rank; ++a)
            for (int b = 0; b < ring.rank; ++b)
                ring.pairing[static_cast<std::size_t>(a) * ring.rank + b] =
                    rational_from_string(pr.at(a).at(b).get<std::string>());
        const auto& dd = j.at("divisor_degrees");
        ring.divisor_degrees.clear();
        for (const auto& v : dd)
            ring.divisor_degrees.push_back(rational_from_string(v.get<std::string>()));
        ring.chern_degree = j.value("chern_degree", 0);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("ring: malformed description: ") + e.what());
    }
    auto inv = invert_matrix(ring.rank, ring.pairing);
    ring.pairing_inverse = inv ? *inv : std::vector<rational>(static_cast<std::size_t>(ring.rank) * ring.rank, 0);
    return ring;
}

/* ------------------------------------------------------------------ *
 * Truncated series.  Term order and the key order inside each monomial
 * follow the canonical variable order, so output is byte-stable.
 * ------------------------------------------------------------------ */

inline ordered_json series_to_json(const TruncatedSeries& s)
{
    ordered_json j;
    j["policy"] = {{"max_order", s.policy.max_order},   {"max_theta", s.policy.max_theta},
                   {"max_q", s.policy.max_q},           {"trust_order", s.policy.trust_order},
                   {"trust_theta", s.policy.trust_theta}, {"trust_q", s.policy.trust_q}};
    ordered_json terms = ordered_json::array();
    for (const auto& [m, c] : s.terms) {
        ordered_json mono = ordered_json::object();
        for (const auto& [v, e] : m.factors)
            mono[encode_variable(v)] = e;
        terms.push_back({{"monomial", std::move(mono)}, {"coeff", rational_to_string(c)}});
    }
    j["terms"] = std::move(terms);
    return j;
}

inline TruncatedSeries series_from_json(const ordered_json& j)
{
    TruncationPolicy p;
    try {
        const auto& jp = j.at("policy");
        p.max_order = jp.at("max_order").get<int>();
        p.max_theta = jp.at("max_theta").get<int>();
        p.max_q = jp.at("max_q").get<int>();
        p.trust_order = jp.value("trust_order", p.max_order);
        p.trust_theta = jp.value("trust_theta", p.max_theta);
        p.trust_q = jp.value("trust_q", p.max_q);
        TruncatedSeries s = series_zero(p);
        s.val = {0, 0, 0};
        for (const auto& term : j.at("terms")) {
            Monomial m;
            for (const auto& [k, v] : term.at("monomial").items())
                m = m.times(decode_variable(k), v.get<int>());
            s.terms[m] = rational_from_string(term.at("coeff").get<std::string>());
        }
        detail::prune(s);
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("series: malformed description: ") + e.what());
    }
}

/* ------------------------------------------------------------------ *
 * Coordinate-change tables
 * ------------------------------------------------------------------ */

inline ordered_json coordinate_change_to_json(const CoordinateChange& cc)
{
    ordered_json j;
    j["order"] = cc.order;
    j["levels"] = cc.theta_cap;
    ordered_json ts = ordered_json::array();
    for (const auto& [key, series] : cc.t_of_s)
        ts.push_back({{"d", key.first}, {"mu", key.second}, {"series", series_to_json(series)}});
    j["t_of_s"] = std::move(ts);
    ordered_json st = ordered_json::array();
    for (const auto& [key, series] : cc.s_of_t)
        st.push_back({{"a", key.first}, {"alpha", key.second}, {"series", series_to_json(series)}});
    j["s_of_t"] = std::move(st);
    return j;
}

/* ------------------------------------------------------------------ *
 * Check reports
 * ------------------------------------------------------------------ */

inline ordered_json report_to_json(const CheckReport& report)
{
    ordered_json j;
    j["identity"] = report.identity;
    j["status"] = report.pass ? "pass" : "fail";
    if (!report.note.empty())
        j["note"] = report.note;
    ordered_json vs = ordered_json::array();
    for (const auto& v : report.violations) {
        ordered_json mono = ordered_json::object();
        for (const auto& [var, e] : v.monomial.factors)
            mono[encode_variable(var)] = e;
        vs.push_back({{"where", v.where},
                      {"monomial", std::move(mono)},
                      {"lhs", rational_to_string(v.lhs)},
                      {"rhs", rational_to_string(v.rhs)}});
    }
    j["violations"] = std::move(vs);
    return j;
}

/* ------------------------------------------------------------------ *
 * Correlator caches
 * ------------------------------------------------------------------ */

inline constexpr const char* kCacheSchema = "gwkappa-correlator-cache-v1";

inline ordered_json cache_to_json(Target target, const std::map<CorrelatorKey, rational>& table)
{
    ordered_json j;
    j["schema"] = kCacheSchema;
    j["target"] = target_name(target);
    ordered_json entries = ordered_json::array();
    for (const auto& [k, v] : table)
        entries.push_back({{"key", key_to_string(k)}, {"value", rational_to_string(v)}});
    j["entries"] = std::move(entries);
    return j;
}

/* returns entries only when schema and target match; never throws on
   mismatched caches (a stale cache must not poison a run) */
inline std::map<CorrelatorKey, rational> cache_from_json(Target target, const ordered_json& j)
{
    std::map<CorrelatorKey, rational> out;
    if (!j.is_object() || j.value("schema", "") != kCacheSchema || j.value("target", "") != target_name(target))
        return out;
    if (!j.contains("entries") || !j.at("entries").is_array())
        return out;
    for (const auto& e : j.at("entries")) {
        try {
            out.emplace(key_from_string(e.at("key").get<std::string>()),
                        rational_from_string(e.at("value").get<std::string>()));
        } catch (const std::exception&) {
            return {}; // treat any corruption as a cache miss
        }
    }
    return out;
}

} // namespace gwk

#endif
