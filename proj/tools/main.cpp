// Command-line frontend: exact correlators, coordinate-change tables, and
// identity verification for the point, the line, and the plane.
//
// Exit codes: 0 success / identity holds, 1 identity violated,
//             2 malformed input, 3 requested value outside what is implemented.

#include <gwkappa/coordinate_change.hpp>
#include <gwkappa/correlators.hpp>
#include <gwkappa/potentials.hpp>
#include <gwkappa/quantum_cohomology.hpp>
#include <gwkappa/serialization.hpp>
#include <gwkappa/verifiers.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

namespace {

gwk::FrobeniusRing ring_from_target(const std::string& target)
{
    if (target == "pt")
        return gwk::make_point_ring();
    if (target == "p1")
        return gwk::make_projective_ring(1);
    if (target == "p2")
        return gwk::make_projective_ring(2);
    throw std::invalid_argument("unknown target '" + target + "' (expected pt, p1, or p2)");
}

void check_order_guard(int order, bool allow_large)
{
    if (order < 1)
        throw std::invalid_argument("--order must be at least 1");
    const int guard = 12;
    if (order > guard && !allow_large)
        throw std::invalid_argument("--order " + std::to_string(order) + " exceeds the guard of " +
                                    std::to_string(guard) + "; pass --allow-large to override");
}

std::optional<std::filesystem::path> cache_path(const std::string& target)
{
    const char* dir = std::getenv("GWKAPPA_CACHE_DIR");
    if (dir == nullptr || *dir == '\0')
        return std::nullopt;
    return std::filesystem::path(dir) / (target + ".json");
}

void load_cache(gwk::CorrelatorEngine& engine, const std::string& target)
{
    auto path = cache_path(target);
    if (!path || !std::filesystem::exists(*path))
        return;
    std::ifstream in(*path);
    if (!in)
        return;
    gwk::ordered_json j = gwk::ordered_json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded())
        return;
    engine.merge_table(gwk::cache_from_json(engine.target(), j));
}

void save_cache(const gwk::CorrelatorEngine& engine, const std::string& target)
{
    auto path = cache_path(target);
    if (!path)
        return;
    std::error_code ec;
    std::filesystem::create_directories(path->parent_path(), ec);
    std::ofstream out(*path);
    if (!out) {
        std::cerr << "warning: could not write cache file " << path->string() << "\n";
        return;
    }
    out << gwk::cache_to_json(engine.target(), engine.table()).dump(2) << "\n";
}

int emit_report(const gwk::CheckReport& report)
{
    std::cout << gwk::report_to_json(report).dump(2) << "\n";
    return report.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact descendent/kappa correlators and their identities for small targets"};
    app.require_subcommand(1);

    std::string target = "pt";
    int order = 6;
    int levels = 2;
    int max_q = 2;
    bool allow_large = false;

    auto add_common = [&](CLI::App* cmd, bool with_q) {
        cmd->add_option("--target", target, "target: pt, p1, or p2")->capture_default_str();
        cmd->add_option("--order", order, "total order cap in the time variables")->capture_default_str();
        cmd->add_option("--levels", levels, "highest kappa level materialized")->capture_default_str();
        if (with_q)
            cmd->add_option("--max-q", max_q, "Novikov degree cap")->capture_default_str();
        cmd->add_flag("--allow-large", allow_large, "lift the order guard");
    };

    /* correlator */
    std::string key_text;
    CLI::App* cmd_correlator = app.add_subcommand("correlator", "print one exact correlator");
    cmd_correlator->add_option("--target", target, "target: pt, p1, or p2")->capture_default_str();
    cmd_correlator->add_option("key", key_text, "e.g. \"g=0;d=1;sigma=1,1;tau=1:0\"")->required();

    /* change-of-vars */
    CLI::App* cmd_change = app.add_subcommand("change-of-vars", "emit the t(s) and s(t) tables as JSON");
    add_common(cmd_change, false);

    /* verify */
    CLI::App* cmd_verify = app.add_subcommand("verify", "check one identity coefficientwise");
    cmd_verify->require_subcommand(1);
    int genus = 0;
    std::string ring_json_path;
    CLI::App* v_eq_st = cmd_verify->add_subcommand("eq-st", "s-derivative vs t-derivatives of the joint potential");
    add_common(v_eq_st, true);
    v_eq_st->add_option("--genus", genus, "genus of the potential")->capture_default_str();
    CLI::App* v_thm = cmd_verify->add_subcommand("thm-change", "t(s) substitution matches the kappa potential");
    add_common(v_thm, true);
    v_thm->add_option("--genus", genus, "genus of the potential")->capture_default_str();
    CLI::App* v_trr0 = cmd_verify->add_subcommand("trr0", "genus-0 recursion for higher kappa levels");
    add_common(v_trr0, true);
    CLI::App* v_trrdiv = cmd_verify->add_subcommand("trr-div", "level-zero recursion for classes of degree <= 2");
    add_common(v_trrdiv, true);
    CLI::App* v_trr1 = cmd_verify->add_subcommand("trr1", "genus-1 recursion (point target)");
    add_common(v_trr1, false);
    CLI::App* v_wdvv = cmd_verify->add_subcommand("wdvv", "associativity of the quantum product");
    add_common(v_wdvv, true);
    CLI::App* v_ring = cmd_verify->add_subcommand("ring", "structural audit of a ring description");
    v_ring->add_option("--target", target, "audit a built-in ring: pt, p1, or p2")->capture_default_str();
    v_ring->add_option("--ring-json", ring_json_path, "audit a ring loaded from this JSON file");

    /* tables */
    CLI::App* cmd_tables = app.add_subcommand("tables", "reference tables");
    cmd_tables->require_subcommand(1);
    int max_degree = 5;
    int max_n = 7;
    CLI::App* t_nd = cmd_tables->add_subcommand("nd", "rational plane curve counts");
    t_nd->add_option("--max-degree", max_degree, "largest degree")->capture_default_str();
    t_nd->add_flag("--allow-large", allow_large, "lift the degree guard");
    CLI::App* t_wp = cmd_tables->add_subcommand("wp-kappa", "level-one kappa powers against point insertions");
    t_wp->add_option("--genus", genus, "0 or 1")->capture_default_str();
    t_wp->add_option("--max-n", max_n, "largest number of point insertions")->capture_default_str();
    t_wp->add_flag("--allow-large", allow_large, "lift the size guard");
    CLI::App* t_ts = cmd_tables->add_subcommand("t-of-s", "readable t(s) tables");
    add_common(t_ts, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (cmd_correlator->parsed()) {
            gwk::CorrelatorKey key = gwk::key_from_string(key_text);
            gwk::CorrelatorEngine engine(ring_from_target(target));
            load_cache(engine, target);
            gwk::rational value = engine.correlator(key);
            save_cache(engine, target);
            std::cout << gwk::rational_to_string(value) << "\n";
            return 0;
        }
        if (cmd_change->parsed()) {
            check_order_guard(order, allow_large);
            gwk::CoordinateChange cc = gwk::compute_coordinate_change(ring_from_target(target), order, levels);
            std::cout << gwk::coordinate_change_to_json(cc).dump(2) << "\n";
            return 0;
        }
        if (v_eq_st->parsed() || v_thm->parsed() || v_trr0->parsed() || v_trrdiv->parsed() || v_trr1->parsed()) {
            check_order_guard(order, allow_large);
            gwk::CorrelatorEngine engine(ring_from_target(target));
            load_cache(engine, target);
            gwk::CheckReport report;
            if (v_eq_st->parsed())
                report = gwk::check_eq_st(engine, genus, order, levels, target == "pt" ? 0 : max_q);
            else if (v_thm->parsed())
                report = gwk::check_main_theorem(engine, genus, order, levels, target == "pt" ? 0 : max_q);
            else if (v_trr0->parsed())
                report = gwk::check_trr_genus0(engine, order, levels, target == "pt" ? 0 : max_q);
            else if (v_trrdiv->parsed())
                report = gwk::check_divisor_trr(engine, order, levels, target == "pt" ? 0 : max_q);
            else
                report = gwk::check_trr_genus1(engine, order, levels);
            save_cache(engine, target);
            return emit_report(report);
        }
        if (v_wdvv->parsed()) {
            check_order_guard(order, allow_large);
            return emit_report(gwk::check_wdvv(ring_from_target(target), order, max_q));
        }
        if (v_ring->parsed()) {
            gwk::FrobeniusRing ring;
            if (!ring_json_path.empty()) {
                std::ifstream in(ring_json_path);
                if (!in)
                    throw std::invalid_argument("cannot open ring file: " + ring_json_path);
                gwk::ordered_json j = gwk::ordered_json::parse(in, nullptr, /*allow_exceptions=*/false);
                if (j.is_discarded())
                    throw std::invalid_argument("ring file is not valid JSON: " + ring_json_path);
                ring = gwk::ring_from_json(j);
            } else {
                ring = ring_from_target(target);
            }
            return emit_report(gwk::check_ring(ring));
        }
        if (t_nd->parsed()) {
            if (max_degree < 1)
                throw std::invalid_argument("--max-degree must be at least 1");
            if (max_degree > 12 && !allow_large)
                throw std::invalid_argument("--max-degree exceeds the guard of 12; pass --allow-large to override");
            std::cout << "d,N_d\n";
            for (int d = 1; d <= max_degree; ++d)
                std::cout << d << "," << gwk::kontsevich_nd(d).str() << "\n";
            return 0;
        }
        if (t_wp->parsed()) {
            if (genus != 0 && genus != 1)
                throw std::invalid_argument("--genus must be 0 or 1");
            if (max_n > 12 && !allow_large)
                throw std::invalid_argument("--max-n exceeds the guard of 12; pass --allow-large to override");
            gwk::CorrelatorEngine engine(gwk::make_point_ring());
            load_cache(engine, "pt");
            const int n_min = genus == 0 ? 3 : 1;
            std::cout << "n,value\n";
            for (int n = n_min; n <= max_n; ++n) {
                gwk::CorrelatorKey key;
                key.genus = genus;
                key.sigma.assign(static_cast<std::size_t>(n), 0);
                const int k = n - 3 + 3 * genus;
                key.kappa.assign(static_cast<std::size_t>(k), {1, 0});
                std::cout << n << "," << gwk::rational_to_string(engine.correlator(key)) << "\n";
            }
            save_cache(engine, "pt");
            return 0;
        }
        if (t_ts->parsed()) {
            check_order_guard(order, allow_large);
            gwk::CoordinateChange cc = gwk::compute_coordinate_change(ring_from_target(target), order, levels);
            for (const auto& [key, series] : cc.t_of_s)
                std::cout << "t" << key.first << "_" << key.second << " = " << gwk::to_pretty_string(series)
                          << "\n";
            return 0;
        }
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const gwk::CapabilityError& e) {
        std::cerr << "not implemented: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
}
