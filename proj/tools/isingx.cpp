#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "isingx/asympt.hpp"
#include "isingx/cache.hpp"
#include "isingx/errors.hpp"
#include "isingx/expansion.hpp"
#include "isingx/io.hpp"
#include "isingx/oracle.hpp"
#include "isingx/states.hpp"
#include "isingx/verify.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace {

using namespace isingx;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct GlobalOpts {
    std::string format = "json";
    std::string cache_dir;
    bool no_cache = false;
    int threads = 0;
    int max_order = 40;
    int max_v = 30;
};

struct LatticeOpts {
    std::string preset;
    std::string utiyama;

    LatticeSpec resolve() const {
        if (!preset.empty() && !utiyama.empty()) {
            throw spec_error("--lattice and --utiyama are mutually exclusive");
        }
        if (!utiyama.empty()) return LatticeSpec::parse_utiyama(utiyama);
        if (!preset.empty()) return LatticeSpec::parse(preset);
        throw spec_error("one of --lattice or --utiyama is required");
    }
};

void add_lattice_opts(CLI::App* cmd, LatticeOpts& opts) {
    cmd->add_option("--lattice", opts.preset, "square|triangular|hexagonal|kagome");
    cmd->add_option("--utiyama", opts.utiyama,
                    "nu=0 Utiyama bonds over {0,J,I} in the order J,J1,J0,J^0, e.g. I,J,J,J");
}

void check_order_budget(int order, const GlobalOpts& g) {
    if (order > g.max_order) {
        throw budget_error("order " + std::to_string(order) + " exceeds --max-order " +
                           std::to_string(g.max_order));
    }
}

void emit(const nlohmann::json& j, const std::string& csv, const GlobalOpts& g) {
    if (g.format == "csv") {
        std::cout << csv;
    } else {
        std::cout << io::dump(j);
    }
}

FreeEnergySeries expand_cached(const LatticeSpec& spec, int order, const FileCache& cache) {
    const std::string key = "expand-" + spec.name() + "-" + std::to_string(order);
    if (auto hit = cache.load(key)) {
        // Rehydrate; a corrupt payload falls through to recomputation.
        try {
            const nlohmann::json& p = *hit;
            FreeEnergySeries fes{spec, order,
                                 std::vector<Rational>(static_cast<size_t>(order) + 1),
                                 Rational::parse(p.at("log_x_prefactor").get<std::string>()),
                                 Rational::parse(p.at("log2_constant").get<std::string>()),
                                 p.at("sites_per_cell").get<long>()};
            for (int n = 1; n <= order; ++n) {
                fes.terms[static_cast<size_t>(n)] =
                    Rational::parse(p.at("terms").at(std::to_string(n)).get<std::string>());
            }
            return fes;
        } catch (const std::exception&) {
        }
    }
    FreeEnergySeries fes = expand_free_energy(spec, order);
    nlohmann::json payload = io::to_json(fes);
    payload["sites_per_cell"] = fes.sites_per_cell;
    cache.store(key, payload);
    return fes;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact low-temperature Ising series on Utiyama lattices"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--format", g.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--cache-dir", g.cache_dir, "cache directory (default: $ISINGX_CACHE_DIR)");
    app.add_flag("--no-cache", g.no_cache, "disable the disk cache");
    app.add_option("--threads", g.threads, "cap worker threads");
    app.add_option("--max-order", g.max_order, "series order budget guard");
    app.add_option("--max-V", g.max_v, "enumeration size budget guard");

    // expand
    auto* cmd_expand = app.add_subcommand("expand", "low-temperature free-energy coefficients");
    LatticeOpts expand_lat;
    int expand_order = 16;
    add_lattice_opts(cmd_expand, expand_lat);
    cmd_expand->add_option("--order", expand_order, "series order")->check(CLI::PositiveNumber);

    // states
    auto* cmd_states = app.add_subcommand("states", "numbers of states g(N)");
    LatticeOpts states_lat;
    int states_order = 16;
    std::string states_finite;
    long states_v = 0;
    add_lattice_opts(cmd_states, states_lat);
    cmd_states->add_option("--order", states_order)->check(CLI::PositiveNumber);
    cmd_states->add_option("--finite", states_finite, "symbolic|at (default: bulk)")
        ->check(CLI::IsMember({"symbolic", "at"}));
    cmd_states->add_option("--V", states_v, "vertex count for --finite at");

    // partition
    auto* cmd_partition = app.add_subcommand("partition", "finite-lattice partition polynomial");
    LatticeOpts part_lat;
    int part_order = 16;
    long part_v = 0;
    add_lattice_opts(cmd_partition, part_lat);
    cmd_partition->add_option("--order", part_order)->check(CLI::PositiveNumber);
    cmd_partition->add_option("--V", part_v, "evaluate at V (default: symbolic)");

    // prob
    auto* cmd_prob = app.add_subcommand("prob", "energy distribution P(N, x)");
    LatticeOpts prob_lat;
    int prob_order = 24;
    double prob_x = 0.1;
    int prob_trunc = -1;
    add_lattice_opts(cmd_prob, prob_lat);
    cmd_prob->add_option("--order", prob_order)->check(CLI::PositiveNumber);
    cmd_prob->add_option("--x", prob_x, "low-temperature variable")->required();
    cmd_prob->add_option("--truncation", prob_trunc, "support cutoff (default: order)");

    // asympt
    auto* cmd_asympt = app.add_subcommand("asympt", "asymptotic forms and the Onsager check");
    auto* as_states = cmd_asympt->add_subcommand("states", "x_c^-N 1F1(1-N/2;2;-1)");
    LatticeOpts as_states_lat;
    int as_n = 2;
    add_lattice_opts(as_states, as_states_lat);
    as_states->add_option("--N", as_n)->required();
    auto* as_prob = cmd_asympt->add_subcommand("prob", "asymptotic energy distribution");
    LatticeOpts as_prob_lat;
    double as_x = 0.1;
    int as_prob_n = 2, as_trunc = 64;
    add_lattice_opts(as_prob, as_prob_lat);
    as_prob->add_option("--x", as_x)->required();
    as_prob->add_option("--N", as_prob_n)->required();
    as_prob->add_option("--truncation", as_trunc);
    auto* as_ratio = cmd_asympt->add_subcommand("ratio", "|a(n)|/n! x_c^n, exact surd");
    LatticeOpts as_ratio_lat;
    int as_ratio_n = 10;
    add_lattice_opts(as_ratio, as_ratio_lat);
    as_ratio->add_option("--n", as_ratio_n)->required();
    auto* as_onsager = cmd_asympt->add_subcommand("onsager", "kappa-form vs quadrature");
    double as_betaj = 0.1;
    int as_nodes = 512;
    as_onsager->add_option("--betaJ", as_betaj)->required();
    as_onsager->add_option("--nodes", as_nodes);

    // oracle
    auto* cmd_oracle = app.add_subcommand("oracle", "independent verification tools");
    auto* or_enum = cmd_oracle->add_subcommand("enumerate", "exact spin-configuration histogram");
    LatticeOpts or_enum_lat;
    int or_rows = 4, or_cols = 4;
    std::string or_boundary = "periodic";
    add_lattice_opts(or_enum, or_enum_lat);
    or_enum->add_option("--rows", or_rows)->required();
    or_enum->add_option("--cols", or_cols)->required();
    or_enum->add_option("--boundary", or_boundary)->check(CLI::IsMember({"periodic", "free"}));
    auto* or_quad = cmd_oracle->add_subcommand("quadrature", "free energy by 2D quadrature");
    LatticeOpts or_quad_lat;
    double or_x = 0.05;
    int or_nodes = 512;
    add_lattice_opts(or_quad, or_quad_lat);
    or_quad->add_option("--x", or_x)->required();
    or_quad->add_option("--nodes", or_nodes);
    auto* or_high = cmd_oracle->add_subcommand("hightemp", "high-temperature coefficients q(r)");
    LatticeOpts or_high_lat;
    int oh_rows = 4, oh_cols = 4;
    add_lattice_opts(or_high, or_high_lat);
    or_high->add_option("--rows", oh_rows)->required();
    or_high->add_option("--cols", oh_cols)->required();

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run the acceptance suite");
    std::string verify_suite = "fast";
    std::string verify_report_path;
    cmd_verify->add_option("--suite", verify_suite)->check(CLI::IsMember({"fast", "all"}));
    cmd_verify->add_option("--report", verify_report_path, "write the JSON report to a file");

    // Let global flags (--format, --no-cache, ...) appear after a subcommand.
    for (CLI::App* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (CLI::App* nested : sub->get_subcommands({})) nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // help text, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

#if defined(_OPENMP)
    if (g.threads > 0) omp_set_num_threads(g.threads);
#endif
    FileCache cache = FileCache::resolve(g.cache_dir, !g.no_cache);

    if (cmd_expand->parsed()) {
        check_order_budget(expand_order, g);
        FreeEnergySeries fes = expand_cached(expand_lat.resolve(), expand_order, cache);
        emit(io::to_json(fes), io::to_csv(fes), g);
        return 0;
    }

    if (cmd_states->parsed()) {
        check_order_budget(states_order, g);
        FreeEnergySeries fes = expand_cached(states_lat.resolve(), states_order, cache);
        DOSTable dos = [&] {
            if (states_finite.empty()) return bulk_states(fes, states_order);
            if (states_finite == "symbolic") return finite_states(fes, states_order);
            if (states_v <= 0) throw spec_error("--finite at requires --V");
            return finite_states_at(fes, states_v, states_order);
        }();
        emit(io::to_json(dos), io::to_csv(dos), g);
        return 0;
    }

    if (cmd_partition->parsed()) {
        check_order_budget(part_order, g);
        FreeEnergySeries fes = expand_cached(part_lat.resolve(), part_order, cache);
        DOSTable dos = part_v > 0 ? finite_states_at(fes, part_v, part_order)
                                  : finite_states(fes, part_order);
        PartitionPolynomial z = partition_polynomial(dos);
        emit(io::to_json(z), io::to_csv(z), g);
        return 0;
    }

    if (cmd_prob->parsed()) {
        check_order_budget(prob_order, g);
        FreeEnergySeries fes = expand_cached(prob_lat.resolve(), prob_order, cache);
        DOSTable dos = bulk_states(fes, prob_order);
        int trunc = prob_trunc < 0 ? prob_order : prob_trunc;
        EnergyDistribution dist = energy_distribution(dos, prob_x, trunc);
        nlohmann::json j;
        j["schema"] = "1";
        j["kind"] = "energy-distribution";
        j["approx"] = true;
        j["lattice"] = fes.lattice.name();
        j["x"] = prob_x;
        j["truncation"] = trunc;
        j["tail_estimate"] = dist.tail_estimate;
        if (dist.negative_states_warning) {
            j["warning"] = "negative state counts; probability interpretation breaks down";
        }
        nlohmann::json probs = nlohmann::json::array();
        for (double p : dist.p) probs.push_back(p);
        j["P"] = probs;
        std::string csv = "N,P\n";
        for (size_t n = 0; n < dist.p.size(); ++n) {
            csv += std::to_string(n) + "," + std::to_string(dist.p[n]) + "\n";
        }
        emit(j, csv, g);
        return 0;
    }

    if (cmd_asympt->parsed()) {
        nlohmann::json j;
        j["schema"] = "1";
        j["approx"] = true;
        if (as_states->parsed()) {
            LatticeSpec spec = as_states_lat.resolve();
            if (!spec.is_preset()) throw spec_error("asympt states needs a preset lattice");
            j["kind"] = "asymptotic-states";
            j["lattice"] = spec.name();
            j["N"] = as_n;
            j["value"] = asympt::asymptotic_states(spec.preset_kind(), as_n);
        } else if (as_prob->parsed()) {
            LatticeSpec spec = as_prob_lat.resolve();
            if (!spec.is_preset()) throw spec_error("asympt prob needs a preset lattice");
            j["kind"] = "asymptotic-distribution";
            j["lattice"] = spec.name();
            j["x"] = as_x;
            j["N"] = as_prob_n;
            j["value"] = asympt::asymptotic_distribution(spec.preset_kind(), as_x, as_prob_n,
                                                         as_trunc);
        } else if (as_ratio->parsed()) {
            LatticeSpec spec = as_ratio_lat.resolve();
            if (!spec.is_preset()) throw spec_error("asympt ratio needs a preset lattice");
            check_order_budget(as_ratio_n, g);
            Surd ratio = asymptotic_ratio(spec.preset_kind(), as_ratio_n);
            j["kind"] = "asymptotic-ratio";
            j["approx"] = false;
            j["lattice"] = spec.name();
            j["n"] = as_ratio_n;
            j["exact"] = ratio.str();
            j["value"] = ratio.to_double();
        } else if (as_onsager->parsed()) {
            auto cmp = asympt::onsager_kappa_check(as_betaj, as_nodes);
            j["kind"] = "onsager-kappa-check";
            j["betaJ"] = as_betaj;
            j["kappa"] = cmp.kappa;
            j["series_value"] = cmp.series_value;
            j["quadrature_value"] = cmp.quadrature_value;
            j["difference"] = cmp.series_value - cmp.quadrature_value;
        } else {
            throw spec_error("asympt: choose states|prob|ratio|onsager");
        }
        emit(j, io::dump(j), g);
        return 0;
    }

    if (cmd_oracle->parsed()) {
        if (or_enum->parsed()) {
            LatticeSpec spec = or_enum_lat.resolve();
            if (!spec.is_preset()) throw spec_error("oracle enumerate needs a preset lattice");
            if (or_rows * or_cols > g.max_v) {
                throw budget_error("V = " + std::to_string(or_rows * or_cols) +
                                   " exceeds --max-V " + std::to_string(g.max_v));
            }
            auto lat = oracle::FiniteLattice::make(
                spec.preset_kind(), or_rows, or_cols,
                or_boundary == "free" ? oracle::Boundary::Free : oracle::Boundary::Periodic);
            auto counts = oracle::enumerate_dos(lat);
            nlohmann::json j;
            j["schema"] = "1";
            j["kind"] = "dos-histogram";
            j["lattice"] = spec.name();
            j["rows"] = or_rows;
            j["cols"] = or_cols;
            j["boundary"] = or_boundary;
            j["V"] = lat.V;
            j["E"] = lat.edges.size();
            nlohmann::json entries = nlohmann::json::object();
            for (size_t r = 0; r < counts.size(); ++r) {
                if (counts[r] != 0) entries[std::to_string(r)] = counts[r];
            }
            j["counts"] = entries;
            std::string csv = "r,count\n";
            for (size_t r = 0; r < counts.size(); ++r) {
                csv += std::to_string(r) + "," + std::to_string(counts[r]) + "\n";
            }
            emit(j, csv, g);
            return 0;
        }
        if (or_quad->parsed()) {
            auto res = oracle::quadrature_free_energy(or_quad_lat.resolve(), or_x, or_nodes);
            nlohmann::json j;
            j["schema"] = "1";
            j["kind"] = "quadrature";
            j["approx"] = true;
            j["x"] = or_x;
            j["nodes"] = res.nodes;
            j["value"] = res.value;
            j["error_estimate"] = res.error_estimate;
            emit(j, io::dump(j), g);
            return 0;
        }
        if (or_high->parsed()) {
            LatticeSpec spec = or_high_lat.resolve();
            if (!spec.is_preset()) throw spec_error("oracle hightemp needs a preset lattice");
            auto lat = oracle::FiniteLattice::make(spec.preset_kind(), oh_rows, oh_cols);
            if (lat.V > g.max_v) {
                throw budget_error("V = " + std::to_string(lat.V) + " exceeds --max-V " +
                                   std::to_string(g.max_v));
            }
            auto q = oracle::high_temp_coefficients(lat, oracle::enumerate_dos(lat));
            nlohmann::json j;
            j["schema"] = "1";
            j["kind"] = "high-temperature-coefficients";
            j["lattice"] = spec.name();
            j["rows"] = oh_rows;
            j["cols"] = oh_cols;
            nlohmann::json entries = nlohmann::json::object();
            for (size_t r = 0; r < q.size(); ++r) {
                if (q[r] != 0) entries[std::to_string(r)] = q[r].get_str();
            }
            j["q"] = entries;
            std::string csv = "r,q\n";
            for (size_t r = 0; r < q.size(); ++r) csv += std::to_string(r) + "," + q[r].get_str() + "\n";
            emit(j, csv, g);
            return 0;
        }
        throw spec_error("oracle: choose enumerate|quadrature|hightemp");
    }

    if (cmd_verify->parsed()) {
        verify::VerifyReport report = verify::run_verification(verify_suite);
        std::cout << report.summary();
        nlohmann::json j = report.to_json();
        if (!verify_report_path.empty()) {
            std::ofstream out(verify_report_path);
            out << io::dump(j);
        } else if (g.format == "json") {
            std::cout << io::dump(j);
        }
        return report.all_pass ? 0 : kExitVerifyFailure;
    }

    throw spec_error("no subcommand");
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const isingx::budget_error& e) {
        std::cerr << "error (budget): " << e.what() << "\n";
        return kExitBudget;
    } catch (const isingx::spec_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
