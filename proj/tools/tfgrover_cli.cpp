// Command-line harness: spectrum/evolve sweeps, the aggregated cross-check
// suite, and plot-script generation for the emitted CSVs.
//
// Exit codes: 0 success, 1 failed check, 2 usage error.

#include "tfgrover/tfgrover.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

namespace {

std::vector<double> parse_gamma_sweep(const std::string& text) {
    std::vector<double> out;
    if (text.empty()) return out;
    if (text.find(':') != std::string::npos) {
        // start:stop:step
        double start = 0.0, stop = 0.0, step = 0.0;
        if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &start, &stop, &step) != 3 || step <= 0.0) {
            throw tfgrover::UsageError("--gamma-sweep expects start:stop:step or a comma list");
        }
        for (double g = start; g <= stop + 1e-12; g += step) out.push_back(std::min(g, stop));
        return out;
    }
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        try {
            out.push_back(std::stod(cell));
        } catch (const std::exception&) {
            throw tfgrover::UsageError("bad gamma value: " + cell);
        }
    }
    return out;
}

struct CommonFlags {
    int n_min = 16, n_max = 24, n_step = 2;
    double gamma = tfgrover::kPi;
    std::string gamma_sweep;
    long t_max = 0;
    std::string out;
    std::string curve_out;
    std::string format = "csv";
    std::uint64_t seed = 12345;
    bool no_fullspace = false;
    bool fault_inject_xi = false;
    bool schema = false;
    int jobs = 0;
};

void add_common_flags(CLI::App* cmd, CommonFlags& fl) {
    cmd->add_option("--n-min", fl.n_min, "smallest qubit count (even)");
    cmd->add_option("--n-max", fl.n_max, "largest qubit count (even)");
    cmd->add_option("--n-step", fl.n_step, "qubit count stride (even)");
    cmd->add_option("--gamma", fl.gamma, "oracle angle in radians, in (0, pi]");
    cmd->add_option("--gamma-sweep", fl.gamma_sweep,
                    "gamma list: comma separated or start:stop:step (overrides --gamma)");
    cmd->add_option("--t-max", fl.t_max, "scan budget in periods; 0 = auto (just past first peak)");
    cmd->add_option("--out", fl.out, "output path; default stdout");
    cmd->add_option("--curve-out", fl.curve_out, "also write per-step overlap curves (evolve)");
    cmd->add_option("--format", fl.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--seed", fl.seed, "seed for randomized cross-checks");
    cmd->add_flag("--no-fullspace", fl.no_fullspace, "skip 2^n brute-force comparisons");
    cmd->add_flag("--fault-inject-xi", fl.fault_inject_xi,
                  "negative control: tamper the xi table so its identity check fails");
    cmd->add_flag("--schema", fl.schema, "print the output schema and exit");
    cmd->add_option("--jobs", fl.jobs, "worker threads; 0 = hardware");
}

tfgrover::SweepConfig to_config(const CommonFlags& fl) {
    tfgrover::SweepConfig cfg;
    cfg.n_min = fl.n_min;
    cfg.n_max = fl.n_max;
    cfg.n_step = fl.n_step;
    cfg.gamma_list = fl.gamma_sweep.empty() ? std::vector<double>{fl.gamma}
                                            : parse_gamma_sweep(fl.gamma_sweep);
    cfg.t_max = fl.t_max;
    cfg.out = fl.out;
    cfg.curve_out = fl.curve_out;
    cfg.format = (fl.format == "json") ? tfgrover::OutputFormat::json : tfgrover::OutputFormat::csv;
    cfg.seed = fl.seed;
    cfg.no_fullspace = fl.no_fullspace;
    cfg.fault_inject_xi = fl.fault_inject_xi;
    cfg.jobs = fl.jobs;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace tfgrover;

    CLI::App app{"transverse-field search simulator and analysis harness"};
    app.set_config("--config", "", "read default flag values from an INI/TOML file");
    app.require_subcommand(1);

    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "diagonalization vs closed-form rate and fidelities over (n, gamma)");
    CommonFlags fl_spectrum;
    add_common_flags(spectrum, fl_spectrum);

    CLI::App* evolve =
        app.add_subcommand("evolve", "run the search and report peak overlap and query counts");
    CommonFlags fl_evolve;
    add_common_flags(evolve, fl_evolve);

    CLI::App* crosscheck =
        app.add_subcommand("crosscheck", "run the full invariant suite; JSON report");
    CommonFlags fl_crosscheck;
    fl_crosscheck.n_min = 8;
    fl_crosscheck.n_max = 12;
    add_common_flags(crosscheck, fl_crosscheck);

    CLI::App* plots = app.add_subcommand("plots", "emit plot scripts for an existing sweep CSV");
    std::string spectrum_csv = "spectrum.csv";
    std::string plots_dir = ".";
    bool plots_schema = false;
    plots->add_option("--spectrum-csv", spectrum_csv, "spectrum sweep CSV to plot");
    plots->add_option("--out", plots_dir, "directory for the generated scripts");
    plots->add_flag("--schema", plots_schema, "print the columns the scripts consume and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (spectrum->parsed()) {
            if (fl_spectrum.schema) {
                std::fputs(schema_dump(spectrum_schema()).c_str(), stdout);
                return 0;
            }
            const SweepConfig cfg = to_config(fl_spectrum);
            write_output(cfg.out, render(spectrum_table(cfg), cfg.format));
            return 0;
        }
        if (evolve->parsed()) {
            if (fl_evolve.schema) {
                std::fputs(schema_dump(evolve_schema()).c_str(), stdout);
                std::fputs(schema_dump(curve_schema()).c_str(), stdout);
                return 0;
            }
            const SweepConfig cfg = to_config(fl_evolve);
            const EvolveResult res = evolve_tables(cfg);
            write_output(cfg.out, render(res.summary, cfg.format));
            if (!cfg.curve_out.empty()) {
                write_output(cfg.curve_out, render(res.curves, cfg.format));
            }
            return 0;
        }
        if (crosscheck->parsed()) {
            if (fl_crosscheck.schema) {
                std::fputs("name\tinvariant identifier\npassed\tboolean\nmeasured\tworst observed "
                           "value\nbound\tallowed bound\ndetail\tfree-form context\n",
                           stdout);
                return 0;
            }
            const SweepConfig cfg = to_config(fl_crosscheck);
            const CrosscheckReport rep = run_crosscheck(cfg);
            write_output(cfg.out, crosscheck_json(rep, cfg));
            if (!rep.all_passed) {
                for (const auto& item : rep.items) {
                    if (!item.passed) {
                        std::fprintf(stderr, "FAILED check: %s (measured %.3e, bound %.3e)\n",
                                     item.name.c_str(), item.measured, item.bound);
                    }
                }
                return 1;
            }
            return 0;
        }
        if (plots->parsed()) {
            if (plots_schema) {
                std::fputs("n\ngamma\nsqrtn_arg_alpha\nfid_target\nfid_bplus\npred_arg_alpha\n"
                           "pred_fid_target\npred_fid_bplus\n",
                           stdout);
                return 0;
            }
            for (const auto& path : write_plot_scripts(spectrum_csv, plots_dir)) {
                std::fprintf(stdout, "wrote %s\n", path.c_str());
            }
            return 0;
        }
    } catch (const UsageError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
