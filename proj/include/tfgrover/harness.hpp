// Experiment harness behind the command-line tool: parameter sweeps over
// (n, gamma), deterministic CSV/JSON emission, the aggregated cross-check
// suite, and generation of plot scripts for the emitted data.

#pragma once

#include "tfgrover/analytic.hpp"
#include "tfgrover/chi.hpp"
#include "tfgrover/dicke.hpp"
#include "tfgrover/fullspace.hpp"
#include "tfgrover/spectral.hpp"
#include "tfgrover/verifier.hpp"
#include "tfgrover/walk.hpp"

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

namespace tfgrover {

// invalid configuration or missing input; maps to exit code 2 in the CLI
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, json };

struct SweepConfig {
    int n_min = 16;
    int n_max = 24;
    int n_step = 2;
    std::vector<double> gamma_list = {kPi};
    long t_max = 0;  // 0 = auto: a window just past the first overlap peak
    std::string out;        // empty = stdout
    std::string curve_out;  // optional per-step overlap curves (evolve)
    OutputFormat format = OutputFormat::csv;
    std::uint64_t seed = 12345;
    bool no_fullspace = false;
    bool fault_inject_xi = false;  // negative control for the identity checks
    int jobs = 0;                  // 0 = hardware concurrency
};

inline void validate(const SweepConfig& cfg) {
    if (cfg.n_min < 2 || cfg.n_max > 40 || cfg.n_min > cfg.n_max) {
        throw UsageError("n range must satisfy 2 <= n_min <= n_max <= 40");
    }
    if (cfg.n_min % 2 != 0 || cfg.n_step < 2 || cfg.n_step % 2 != 0) {
        throw UsageError("n values must be even (even n_min, even positive n_step)");
    }
    if (cfg.gamma_list.empty()) throw UsageError("at least one gamma value is required");
    for (double g : cfg.gamma_list) {
        if (!(g > 0.0 && g <= kPi)) throw UsageError("gamma values must lie in (0, pi]");
    }
    if (cfg.t_max < 0) throw UsageError("t_max must be nonnegative");
}

inline std::vector<int> n_values(const SweepConfig& cfg) {
    std::vector<int> ns;
    for (int n = cfg.n_min; n <= cfg.n_max; n += cfg.n_step) ns.push_back(n);
    return ns;
}

// ---------------------------------------------------------------- tables

using Value = std::variant<long long, double, std::string>;

struct ColumnDoc {
    std::string name;
    std::string description;
};

struct Table {
    std::vector<ColumnDoc> schema;
    std::vector<std::vector<Value>> rows;
};

// full double precision so golden-file diffs are meaningful
inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string format_value(const Value& v) {
    if (std::holds_alternative<long long>(v)) return std::to_string(std::get<long long>(v));
    if (std::holds_alternative<double>(v)) return format_double(std::get<double>(v));
    return std::get<std::string>(v);
}

inline std::string to_csv(const Table& t) {
    std::string out;
    for (std::size_t c = 0; c < t.schema.size(); ++c) {
        if (c) out += ',';
        out += t.schema[c].name;
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += format_value(row[c]);
        }
        out += '\n';
    }
    return out;
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += ch;
        }
    }
    return out;
}

inline std::string json_value(const Value& v) {
    if (std::holds_alternative<long long>(v)) return std::to_string(std::get<long long>(v));
    if (std::holds_alternative<double>(v)) {
        const double d = std::get<double>(v);
        if (!std::isfinite(d)) return "null";
        return format_double(d);
    }
    return '"' + json_escape(std::get<std::string>(v)) + '"';
}

// one object per row, same field names as the CSV columns
inline std::string to_json(const Table& t) {
    std::string out = "[\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        out += "  {";
        for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
            if (c) out += ", ";
            out += '"' + t.schema[c].name + "\": " + json_value(t.rows[r][c]);
        }
        out += (r + 1 < t.rows.size()) ? "},\n" : "}\n";
    }
    out += "]\n";
    return out;
}

inline std::string render(const Table& t, OutputFormat fmt) {
    return fmt == OutputFormat::csv ? to_csv(t) : to_json(t);
}

inline std::string schema_dump(const std::vector<ColumnDoc>& schema) {
    std::string out;
    for (const auto& col : schema) out += col.name + "\t" + col.description + "\n";
    return out;
}

inline void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::fwrite(content.data(), 1, content.size(), stdout);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open output file: " + path);
    f << content;
}

// ------------------------------------------------------------- threading

inline void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    unsigned workers = jobs > 0 ? unsigned(jobs) : std::thread::hardware_concurrency();
    if (workers < 1) workers = 1;
    if (workers == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

// deterministic uniform in [-1, 1); avoids unpinned library distributions
inline double uniform_pm1(std::mt19937_64& rng) {
    return double(rng() >> 11) * (2.0 / 9007199254740992.0) - 1.0;
}

inline SymmetricState random_symmetric_state(int n, std::mt19937_64& rng, bool strip_dark) {
    Eigen::VectorXcd a(n + 1);
    for (int k = 0; k <= n; ++k) a[k] = Complex(uniform_pm1(rng), uniform_pm1(rng));
    SymmetricState psi(n, std::move(a));
    if (strip_dark) {
        const SymmetricState dark = dark_state(n);
        psi.amps -= overlap(dark, psi) * dark.amps;
    }
    psi.amps.normalize();
    return psi;
}

// ------------------------------------------------------------- spectrum

inline std::vector<ColumnDoc> spectrum_schema() {
    return {
        {"n", "qubit count (even)"},
        {"gamma", "oracle angle in radians"},
        {"arg_alpha", "phase of the principal eigenvalue of the period unitary"},
        {"sqrtn_arg_alpha", "arg_alpha scaled by sqrt(2^n)"},
        {"fid_target", "|<target|w+>| from diagonalization"},
        {"fid_bplus", "|<bright|w->| from diagonalization"},
        {"pred_arg_alpha", "large-n closed form for arg_alpha (gamma=pi only, else nan)"},
        {"pred_fid_target", "large-n closed form for fid_target (gamma=pi only, else nan)"},
        {"pred_fid_bplus", "large-n closed form for fid_bplus (gamma=pi only, else nan)"},
        {"diff_arg_alpha", "arg_alpha - pred_arg_alpha"},
        {"diff_fid_target", "fid_target - pred_fid_target"},
        {"diff_fid_bplus", "fid_bplus - pred_fid_bplus"},
    };
}

inline Table spectrum_table(const SweepConfig& cfg) {
    validate(cfg);
    const std::vector<int> ns = n_values(cfg);
    const std::size_t total = ns.size() * cfg.gamma_list.size();
    Table t;
    t.schema = spectrum_schema();
    t.rows.resize(total);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    parallel_for(total, cfg.jobs, [&](std::size_t idx) {
        const int n = ns[idx / cfg.gamma_list.size()];
        const double gamma = cfg.gamma_list[idx % cfg.gamma_list.size()];
        const EigenReport rep = analyze_spectrum(n, gamma);
        const double sqrtn = std::pow(2.0, 0.5 * n);
        double pa = nan, pt = nan, pb = nan;
        if (gamma == kPi && n >= 8) {
            const AnalyticReport ar = predictions(n);
            pa = ar.pred_arg_alpha;
            pt = ar.pred_fid_target;
            pb = ar.pred_fid_bplus;
        }
        t.rows[idx] = {
            Value(static_cast<long long>(n)), Value(gamma),
            Value(rep.arg_alpha), Value(rep.arg_alpha * sqrtn),
            Value(rep.fid_target), Value(rep.fid_bplus),
            Value(pa), Value(pt), Value(pb),
            Value(rep.arg_alpha - pa), Value(rep.fid_target - pt), Value(rep.fid_bplus - pb),
        };
    });
    return t;
}

// --------------------------------------------------------------- evolve

inline std::vector<ColumnDoc> evolve_schema() {
    return {
        {"n", "qubit count (even)"},
        {"gamma", "oracle angle in radians"},
        {"t_max", "scanned number of periods"},
        {"t_star", "period count at the overlap peak (earliest argmax)"},
        {"t_star_pred", "pi / (2 arg_alpha), the predicted first peak"},
        {"success_prob", "peak probability of reading the target"},
        {"oracle_queries", "raw oracle calls to the peak: 2 t_star"},
        {"queries_retry_adjusted", "oracle calls per found target: 2 t_star / success_prob"},
        {"query_estimate", "2 pi / arg_alpha, the spectral query-complexity estimate"},
        {"query_reference", "(pi / 2 sqrt(2)) 2^{n/2}"},
        {"query_ratio", "query_estimate / query_reference"},
        {"truncated", "1 if the peak sat on the scan boundary"},
    };
}

inline std::vector<ColumnDoc> curve_schema() {
    return {
        {"n", "qubit count (even)"},
        {"gamma", "oracle angle in radians"},
        {"t", "number of applied periods"},
        {"overlap_prob", "|<target|psi_t>|^2"},
    };
}

struct EvolveResult {
    Table summary;
    Table curves;
};

inline EvolveResult evolve_tables(const SweepConfig& cfg) {
    validate(cfg);
    const std::vector<int> ns = n_values(cfg);
    const std::size_t total = ns.size() * cfg.gamma_list.size();
    EvolveResult res;
    res.summary.schema = evolve_schema();
    res.summary.rows.resize(total);
    res.curves.schema = curve_schema();
    std::vector<std::vector<std::vector<Value>>> curve_rows(total);
    const bool want_curves = !cfg.curve_out.empty();

    parallel_for(total, cfg.jobs, [&](std::size_t idx) {
        const int n = ns[idx / cfg.gamma_list.size()];
        const double gamma = cfg.gamma_list[idx % cfg.gamma_list.size()];
        const double arg = std::arg(principal_pair(n, gamma).alpha);
        const double t_pred = kPi / (2.0 * arg);
        const long t_max = cfg.t_max > 0 ? cfg.t_max : long(std::ceil(1.15 * t_pred));
        const RunRecord rec = evolve_scan(n, gamma, t_max);
        const double ref = kPi / (2.0 * std::sqrt(2.0)) * std::pow(2.0, 0.5 * n);
        const double est = query_complexity_from_rate(arg);
        res.summary.rows[idx] = {
            Value(static_cast<long long>(n)), Value(gamma),
            Value(static_cast<long long>(t_max)), Value(static_cast<long long>(rec.t_star)),
            Value(t_pred), Value(rec.success_prob),
            Value(static_cast<long long>(rec.oracle_queries)),
            Value(2.0 * rec.t_star / rec.success_prob),
            Value(est), Value(ref), Value(est / ref),
            Value(static_cast<long long>(rec.truncated ? 1 : 0)),
        };
        if (want_curves) {
            auto& rows = curve_rows[idx];
            rows.reserve(rec.overlap_curve.size());
            for (std::size_t tt = 0; tt < rec.overlap_curve.size(); ++tt) {
                rows.push_back({Value(static_cast<long long>(n)), Value(gamma),
                                Value(static_cast<long long>(tt)), Value(rec.overlap_curve[tt])});
            }
        }
    });
    for (auto& rows : curve_rows) {
        for (auto& r : rows) res.curves.rows.push_back(std::move(r));
    }
    return res;
}

// ------------------------------------------------------------ crosscheck

struct CheckItem {
    std::string name;
    bool passed = false;
    double measured = 0.0;
    double bound = 0.0;
    std::string detail;
};

struct CrosscheckReport {
    std::vector<CheckItem> items;
    bool all_passed = true;
};

namespace detail {

inline void push_check(CrosscheckReport& rep, const std::string& name, double measured,
                       double bound, const std::string& detail = "") {
    CheckItem item{name, measured <= bound, measured, bound, detail};
    rep.all_passed = rep.all_passed && item.passed;
    rep.items.push_back(std::move(item));
}

inline TargetChiTable xi_for_checks(int n, const SweepConfig& cfg) {
    TargetChiTable xi = target_chi_table(n);
    if (cfg.fault_inject_xi) xi.values[1] += 1e-3;
    return xi;
}

}  // namespace detail

inline CrosscheckReport run_crosscheck(const SweepConfig& cfg) {
    validate(cfg);
    CrosscheckReport rep;
    std::mt19937_64 rng(cfg.seed);

    // unitarity of the building blocks and the composed period
    {
        double worst = 0.0;
        for (int n : {8, 12, 20}) {
            for (double g : {1.0, kPi}) worst = std::max(worst, period_unitary(n, g).unitarity_error());
            worst = std::max(worst, field_rotation(n, 0.7).unitarity_error());
            worst = std::max(worst, oracle_phase(n, 1.1).unitarity_error());
            worst = std::max(worst, half_period(n).unitarity_error());
        }
        detail::push_check(rep, "unitarity", worst, 1e-12, "period, rotation, oracle, half period");
    }
    // rotation group property
    {
        double worst = 0.0;
        for (int n : {10, 40}) {
            const double t1 = 0.37, t2 = 1.91;
            const Eigen::MatrixXcd lhs = field_rotation(n, t1).mat * field_rotation(n, t2).mat;
            worst = std::max(worst, (lhs - field_rotation(n, t1 + t2).mat).cwiseAbs().maxCoeff());
        }
        detail::push_check(rep, "rotation_group_property", worst, 1e-11);
    }
    // discrete rotation eigenrelations up to n = 64
    {
        double worst = 0.0;
        for (int n = 2; n <= 64; n += 2) {
            const SymmetricOperator r = field_rotation(n, 2.0 * kPi / n);
            worst = std::max(worst, (r.mat * bright_state(n).amps + bright_state(n).amps).norm());
            worst = std::max(worst, (r.mat * dark_state(n).amps + dark_state(n).amps).norm());
            worst = std::max(worst,
                             (r.mat * field_eigenstate(n, 0).amps - field_eigenstate(n, 0).amps).norm());
        }
        detail::push_check(rep, "rotation_eigenrelations", worst, 1e-11);
    }
    // dark state invariance under the period unitary
    {
        double worst = 0.0;
        for (int n : {8, 16}) {
            for (double g : {1.2, kPi}) {
                const SymmetricState d = dark_state(n);
                worst = std::max(worst, (period_unitary(n, g).mat * d.amps - d.amps).norm());
            }
        }
        detail::push_check(rep, "dark_state_invariance", worst, 1e-12);
    }
    // time-reversal-like symmetry of the period unitary
    {
        const double worst = std::max(symmetry_check(8, 1.0), symmetry_check(12, kPi));
        detail::push_check(rep, "time_reversal_symmetry", worst, 1e-11);
    }
    // alternating xi identity, double table (absolute); tamperable
    {
        double worst = 0.0;
        for (int n = 2; n <= 40; n += 2) {
            const TargetChiTable xi = detail::xi_for_checks(n, cfg);
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += (k % 2 == 0 ? xi[k] : -xi[k]);
            worst = std::max(worst, std::abs(s - 2.0 * n * std::pow(2.0, -n)) / (1e-14 * n));
        }
        detail::push_check(rep, "xi_alternating_identity", worst, 1.0, "scaled by 1e-14*n");
    }
    // weighted xi identity, double table (absolute); tamperable
    {
        double worst = 0.0;
        for (int n = 2; n <= 40; n += 2) {
            const TargetChiTable xi = detail::xi_for_checks(n, cfg);
            double s = 0.5 * n;
            for (int k = 1; k < n; ++k) {
                const double term = (n - k) * xi[k];
                s += (k % 2 == 0 ? term : -term);
            }
            worst =
                std::max(worst, std::abs(s - double(n) * n * std::pow(2.0, -n)) / (1e-12 * n * n));
        }
        detail::push_check(rep, "xi_weighted_identity", worst, 1.0, "scaled by 1e-12*n^2");
    }
    // the same identities to relative precision, 128-bit evaluation
    {
        double worst = 0.0;
        for (int n = 2; n <= 40; n += 2) {
            worst = std::max(worst, xi_alternating_identity_rel_error(n));
            worst = std::max(worst, xi_weighted_identity_rel_error(n));
        }
        detail::push_check(rep, "xi_identities_relative", worst, 1e-12, "quad-precision evaluation");
    }
    // chi-space actions commute with state-space actions
    {
        double worst = 0.0;
        for (int rep_i = 0; rep_i < 50; ++rep_i) {
            const int n = 10;
            const SymmetricState psi = random_symmetric_state(n, rng, false);
            const ChiFunction lhs = chi_of_state(field_rotation(n, 2.0 * kPi / n).apply(psi));
            const ChiFunction rhs = apply_rotation_chi(chi_of_state(psi));
            worst = std::max(worst, (lhs.values - rhs.values).cwiseAbs().maxCoeff());
        }
        detail::push_check(rep, "chi_rotation_commutes", worst, 1e-12, "50 random states, n=10");
    }
    {
        double worst = 0.0;
        const int n = 12;
        const TargetChiTable xi = target_chi_table(n);
        for (int rep_i = 0; rep_i < 50; ++rep_i) {
            const double gamma = 0.5 * kPi * (uniform_pm1(rng) + 1.0) + 1e-6;
            const SymmetricState psi = random_symmetric_state(n, rng, false);
            const ChiFunction lhs = chi_of_state(oracle_phase(n, gamma).apply(psi));
            const ChiFunction rhs = apply_oracle_chi(chi_of_state(psi), gamma, xi);
            worst = std::max(worst, (lhs.values - rhs.values).cwiseAbs().maxCoeff());
        }
        detail::push_check(rep, "chi_oracle_commutes", worst, 1e-12,
                           "50 random states and angles, n=12");
    }
    // fourier identification against field eigenstates
    {
        double worst = 0.0;
        const int n = 8;
        for (int rep_i = 0; rep_i < 10; ++rep_i) {
            const SymmetricState psi = random_symmetric_state(n, rng, false);
            const ChiFourier f = chi_fourier(chi_of_state(psi));
            for (int j = -n + 2; j <= n - 2; j += 2) {
                const SymmetricState bj = field_eigenstate(n, j);
                const Complex pred = bj.amps[0] * overlap(bj, psi);
                worst = std::max(worst, std::abs(f.component(j) - pred));
            }
        }
        detail::push_check(rep, "chi_fourier_identification", worst, 1e-12);
    }
    // norm and reconstruction round trips on the dark-orthogonal subspace
    {
        double worst = 0.0;
        const int n = 12;
        for (int rep_i = 0; rep_i < 10; ++rep_i) {
            const SymmetricState psi = random_symmetric_state(n, rng, true);
            const ChiFunction chi = chi_of_state(psi);
            worst = std::max(worst, std::abs(norm_from_chi(chi) - 1.0));
            const SymmetricState back = reconstruct_from_chi(chi);
            worst = std::max(worst, (back.amps - psi.amps).norm());
        }
        detail::push_check(rep, "chi_norm_reconstruction", worst, 1e-10);
    }
    // full evolution inside chi space reproduces the overlap curve
    {
        const int n = 12;
        const TargetChiTable xi = target_chi_table(n);
        const SymmetricOperator w = period_unitary(n, kPi);
        SymmetricState psi = uniform_state(n);
        ChiFunction chi = chi_of_state(psi);
        double worst = 0.0;
        for (int t = 0; t < 200; ++t) {
            psi.amps = w.mat * psi.amps;
            chi = apply_oracle_chi(chi, kPi, xi);
            chi = apply_rotation_chi(chi);
            chi = apply_oracle_chi(chi, -kPi, xi);
            chi = apply_rotation_chi(chi);
            worst = std::max(worst, std::abs(std::norm(chi.values[0]) - std::norm(psi.amps[0])));
        }
        detail::push_check(rep, "chi_evolution_matches_state_space", worst, 1e-9, "n=12, 200 steps");
    }
    // polynomial root against diagonalization across the n range
    {
        double worst_root = 0.0, worst_res = 0.0;
        for (int n = 8; n <= 40; n += 2) {
            const Complex beta = root_solve(n);
            const Complex alpha = principal_pair(n, kPi).alpha;
            const Complex b2 = beta * beta;
            worst_root = std::max(worst_root,
                                  std::min(std::abs(b2 - alpha), std::abs(b2 - std::conj(alpha))));
            worst_res = std::max(worst_res, std::abs(eigen_poly_residual(n, beta)));
        }
        detail::push_check(rep, "root_matches_diagonalization", worst_root, 1e-8);
        detail::push_check(rep, "root_polynomial_residual", worst_res, 1e-12);
    }
    // field eigenstate overlap law
    {
        double worst = 0.0;
        const int n = 10;
        for (int j = -n; j <= n; j += 2) {
            const double head = std::norm(field_eigenstate(n, j).amps[0]);
            worst = std::max(worst, std::abs(head - binomial_over_pow2(n, (n + j) / 2)));
        }
        detail::push_check(rep, "field_eigenstate_overlap_law", worst, 1e-12);
    }
    // verifier: exhaustive for small n, randomized spot check at n = 12
    {
        long long wrong = 0;
        int max_calls = 0;
        for (int n : {2, 4, 6}) {
            const std::uint64_t dim = std::uint64_t(1) << n;
            for (std::uint64_t u = 0; u < dim; ++u) {
                for (std::uint64_t s = 0; s < dim; ++s) {
                    SignOracle oracle(n, u);
                    const CheckOutcome out = classify(s, oracle);
                    const Verdict truth = (u == s) ? Verdict::is_target
                                          : (u == (s ^ 1u)) ? Verdict::is_flipped_partner
                                                            : Verdict::not_in_pair;
                    if (out.verdict != truth || out.oracle_calls > 2) ++wrong;
                }
            }
        }
        {
            const int n = 12;
            const std::uint64_t mask = (std::uint64_t(1) << n) - 1;
            for (int rep_i = 0; rep_i < 2000; ++rep_i) {
                const std::uint64_t u = rng() & mask;
                const std::uint64_t s = rng() & mask;
                SignOracle oracle(n, u);
                const CheckOutcome out = classify(s, oracle);
                const Verdict truth = (u == s) ? Verdict::is_target
                                      : (u == (s ^ 1u)) ? Verdict::is_flipped_partner
                                                        : Verdict::not_in_pair;
                if (out.verdict != truth || out.oracle_calls > 2) ++wrong;
            }
        }
        detail::push_check(rep, "verifier_classification", double(wrong), 0.0,
                           "exhaustive n<=6 plus 2000 random pairs at n=12");
    }
    // full-space ground truth (skippable)
    if (!cfg.no_fullspace) {
        double worst = 0.0;
        for (int n : {8, 10, 12}) {
            const long t_len = (n == 12) ? 30 : 60;
            for (double g : {kPi / 2.0, kPi}) {
                const SymmetricOperator w = period_unitary(n, g);
                SymmetricState dicke = uniform_state(n);
                FullState full = make_uniform_state(n);
                for (long t = 0; t < t_len; ++t) {
                    full_apply_period(full, 0, g);
                    dicke.amps = w.mat * dicke.amps;
                    const ProjectionResult proj = project_symmetric(full);
                    worst = std::max(worst, proj.leakage);
                    worst = std::max(worst, (proj.state.amps - dicke.amps).cwiseAbs().maxCoeff());
                }
                // success curves are independent of the marked string
                const std::uint64_t mask = (std::uint64_t(1) << n) - 1;
                const double p0 = full_run(n, 0, g, 25);
                for (int k = 0; k < 6; ++k) {
                    const double pu = full_run(n, rng() & mask, g, 25);
                    worst = std::max(worst, std::abs(pu - p0));
                }
            }
        }
        detail::push_check(rep, "fullspace_dicke_equivalence", worst, 1e-10,
                           "n in {8,10,12}, gamma in {pi/2, pi}");
    }
    return rep;
}

inline std::string crosscheck_json(const CrosscheckReport& rep, const SweepConfig& cfg) {
    std::string out = "{\n  \"seed\": " + std::to_string(cfg.seed) + ",\n  \"items\": [\n";
    for (std::size_t i = 0; i < rep.items.size(); ++i) {
        const CheckItem& it = rep.items[i];
        out += "    {\"name\": \"" + json_escape(it.name) + "\", \"passed\": " +
               (it.passed ? "true" : "false") + ", \"measured\": " + format_double(it.measured) +
               ", \"bound\": " + format_double(it.bound) + ", \"detail\": \"" +
               json_escape(it.detail) + "\"}";
        out += (i + 1 < rep.items.size()) ? ",\n" : "\n";
    }
    out += "  ],\n  \"all_passed\": ";
    out += rep.all_passed ? "true" : "false";
    out += "\n}\n";
    return out;
}

// ----------------------------------------------------------------- plots

namespace detail {

inline std::vector<std::string> csv_header(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw UsageError("missing CSV: " + path);
    std::string line;
    if (!std::getline(f, line)) throw UsageError("empty CSV: " + path);
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cols.push_back(cell);
    return cols;
}

inline void require_columns(const std::string& path, const std::vector<std::string>& needed) {
    const std::vector<std::string> cols = csv_header(path);
    for (const auto& want : needed) {
        bool found = false;
        for (const auto& c : cols) {
            if (c == want) {
                found = true;
                break;
            }
        }
        if (!found) throw UsageError("CSV " + path + " lacks required column " + want);
    }
}

inline std::string python_plot_script(const std::string& csv_rel, const std::string& x,
                                      const std::vector<std::string>& ys,
                                      const std::string& filter, const std::string& ylabel,
                                      bool logy, const std::string& out_png) {
    std::string s;
    s += "#!/usr/bin/env python3\n";
    s += "# Generated plot script; reads the sweep CSV lying next to it.\n";
    s += "import csv\n";
    s += "import matplotlib\n";
    s += "matplotlib.use(\"Agg\")\n";
    s += "import matplotlib.pyplot as plt\n\n";
    s += "rows = []\n";
    s += "with open(\"" + csv_rel + "\") as f:\n";
    s += "    for row in csv.DictReader(f):\n";
    s += "        rows.append(row)\n";
    if (!filter.empty()) s += "rows = [r for r in rows if " + filter + "]\n";
    s += "x = [float(r[\"" + x + "\"]) for r in rows]\n";
    for (std::size_t i = 0; i < ys.size(); ++i) {
        s += "y" + std::to_string(i) + " = [" + ys[i] + " for r in rows]\n";
    }
    s += "plt.figure(figsize=(4.2, 3.2))\n";
    for (std::size_t i = 0; i < ys.size(); ++i) {
        const std::string style = (i == 0) ? "\"o-\"" : "\"s--\"";
        s += "plt.plot(x, y" + std::to_string(i) + ", " + style + ", label=\"series " +
             std::to_string(i) + "\")\n";
    }
    if (logy) s += "plt.yscale(\"log\")\n";
    s += "plt.xlabel(\"" + x + "\")\n";
    s += "plt.ylabel(\"" + ylabel + "\")\n";
    s += "plt.legend()\n";
    s += "plt.tight_layout()\n";
    s += "plt.savefig(\"" + out_png + "\", dpi=160)\n";
    s += "print(\"wrote " + out_png + "\")\n";
    return s;
}

}  // namespace detail

// Emits four self-contained plot scripts next to the spectrum CSV: target
// infidelity vs n, bright infidelity vs n, scaled transition rate vs n, and
// rate vs gamma at fixed n. Script generation only; nothing is rendered.
inline std::vector<std::string> write_plot_scripts(const std::string& spectrum_csv,
                                                   const std::string& out_dir) {
    detail::require_columns(spectrum_csv,
                            {"n", "gamma", "sqrtn_arg_alpha", "fid_target", "fid_bplus",
                             "pred_arg_alpha", "pred_fid_target", "pred_fid_bplus"});
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    const std::string csv_rel = fs::path(spectrum_csv).filename().string();
    const std::string pi_filter = "abs(float(r[\"gamma\"]) - 3.14159265358979312) < 1e-12";

    struct ScriptSpec {
        std::string file, x, ylabel, filter, png;
        std::vector<std::string> ys;
        bool logy;
    };
    const std::vector<ScriptSpec> specs = {
        {"plot_infidelity_target.py", "n", "1 - fid_target", pi_filter, "infidelity_target.png",
         {"1.0 - float(r[\"fid_target\"])", "1.0 - float(r[\"pred_fid_target\"])"}, true},
        {"plot_infidelity_bright.py", "n", "1 - fid_bplus", pi_filter, "infidelity_bright.png",
         {"1.0 - float(r[\"fid_bplus\"])", "1.0 - float(r[\"pred_fid_bplus\"])"}, true},
        {"plot_rate_scaled.py", "n", "sqrtn_arg_alpha", pi_filter, "rate_scaled.png",
         {"float(r[\"sqrtn_arg_alpha\"])",
          "float(r[\"pred_arg_alpha\"]) * 2.0 ** (float(r[\"n\"]) / 2.0)"}, false},
        {"plot_rate_vs_gamma.py", "gamma", "sqrtn_arg_alpha", "", "rate_vs_gamma.png",
         {"float(r[\"sqrtn_arg_alpha\"])"}, false},
    };
    std::vector<std::string> written;
    for (const auto& sp : specs) {
        const std::string path = (fs::path(out_dir) / sp.file).string();
        std::ofstream f(path, std::ios::binary);
        if (!f) throw UsageError("cannot write plot script: " + path);
        f << detail::python_plot_script(csv_rel, sp.x, sp.ys, sp.filter, sp.ylabel, sp.logy,
                                        sp.png);
        written.push_back(path);
    }
    return written;
}

}  // namespace tfgrover
