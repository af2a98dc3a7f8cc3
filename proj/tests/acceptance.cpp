// Acceptance suite: one line per criterion, PASS/FAIL with the measured
// numbers, nonzero exit when any criterion fails. Bands and tolerances are
// pinned in code; criteria that assert large-n bands at small n fail
// honestly with the measured values printed rather than being loosened.

#include "tfgrover/tfgrover.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace tfgrover;

namespace {

int failures = 0;

struct Criterion {
    const char* name;
    double budget_seconds;
    bool passed = true;
    std::string detail;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            passed = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

void run(int number, const char* name, double budget_seconds,
         const std::function<void(Criterion&)>& body) {
    Criterion c{name, budget_seconds};
    const auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(elapsed < budget_seconds,
             "runtime " + std::to_string(elapsed) + " s over budget");
    if (!c.passed) ++failures;
    std::printf("[%s] %2d %-28s (%.2f s)%s%s\n", c.passed ? "PASS" : "FAIL", number, name,
                elapsed, c.detail.empty() ? "" : " -- ", c.detail.c_str());
    std::fflush(stdout);
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");

    // 1. scaled transition rate against the closed form
    run(1, "transition-rate law", 10.0, [](Criterion& c) {
        for (int n : {20, 24, 28, 32, 36, 40}) {
            const double arg = std::arg(principal_pair(n, kPi).alpha);
            const double scaled = arg * std::pow(2.0, 0.5 * n);
            const double pred =
                4.0 * std::sqrt(2.0) * std::pow(1.0 - kPi * kPi / (2.0 * n), 0.25);
            const double rel = std::abs(scaled - pred) / pred;
            const double band = (n >= 28) ? 0.02 : 0.05;
            c.expect(rel < band, "n=" + std::to_string(n) + " rel " + fmt(rel));
        }
    });

    // 2. target-fidelity infidelity against the closed form, 10% relative
    run(2, "target fidelity", 10.0, [](Criterion& c) {
        for (int n = 16; n <= 40; n += 2) {
            const EigenReport rep = analyze_spectrum(n, kPi);
            const double infid = 1.0 - rep.fid_target;
            const double pred = 1.0 - std::pow(1.0 - kPi * kPi / (2.0 * n), 0.25);
            const double rel = std::abs(infid - pred) / pred;
            c.expect(rel < 0.10, "n=" + std::to_string(n) + " rel " + fmt(rel));
        }
    });

    // 3. bright-state infidelity scales as 1/N
    run(3, "bright fidelity scaling", 10.0, [](Criterion& c) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int m = 0;
        for (int n = 12; n <= 26; n += 2) {
            const EigenReport rep = analyze_spectrum(n, kPi);
            const double y = std::log2(1.0 - rep.fid_bplus);
            sx += n;
            sy += y;
            sxx += double(n) * n;
            sxy += n * y;
            ++m;
        }
        const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
        c.expect(slope > -1.1 && slope < -0.9, "slope " + fmt(slope));
    });

    // 4. query complexity and the evolution peak
    run(4, "query complexity", 60.0, [](Criterion& c) {
        for (int n : {16, 20, 24}) {
            const double arg = std::arg(principal_pair(n, kPi).alpha);
            const double ratio = (2.0 * kPi / arg) /
                                 (kPi / (2.0 * std::sqrt(2.0)) * std::pow(2.0, 0.5 * n));
            c.expect(ratio > 0.9 && ratio < 1.1,
                     "n=" + std::to_string(n) + " query ratio " + fmt(ratio));
            const double t_pred = kPi / (2.0 * arg);
            const RunRecord rec = evolve_scan(n, kPi, long(std::ceil(1.15 * t_pred)));
            c.expect(rec.success_prob > 0.45 && rec.success_prob < 0.55,
                     "n=" + std::to_string(n) + " peak " + fmt(rec.success_prob));
            c.expect(std::abs(rec.t_star - t_pred) / t_pred < 0.05,
                     "n=" + std::to_string(n) + " t* " + std::to_string(rec.t_star) + " vs " +
                         fmt(t_pred));
        }
    });

    // 5. polynomial root agrees with diagonalization
    run(5, "polynomial-diagonalization", 5.0, [](Criterion& c) {
        for (int n = 8; n <= 40; n += 2) {
            const Complex beta = root_solve(n);
            const Complex alpha = principal_pair(n, kPi).alpha;
            const Complex b2 = beta * beta;
            const double err = std::min(std::abs(b2 - alpha), std::abs(b2 - std::conj(alpha)));
            c.expect(err < 1e-8, "n=" + std::to_string(n) + " |beta^2-alpha| " + fmt(err));
            const double res = std::abs(eigen_poly_residual(n, beta));
            c.expect(res < 1e-12, "n=" + std::to_string(n) + " residual " + fmt(res));
        }
    });

    // 6. exact alternating identities of the target chi table
    run(6, "exact identities", 10.0, [](Criterion& c) {
        for (int n = 2; n <= 40; n += 2) {
            const double e1 = xi_alternating_identity_rel_error(n);
            const double e2 = xi_weighted_identity_rel_error(n);
            c.expect(e1 < 1e-12, "n=" + std::to_string(n) + " alternating rel " + fmt(e1));
            c.expect(e2 < 1e-12, "n=" + std::to_string(n) + " weighted rel " + fmt(e2));
        }
    });

    // 7. brute-force oracle equivalence
    run(7, "oracle equivalence", 120.0, [](Criterion& c) {
        std::mt19937_64 rng(777);
        for (int n : {8, 10, 12}) {
            for (double gamma : {kPi / 2.0, kPi}) {
                const SymmetricOperator w = period_unitary(n, gamma);
                SymmetricState dicke = uniform_state(n);
                FullState full = make_uniform_state(n);
                double worst = 0.0;
                for (int t = 1; t <= 100; ++t) {
                    full_apply_period(full, 0, gamma);
                    dicke.amps = w.mat * dicke.amps;
                    const ProjectionResult proj = project_symmetric(full);
                    worst = std::max(worst,
                                     (proj.state.amps - dicke.amps).cwiseAbs().maxCoeff());
                    worst = std::max(worst, proj.leakage);
                }
                c.expect(worst < 1e-10, "n=" + std::to_string(n) + " gamma=" + fmt(gamma) +
                                            " pointwise " + fmt(worst));

                // success curves across 20 random marked strings
                std::vector<double> base;
                {
                    FullState st = make_uniform_state(n);
                    for (int t = 0; t < 100; ++t) {
                        full_apply_period(st, 0, gamma);
                        base.push_back(std::norm(st.amps[0]));
                    }
                }
                const std::uint64_t mask = (std::uint64_t(1) << n) - 1;
                double udev = 0.0;
                for (int k = 0; k < 20; ++k) {
                    const std::uint64_t u = rng() & mask;
                    FullState st = make_uniform_state(n);
                    for (int t = 0; t < 100; ++t) {
                        full_apply_period(st, u, gamma);
                        udev = std::max(
                            udev, std::abs(std::norm(st.amps[std::int64_t(u)]) - base[t]));
                    }
                }
                c.expect(udev < 1e-10, "n=" + std::to_string(n) + " gamma=" + fmt(gamma) +
                                           " u-dependence " + fmt(udev));
            }
        }
    });

    // 8. small-gamma transition picture
    run(8, "small-gamma transition", 30.0, [](Criterion& c) {
        const int n = 16;
        const double gamma = 0.05;
        const double eta = transition_eta(n);
        const double measured = small_gamma_transition(n, gamma);
        const double ratio = measured / (gamma * eta);
        c.expect(ratio > 0.85 && ratio < 1.15, "measured/(gamma eta) " + fmt(ratio));
        const double eta_asym =
            std::pow(2.0 / kPi, 0.25) * std::pow(double(n), 0.75) * std::pow(2.0, -0.5 * n);
        const double eta_rel = std::abs(eta - eta_asym) / eta_asym;
        c.expect(eta_rel < 0.10, "eta vs (2/pi)^{1/4} n^{3/4} N^{-1/2}: rel " + fmt(eta_rel));
    });

    // 9. verifier correctness, exhaustive
    run(9, "verifier correctness", 30.0, [](Criterion& c) {
        for (int n : {2, 4, 6, 8}) {
            const std::uint64_t dim = std::uint64_t(1) << n;
            long long wrong = 0;
            int worst_calls = 0;
            for (std::uint64_t u = 0; u < dim; ++u) {
                for (std::uint64_t s = 0; s < dim; ++s) {
                    SignOracle oracle(n, u);
                    const CheckOutcome out = classify(s, oracle);
                    const Verdict truth = (u == s) ? Verdict::is_target
                                          : (u == (s ^ 1u)) ? Verdict::is_flipped_partner
                                                            : Verdict::not_in_pair;
                    if (out.verdict != truth) ++wrong;
                    worst_calls = std::max(worst_calls, out.oracle_calls);
                }
            }
            c.expect(wrong == 0, "n=" + std::to_string(n) + " misclassified " +
                                     std::to_string(wrong));
            c.expect(worst_calls <= 2,
                     "n=" + std::to_string(n) + " calls " + std::to_string(worst_calls));
        }
    });

    // 10. symmetry and structure
    run(10, "symmetry and structure", 30.0, [](Criterion& c) {
        const double r1 = symmetry_check(20, kPi);
        const double r2 = symmetry_check(12, 1.0);
        c.expect(std::max(r1, r2) < 1e-11, "symmetry residual " + fmt(std::max(r1, r2)));

        for (int n : {8, 20}) {
            const SymmetricState d = dark_state(n);
            const double inv = (period_unitary(n, n == 8 ? 1.2 : kPi).mat * d.amps - d.amps).norm();
            c.expect(inv < 1e-12, "n=" + std::to_string(n) + " dark residual " + fmt(inv));
        }

        const EigenReport at_pi = analyze_spectrum(20, kPi);
        for (double g : {kPi / 4.0, kPi / 2.0, 3.0 * kPi / 4.0}) {
            const EigenReport rep = analyze_spectrum(20, g);
            c.expect(rep.fid_target < at_pi.fid_target,
                     "fid_target(" + fmt(g) + ") " + fmt(rep.fid_target) + " !< " +
                         fmt(at_pi.fid_target));
            c.expect(rep.fid_bplus < at_pi.fid_bplus,
                     "fid_bplus(" + fmt(g) + ") " + fmt(rep.fid_bplus) + " !< " +
                         fmt(at_pi.fid_bplus));
        }
    });

    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
