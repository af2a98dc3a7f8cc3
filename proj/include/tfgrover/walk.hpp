// The period unitary of the transverse-field search, its half-period square
// root, and direct evolution of the uniform input state.

#pragma once

#include "tfgrover/dicke.hpp"

#include <vector>

namespace tfgrover {

// One experiment row: scan of the target overlap under repeated periods.
struct RunRecord {
    int n = 0;
    double gamma = 0.0;
    long t_star = 0;              // argmax of the overlap curve, earliest on ties
    double success_prob = 0.0;    // overlap at t_star
    long oracle_queries = 0;      // 2 per period
    bool truncated = false;       // peak sits on the scan boundary
    std::vector<double> overlap_curve;  // |<target|psi_t>|^2, t = 0..t_max
};

inline void require_gamma_range(double gamma) {
    if (!(gamma > 0.0 && gamma <= kPi)) {
        throw std::invalid_argument("gamma must lie in (0, pi]");
    }
}

// Period unitary: field_rotation * oracle_phase(-gamma) * field_rotation *
// oracle_phase(gamma), i.e. the oracle is applied first with +gamma, the two
// oracle signs alternate, and each rotation advances the field by 2*pi/n.
inline SymmetricOperator period_unitary(int n, double gamma) {
    require_gamma_range(gamma);
    const SymmetricOperator r = field_rotation(n, 2.0 * kPi / n);
    return r * oracle_phase(n, -gamma) * r * oracle_phase(n, gamma);
}

// Half period at gamma = pi; squares to period_unitary(n, pi) because the
// two oracle signs coincide there.
inline SymmetricOperator half_period(int n) {
    return field_rotation(n, 2.0 * kPi / n) * oracle_phase(n, -kPi);
}

// Scan budget that safely passes the first overlap peak.
inline long default_t_max(int n) {
    return long(std::ceil(4.0 * std::pow(2.0, n / 2.0)));
}

inline RunRecord evolve_scan(int n, double gamma, long t_max) {
    if (t_max < 1) throw std::invalid_argument("t_max must be at least 1");
    const SymmetricOperator w = period_unitary(n, gamma);
    SymmetricState psi = uniform_state(n);

    RunRecord rec;
    rec.n = n;
    rec.gamma = gamma;
    rec.overlap_curve.reserve(std::size_t(t_max) + 1);
    rec.overlap_curve.push_back(std::norm(psi.amps[0]));
    long best_t = 0;
    double best_p = rec.overlap_curve[0];
    for (long t = 1; t <= t_max; ++t) {
        psi.amps = w.mat * psi.amps;
        const double p = std::norm(psi.amps[0]);
        rec.overlap_curve.push_back(p);
        if (p > best_p) {
            best_p = p;
            best_t = t;
        }
    }
    rec.t_star = best_t;
    rec.success_prob = best_p;
    rec.oracle_queries = 2 * best_t;
    rec.truncated = (best_t == t_max);
    return rec;
}

// |<b0| W^{n/2} |b+>| where b0 is the zero-field eigenstate and b+ the bright
// state; in the small-gamma regime this equals gamma * transition_eta(n) to
// leading order.
inline double small_gamma_transition(int n, double gamma) {
    if (!(gamma > 0.0 && gamma <= 0.1)) {
        throw std::invalid_argument("small-gamma regime requires 0 < gamma <= 0.1");
    }
    const SymmetricOperator w = period_unitary(n, gamma);
    SymmetricState psi = bright_state(n);
    for (int i = 0; i < n / 2; ++i) psi.amps = w.mat * psi.amps;
    return std::abs(overlap(field_eigenstate(n, 0), psi));
}

// n * <bright|target> * <b0|target>, the exact transition prefactor.
inline double transition_eta(int n) {
    const SymmetricState t = target_state(n);
    const double a = std::real(overlap(bright_state(n), t));
    const double b = std::real(overlap(field_eigenstate(n, 0), t));
    return n * a * b;
}

// Expected oracle calls for a full search: a half transition costs
// pi/(2*rate) periods at 2 calls each, and the ~1/2 success probability
// doubles it.
inline double query_complexity_from_rate(double arg_alpha) {
    if (!(arg_alpha > 0.0)) throw std::invalid_argument("transition rate must be positive");
    return 2.0 * kPi / arg_alpha;
}

}  // namespace tfgrover
