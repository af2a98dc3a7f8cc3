// Closed-form route to the principal eigenvalue at gamma = pi, independent
// of diagonalization: the half-period eigenvalue polynomial in the
// phase-space representation, its Newton root near -1, and the large-n
// predictions for rate and fidelities.

#pragma once

#include "tfgrover/chi.hpp"


namespace tfgrover {

struct AnalyticReport {
    int n = 0;
    Complex beta;                 // polynomial root, Re < 0, Im < 0; beta^2 = alpha
    double delta = 0.0;           // -Im(beta)
    double d = 0.0;               // curvature denominator of the rate formula
    double delta_formal = 0.0;    // 2 sqrt(n/d) / sqrt(N)
    double pred_arg_alpha = 0.0;  // 4 sqrt(2) N^{-1/2} (1 - pi^2/2n)^{1/4}
    double pred_fid_target = 0.0; // (1 - pi^2/2n)^{1/4}
    double pred_fid_bplus = 0.0;  // 1 - N^{-1}
    double eta = 0.0;             // (2/pi)^{1/4} n^{3/4} N^{-1/2}
};

// Unnormalized phase-space values of the half-period eigenstate at gamma=pi:
// phi_0 = 1, phi_k = beta*phi_{k-1} + 2*xi_k (with xi_n = 1 for even n).
// At a root of the eigenvalue polynomial the sequence closes periodically,
// phi_n = phi_0. Against diagonalization, phi matches the *index-reversed*
// chi function of w_alpha: phi_k = chi_{(n-k) mod n}(w_alpha) / chi_0(w_alpha).
inline Eigen::VectorXcd phi_sequence(int n, Complex beta) {
    const TargetChiTable xi = target_chi_table(n);
    Eigen::VectorXcd phi(n + 1);
    phi[0] = 1.0;
    for (int k = 1; k <= n; ++k) {
        const double xk = (k < n) ? xi[k] : 1.0;
        phi[k] = beta * phi[k - 1] + 2.0 * xk;
    }
    return phi;
}

// (1 + beta^n)/2 + sum_{k=1}^{n-1} beta^{n-k} xi_k, evaluated by Horner with
// the xi coefficients in descending power; |beta| = 1 keeps it conditioned.
// Vanishes exactly at the eigenphases of the half period restricted to the
// dark-orthogonal subspace. At beta = -1 it equals 2n/N, so -1 is never a root.
inline Complex eigen_poly_residual(int n, Complex beta) {
    const TargetChiTable xi = target_chi_table(n);
    Complex acc = 0.5;
    for (int k = 1; k < n; ++k) acc = acc * beta + xi[k];
    return acc * beta + 0.5;
}

inline Complex eigen_poly_derivative(int n, Complex beta) {
    const TargetChiTable xi = target_chi_table(n);
    Complex acc = 0.5 * double(n);
    for (int k = 1; k < n; ++k) acc = acc * beta + xi[k] * double(n - k);
    return acc;
}

// Damped Newton iteration for the root with Re < 0, Im < 0, started from the
// asymptotic -1 - i*2*sqrt(2)/sqrt(N) which lies in that root's basin for
// all supported n. The conjugate root is obtained by conjugation, not a
// second search.
inline Complex root_solve(int n) {
    require_even_n(n);
    if (n > 40) throw std::invalid_argument("root solve is supported for n <= 40");
    const double inv_sqrt_npow = std::pow(2.0, -0.5 * n);
    Complex b(-1.0, -2.0 * std::sqrt(2.0) * inv_sqrt_npow);
    Complex f = eigen_poly_residual(n, b);
    for (int it = 0; it < 200; ++it) {
        if (std::abs(f) < 1e-14) return b;
        const Complex fp = eigen_poly_derivative(n, b);
        if (fp == Complex(0.0, 0.0)) break;
        Complex step = f / fp;
        Complex bn = b - step;
        Complex fn = eigen_poly_residual(n, bn);
        for (int h = 0; h < 30 && std::abs(fn) > std::abs(f); ++h) {
            step *= 0.5;
            bn = b - step;
            fn = eigen_poly_residual(n, bn);
        }
        if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(b))) {
            return bn;
        }
        b = bn;
        f = fn;
    }
    if (std::abs(f) < 1e-12) return b;
    throw std::runtime_error("principal root iteration did not converge");
}

// d = n^2/2 + sum_{k=1}^{n-1} (-1)^k (n-k)^2 xi_k; behaves like
// (n/2) (1 - pi^2/2n)^{-1/2} for large n.
inline double compute_d(int n) {
    const TargetChiTable xi = target_chi_table(n);
    double acc = 0.5 * double(n) * n;
    for (int k = 1; k < n; ++k) {
        const double term = double(n - k) * double(n - k) * xi[k];
        acc += (k % 2 == 0) ? term : -term;
    }
    return acc;
}

inline AnalyticReport predictions(int n) {
    require_even_n(n);
    if (n < 8) throw std::invalid_argument("large-n predictions need n >= 8");
    AnalyticReport rep;
    rep.n = n;
    rep.beta = root_solve(n);
    rep.delta = -rep.beta.imag();
    rep.d = compute_d(n);
    const double inv_sqrt_npow = std::pow(2.0, -0.5 * n);
    rep.delta_formal = 2.0 * std::sqrt(double(n) / rep.d) * inv_sqrt_npow;
    const double corr = std::pow(1.0 - kPi * kPi / (2.0 * n), 0.25);
    rep.pred_arg_alpha = 4.0 * std::sqrt(2.0) * inv_sqrt_npow * corr;
    rep.pred_fid_target = corr;
    rep.pred_fid_bplus = 1.0 - inv_sqrt_npow * inv_sqrt_npow;
    rep.eta = std::pow(2.0 / kPi, 0.25) * std::pow(double(n), 0.75) * inv_sqrt_npow;
    return rep;
}

}  // namespace tfgrover
