// Brute-force 2^n statevector simulator for small n. This is the independent
// ground truth for every symmetric-subspace claim, including search with
// arbitrary (nonzero) marked strings. Never a performance path: n <= 14.
//
// Bit-string indexing is little-endian: bit j of the index is qubit j.

#pragma once

#include "tfgrover/dicke.hpp"

#include <cstdint>
#include <vector>

namespace tfgrover {

inline constexpr int kMaxFullQubits = 14;

struct FullState {
    int n = 0;
    Eigen::VectorXcd amps;  // length 2^n

    FullState() = default;
    FullState(int n_, Eigen::VectorXcd a) : n(n_), amps(std::move(a)) {
        if (n < 1 || n > kMaxFullQubits) {
            throw std::invalid_argument("full-space simulator supports 1 <= n <= 14");
        }
        if (amps.size() != (std::int64_t(1) << n)) {
            throw std::invalid_argument("amplitude vector must have length 2^n");
        }
    }

    double norm() const { return amps.norm(); }
};

inline void require_bits(int n, std::uint64_t s) {
    if (n > 0 && (s >> n) != 0) {
        throw std::invalid_argument("bit string does not fit in n qubits");
    }
}

inline FullState make_basis_state(int n, std::uint64_t s) {
    require_bits(n, s);
    Eigen::VectorXcd a = Eigen::VectorXcd::Zero(std::int64_t(1) << n);
    a[std::int64_t(s)] = 1.0;
    return FullState(n, std::move(a));
}

inline FullState make_uniform_state(int n) {
    const std::int64_t dim = std::int64_t(1) << n;
    Eigen::VectorXcd a = Eigen::VectorXcd::Constant(dim, 1.0 / std::sqrt(double(dim)));
    return FullState(n, std::move(a));
}

// exp(-i gamma C_u) with C_u = -|u><u|: multiplies the amplitude of u by e^{i gamma}.
inline void full_apply_oracle(FullState& st, std::uint64_t u, double gamma) {
    require_bits(st.n, u);
    st.amps[std::int64_t(u)] *= std::polar(1.0, gamma);
}

// exp(-i theta X/2) on one qubit.
inline void apply_x_rotation(FullState& st, int qubit, double theta) {
    if (qubit < 0 || qubit >= st.n) throw std::invalid_argument("qubit index out of range");
    const Complex c = std::cos(theta / 2.0);
    const Complex s = Complex(0.0, -1.0) * std::sin(theta / 2.0);
    const std::int64_t mask = std::int64_t(1) << qubit;
    const std::int64_t dim = st.amps.size();
    for (std::int64_t i = 0; i < dim; ++i) {
        if (!(i & mask)) {
            const Complex a = st.amps[i];
            const Complex b = st.amps[i | mask];
            st.amps[i] = c * a + s * b;
            st.amps[i | mask] = s * a + c * b;
        }
    }
}

// exp(-i theta/2 * sum_j X_j), qubit by qubit.
inline void full_apply_transverse(FullState& st, double theta) {
    for (int q = 0; q < st.n; ++q) apply_x_rotation(st, q, theta);
}

// One period of the search unitary with marked string u.
inline void full_apply_period(FullState& st, std::uint64_t u, double gamma) {
    full_apply_oracle(st, u, gamma);
    full_apply_transverse(st, 2.0 * kPi / st.n);
    full_apply_oracle(st, u, -gamma);
    full_apply_transverse(st, 2.0 * kPi / st.n);
}

// Runs t periods from the uniform state; returns |<u|psi_t>|^2.
// The result is independent of u: flipping any subset of qubits maps the
// problem to itself.
inline double full_run(int n, std::uint64_t u, double gamma, long t) {
    if (n > 12) throw std::invalid_argument("full_run is capped at n <= 12");
    FullState st = make_uniform_state(n);
    require_bits(n, u);
    for (long i = 0; i < t; ++i) full_apply_period(st, u, gamma);
    return std::norm(st.amps[std::int64_t(u)]);
}

struct ProjectionResult {
    SymmetricState state;  // Dicke amplitudes <D_k|psi>
    double leakage = 0.0;  // ||psi - P_S psi||
};

inline ProjectionResult project_symmetric(const FullState& st) {
    require_even_n(st.n);
    const int n = st.n;
    Eigen::VectorXcd d = Eigen::VectorXcd::Zero(n + 1);
    const std::int64_t dim = st.amps.size();
    for (std::int64_t s = 0; s < dim; ++s) {
        d[Eigen::Index(__builtin_popcountll(std::uint64_t(s)))] += st.amps[s];
    }
    Eigen::VectorXd inv_sqrt_binom(n + 1);
    for (int k = 0; k <= n; ++k) {
        inv_sqrt_binom[k] = std::exp(-0.5 * log_binomial(n, k));
        d[k] *= inv_sqrt_binom[k];
    }
    // residual against the reconstructed in-subspace state; summing the
    // residual directly avoids the cancellation in ||psi||^2 - ||P psi||^2
    double leak2 = 0.0;
    for (std::int64_t s = 0; s < dim; ++s) {
        const int k = __builtin_popcountll(std::uint64_t(s));
        leak2 += std::norm(st.amps[s] - d[k] * inv_sqrt_binom[k]);
    }
    ProjectionResult res;
    res.state = SymmetricState(n, std::move(d));
    res.leakage = std::sqrt(leak2);
    return res;
}

}  // namespace tfgrover
