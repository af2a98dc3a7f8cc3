// Dicke-basis representation of permutation-symmetric n-qubit states, the
// transverse-field and oracle generators, and their exact exponentials.
//
// States live in the (n+1)-dimensional symmetric subspace spanned by the
// normalized Dicke states |D_k> of Hamming weight k. Only even n is
// supported; odd n is rejected rather than extended.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace tfgrover {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

inline void require_even_n(int n) {
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("qubit count must be a positive even integer, got " +
                                    std::to_string(n));
    }
}

// log C(n, k); accurate enough that sqrt(C(n,k)/2^n) carries ~1e-15 relative error
inline double log_binomial(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

inline double binomial_over_pow2(int n, int k) {
    return std::exp(log_binomial(n, k) - n * std::log(2.0));
}

// Complex amplitude vector over the n+1 Dicke basis states.
struct SymmetricState {
    int n = 0;
    Eigen::VectorXcd amps;

    SymmetricState() = default;
    SymmetricState(int n_, Eigen::VectorXcd a) : n(n_), amps(std::move(a)) {
        require_even_n(n);
        if (amps.size() != n + 1) {
            throw std::invalid_argument("amplitude vector must have length n+1");
        }
    }

    static SymmetricState zero(int n_) {
        return SymmetricState(n_, Eigen::VectorXcd::Zero(n_ + 1));
    }

    double norm() const { return amps.norm(); }
    double norm_error() const { return std::abs(amps.squaredNorm() - 1.0); }
};

// Dense operator on the symmetric subspace.
struct SymmetricOperator {
    int n = 0;
    Eigen::MatrixXcd mat;

    SymmetricOperator() = default;
    SymmetricOperator(int n_, Eigen::MatrixXcd m) : n(n_), mat(std::move(m)) {
        require_even_n(n);
        if (mat.rows() != n + 1 || mat.cols() != n + 1) {
            throw std::invalid_argument("operator must be (n+1) x (n+1)");
        }
    }

    double unitarity_error() const {
        Eigen::MatrixXcd d = mat.adjoint() * mat;
        d.diagonal().array() -= 1.0;
        return d.cwiseAbs().maxCoeff();
    }

    SymmetricState apply(const SymmetricState& s) const {
        if (s.n != n) throw std::invalid_argument("operator/state qubit count mismatch");
        return SymmetricState(n, mat * s.amps);
    }
};

inline SymmetricOperator operator*(const SymmetricOperator& a, const SymmetricOperator& b) {
    if (a.n != b.n) throw std::invalid_argument("operator qubit count mismatch");
    return SymmetricOperator(a.n, a.mat * b.mat);
}

// Sum of Pauli-X over all qubits, restricted to the symmetric subspace:
// real symmetric tridiagonal with <k+1|.|k> = sqrt((k+1)(n-k)).
// Its spectrum is exactly {-n, -n+2, ..., n}.
inline SymmetricOperator transverse_field(int n) {
    require_even_n(n);
    Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(n + 1, n + 1);
    for (int k = 0; k < n; ++k) {
        const double v = std::sqrt(double(k + 1) * double(n - k));
        b(k + 1, k) = v;
        b(k, k + 1) = v;
    }
    return SymmetricOperator(n, std::move(b));
}

// Oracle Hamiltonian -|target><target| in the rotated frame where the marked
// string is all zeros: diagonal, -1 on Dicke weight 0.
inline SymmetricOperator oracle_hamiltonian(int n) {
    require_even_n(n);
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n + 1, n + 1);
    c(0, 0) = -1.0;
    return SymmetricOperator(n, std::move(c));
}

// One-time eigendecomposition of the transverse field, shared by all
// rotation and phase-space routines. Eigenvalues are snapped to the exact
// integers -n+2m; column m is the field eigenstate with eigenvalue -n+2m,
// sign-fixed so its weight-0 amplitude is positive.
struct SpinBasis {
    int n = 0;
    Eigen::VectorXd evals;  // exact: -n, -n+2, ..., n
    Eigen::MatrixXd evecs;  // orthogonal, column m <-> evals[m]
};

inline const SpinBasis& spin_basis(int n) {
    require_even_n(n);
    static std::mutex mu;
    static std::map<int, std::unique_ptr<SpinBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;

    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n + 1, n + 1);
    for (int k = 0; k < n; ++k) {
        const double v = std::sqrt(double(k + 1) * double(n - k));
        b(k + 1, k) = v;
        b(k, k + 1) = v;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("transverse field eigendecomposition failed");
    }
    auto basis = std::make_unique<SpinBasis>();
    basis->n = n;
    basis->evals.resize(n + 1);
    basis->evecs = es.eigenvectors();
    for (int m = 0; m <= n; ++m) {
        const double exact = -n + 2.0 * m;
        if (std::abs(es.eigenvalues()[m] - exact) > 1e-8 * std::max(1.0, double(n))) {
            throw std::runtime_error("transverse field spectrum off the integer ladder");
        }
        basis->evals[m] = exact;
        // weight-0 amplitude of a field eigenstate is sqrt(C(n,m)/2^n) > 0
        if (basis->evecs(0, m) < 0.0) basis->evecs.col(m) = -basis->evecs.col(m);
    }
    const SpinBasis& ref = *basis;
    cache.emplace(n, std::move(basis));
    return ref;
}

// exp(-i theta/2 * transverse_field), via the cached eigendecomposition.
inline SymmetricOperator field_rotation(int n, double theta) {
    if (!std::isfinite(theta)) throw std::invalid_argument("rotation angle must be finite");
    const SpinBasis& sb = spin_basis(n);
    Eigen::VectorXcd phases(n + 1);
    for (int m = 0; m <= n; ++m) {
        phases[m] = std::polar(1.0, -0.5 * theta * sb.evals[m]);
    }
    Eigen::MatrixXcd m = sb.evecs.cast<Complex>() * phases.asDiagonal() *
                         sb.evecs.transpose().cast<Complex>();
    return SymmetricOperator(n, std::move(m));
}

// exp(-i gamma * oracle_hamiltonian): identity except entry (0,0) = e^{i gamma}.
inline SymmetricOperator oracle_phase(int n, double gamma) {
    require_even_n(n);
    if (!std::isfinite(gamma)) throw std::invalid_argument("oracle angle must be finite");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n + 1, n + 1);
    m(0, 0) = std::polar(1.0, gamma);
    return SymmetricOperator(n, std::move(m));
}

// |target> = all-zeros string = Dicke weight 0.
inline SymmetricState target_state(int n) {
    SymmetricState s = SymmetricState::zero(n);
    s.amps[0] = 1.0;
    return s;
}

// |+>^n, the even superposition of all bit strings.
inline SymmetricState uniform_state(int n) {
    require_even_n(n);
    Eigen::VectorXcd a(n + 1);
    for (int k = 0; k <= n; ++k) {
        a[k] = std::sqrt(binomial_over_pow2(n, k));
    }
    return SymmetricState(n, std::move(a));
}

namespace detail {
inline SymmetricState hadamard_cat(int n, double sign) {
    require_even_n(n);
    Eigen::VectorXcd a(n + 1);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int k = 0; k <= n; ++k) {
        const double parity = (k % 2 == 0) ? 1.0 : -1.0;
        a[k] = std::sqrt(binomial_over_pow2(n, k)) * (1.0 + sign * parity) * inv_sqrt2;
    }
    return SymmetricState(n, std::move(a));
}
}  // namespace detail

// (|+>^n + |->^n)/sqrt(2); supported on even Dicke weights.
inline SymmetricState bright_state(int n) { return detail::hadamard_cat(n, +1.0); }

// (|+>^n - |->^n)/sqrt(2); exactly invariant under the period unitary.
inline SymmetricState dark_state(int n) { return detail::hadamard_cat(n, -1.0); }

// Eigenstate of the transverse field with eigenvalue j, j even in [-n, n].
// Sign convention: positive overlap with the target state.
inline SymmetricState field_eigenstate(int n, int j) {
    require_even_n(n);
    if (j < -n || j > n || ((j % 2) + 2) % 2 != 0) {
        throw std::invalid_argument("field eigenvalue must be an even integer in [-n, n]");
    }
    const SpinBasis& sb = spin_basis(n);
    const int m = (n + j) / 2;
    return SymmetricState(n, sb.evecs.col(m).cast<Complex>());
}

// <a|b> with conjugation on a.
inline Complex overlap(const SymmetricState& a, const SymmetricState& b) {
    if (a.n != b.n) throw std::invalid_argument("overlap of states with different qubit counts");
    return a.amps.dot(b.amps);  // Eigen's dot conjugates the left factor
}

}  // namespace tfgrover
