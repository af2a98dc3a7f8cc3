// Discrete spin-coherent phase-space representation. A symmetric state psi
// is encoded by the n overlaps chi_k = <target| R^{-k} |psi> where R is the
// discrete field rotation by 2*pi/n; chi determines psi uniquely on the
// orthogonal complement of the dark state. Both generators of the walk act
// on chi in closed form, so the whole evolution can be run in this
// representation and cross-checked against state space.

#pragma once

#include "tfgrover/dicke.hpp"

#include <quadmath.h>


namespace tfgrover {

// chi function of the target state itself: xi_k = cos(k*pi/n)^n. These are
// the coefficients of the half-period eigenvalue polynomial. Computed as
// sign * exp(n*log|cos|) because the values span ~2^-n.
struct TargetChiTable {
    int n = 0;
    Eigen::VectorXd values;  // length n, k = 0..n-1

    double operator[](int k) const { return values[k]; }
};

inline TargetChiTable target_chi_table(int n) {
    require_even_n(n);
    TargetChiTable t;
    t.n = n;
    t.values.resize(n);
    for (int k = 0; k < n; ++k) {
        if (2 * k == n) {
            t.values[k] = 0.0;  // cos(pi/2) exactly
            continue;
        }
        // even n: cos^n >= 0 regardless of the sign of cos
        const double c = std::abs(std::cos(kPi * k / n));
        t.values[k] = std::exp(n * std::log(c));
    }
    return t;
}

struct ChiFunction {
    int n = 0;
    Eigen::VectorXcd values;  // length n, values[k] = chi_k

    ChiFunction() = default;
    ChiFunction(int n_, Eigen::VectorXcd v) : n(n_), values(std::move(v)) {
        require_even_n(n);
        if (values.size() != n) throw std::invalid_argument("chi vector must have length n");
    }
};

// <target| exp(i theta B/2) |psi>, the continuous-angle sampling helper.
inline Complex chi_continuous(const SymmetricState& psi, double theta) {
    const SpinBasis& sb = spin_basis(psi.n);
    const Eigen::VectorXcd proj = sb.evecs.transpose().cast<Complex>() * psi.amps;
    Complex acc = 0.0;
    for (int m = 0; m <= psi.n; ++m) {
        acc += sb.evecs(0, m) * proj[m] * std::polar(1.0, 0.5 * theta * sb.evals[m]);
    }
    return acc;
}

inline ChiFunction chi_of_state(const SymmetricState& psi) {
    const int n = psi.n;
    const SpinBasis& sb = spin_basis(n);
    const Eigen::VectorXcd proj = sb.evecs.transpose().cast<Complex>() * psi.amps;
    Eigen::VectorXcd vals = Eigen::VectorXcd::Zero(n);
    for (int m = 0; m <= n; ++m) {
        const Complex weight = sb.evecs(0, m) * proj[m];
        const Complex step = std::polar(1.0, kPi * sb.evals[m] / n);
        Complex phase = 1.0;
        for (int k = 0; k < n; ++k) {
            vals[k] += weight * phase;
            phase *= step;
        }
    }
    return ChiFunction(n, std::move(vals));
}

// Action of the discrete field rotation: a cyclic shift by one index, with
// index 0 wrapping from index n-1 through the periodic boundary.
inline ChiFunction apply_rotation_chi(const ChiFunction& chi) {
    const int n = chi.n;
    Eigen::VectorXcd out(n);
    out[0] = chi.values[n - 1];
    for (int k = 1; k < n; ++k) out[k] = chi.values[k - 1];
    return ChiFunction(n, std::move(out));
}

// Action of the oracle phase exp(-i gamma C):
// chi_k -> chi_k + (e^{i gamma} - 1) chi_0 xi_k. Since xi_0 = 1 the index-0
// value just picks up the phase e^{i gamma}.
inline ChiFunction apply_oracle_chi(const ChiFunction& chi, double gamma,
                                    const TargetChiTable& xi) {
    if (xi.n != chi.n) throw std::invalid_argument("chi/xi qubit count mismatch");
    const Complex f = std::polar(1.0, gamma) - 1.0;
    Eigen::VectorXcd out = chi.values + (f * chi.values[0]) * xi.values.cast<Complex>();
    return ChiFunction(chi.n, std::move(out));
}

// Fourier side of the representation, indexed by the even field eigenvalues
// j in {-n, ..., -2, 0, 2, ..., n}; +n and -n coincide on the discrete grid
// and are stored once under +n.
struct ChiFourier {
    int n = 0;
    Eigen::VectorXcd components;  // index (j+n)/2

    Complex component(int j) const {
        if (j < -n || j > n || ((j % 2) + 2) % 2 != 0) {
            throw std::invalid_argument("fourier index must be an even integer in [-n, n]");
        }
        return components[(j + n) / 2];
    }
};

// chi~_j = (1/n) sum_k chi_k e^{-i j k pi / n}. With this kernel,
// chi~_j = <target|b_j> <b_j|psi> for |j| < n, where b_j is the field
// eigenstate with eigenvalue j; chi~_n collects the two j = +/-n states.
inline ChiFourier chi_fourier(const ChiFunction& chi) {
    const int n = chi.n;
    ChiFourier f;
    f.n = n;
    f.components = Eigen::VectorXcd::Zero(n + 1);
    for (int idx = 0; idx <= n; ++idx) {
        const int j = -n + 2 * idx;
        Complex acc = 0.0;
        for (int k = 0; k < n; ++k) {
            acc += chi.values[k] * std::polar(1.0, -kPi * j * k / n);
        }
        f.components[idx] = acc / double(n);
    }
    return f;
}

// Squared norm recovered from the chi function, valid when the dark-state
// component is zero (caller contract). No singular case: <target|b_j> is a
// square root of a positive binomial ratio for every even n.
inline double norm_from_chi(const ChiFunction& chi) {
    const int n = chi.n;
    const ChiFourier f = chi_fourier(chi);
    const SpinBasis& sb = spin_basis(n);
    const double npow = std::pow(2.0, n);
    double acc = 0.5 * npow * std::norm(f.component(n));
    for (int j = -n + 2; j <= n - 2; j += 2) {
        const double head = sb.evecs(0, (n + j) / 2);
        acc += std::norm(f.component(j)) / (head * head);
    }
    return acc;
}

// Inverse map on the dark-orthogonal subspace: field-eigenstate coefficients
// are chi~_j / <target|b_j>, and the bright coefficient is chi~_n sqrt(N/2).
inline SymmetricState reconstruct_from_chi(const ChiFunction& chi) {
    const int n = chi.n;
    const ChiFourier f = chi_fourier(chi);
    const SpinBasis& sb = spin_basis(n);
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(n + 1);
    for (int j = -n + 2; j <= n - 2; j += 2) {
        const int m = (n + j) / 2;
        const Complex coeff = f.component(j) / sb.evecs(0, m);
        amps += coeff * sb.evecs.col(m).cast<Complex>();
    }
    const Complex bright_coeff = f.component(n) * std::sqrt(std::pow(2.0, n) / 2.0);
    amps += bright_coeff * bright_state(n).amps;
    return SymmetricState(n, std::move(amps));
}

// --- closed-form identities of the target chi table ---------------------
//
// The alternating sums of xi collapse to 2n/N and n^2/N. Both right-hand
// sides are exponentially small while the summands are O(1), so verifying
// them to small *relative* error needs more than double precision; these
// helpers evaluate both sides in 128-bit floats and return the relative
// deviation.

namespace detail {

inline __float128 xi_quad(int n, int k) {
    static const __float128 pi_q = acosq(__float128(-1));
    const __float128 c = cosq(pi_q * k / n);
    __float128 p = 1;
    for (int i = 0; i < n; ++i) p *= c;
    return p;
}

}  // namespace detail

// | sum_k (-1)^k xi_k - 2n/N | / (2n/N)
inline double xi_alternating_identity_rel_error(int n) {
    require_even_n(n);
    __float128 sum = 0;
    for (int k = 0; k < n; ++k) {
        const __float128 x = detail::xi_quad(n, k);
        sum += (k % 2 == 0) ? x : -x;
    }
    __float128 npow = 1;
    for (int i = 0; i < n; ++i) npow *= 2;
    const __float128 target = __float128(2 * n) / npow;
    return double(fabsq(sum - target) / target);
}

// | n/2 + sum_{k>=1} (-1)^k (n-k) xi_k - n^2/N | / (n^2/N)
inline double xi_weighted_identity_rel_error(int n) {
    require_even_n(n);
    __float128 sum = __float128(n) / 2;
    for (int k = 1; k < n; ++k) {
        const __float128 x = detail::xi_quad(n, k) * (n - k);
        sum += (k % 2 == 0) ? x : -x;
    }
    __float128 npow = 1;
    for (int i = 0; i < n; ++i) npow *= 2;
    const __float128 target = __float128(n) * n / npow;
    return double(fabsq(sum - target) / target);
}

}  // namespace tfgrover
