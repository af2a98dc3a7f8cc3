// The transition rate computed two independent ways: dense diagonalization
// of the period unitary versus the Newton root of the phase-space
// eigenvalue polynomial.

#include "tfgrover/tfgrover.hpp"

#include <cstdio>

int main() {
    using namespace tfgrover;
    std::printf("%4s %18s %18s %12s\n", "n", "arg(alpha) diag", "arg(beta^2) poly", "|diff|");
    for (int n = 8; n <= 32; n += 4) {
        const Complex alpha = principal_pair(n, kPi).alpha;
        const Complex beta = root_solve(n);
        const double a1 = std::arg(alpha);
        const double a2 = std::arg(beta * beta);
        std::printf("%4d %18.12e %18.12e %12.3e\n", n, a1, a2, std::abs(a1 - a2));
    }
    return 0;
}
