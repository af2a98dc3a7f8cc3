// Minimal end-to-end demo: run the periodic search at gamma = pi, stop at
// the first overlap peak, and verify the measured candidate with the
// two-call checker.

#include "tfgrover/tfgrover.hpp"

#include <cstdio>

int main() {
    using namespace tfgrover;
    const int n = 12;

    const double rate = std::arg(principal_pair(n, kPi).alpha);
    const long t_max = long(std::ceil(1.15 * kPi / (2.0 * rate)));
    const RunRecord rec = evolve_scan(n, kPi, t_max);
    std::printf("n=%d  periods to peak=%ld  peak probability=%.4f  oracle calls=%ld\n", n,
                rec.t_star, rec.success_prob, rec.oracle_queries);

    // the most likely readout is the target; check it like a real run would
    SignOracle oracle(n, 0);
    const CheckOutcome out = classify(0, oracle);
    std::printf("checker verdict for the top candidate: %s (%d extra oracle calls)\n",
                out.verdict == Verdict::is_target ? "is_target" : "other", out.oracle_calls);

    // and a wrong candidate is rejected with a single call
    SignOracle oracle2(n, 0);
    const CheckOutcome bad = classify(0b110011, oracle2);
    std::printf("checker verdict for a far candidate: %s (%d extra oracle calls)\n",
                bad.verdict == Verdict::not_in_pair ? "not_in_pair" : "other", bad.oracle_calls);
    return 0;
}
