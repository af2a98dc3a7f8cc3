#include "tfgrover/verifier.hpp"

#include <catch2/catch.hpp>

#include <random>

using namespace tfgrover;

namespace {

Verdict ground_truth(std::uint64_t u, std::uint64_t s) {
    if (u == s) return Verdict::is_target;
    if (u == (s ^ 1u)) return Verdict::is_flipped_partner;
    return Verdict::not_in_pair;
}

}  // namespace

TEST_CASE("probe round semantics") {
    SECTION("flips for the candidate itself on every qubit") {
        const int n = 4;
        for (int q = 0; q < n; ++q) {
            SignOracle oracle(n, 0b1011);
            REQUIRE(probe_round(0b1011, q, oracle) == RoundResult::flipped);
            REQUIRE(oracle.calls() == 1);
        }
    }
    SECTION("never flips when the target differs in two or more positions") {
        const int n = 4;
        for (int q = 0; q < n; ++q) {
            SignOracle oracle(n, 0b0000);
            REQUIRE(probe_round(0b0011, q, oracle) == RoundResult::unflipped);
        }
    }
    SECTION("single-bit partner flips only on that qubit: exhaustive n <= 6") {
        for (int n : {2, 4, 6}) {
            const std::uint64_t dim = std::uint64_t(1) << n;
            for (std::uint64_t u = 0; u < dim; ++u) {
                for (std::uint64_t s = 0; s < dim; ++s) {
                    for (int q = 0; q < n; ++q) {
                        SignOracle oracle(n, u);
                        const bool flipped = probe_round(s, q, oracle) == RoundResult::flipped;
                        const bool should = (u == s) || (u == (s ^ (std::uint64_t(1) << q)));
                        REQUIRE(flipped == should);
                    }
                }
            }
        }
    }
    SECTION("probe qubit must exist") {
        SignOracle oracle(4, 0);
        REQUIRE_THROWS_AS(probe_round(0, 4, oracle), std::invalid_argument);
    }
}

TEST_CASE("classification") {
    SECTION("exhaustive n = 4: all pairs, never more than two calls") {
        const int n = 4;
        for (std::uint64_t u = 0; u < 16; ++u) {
            for (std::uint64_t s = 0; s < 16; ++s) {
                SignOracle oracle(n, u);
                const CheckOutcome out = classify(s, oracle);
                REQUIRE(out.verdict == ground_truth(u, s));
                REQUIRE(out.oracle_calls <= 2);
                REQUIRE(out.oracle_calls == out.rounds_used);
                if (out.verdict != Verdict::not_in_pair) {
                    REQUIRE(out.target_known);
                    REQUIRE(out.identified_target == u);
                }
            }
        }
    }
    SECTION("the target costs two calls, a far candidate one") {
        SignOracle oracle(6, 0b110100);
        const CheckOutcome hit = classify(0b110100, oracle);
        REQUIRE(hit.verdict == Verdict::is_target);
        REQUIRE(hit.oracle_calls == 2);

        SignOracle oracle2(6, 0b110100);
        const CheckOutcome miss = classify(0b000001, oracle2);
        REQUIRE(miss.verdict == Verdict::not_in_pair);
        REQUIRE(miss.oracle_calls == 1);
    }
    SECTION("the flipped partner is identified exactly") {
        SignOracle oracle(6, 0b101010 ^ 1u);
        const CheckOutcome out = classify(0b101010, oracle);
        REQUIRE(out.verdict == Verdict::is_flipped_partner);
        REQUIRE(out.identified_target == (0b101010 ^ 1u));
    }
    SECTION("randomized n = 12") {
        const int n = 12;
        std::mt19937_64 rng(1234);
        const std::uint64_t mask = (std::uint64_t(1) << n) - 1;
        for (int rep = 0; rep < 3000; ++rep) {
            const std::uint64_t u = rng() & mask;
            const std::uint64_t s = rng() & mask;
            SignOracle oracle(n, u);
            const CheckOutcome out = classify(s, oracle);
            REQUIRE(out.verdict == ground_truth(u, s));
            REQUIRE(out.oracle_calls <= 2);
        }
    }
    SECTION("needs at least two qubits") {
        SignOracle oracle(1, 0);
        REQUIRE_THROWS_AS(classify(0, oracle), std::invalid_argument);
    }
}
