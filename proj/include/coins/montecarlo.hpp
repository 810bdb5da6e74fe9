#pragma once

#include <cstdint>
#include <vector>

#include "coins/coin.hpp"

namespace coins {

struct SimConfig {
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
};

struct EmpiricalOutcome {
    std::uint64_t wins_first = 0;
    std::uint64_t wins_second = 0;
    std::uint64_t draws = 0;
};

struct PairSim {
    int i;  // 1-based coin indices, i < j
    int j;
    EmpiricalOutcome counts;
};

// Per-pair seed derivation used by simulate_system: three rounds of the
// splitmix64 finalizer over (seed, then xor i, then xor j).
std::uint64_t derive_pair_seed(std::uint64_t seed, int i, int j);

// Flips both coins cfg.trials times with a mt19937_64 stream seeded
// from cfg.seed.  A coin shows its high face iff the 64-bit draw u
// satisfies u * den < num * 2^64 for its exact probability num/den;
// no floating point is involved.  Throws ZeroTrialsError.
EmpiricalOutcome simulate_pair(const CoinType& c1, const CoinType& c2, const SimConfig& cfg);

// simulate_pair over every unordered pair, with per-pair seeds from
// derive_pair_seed; results are position-addressed (lexicographic pair
// order) and independent of execution order.
std::vector<PairSim> simulate_system(const CoinSystem& s, const SimConfig& cfg);

}  // namespace coins
