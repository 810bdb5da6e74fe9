#include "coins/montecarlo.hpp"

#include <random>

namespace coins {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// ceil(P(show b) * 2^64); a 64-bit draw u shows the high face iff u < t.
mpz_class high_face_threshold(const CoinType& c) {
    Rat p = c.x / (1 + c.x);
    mpz_class scaled = p.get_num() << 64;
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), p.get_den().get_mpz_t());
    return q;
}

}  // namespace

std::uint64_t derive_pair_seed(std::uint64_t seed, int i, int j) {
    std::uint64_t z = splitmix64(seed);
    z = splitmix64(z ^ static_cast<std::uint64_t>(i));
    z = splitmix64(z ^ static_cast<std::uint64_t>(j));
    return z;
}

EmpiricalOutcome simulate_pair(const CoinType& c1, const CoinType& c2, const SimConfig& cfg) {
    if (cfg.trials == 0) throw ZeroTrialsError("simulation needs at least one trial");
    mpz_class t1 = high_face_threshold(c1);
    mpz_class t2 = high_face_threshold(c2);
    std::mt19937_64 gen(cfg.seed);
    EmpiricalOutcome out;
    for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
        bool hi1 = mpz_cmp_ui(t1.get_mpz_t(), gen()) > 0;
        bool hi2 = mpz_cmp_ui(t2.get_mpz_t(), gen()) > 0;
        const Rat& f1 = hi1 ? c1.b : c1.a;
        const Rat& f2 = hi2 ? c2.b : c2.a;
        if (f1 > f2)
            ++out.wins_first;
        else if (f1 < f2)
            ++out.wins_second;
        else
            ++out.draws;
    }
    return out;
}

std::vector<PairSim> simulate_system(const CoinSystem& s, const SimConfig& cfg) {
    if (cfg.trials == 0) throw ZeroTrialsError("simulation needs at least one trial");
    std::vector<PairSim> out;
    for (int i = 1; i <= s.size(); ++i)
        for (int j = i + 1; j <= s.size(); ++j) {
            SimConfig pair_cfg{cfg.trials, derive_pair_seed(cfg.seed, i, j)};
            out.push_back({i, j, simulate_pair(s.coin(i), s.coin(j), pair_cfg)});
        }
    return out;
}

}  // namespace coins
