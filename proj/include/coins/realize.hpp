#pragma once

#include <vector>

#include "coins/coin.hpp"
#include "coins/tournament.hpp"

namespace coins {

// Thrown by the realization operations when the input tournament
// contains an ascending cycle; carries the witness.
struct NotSemiacyclicError : std::runtime_error {
    CycleWitness witness;
    explicit NotSemiacyclicError(CycleWitness w)
        : std::runtime_error("tournament is not semiacyclic"), witness(std::move(w)) {}
};

// Exact point of the arrangement region corresponding to t: coordinates
// sum to 0 and for each i < j, i->j iff x_i > x_j + 1 (strictly, with
// no pair on a hyperplane).  Solved as a strict difference-constraint
// system: i->j becomes x_i - x_j >= 1 + eps, j->i becomes
// x_i - x_j <= 1 - eps, feasibility by negative-cycle detection,
// starting at eps = 1 and halving until feasible.
std::vector<Rat> linial_region_point(const Tournament& t);

// Feasibility of the tightened system at a given positive margin,
// exposed for validation.  Monotone: once feasible at some eps, the
// system stays feasible at every smaller positive eps.
bool region_feasible_at(const Tournament& t, const Rat& eps);

// Winner realization: coin i gets type (i, n+1, x_i + r) with
// r = max_i(c - x_i) and c = 2.  All coins are winners sharing high
// face n+1; the dominance graph of the result is exactly t.
CoinSystem realize_winners(const Tournament& t);

// Loser realization: coin i gets type (0, i, 1/(r - x_i)) with
// r = max_i(x_i + c) and c = 2.  All coins are losers sharing low
// face 0; the dominance graph of the result is exactly t.
CoinSystem realize_losers(const Tournament& t);

}  // namespace coins
