#pragma once

#include <stdexcept>
#include <string>

namespace coins {

// Malformed textual input (coin files, tournament files, rationals).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A budgeted operation was asked to exceed its configured cap.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two coins of a system have equal winning probabilities; the system lies
// on one of the excluded hypersurfaces and its dominance graph is not a
// tournament.  Indices are 1-based positions in the system.
struct TieError : std::runtime_error {
    int first;
    int second;
    TieError(int i, int j)
        : std::runtime_error("tie between coins " + std::to_string(i) + " and " +
                             std::to_string(j)),
          first(i), second(j) {}
};

// classify_pair was called with a pair that is not in strictly increasing
// lexicographic type order.
struct PrecedenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// classify_pair was called with a flat coin (a == b); normalize first.
struct UnnormalizedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A coin triple violating x > 0 or a <= b, or a system with duplicate types.
struct InvalidCoinError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Vertex subset with duplicates or out-of-range labels.
struct BadSubsetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Tournament code outside [0, 2^(n(n-1)/2)).
struct RangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simulation asked for zero trials.
struct ZeroTrialsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace coins
