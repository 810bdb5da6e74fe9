#pragma once

#include <iosfwd>
#include <vector>

#include "coins/errors.hpp"
#include "coins/rational.hpp"
#include "coins/tournament.hpp"

namespace coins {

/// A coin of type (a, b, x): face values a <= b, odds parameter x > 0.
/// The coin shows b with probability x/(1+x) and a with probability
/// 1/(1+x).
struct CoinType {
    Rat a;
    Rat b;
    Rat x;

    CoinType(Rat a_, Rat b_, Rat x_);

    bool is_winner() const { return x > 1; }
    bool is_loser() const { return x < 1; }
    bool is_fair() const { return x == 1; }
    bool is_flat() const { return a == b; }

    friend bool operator==(const CoinType&, const CoinType&) = default;
};

// Strict lexicographic order of types (a, then b, then x).
bool lex_less(const CoinType& lhs, const CoinType& rhs);

/// Ordered list of coins with pairwise-distinct types.  Order defines
/// vertex numbering 1..n of the dominance graph.
class CoinSystem {
public:
    CoinSystem() = default;
    explicit CoinSystem(std::vector<CoinType> coins);  // throws InvalidCoinError on duplicates

    int size() const { return static_cast<int>(coins_.size()); }
    const CoinType& coin(int i) const { return coins_[i - 1]; }  // 1-based
    const std::vector<CoinType>& coins() const { return coins_; }

private:
    std::vector<CoinType> coins_;
};

struct DominanceOutcome {
    Rat p_first_wins;
    Rat p_second_wins;
    Rat p_draw;
};

enum class Direction { First, Second, Tie };

/// Row of the dominance characterization table for a lexicographically
/// ordered normalized pair, plus the value of that row's inequality.
/// condition_holds = true means the lexicographically smaller coin
/// dominates.
struct Table1Case {
    int line;  // 1..6
    bool condition_holds;
};

// Exact probabilities over the four flip outcomes, classified by strict
// comparison of displayed faces.  Components sum to exactly 1.
DominanceOutcome dominance_probabilities(const CoinType& c1, const CoinType& c2);

Direction dominates(const CoinType& c1, const CoinType& c2);

// Requires c1 lexicographically strictly below c2 (PrecedenceError) and
// both coins normalized, a < b (UnnormalizedError).  Line predicates:
//   1: (a1,b1)=(a2,b2),       x1 > x2 (never true under the precondition)
//   2: a1=a2<b1<b2,           1/x2 > 1/x1 + 1
//   3: a1<a2<b2<b1,           x1 > 1
//   4: a1<a2<b1=b2,           x1 > x2 + 1
//   5: a1<a2<b1<b2,           (1/x1 + 1)(x2 + 1) < 2
//   6: a1<b1<=a2<b2,          never
Table1Case classify_pair(const CoinType& c1, const CoinType& c2);

// Replaces every flat coin (a = b) by (a', b, 1) where a' is the
// midpoint of (m, a), m being the largest face value of the current
// system strictly below a, or a - 1 when no such value exists.
// Preserves the dominance graph; idempotent.
CoinSystem normalize_system(const CoinSystem& s);

// Complete dominance tournament: edge i->j iff coin i dominates coin j.
// Throws TieError(i, j) on the first pair with equal winning
// probabilities.
Tournament dominance_graph(const CoinSystem& s);

// Text format: one coin per line, three whitespace-separated rationals
// (`p/q` or integer literals); `#` comments allowed.
CoinSystem read_coins(std::istream& in);
void write_coins(std::ostream& out, const CoinSystem& s);

}  // namespace coins
