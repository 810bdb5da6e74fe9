#include "coins/coin.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace coins {

CoinType::CoinType(Rat a_, Rat b_, Rat x_)
    : a(std::move(a_)), b(std::move(b_)), x(std::move(x_)) {
    if (x <= 0) throw InvalidCoinError("coin odds must satisfy x > 0");
    if (a > b) throw InvalidCoinError("coin faces must satisfy a <= b");
}

bool lex_less(const CoinType& lhs, const CoinType& rhs) {
    if (lhs.a != rhs.a) return lhs.a < rhs.a;
    if (lhs.b != rhs.b) return lhs.b < rhs.b;
    return lhs.x < rhs.x;
}

CoinSystem::CoinSystem(std::vector<CoinType> coins) : coins_(std::move(coins)) {
    for (size_t i = 0; i < coins_.size(); ++i)
        for (size_t j = i + 1; j < coins_.size(); ++j)
            if (coins_[i] == coins_[j])
                throw InvalidCoinError("coins " + std::to_string(i + 1) + " and " +
                                       std::to_string(j + 1) + " have equal types");
}

DominanceOutcome dominance_probabilities(const CoinType& c1, const CoinType& c2) {
    Rat hi1 = c1.x / (1 + c1.x);  // P(c1 shows b)
    Rat hi2 = c2.x / (1 + c2.x);
    DominanceOutcome out{0, 0, 0};
    const Rat faces1[2] = {c1.a, c1.b};
    const Rat faces2[2] = {c2.a, c2.b};
    const Rat probs1[2] = {1 - hi1, hi1};
    const Rat probs2[2] = {1 - hi2, hi2};
    for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t) {
            Rat p = probs1[s] * probs2[t];
            if (faces1[s] > faces2[t])
                out.p_first_wins += p;
            else if (faces1[s] < faces2[t])
                out.p_second_wins += p;
            else
                out.p_draw += p;
        }
    return out;
}

Direction dominates(const CoinType& c1, const CoinType& c2) {
    DominanceOutcome o = dominance_probabilities(c1, c2);
    if (o.p_first_wins > o.p_second_wins) return Direction::First;
    if (o.p_first_wins < o.p_second_wins) return Direction::Second;
    return Direction::Tie;
}

Table1Case classify_pair(const CoinType& c1, const CoinType& c2) {
    if (c1.is_flat() || c2.is_flat())
        throw UnnormalizedError("classify_pair requires a < b; normalize first");
    if (!lex_less(c1, c2))
        throw PrecedenceError("classify_pair requires strictly increasing lexicographic order");

    if (c1.a == c2.a) {
        if (c1.b == c2.b) return {1, c1.x > c2.x};
        return {2, Rat(1) / c2.x > Rat(1) / c1.x + 1};  // a1 = a2 < b1 < b2
    }
    if (c1.b <= c2.a) return {6, false};
    if (c1.b > c2.b) return {3, c1.x > 1};
    if (c1.b == c2.b) return {4, c1.x > c2.x + 1};
    return {5, (Rat(1) / c1.x + 1) * (c2.x + 1) < 2};
}

CoinSystem normalize_system(const CoinSystem& s) {
    std::vector<CoinType> coins = s.coins();
    for (size_t i = 0; i < coins.size(); ++i) {
        if (!coins[i].is_flat()) continue;
        const Rat& a = coins[i].a;
        // Largest face value of the current system strictly below a.
        // Already-normalized coins contribute their new low faces, which
        // keeps successive flat coins with equal values distinct.
        const Rat* below = nullptr;
        for (const CoinType& c : coins)
            for (const Rat* f : {&c.a, &c.b})
                if (*f < a && (!below || *f > *below)) below = f;
        Rat low = below ? Rat((*below + a) / 2) : Rat(a - 1);
        coins[i] = CoinType(low, a, rat(1));
    }
    return CoinSystem(std::move(coins));
}

Tournament dominance_graph(const CoinSystem& s) {
    Tournament t(s.size());
    for (int i = 1; i <= s.size(); ++i)
        for (int j = i + 1; j <= s.size(); ++j) {
            switch (dominates(s.coin(i), s.coin(j))) {
                case Direction::First: t.orient(i, j); break;
                case Direction::Second: t.orient(j, i); break;
                case Direction::Tie: throw TieError(i, j);
            }
        }
    return t;
}

CoinSystem read_coins(std::istream& in) {
    std::vector<CoinType> coins;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        std::string ta, tb, tx, extra;
        if (!(row >> ta)) continue;  // blank line
        if (!(row >> tb >> tx) || (row >> extra))
            throw ParseError("coin line needs exactly three rationals: '" + line + "'");
        coins.emplace_back(parse_rational(ta), parse_rational(tb), parse_rational(tx));
    }
    return CoinSystem(std::move(coins));
}

void write_coins(std::ostream& out, const CoinSystem& s) {
    for (const CoinType& c : s.coins())
        out << format_rational(c.a) << ' ' << format_rational(c.b) << ' '
            << format_rational(c.x) << '\n';
}

}  // namespace coins
