#include <doctest.h>

#include <random>
#include <sstream>

#include "coins/coin.hpp"
#include "oracles.hpp"

using namespace coins;

namespace {

CoinType coin(long a, long b, long xn, long xd = 1) {
    return {rat(a), rat(b), rat(xn, xd)};
}

}  // namespace

TEST_CASE("coin type invariants") {
    CHECK_THROWS_AS(coin(0, 1, 0), InvalidCoinError);
    CHECK_THROWS_AS(coin(0, 1, -1), InvalidCoinError);
    CHECK_THROWS_AS(coin(2, 1, 1), InvalidCoinError);
    CHECK(coin(0, 1, 2).is_winner());
    CHECK(coin(0, 1, 1, 2).is_loser());
    CHECK(coin(0, 1, 1).is_fair());
    CHECK_THROWS_AS(CoinSystem({coin(0, 1, 2), coin(0, 1, 2)}), InvalidCoinError);
}

TEST_CASE("dominance probabilities of the worked pairs") {
    auto symmetric = dominance_probabilities(coin(0, 3, 1), coin(1, 2, 1));
    CHECK(symmetric.p_first_wins == rat(1, 2));
    CHECK(symmetric.p_second_wins == rat(1, 2));
    CHECK(symmetric.p_draw == 0);

    auto skewed = dominance_probabilities(coin(2, 6, 3, 2), coin(3, 6, 11, 10));
    CHECK(skewed.p_first_wins == rat(2, 7));
    CHECK(skewed.p_second_wins == rat(2, 5));
    CHECK(skewed.p_draw == rat(11, 35));

    auto dominated = dominance_probabilities(coin(0, 1, 5), coin(1, 2, 1, 5));
    CHECK(dominated.p_first_wins == 0);
    CHECK(dominated.p_second_wins == rat(11, 36));
    CHECK(dominated.p_draw == rat(25, 36));
}

TEST_CASE("probabilities always sum to exactly one") {
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 500; ++trial) {
        auto o = dominance_probabilities(oracle::random_coin(gen), oracle::random_coin(gen));
        CHECK(o.p_first_wins + o.p_second_wins + o.p_draw == 1);
        CHECK(o.p_first_wins >= 0);
        CHECK(o.p_second_wins >= 0);
        CHECK(o.p_draw >= 0);
    }
}

TEST_CASE("dominates directions") {
    CHECK(dominates(coin(0, 10, 2), coin(1, 2, 1)) == Direction::First);
    CHECK(dominates(coin(0, 3, 1), coin(1, 2, 1)) == Direction::Tie);
    CHECK(dominates(coin(0, 1, 1), coin(0, 2, 1)) == Direction::Second);
}

TEST_CASE("classify_pair picks the right line") {
    auto line2 = classify_pair(coin(1, 5, 2), coin(1, 7, 1, 4));
    CHECK(line2.line == 2);
    CHECK(line2.condition_holds);

    auto line3 = classify_pair(coin(0, 10, 2), coin(1, 2, 1));
    CHECK(line3.line == 3);
    CHECK(line3.condition_holds);

    auto line6 = classify_pair(coin(0, 1, 5), coin(1, 2, 1, 5));
    CHECK(line6.line == 6);
    CHECK(!line6.condition_holds);

    // Equal face pairs sit on line 1 and never let the smaller coin win.
    auto line1 = classify_pair(coin(0, 1, 1), coin(0, 1, 2));
    CHECK(line1.line == 1);
    CHECK(!line1.condition_holds);

    auto line4 = classify_pair(coin(0, 5, 4), coin(1, 5, 1));
    CHECK(line4.line == 4);
    CHECK(line4.condition_holds);

    auto line5 = classify_pair(coin(0, 5, 9), coin(1, 6, 1, 2));
    CHECK(line5.line == 5);
    CHECK(line5.condition_holds);

    CHECK_THROWS_AS(classify_pair(coin(1, 2, 1), coin(0, 3, 1)), PrecedenceError);
    CHECK_THROWS_AS(classify_pair(coin(0, 1, 1), coin(0, 1, 1)), PrecedenceError);
    CHECK_THROWS_AS(classify_pair(coin(1, 1, 1), coin(2, 3, 1)), UnnormalizedError);
}

TEST_CASE("classify_pair agrees with the probability comparison") {
    std::mt19937_64 gen(2024);
    int done = 0;
    while (done < 10000) {
        CoinType c1 = oracle::random_coin(gen);
        CoinType c2 = oracle::random_coin(gen);
        if (c1 == c2) continue;
        if (lex_less(c2, c1)) std::swap(c1, c2);
        CHECK(classify_pair(c1, c2).condition_holds == (dominates(c1, c2) == Direction::First));
        ++done;
    }
}

TEST_CASE("flat coin normalization") {
    CoinSystem s({coin(1, 4, 1), coin(2, 2, 3)});
    CoinSystem norm = normalize_system(s);
    CHECK(norm.coin(1) == coin(1, 4, 1));
    CHECK(norm.coin(2) == CoinType(rat(3, 2), rat(2), rat(1)));

    CoinSystem no_flat({coin(0, 1, 2), coin(1, 3, 1)});
    CHECK(normalize_system(no_flat).coins() == no_flat.coins());

    CoinSystem lone({coin(0, 0, 1)});
    CHECK(normalize_system(lone).coin(1) == coin(-1, 0, 1));
}

TEST_CASE("normalization preserves the dominance graph and is idempotent") {
    std::mt19937_64 gen(31337);
    int done = 0;
    while (done < 300) {
        int n = 3 + gen() % 3;
        std::vector<CoinType> cs;
        for (int i = 0; i < n; ++i) {
            if (gen() % 3 == 0) {
                Rat a = oracle::random_rat(gen, -5, 5);
                cs.emplace_back(a, a, oracle::random_rat(gen, 0, 4) + rat(1, 7));
            } else {
                cs.push_back(oracle::random_coin(gen));
            }
        }
        bool has_flat = false;
        for (const auto& c : cs) has_flat = has_flat || c.is_flat();
        if (!has_flat) continue;

        CoinSystem sys;
        Tournament before(0);
        try {
            sys = CoinSystem(cs);
            before = dominance_graph(sys);
        } catch (const InvalidCoinError&) {
            continue;  // duplicate types
        } catch (const TieError&) {
            continue;  // graph only defined off the tie hypersurfaces
        }
        CoinSystem norm = normalize_system(sys);
        for (const auto& c : norm.coins()) CHECK(c.a < c.b);
        CHECK(dominance_graph(norm) == before);
        CHECK(normalize_system(norm).coins() == norm.coins());
        ++done;
    }
}

TEST_CASE("winner systems have non-increasing b along edges, losers non-increasing a") {
    std::mt19937_64 gen(77);
    int winner_checked = 0, loser_checked = 0;
    while (winner_checked < 200 || loser_checked < 200) {
        int n = 3 + gen() % 3;
        bool winners = winner_checked <= loser_checked;
        std::vector<CoinType> cs;
        for (int i = 0; i < n; ++i) {
            CoinType c = oracle::random_coin(gen);
            Rat x = oracle::random_rat(gen, 0, 5) + rat(1, 13);
            cs.emplace_back(c.a, c.b, winners ? Rat(1 + x) : Rat(1 / (1 + x)));
        }
        Tournament t(0);
        CoinSystem sys;
        try {
            sys = CoinSystem(cs);
            t = dominance_graph(sys);
        } catch (const InvalidCoinError&) {
            continue;
        } catch (const TieError&) {
            continue;
        }
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j || !t.has_edge(i, j)) continue;
                if (winners)
                    CHECK(sys.coin(i).b >= sys.coin(j).b);
                else
                    CHECK(sys.coin(i).a >= sys.coin(j).a);
            }
        (winners ? winner_checked : loser_checked) += n;
    }
}

TEST_CASE("dominance graph construction") {
    CHECK_THROWS_AS(dominance_graph(CoinSystem({coin(0, 3, 1), coin(1, 2, 1)})), TieError);
    try {
        dominance_graph(CoinSystem({coin(0, 3, 1), coin(1, 2, 1)}));
    } catch (const TieError& e) {
        CHECK(e.first == 1);
        CHECK(e.second == 2);
    }

    Tournament t = dominance_graph(CoinSystem({coin(0, 1, 1), coin(0, 2, 1)}));
    CHECK(t.has_edge(2, 1));
}

TEST_CASE("coin file round trip and parse errors") {
    CoinSystem sys({coin(3, 6, 11, 10), coin(2, 6, 3, 2), {rat(-1, 2), rat(0), rat(1)}});
    std::stringstream buf;
    write_coins(buf, sys);
    CHECK(read_coins(buf).coins() == sys.coins());

    std::istringstream commented("# system\n3 6 11/10\n\n2 6 3/2 # second\n");
    CHECK(read_coins(commented).size() == 2);

    std::istringstream short_line("3 6\n");
    CHECK_THROWS_AS(read_coins(short_line), ParseError);
    std::istringstream bad_rat("3 6 11/0\n");
    CHECK_THROWS_AS(read_coins(bad_rat), ParseError);
    std::istringstream junk("3 six 1\n");
    CHECK_THROWS_AS(read_coins(junk), ParseError);
}
