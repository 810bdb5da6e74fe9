#include <doctest.h>

#include <random>

#include "coins/enumerate.hpp"
#include "coins/fixtures.hpp"
#include "coins/realize.hpp"
#include "oracles.hpp"

using namespace coins;

namespace {

Tournament transitive(int n) {
    Tournament t(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) t.orient(i, j);
    return t;
}

// The defining region inequalities, checked exactly.
void check_region_point(const Tournament& t, const std::vector<Rat>& x) {
    REQUIRE(static_cast<int>(x.size()) == t.size());
    Rat sum(0);
    for (const Rat& xi : x) sum += xi;
    CHECK(sum == 0);
    for (int i = 1; i <= t.size(); ++i)
        for (int j = i + 1; j <= t.size(); ++j) {
            if (t.has_edge(i, j))
                CHECK(x[i - 1] > x[j - 1] + 1);
            else
                CHECK(x[i - 1] < x[j - 1] + 1);
        }
}

}  // namespace

TEST_CASE("region point for the transitive 3-tournament") {
    std::vector<Rat> x = linial_region_point(transitive(3));
    check_region_point(transitive(3), x);
    CHECK(x == std::vector<Rat>{rat(2), rat(0), rat(-2)});
}

TEST_CASE("region point for the descending 3-cycle") {
    Tournament t(3);
    t.orient(2, 1);
    t.orient(3, 2);
    t.orient(1, 3);
    check_region_point(t, linial_region_point(t));
}

TEST_CASE("region point for the single vertex") {
    CHECK(linial_region_point(Tournament(1)) == std::vector<Rat>{rat(0)});
}

TEST_CASE("region points satisfy all strict inequalities, exhaustively to n=4") {
    for (int n = 1; n <= 4; ++n)
        for_each_semiacyclic(n, [](const Tournament& t, std::uint64_t) {
            check_region_point(t, linial_region_point(t));
        });
}

TEST_CASE("realization rejects non-semiacyclic input with a witness") {
    CHECK_THROWS_AS(realize_winners(c3()), NotSemiacyclicError);
    try {
        realize_losers(c3());
        FAIL("expected NotSemiacyclicError");
    } catch (const NotSemiacyclicError& e) {
        CHECK(e.witness.vertices == std::vector<int>{1, 2, 3});
        CHECK(e.witness.valid_for(c3()));
    }
}

TEST_CASE("winner realization round trips, exhaustively to n=4") {
    for (int n = 1; n <= 4; ++n)
        for_each_semiacyclic(n, [n](const Tournament& t, std::uint64_t) {
            CoinSystem sys = realize_winners(t);
            REQUIRE(sys.size() == n);
            for (int i = 1; i <= n; ++i) {
                CHECK(sys.coin(i).is_winner());
                CHECK(sys.coin(i).a == rat(i));
                CHECK(sys.coin(i).b == rat(n + 1));
            }
            CHECK(dominance_graph(sys) == t);
        });
}

TEST_CASE("loser realization round trips, exhaustively to n=4") {
    for (int n = 1; n <= 4; ++n)
        for_each_semiacyclic(n, [n](const Tournament& t, std::uint64_t) {
            CoinSystem sys = realize_losers(t);
            REQUIRE(sys.size() == n);
            for (int i = 1; i <= n; ++i) {
                CHECK(sys.coin(i).is_loser());
                CHECK(sys.coin(i).a == 0);
                CHECK(sys.coin(i).b == rat(i));
            }
            CHECK(dominance_graph(sys) == t);
        });
}

TEST_CASE("two-coin winner realization separates the odds by more than one") {
    CoinSystem sys = realize_winners(transitive(2));
    CHECK(sys.coin(1).x > sys.coin(2).x + 1);
}

TEST_CASE("feasibility is monotone in the margin") {
    std::mt19937_64 gen(808);
    int done = 0;
    while (done < 50) {
        Tournament t = oracle::random_tournament(3 + gen() % 4, gen);
        if (!is_semiacyclic(t)) continue;
        bool seen_feasible = false;
        Rat eps(2);
        for (int k = 0; k < 8; ++k, eps /= 2) {
            bool ok = region_feasible_at(t, eps);
            if (seen_feasible) CHECK(ok);  // once feasible, always feasible below
            seen_feasible = seen_feasible || ok;
        }
        CHECK(seen_feasible);
        ++done;
    }
}
