#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "coins/coin.hpp"
#include "coins/enumerate.hpp"
#include "coins/fixtures.hpp"
#include "coins/montecarlo.hpp"
#include "coins/ordering.hpp"
#include "coins/realize.hpp"
#include "coins/tournament.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitTie = 3;
constexpr int kExitBudget = 4;

coins::CoinSystem load_coins(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw coins::ParseError("cannot open coin file: " + path);
    return coins::read_coins(in);
}

coins::Tournament load_tournament(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw coins::ParseError("cannot open tournament file: " + path);
    return coins::read_tournament(in);
}

void print_witness(const coins::CycleWitness& w) {
    std::cout << "NOT SEMIACYCLIC\ncycle:";
    for (int v : w.vertices) std::cout << ' ' << v;
    std::cout << "\nasc: " << w.ascents << "\ndesc: " << w.descents << '\n';
}

const char* direction_label(const coins::EmpiricalOutcome& o) {
    if (o.wins_first > o.wins_second) return "first";
    if (o.wins_first < o.wins_second) return "second";
    return "tie";
}

int cmd_dominance(const std::string& path) {
    coins::CoinSystem sys = load_coins(path);
    bool flat = false;
    for (const auto& c : sys.coins()) flat = flat || c.is_flat();
    if (flat) sys = coins::normalize_system(sys);
    coins::write_tournament(std::cout, coins::dominance_graph(sys));
    return kExitOk;
}

int cmd_check(const std::string& path) {
    coins::Tournament t = load_tournament(path);
    if (auto w = coins::find_ascending_cycle(t))
        print_witness(*w);
    else
        std::cout << "SEMIACYCLIC\n";
    return kExitOk;
}

int cmd_order(const std::string& path, const coins::SearchLimits& lim) {
    coins::Tournament t = load_tournament(path);
    auto ord = coins::find_semiacyclic_ordering(t, lim);
    if (!ord) {
        std::cout << "NONE\n";
        return kExitOk;
    }
    for (int v = 1; v <= t.size(); ++v) std::cout << (v > 1 ? " " : "") << ord->perm[v];
    std::cout << '\n';
    return kExitOk;
}

int cmd_realize(const std::string& path, bool losers, bool with_point) {
    coins::Tournament t = load_tournament(path);
    try {
        if (with_point) {
            for (const coins::Rat& x : coins::linial_region_point(t))
                std::cout << coins::format_rational(x) << '\n';
            return kExitOk;
        }
        coins::CoinSystem sys = losers ? coins::realize_losers(t) : coins::realize_winners(t);
        coins::write_coins(std::cout, sys);
    } catch (const coins::NotSemiacyclicError& e) {
        print_witness(e.witness);  // a negative answer, not a failure
    }
    return kExitOk;
}

int cmd_product(const std::string& path1, const std::string& path2) {
    coins::write_tournament(std::cout,
                            coins::direct_product(load_tournament(path1), load_tournament(path2)));
    return kExitOk;
}

int cmd_count(int n, const coins::EnumLimits& lim) {
    std::cout << coins::count_semiacyclic(n, lim) << '\n';
    return kExitOk;
}

int cmd_enumerate(int n, bool codes, const coins::EnumLimits& lim) {
    coins::for_each_semiacyclic(
        n,
        [codes](const coins::Tournament& t, std::uint64_t code) {
            if (codes) {
                std::cout << code << '\n';
            } else {
                coins::write_tournament(std::cout, t);
                std::cout << '\n';
            }
        },
        lim);
    return kExitOk;
}

int cmd_partition(const std::string& path, const coins::SearchLimits& lim) {
    coins::Tournament t = load_tournament(path);
    auto part = coins::find_winner_loser_partition(t, lim);
    if (!part) {
        std::cout << "NONE\n";
        return kExitOk;
    }
    std::cout << "V1:";
    for (int v : part->v1) std::cout << ' ' << v;
    std::cout << "\nV2:";
    for (int v : part->v2) std::cout << ' ' << v;
    std::cout << '\n';
    return kExitOk;
}

int cmd_simulate(const std::string& path, std::uint64_t trials, std::uint64_t seed) {
    coins::CoinSystem sys = load_coins(path);
    coins::SimConfig cfg{trials, seed};
    for (const coins::PairSim& p : coins::simulate_system(sys, cfg))
        std::cout << p.i << ' ' << p.j << ' ' << p.counts.wins_first << ' '
                  << p.counts.wins_second << ' ' << p.counts.draws << ' '
                  << direction_label(p.counts) << '\n';
    return kExitOk;
}

struct FixtureReport {
    int passed = 0;
    int failed = 0;
    void check(const std::string& name, bool ok) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << '\n';
        (ok ? passed : failed) += 1;
    }
};

bool rejects(const coins::ExampleParams& p, coins::ExampleConstraint which) {
    try {
        coins::check_params(p);
    } catch (const coins::ConstraintError& e) {
        return e.which == which;
    }
    return false;
}

int cmd_verify_paper(bool all) {
    using coins::rat;
    FixtureReport report;
    coins::ExampleParams base{rat(1, 10), rat(1, 10), rat(7, 5), rat(22)};

    bool accepted = true;
    try {
        coins::check_params(base);
    } catch (const coins::ConstraintError&) {
        accepted = false;
    }
    report.check("reference parameters accepted", accepted);
    report.check("delta constraint rejects 3/10",
                 rejects({rat(3, 10), base.eps, base.r, base.s},
                         coins::ExampleConstraint::delta_range));
    report.check("eps constraint rejects 3/10",
                 rejects({base.delta, rat(3, 10), base.r, base.s},
                         coins::ExampleConstraint::eps_range));
    report.check("r constraint rejects 2",
                 rejects({base.delta, base.eps, rat(2), base.s},
                         coins::ExampleConstraint::r_bound));
    report.check("s constraint rejects 3/2",
                 rejects({base.delta, base.eps, base.r, rat(3, 2)},
                         coins::ExampleConstraint::s_bound));

    coins::Tournament c33 = coins::c3_pow(2);
    coins::CoinSystem sys = coins::paper_example_system(base);
    report.check("nine-coin system has dominance graph C3 x C3",
                 coins::dominance_graph(sys) == c33);

    bool split_ok = true;
    for (int i = 1; i <= 9; ++i) {
        bool winner = sys.coin(i).is_winner();
        split_ok = split_ok && (winner == (i <= 3)) && (winner || sys.coin(i).is_loser());
    }
    report.check("coins 1..3 are the winners, 4..9 the losers", split_ok);

    // Random parameter tuples across the admissible region.
    std::mt19937_64 gen(20240809);
    bool region_ok = true;
    for (int trial = 0; trial < 100 && region_ok; ++trial) {
        coins::Rat delta = rat(1 + static_cast<long>(gen() % 240), 1000);  // (0, 1/4)
        coins::Rat eps_cap = (1 - 2 * delta) / (2 * (1 + 2 * delta)) * rat(9, 10);
        if (eps_cap > rat(24, 100)) eps_cap = rat(24, 100);
        coins::Rat eps = eps_cap * rat(1 + static_cast<long>(gen() % 100), 100);
        coins::Rat r_hi = 2 / (1 + 2 * delta) - 2 * eps;
        coins::Rat r = 1 + (r_hi - 1) * rat(1 + static_cast<long>(gen() % 99), 100);
        coins::Rat s = (2 + delta) / delta - eps + rat(1 + static_cast<long>(gen() % 100), 7);
        coins::CoinSystem rand_sys = coins::paper_example_system({delta, eps, r, s});
        region_ok = coins::dominance_graph(rand_sys) == c33;
    }
    report.check("100 random in-region parameter tuples give C3 x C3", region_ok);

    report.check("c3_pow(4) has 81 vertices", coins::c3_pow(4).size() == 81);
    report.check("c3_pow(2) equals c3 x c3",
                 c33 == coins::direct_product(coins::c3(), coins::c3()));

    if (all) {
        coins::SearchLimits lim;
        report.check("C3 x C3 admits no semiacyclic ordering",
                     !coins::find_semiacyclic_ordering(c33, lim).has_value());
    }

    std::cout << report.passed << " passed, " << report.failed << " failed\n";
    return report.failed == 0 ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact nontransitive-coin tournament toolkit"};
    app.require_subcommand(1);

    coins::SearchLimits search_lim;
    coins::EnumLimits enum_lim;
    std::string coin_path, tour_path, tour_path2;
    int n = 0;
    bool losers = false, winners = false, with_point = false, codes = false, all = false;
    std::uint64_t trials = 100000, seed = 0;

    auto* dominance = app.add_subcommand("dominance", "Dominance graph of a coin file");
    dominance->add_option("coins", coin_path)->required();

    auto* check = app.add_subcommand("check", "Semiacyclicity of a tournament file");
    check->add_option("tournament", tour_path)->required();

    auto* order = app.add_subcommand("order", "Search for a semiacyclic vertex numbering");
    order->add_option("tournament", tour_path)->required();
    order->add_option("--cap", search_lim.ordering_cap, "vertex budget");

    auto* realize = app.add_subcommand("realize", "Coin system realizing a semiacyclic tournament");
    realize->add_option("tournament", tour_path)->required();
    realize->add_flag("--winners", winners);
    realize->add_flag("--losers", losers);
    realize->add_flag("--point", with_point, "print the region point instead of coins");

    auto* product = app.add_subcommand("product", "Direct product of two tournaments");
    product->add_option("t1", tour_path)->required();
    product->add_option("t2", tour_path2)->required();

    auto* count = app.add_subcommand("count", "Number of semiacyclic tournaments on n vertices");
    count->add_option("n", n)->required();
    count->add_option("--cap", enum_lim.cap, "vertex budget");
    count->add_option("--parallel", enum_lim.workers, "worker threads");

    auto* enumerate = app.add_subcommand("enumerate", "All semiacyclic tournaments on n vertices");
    enumerate->add_option("n", n)->required();
    enumerate->add_option("--cap", enum_lim.cap, "vertex budget");
    enumerate->add_flag("--codes", codes, "print integer codes instead of tournament files");

    auto* partition = app.add_subcommand("partition", "Winner/loser bipartition search");
    partition->add_option("tournament", tour_path)->required();
    partition->add_option("--cap", search_lim.partition_cap, "vertex budget");
    partition->add_option("--parallel", search_lim.workers, "worker threads");

    auto* simulate = app.add_subcommand("simulate", "Seeded Monte Carlo cross-check");
    simulate->add_option("coins", coin_path)->required();
    simulate->add_option("--trials", trials);
    simulate->add_option("--seed", seed);

    auto* verify = app.add_subcommand("verify-paper", "Run the built-in example fixtures");
    verify->add_flag("--all", all, "include the exhaustive C3 x C3 ordering search");

    CLI11_PARSE(app, argc, argv);

    try {
        if (dominance->parsed()) return cmd_dominance(coin_path);
        if (check->parsed()) return cmd_check(tour_path);
        if (order->parsed()) return cmd_order(tour_path, search_lim);
        if (realize->parsed()) {
            if (winners == losers && !with_point) {
                std::cerr << "error: choose exactly one of --winners / --losers\n";
                return kExitBadInput;
            }
            return cmd_realize(tour_path, losers, with_point);
        }
        if (product->parsed()) return cmd_product(tour_path, tour_path2);
        if (count->parsed()) return cmd_count(n, enum_lim);
        if (enumerate->parsed()) return cmd_enumerate(n, codes, enum_lim);
        if (partition->parsed()) return cmd_partition(tour_path, search_lim);
        if (simulate->parsed()) return cmd_simulate(coin_path, trials, seed);
        if (verify->parsed()) return cmd_verify_paper(all);
    } catch (const coins::TieError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitTie;
    } catch (const coins::BudgetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    return kExitBadInput;
}
