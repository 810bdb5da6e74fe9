#include "coins/fixtures.hpp"

namespace coins {

const char* constraint_name(ExampleConstraint which) {
    switch (which) {
        case ExampleConstraint::delta_range: return "0 < delta < 1/4";
        case ExampleConstraint::eps_range: return "0 < eps < 1/4";
        case ExampleConstraint::r_bound: return "r < 2/(1+2*delta) - 2*eps";
        case ExampleConstraint::s_bound: return "s > (2+delta)/delta - eps";
        case ExampleConstraint::r_gt_1: return "r > 1";
        case ExampleConstraint::s_gt_1: return "s > 1";
    }
    return "?";
}

void check_params(const ExampleParams& p) {
    if (!(p.delta > 0 && p.delta < rat(1, 4)))
        throw ConstraintError(ExampleConstraint::delta_range);
    if (!(p.eps > 0 && p.eps < rat(1, 4)))
        throw ConstraintError(ExampleConstraint::eps_range);
    if (!(p.r > 1)) throw ConstraintError(ExampleConstraint::r_gt_1);
    if (!(p.s > 1)) throw ConstraintError(ExampleConstraint::s_gt_1);
    // The binding pair is (1, 6, 2+2*delta) against (4, 9, 1/(r+1+2*eps)):
    // (1 + 1/(2+2*delta)) * (1 + 1/(r+1+2*eps)) > 2 solves to this bound.
    if (!(p.r < 2 / (1 + 2 * p.delta) - 2 * p.eps))
        throw ConstraintError(ExampleConstraint::r_bound);
    if (!(p.s > (2 + p.delta) / p.delta - p.eps))
        throw ConstraintError(ExampleConstraint::s_bound);
}

CoinSystem paper_example_system(const ExampleParams& p) {
    check_params(p);
    auto inv = [](const Rat& q) { return Rat(1 / q); };
    std::vector<CoinType> coins;
    coins.reserve(9);
    // Labels 1..3: winners sharing high face 6, cycle 1->2->3->1.
    coins.emplace_back(rat(3), rat(6), Rat(1 + p.delta));
    coins.emplace_back(rat(2), rat(6), rat(3, 2));
    coins.emplace_back(rat(1), rat(6), Rat(2 + 2 * p.delta));
    // Labels 4..6: losers with low face 5, cycle 4->5->6->4.
    coins.emplace_back(rat(5), rat(12), inv(p.s + 1 + 2 * p.eps));
    coins.emplace_back(rat(5), rat(11), inv(p.s + rat(1, 2)));
    coins.emplace_back(rat(5), rat(10), inv(p.s + p.eps));
    // Labels 7..9: losers with low face 4, cycle 7->8->9->7.
    coins.emplace_back(rat(4), rat(9), inv(p.r + 1 + 2 * p.eps));
    coins.emplace_back(rat(4), rat(8), inv(p.r + rat(1, 2)));
    coins.emplace_back(rat(4), rat(7), inv(p.r + p.eps));
    return CoinSystem(std::move(coins));
}

Tournament c3() {
    Tournament t(3);
    t.orient(1, 2);
    t.orient(2, 3);
    t.orient(3, 1);
    return t;
}

Tournament c3_pow(int k, int cap) {
    if (k < 1 || k > cap)
        throw BudgetError("c3_pow supports 1 <= k <= " + std::to_string(cap));
    Tournament t = c3();
    for (int i = 1; i < k; ++i) t = direct_product(t, c3());
    return t;
}

}  // namespace coins
