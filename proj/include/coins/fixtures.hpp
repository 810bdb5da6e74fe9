#pragma once

#include "coins/coin.hpp"
#include "coins/tournament.hpp"

namespace coins {

/// Parameters of the nine-coin representation of C3 x C3.
struct ExampleParams {
    Rat delta;
    Rat eps;
    Rat r;
    Rat s;
};

enum class ExampleConstraint {
    delta_range,  // 0 < delta < 1/4
    eps_range,    // 0 < eps < 1/4
    r_bound,      // r < 2/(1+delta) - 2*eps
    s_bound,      // s > (2+delta)/delta - eps
    r_gt_1,
    s_gt_1,
};

const char* constraint_name(ExampleConstraint which);

struct ConstraintError : std::runtime_error {
    ExampleConstraint which;
    explicit ConstraintError(ExampleConstraint w)
        : std::runtime_error(std::string("parameter constraint violated: ") +
                             constraint_name(w)),
          which(w) {}
};

// Throws ConstraintError identifying the first violated inequality.
void check_params(const ExampleParams& p);

// The nine coins representing C3 x C3, in product-label order 1..9.
// Vertex (u,v) of the product (1-based factors) has label 3(u-1)+v.
// Labels 1..3 carry the winner coins (a, 6, x) with x > 1, labels 4..6
// the loser coins (5, b, 1/(s+*)), labels 7..9 the loser coins
// (4, b, 1/(r+*)).  The dominance graph of the result is exactly
// c3_pow(2).
CoinSystem paper_example_system(const ExampleParams& p);

// The 3-cycle {1->2, 2->3, 3->1}.
Tournament c3();

// k-fold direct product of c3 with itself, 3^k vertices.  Throws
// BudgetError for k < 1 or k > cap.
Tournament c3_pow(int k, int cap = 4);

}  // namespace coins
