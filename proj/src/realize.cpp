#include "coins/realize.hpp"

#include <stdexcept>

namespace coins {

namespace {

// One Bellman-Ford feasibility round for the strict system at a given
// eps.  On success fills `point` (not yet zero-sum shifted).
bool feasible_at(const Tournament& t, const Rat& eps, std::vector<Rat>& point) {
    int n = t.size();
    std::vector<Rat> dist(n + 1, Rat(0));  // virtual source at 0
    // Tournament edge u->v contributes the constraint
    //   x_v - x_u <= -(1+eps)   when u < v   (x_u > x_v + 1, tightened)
    //   x_v - x_u <=   1-eps    when u > v   (x_v < x_u + 1, tightened)
    Rat asc_w = -(1 + eps);
    Rat desc_w = 1 - eps;
    for (int pass = 0; pass <= n; ++pass) {
        bool changed = false;
        for (int u = 1; u <= n; ++u)
            for (int v = 1; v <= n; ++v) {
                if (u == v || !t.has_edge(u, v)) continue;
                Rat cand = dist[u] + (u < v ? asc_w : desc_w);
                if (cand < dist[v]) {
                    dist[v] = cand;
                    changed = true;
                }
            }
        if (!changed) {
            point.assign(dist.begin() + 1, dist.end());
            return true;
        }
        if (pass == n) return false;  // negative cycle: infeasible at this eps
    }
    return false;
}

std::vector<Rat> region_point_checked(const Tournament& t) {
    if (auto w = find_ascending_cycle(t)) throw NotSemiacyclicError(*w);
    int n = t.size();
    std::vector<Rat> point;
    // Every cycle has asc <= desc - 1, so the constraint cycle weight is
    // at least 1 - eps*|C|; eps <= 1/n always succeeds.
    for (Rat eps(1);; eps /= 2) {
        if (feasible_at(t, eps, point)) break;
        if (n > 0 && eps * (4 * n) < 1)
            throw std::logic_error("region point search failed to converge");
    }
    // Translate onto the zero-sum hyperplane; differences are preserved.
    if (n > 0) {
        Rat sum(0);
        for (const Rat& x : point) sum += x;
        Rat shift = sum / n;
        for (Rat& x : point) x -= shift;
    }
    return point;
}

}  // namespace

std::vector<Rat> linial_region_point(const Tournament& t) {
    return region_point_checked(t);
}

bool region_feasible_at(const Tournament& t, const Rat& eps) {
    std::vector<Rat> scratch;
    return feasible_at(t, eps, scratch);
}

CoinSystem realize_winners(const Tournament& t) {
    std::vector<Rat> point = region_point_checked(t);
    int n = t.size();
    const Rat c(2);
    Rat r = c;  // max_i(c - x_i); n = 0 never reaches the loop below
    for (const Rat& x : point) r = std::max(r, Rat(c - x));
    std::vector<CoinType> coins;
    coins.reserve(n);
    for (int i = 1; i <= n; ++i)
        coins.emplace_back(rat(i), rat(n + 1), Rat(point[i - 1] + r));
    return CoinSystem(std::move(coins));
}

CoinSystem realize_losers(const Tournament& t) {
    std::vector<Rat> point = region_point_checked(t);
    int n = t.size();
    const Rat c(2);
    Rat r = c;  // max_i(x_i + c)
    for (const Rat& x : point) r = std::max(r, Rat(x + c));
    std::vector<CoinType> coins;
    coins.reserve(n);
    for (int i = 1; i <= n; ++i)
        coins.emplace_back(rat(0), rat(i), Rat(1 / (r - point[i - 1])));
    return CoinSystem(std::move(coins));
}

}  // namespace coins
