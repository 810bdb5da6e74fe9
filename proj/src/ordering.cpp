#include "coins/ordering.hpp"

#include <atomic>
#include <cstdint>
#include <string>
#include <thread>

namespace coins {

Tournament relabel(const Tournament& t, const Ordering& ord) {
    int n = t.size();
    Tournament out(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (t.has_edge(u, v))
                out.orient(ord.perm[u], ord.perm[v]);
            else
                out.orient(ord.perm[v], ord.perm[u]);
    return out;
}

namespace {

// Tournament on the chosen prefix, vertex chosen[k] relabeled to k+1.
Tournament prefix_tournament(const Tournament& t, const std::vector<int>& chosen) {
    int k = static_cast<int>(chosen.size());
    Tournament p(k);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (t.has_edge(chosen[a], chosen[b]))
                p.orient(a + 1, b + 1);
            else
                p.orient(b + 1, a + 1);
    return p;
}

bool extend(const Tournament& t, std::vector<int>& chosen, std::vector<bool>& used) {
    int n = t.size();
    if (static_cast<int>(chosen.size()) == n) return true;
    for (int v = 1; v <= n; ++v) {
        if (used[v]) continue;
        chosen.push_back(v);
        used[v] = true;
        // A prefix of fewer than 3 vertices has no cycle; pruning is
        // sound because induced subtournaments of semiacyclic
        // tournaments are semiacyclic.
        bool ok = chosen.size() < 3 || is_semiacyclic(prefix_tournament(t, chosen));
        if (ok && extend(t, chosen, used)) return true;
        used[v] = false;
        chosen.pop_back();
    }
    return false;
}

std::optional<Ordering> ordering_uncapped(const Tournament& t) {
    int n = t.size();
    std::vector<int> chosen;
    chosen.reserve(n);
    std::vector<bool> used(n + 1, false);
    if (!extend(t, chosen, used)) return std::nullopt;
    Ordering ord;
    ord.perm.assign(n + 1, 0);
    for (int k = 0; k < n; ++k) ord.perm[chosen[k]] = k + 1;
    return ord;
}

// v1 = vertex 1 plus every vertex whose mask bit is clear; bit b of the
// mask stands for vertex b+2.
Partition partition_from_mask(int n, std::uint64_t mask) {
    Partition part;
    part.v1.push_back(1);
    for (int v = 2; v <= n; ++v)
        if ((mask >> (v - 2)) & 1)
            part.v2.push_back(v);
        else
            part.v1.push_back(v);
    return part;
}

bool side_orderable(const Tournament& t, const std::vector<int>& side) {
    if (side.size() < 3) return true;
    return ordering_uncapped(induced(t, side)).has_value();
}

}  // namespace

std::optional<Ordering> find_semiacyclic_ordering(const Tournament& t,
                                                  const SearchLimits& limits) {
    if (t.size() > limits.ordering_cap)
        throw BudgetError("ordering search capped at n <= " +
                          std::to_string(limits.ordering_cap));
    return ordering_uncapped(t);
}

std::optional<Partition> find_winner_loser_partition(const Tournament& t,
                                                     const SearchLimits& limits) {
    int n = t.size();
    if (n > limits.partition_cap)
        throw BudgetError("partition search capped at n <= " +
                          std::to_string(limits.partition_cap));
    if (n == 0) return Partition{};

    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    auto feasible = [&](std::uint64_t mask) {
        Partition part = partition_from_mask(n, mask);
        return side_orderable(t, part.v1) && side_orderable(t, part.v2);
    };

    int workers = std::max(1, limits.workers);
    std::uint64_t found = total;
    if (workers == 1 || total < 64) {
        for (std::uint64_t mask = 0; mask < total; ++mask)
            if (feasible(mask)) {
                found = mask;
                break;
            }
    } else {
        // Disjoint contiguous ranges; each worker reports its lowest
        // feasible mask, the global minimum is scheduling-independent.
        std::atomic<std::uint64_t> best{total};
        std::vector<std::thread> pool;
        std::uint64_t chunk = (total + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            std::uint64_t lo = w * chunk;
            std::uint64_t hi = std::min(total, lo + chunk);
            pool.emplace_back([&, lo, hi] {
                for (std::uint64_t mask = lo; mask < hi; ++mask) {
                    if (mask >= best.load(std::memory_order_relaxed)) return;
                    if (feasible(mask)) {
                        std::uint64_t cur = best.load();
                        while (mask < cur && !best.compare_exchange_weak(cur, mask)) {
                        }
                        return;
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        found = best.load();
    }

    if (found == total) return std::nullopt;
    return partition_from_mask(n, found);
}

}  // namespace coins
