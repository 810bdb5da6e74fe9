#pragma once

#include <optional>
#include <vector>

#include "coins/tournament.hpp"

namespace coins {

/// Vertex relabeling: perm[v] is the new label of original vertex v
/// (1-based, slot 0 unused).
struct Ordering {
    std::vector<int> perm;
    int label_of(int v) const { return perm[v]; }
};

// Applies an ordering: edge u->v becomes perm[u]->perm[v].
Tournament relabel(const Tournament& t, const Ordering& ord);

struct Partition {
    std::vector<int> v1;  // increasing original labels
    std::vector<int> v2;
};

struct SearchLimits {
    int ordering_cap = 10;
    int partition_cap = 12;
    int workers = 1;  // bipartition scan only; result is scheduling-independent
};

// Exhaustive branch-and-bound over label assignments: label k+1 goes to
// the lowest-indexed unassigned vertex first, and a partial assignment
// is pruned when the relabeled prefix is not semiacyclic.  Returns the
// first ordering in this enumeration whose relabeled tournament is
// semiacyclic, or nullopt when none exists.  Throws BudgetError when
// t.size() exceeds the cap.
std::optional<Ordering> find_semiacyclic_ordering(const Tournament& t,
                                                  const SearchLimits& limits = {});

// Scans the 2^(n-1) bipartitions (vertex 1 pinned to v1, masks in
// increasing order) for a disjoint split whose two induced
// subtournaments both admit semiacyclic orderings.  A nullopt answer
// certifies that t is not the dominance graph of any coin system; a
// positive answer is necessary-condition evidence only.  The lowest
// feasible mask wins regardless of worker count.
std::optional<Partition> find_winner_loser_partition(const Tournament& t,
                                                     const SearchLimits& limits = {});

}  // namespace coins
