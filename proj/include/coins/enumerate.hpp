#pragma once

#include <cstdint>
#include <functional>

#include "coins/tournament.hpp"

namespace coins {

/// Integer encoding of a tournament: bit k of `code` is the orientation
/// bit of the k-th pair in lexicographic pair order (set = i->j).
struct TournamentCode {
    int n;
    std::uint64_t code;
};

struct EnumLimits {
    int cap = 7;      // largest n enumerated
    int workers = 1;  // counting only; totals are order-insensitive
};

TournamentCode encode(const Tournament& t);  // throws RangeError when n(n-1)/2 > 63
Tournament decode(const TournamentCode& c);  // throws RangeError on out-of-range code

// Number of semiacyclic tournaments on {1..n}; equals the region count
// of the rank-(n-1) Linial arrangement.  Throws BudgetError above the cap.
std::uint64_t count_semiacyclic(int n, const EnumLimits& limits = {});

// Visits exactly the semiacyclic tournaments, in increasing code order.
void for_each_semiacyclic(int n, const std::function<void(const Tournament&, std::uint64_t)>& fn,
                          const EnumLimits& limits = {});

}  // namespace coins
