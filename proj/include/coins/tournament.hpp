#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "coins/errors.hpp"
#include "coins/rational.hpp"

namespace coins {

/// Complete loop-free orientation on vertices {1..n}.  One bit per
/// unordered pair {i,j} with i < j, in lexicographic pair order
/// ((1,2),(1,3),...,(1,n),(2,3),...); a set bit means i->j (an ascent),
/// a clear bit means j->i (a descent).
class Tournament {
public:
    explicit Tournament(int n);

    int size() const { return n_; }
    int pair_count() const { return n_ * (n_ - 1) / 2; }

    // True iff the directed edge from->to is present.  Vertices 1-based.
    bool has_edge(int from, int to) const;
    // Orients the pair {from,to} as from->to.
    void orient(int from, int to);

    // Raw pair-bit access, k in [0, pair_count()).
    bool ascent_bit(int k) const;
    void set_ascent_bit(int k, bool value);

    static int pair_index(int n, int i, int j);  // requires 1 <= i < j <= n

    friend bool operator==(const Tournament&, const Tournament&) = default;

private:
    int n_;
    std::vector<std::uint64_t> bits_;
};

/// A directed simple cycle (c_1,...,c_m) together with its ascent and
/// descent counts.  Returned witnesses always satisfy asc >= desc.
struct CycleWitness {
    std::vector<int> vertices;
    int ascents = 0;
    int descents = 0;

    // Re-validates against t: m >= 3, vertices distinct and in range,
    // every edge (including the closing one) present with the stated
    // direction, counts correct, asc >= desc.
    bool valid_for(const Tournament& t) const;
};

// True iff t contains an ascending cycle (asc >= desc).  Cheap
// detection-only path used by the enumerators.
bool has_ascending_cycle(const Tournament& t);

// nullopt when t is semiacyclic, otherwise a concrete ascending cycle.
std::optional<CycleWitness> find_ascending_cycle(const Tournament& t);

inline bool is_semiacyclic(const Tournament& t) { return !has_ascending_cycle(t); }

// Maximum over all directed cycles of (asc(C) - desc(C)) / |C|, exact;
// nullopt when the digraph is acyclic.  t is semiacyclic iff the result
// is absent or negative.
std::optional<Rat> max_cycle_mean(const Tournament& t);

// Subtournament on `subset` (strictly increasing original labels),
// relabeled 1..k preserving relative order.  Throws BadSubsetError.
Tournament induced(const Tournament& t, std::span<const int> subset);

// Each edge u->v becomes (n+1-v)->(n+1-u); an involution preserving
// semiacyclicity.
Tournament mirror(const Tournament& t);

// Lexicographic direct product: vertex (u1,u2) gets label
// (u1-1)*n2 + u2; edge (u1,u2)->(v1,v2) iff u1->v1 in t1, or u1 = v1
// and u2->v2 in t2.
Tournament direct_product(const Tournament& t1, const Tournament& t2);

// Text format: first line `n <count>`, then n(n-1)/2 lines `i j`
// meaning i->j, one per unordered pair, any order; `#` comments allowed.
Tournament read_tournament(std::istream& in);
// Writers emit pairs in lexicographic order.
void write_tournament(std::ostream& out, const Tournament& t);

}  // namespace coins
