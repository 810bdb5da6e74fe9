#include "coins/tournament.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

namespace coins {

Tournament::Tournament(int n) : n_(n) {
    if (n < 0) throw BadSubsetError("negative vertex count");
    bits_.assign((pair_count() + 63) / 64, 0);
}

int Tournament::pair_index(int n, int i, int j) {
    return (i - 1) * (2 * n - i) / 2 + (j - i - 1);
}

bool Tournament::ascent_bit(int k) const {
    return (bits_[k >> 6] >> (k & 63)) & 1u;
}

void Tournament::set_ascent_bit(int k, bool value) {
    std::uint64_t mask = std::uint64_t{1} << (k & 63);
    if (value)
        bits_[k >> 6] |= mask;
    else
        bits_[k >> 6] &= ~mask;
}

bool Tournament::has_edge(int from, int to) const {
    if (from < to) return ascent_bit(pair_index(n_, from, to));
    return !ascent_bit(pair_index(n_, to, from));
}

void Tournament::orient(int from, int to) {
    if (from < to)
        set_ascent_bit(pair_index(n_, from, to), true);
    else
        set_ascent_bit(pair_index(n_, to, from), false);
}

bool CycleWitness::valid_for(const Tournament& t) const {
    int m = static_cast<int>(vertices.size());
    if (m < 3) return false;
    std::vector<bool> seen(t.size() + 1, false);
    for (int v : vertices) {
        if (v < 1 || v > t.size() || seen[v]) return false;
        seen[v] = true;
    }
    int asc = 0, desc = 0;
    for (int k = 0; k < m; ++k) {
        int u = vertices[k];
        int v = vertices[(k + 1) % m];
        if (!t.has_edge(u, v)) return false;
        (u < v ? asc : desc) += 1;
    }
    return asc == ascents && desc == descents && asc >= desc;
}

namespace {

// Integer edge weight for the negative-cycle reduction.  With ascents
// weighing +1 and descents -1, a simple cycle is ascending iff its
// weight is >= 0.  Scaling to w'' = -(n+1)*w - 1 turns that into
// "w''(C) < 0": for any simple cycle, w(C) >= 0 gives w''(C) <= -|C|,
// while w(C) <= -1 gives w''(C) >= n + 1 - |C| >= 1.
inline int scaled_weight(int n, int u, int v) {
    return u < v ? -(n + 2) : n;
}

// Bellman-Ford relaxation from a virtual source attached to every
// vertex with weight 0.  Returns a vertex updated on the (n+1)-th pass,
// or 0 when no negative cycle exists.  pred may be null for
// detection-only use.
int relax_to_fixpoint(const Tournament& t, std::vector<int>* pred) {
    int n = t.size();
    std::vector<int> dist(n + 1, 0);
    if (pred) pred->assign(n + 1, 0);
    for (int pass = 0; pass <= n; ++pass) {
        int updated = 0;
        for (int u = 1; u <= n; ++u) {
            for (int v = 1; v <= n; ++v) {
                if (u == v || !t.has_edge(u, v)) continue;
                int cand = dist[u] + scaled_weight(n, u, v);
                if (cand < dist[v]) {
                    dist[v] = cand;
                    if (pred) (*pred)[v] = u;
                    updated = v;
                }
            }
        }
        if (updated == 0) return 0;
        if (pass == n) return updated;
    }
    return 0;
}

}  // namespace

bool has_ascending_cycle(const Tournament& t) {
    return relax_to_fixpoint(t, nullptr) != 0;
}

std::optional<CycleWitness> find_ascending_cycle(const Tournament& t) {
    std::vector<int> pred;
    int hit = relax_to_fixpoint(t, &pred);
    if (hit == 0) return std::nullopt;

    // Walk back n steps to land on the cycle, then peel it off.
    int y = hit;
    for (int k = 0; k < t.size(); ++k) y = pred[y];
    std::vector<int> cycle;
    for (int v = y;;) {
        cycle.push_back(v);
        v = pred[v];
        if (v == y) break;
    }
    std::reverse(cycle.begin(), cycle.end());  // pred edges point backwards

    // Deterministic presentation: start at the smallest vertex.
    auto lo = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), lo, cycle.end());

    CycleWitness w;
    w.vertices = std::move(cycle);
    int m = static_cast<int>(w.vertices.size());
    for (int k = 0; k < m; ++k) {
        int u = w.vertices[k];
        int v = w.vertices[(k + 1) % m];
        (u < v ? w.ascents : w.descents) += 1;
    }
    return w;
}

namespace {

struct SccFinder {
    const Tournament& t;
    int n, timer = 0;
    std::vector<int> index, low, comp, stack;
    std::vector<bool> on_stack;
    int comp_count = 0;

    explicit SccFinder(const Tournament& tt)
        : t(tt), n(tt.size()), index(n + 1, 0), low(n + 1, 0), comp(n + 1, -1),
          on_stack(n + 1, false) {}

    void dfs(int u) {
        index[u] = low[u] = ++timer;
        stack.push_back(u);
        on_stack[u] = true;
        for (int v = 1; v <= n; ++v) {
            if (v == u || !t.has_edge(u, v)) continue;
            if (index[v] == 0) {
                dfs(v);
                low[u] = std::min(low[u], low[v]);
            } else if (on_stack[v]) {
                low[u] = std::min(low[u], index[v]);
            }
        }
        if (low[u] == index[u]) {
            for (;;) {
                int v = stack.back();
                stack.pop_back();
                on_stack[v] = false;
                comp[v] = comp_count;
                if (v == u) break;
            }
            ++comp_count;
        }
    }

    void run() {
        for (int v = 1; v <= n; ++v)
            if (index[v] == 0) dfs(v);
    }
};

constexpr int kNegInf = std::numeric_limits<int>::min() / 4;

// Karp's minimum/maximum mean cycle, maximizing variant, on one
// strongly connected component.
std::optional<Rat> karp_component(const Tournament& t, const std::vector<int>& verts) {
    int s = static_cast<int>(verts.size());
    if (s < 2) return std::nullopt;
    std::vector<int> pos(t.size() + 1, -1);
    for (int k = 0; k < s; ++k) pos[verts[k]] = k;

    struct E { int from, to, w; };
    std::vector<E> edges;
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b) {
            if (a == b) continue;
            int u = verts[a], v = verts[b];
            if (t.has_edge(u, v)) edges.push_back({a, b, u < v ? 1 : -1});
        }

    // D[k][v] = max weight over walks of length exactly k from the source.
    std::vector<std::vector<int>> D(s + 1, std::vector<int>(s, kNegInf));
    D[0][0] = 0;
    for (int k = 1; k <= s; ++k)
        for (const E& e : edges)
            if (D[k - 1][e.from] > kNegInf)
                D[k][e.to] = std::max(D[k][e.to], D[k - 1][e.from] + e.w);

    std::optional<Rat> best;
    for (int v = 0; v < s; ++v) {
        if (D[s][v] <= kNegInf) continue;
        std::optional<Rat> inner;
        for (int k = 0; k < s; ++k) {
            if (D[k][v] <= kNegInf) continue;
            Rat mean = rat(D[s][v] - D[k][v], s - k);
            if (!inner || mean < *inner) inner = mean;
        }
        if (inner && (!best || *inner > *best)) best = inner;
    }
    return best;
}

}  // namespace

std::optional<Rat> max_cycle_mean(const Tournament& t) {
    SccFinder scc(t);
    scc.run();
    std::vector<std::vector<int>> members(scc.comp_count);
    for (int v = 1; v <= t.size(); ++v) members[scc.comp[v]].push_back(v);

    std::optional<Rat> best;
    for (const auto& verts : members) {
        auto mu = karp_component(t, verts);
        if (mu && (!best || *mu > *best)) best = mu;
    }
    return best;
}

Tournament induced(const Tournament& t, std::span<const int> subset) {
    int k = static_cast<int>(subset.size());
    for (int p = 0; p < k; ++p) {
        if (subset[p] < 1 || subset[p] > t.size())
            throw BadSubsetError("subset label out of range");
        if (p > 0 && subset[p] <= subset[p - 1])
            throw BadSubsetError("subset labels must be strictly increasing");
    }
    Tournament out(k);
    for (int p = 0; p < k; ++p)
        for (int q = p + 1; q < k; ++q)
            if (t.has_edge(subset[p], subset[q]))
                out.orient(p + 1, q + 1);
            else
                out.orient(q + 1, p + 1);
    return out;
}

Tournament mirror(const Tournament& t) {
    int n = t.size();
    Tournament out(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (t.has_edge(u, v))
                out.orient(n + 1 - v, n + 1 - u);
            else
                out.orient(n + 1 - u, n + 1 - v);
    return out;
}

Tournament direct_product(const Tournament& t1, const Tournament& t2) {
    int n1 = t1.size(), n2 = t2.size();
    Tournament out(n1 * n2);
    auto label = [n2](int u1, int u2) { return (u1 - 1) * n2 + u2; };
    for (int u1 = 1; u1 <= n1; ++u1)
        for (int u2 = 1; u2 <= n2; ++u2)
            for (int v1 = 1; v1 <= n1; ++v1)
                for (int v2 = 1; v2 <= n2; ++v2) {
                    if (u1 == v1 && u2 == v2) continue;
                    bool forward = (u1 != v1) ? t1.has_edge(u1, v1) : t2.has_edge(u2, v2);
                    if (forward) out.orient(label(u1, u2), label(v1, v2));
                }
    return out;
}

namespace {

// Next content line, with `#` comments and blank lines stripped.
bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) return true;
    }
    return false;
}

}  // namespace

Tournament read_tournament(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw ParseError("empty tournament file");
    std::istringstream head(line);
    std::string key;
    int n = -1;
    if (!(head >> key >> n) || key != "n" || n < 0)
        throw ParseError("tournament file must start with 'n <count>'");

    Tournament t(n);
    std::vector<bool> seen(t.pair_count(), false);
    int pairs = 0;
    while (next_line(in, line)) {
        std::istringstream row(line);
        int i = 0, j = 0;
        std::string extra;
        if (!(row >> i >> j) || (row >> extra))
            throw ParseError("bad edge line: '" + line + "'");
        if (i < 1 || i > n || j < 1 || j > n || i == j)
            throw ParseError("edge endpoints out of range: '" + line + "'");
        int k = Tournament::pair_index(n, std::min(i, j), std::max(i, j));
        if (seen[k]) throw ParseError("pair oriented twice: '" + line + "'");
        seen[k] = true;
        ++pairs;
        t.orient(i, j);
    }
    if (pairs != t.pair_count())
        throw ParseError("expected " + std::to_string(t.pair_count()) + " edges, got " +
                         std::to_string(pairs));
    return t;
}

void write_tournament(std::ostream& out, const Tournament& t) {
    out << "n " << t.size() << '\n';
    for (int i = 1; i <= t.size(); ++i)
        for (int j = i + 1; j <= t.size(); ++j) {
            if (t.has_edge(i, j))
                out << i << ' ' << j << '\n';
            else
                out << j << ' ' << i << '\n';
        }
}

}  // namespace coins
