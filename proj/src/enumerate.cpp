#include "coins/enumerate.hpp"

#include <string>
#include <thread>
#include <vector>

namespace coins {

TournamentCode encode(const Tournament& t) {
    int pc = t.pair_count();
    if (pc > 63) throw RangeError("tournament too large to encode in 64 bits");
    std::uint64_t code = 0;
    for (int k = 0; k < pc; ++k)
        if (t.ascent_bit(k)) code |= std::uint64_t{1} << k;
    return {t.size(), code};
}

Tournament decode(const TournamentCode& c) {
    Tournament t(c.n);
    int pc = t.pair_count();
    if (pc > 63 || c.code >= (std::uint64_t{1} << pc))
        throw RangeError("code out of range for n = " + std::to_string(c.n));
    for (int k = 0; k < pc; ++k)
        t.set_ascent_bit(k, (c.code >> k) & 1);
    return t;
}

namespace {

void check_cap(int n, const EnumLimits& limits) {
    if (n < 1 || n > limits.cap)
        throw BudgetError("enumeration capped at 1 <= n <= " + std::to_string(limits.cap));
}

std::uint64_t count_range(int n, std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t count = 0;
    for (std::uint64_t code = lo; code < hi; ++code)
        if (is_semiacyclic(decode({n, code}))) ++count;
    return count;
}

}  // namespace

std::uint64_t count_semiacyclic(int n, const EnumLimits& limits) {
    check_cap(n, limits);
    std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    int workers = std::max(1, limits.workers);
    if (workers == 1 || total < 1024) return count_range(n, 0, total);

    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> pool;
    std::uint64_t chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        std::uint64_t lo = w * chunk;
        std::uint64_t hi = std::min(total, lo + chunk);
        pool.emplace_back([&partial, w, n, lo, hi] { partial[w] = count_range(n, lo, hi); });
    }
    for (auto& th : pool) th.join();
    std::uint64_t sum = 0;
    for (std::uint64_t p : partial) sum += p;
    return sum;
}

void for_each_semiacyclic(int n, const std::function<void(const Tournament&, std::uint64_t)>& fn,
                          const EnumLimits& limits) {
    check_cap(n, limits);
    std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < total; ++code) {
        Tournament t = decode({n, code});
        if (is_semiacyclic(t)) fn(t, code);
    }
}

}  // namespace coins
