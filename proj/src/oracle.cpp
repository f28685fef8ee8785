#include "bisect/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <vector>

#include "bisect/matching.hpp"

namespace bisect {

OracleTooLarge::OracleTooLarge(const char* what, int n, int limit)
    : std::invalid_argument(std::string(what) + ": n=" + std::to_string(n) + " exceeds the oracle limit " +
                            std::to_string(limit)) {}

namespace {

using Mask = std::uint32_t;

std::vector<Mask> masks_of(const Graph& g) {
    std::vector<Mask> nb(static_cast<std::size_t>(g.order()), 0);
    for (const auto& e : g.edges()) {
        nb[e.u] |= Mask{1} << e.v;
        nb[e.v] |= Mask{1} << e.u;
    }
    return nb;
}

int inside(const std::vector<Mask>& nb, Mask s) {
    int twice = 0;
    for (Mask rest = s; rest; rest &= rest - 1) twice += std::popcount(nb[std::countr_zero(rest)] & s);
    return twice / 2;
}

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// idx-th k-subset of {0..n-1} in colex order, which is increasing mask order
Mask unrank(long long idx, int k, int n) {
    Mask m = 0;
    int c = n - 1;
    for (int i = k; i >= 1; --i) {
        while (binom(c, i) > idx) --c;
        m |= Mask{1} << c;
        idx -= binom(c, i);
        --c;
    }
    return m;
}

Mask next_combination(Mask v) {
    Mask t = v | (v - 1);
    return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

struct Best {
    long long value;
    Mask mask;
    bool set = false;
};

// Scans `count` masks starting at rank `first`; `score` maps a mask to a value
// where larger is better. Keeps the first (smallest) mask on ties.
template <class Score>
Best scan_combinations(int n, int k, long long first, long long count, Score score) {
    Best b{0, 0, false};
    if (count <= 0) return b;
    Mask m = unrank(first, k, n);
    for (long long i = 0; i < count; ++i) {
        long long v = score(m);
        if (!b.set || v > b.value) b = {v, m, true};
        if (i + 1 < count) m = k == 0 ? 0 : next_combination(m);
    }
    return b;
}

template <class Score>
Best best_over_combinations(int n, int k, Execution ex, Score score) {
    const long long total = binom(n, k);
    const int chunks = ex == Execution::parallel ? 64 : 1;
    std::vector<Best> part(static_cast<std::size_t>(chunks));
    const long long per = (total + chunks - 1) / chunks;
#pragma omp parallel for schedule(dynamic) if (ex == Execution::parallel)
    for (int c = 0; c < chunks; ++c) {
        long long first = per * c;
        long long count = std::min(per, total - first);
        part[c] = scan_combinations(n, k, first, count, score);
    }
    Best b{0, 0, false};
    for (const auto& p : part)
        if (p.set && (!b.set || p.value > b.value)) b = p;
    return b;
}

Bipartition from_mask(int n, Mask s) {
    Bipartition p(n, Side::two);
    for (int v = 0; v < n; ++v)
        if ((s >> v) & 1U) p[v] = Side::one;
    return p;
}

void require(const Graph& g, int limit, const char* what) {
    if (g.order() > limit) throw OracleTooLarge(what, g.order(), limit);
}

}  // namespace

OracleResult brute_max_bisection(const Graph& g, Execution ex) {
    require(g, kBisectionOracleLimit, "brute_max_bisection");
    const int n = g.order();
    const int k = (n + 1) / 2;
    const auto nb = masks_of(g);
    const int m = g.size();
    Mask all = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
    Best b = best_over_combinations(n, k, ex, [&](Mask s) -> long long {
        return m - inside(nb, s) - inside(nb, all & ~s);
    });
    return {b.value, from_mask(n, b.mask), binom(n, k)};
}

OracleResult brute_judicious_optimum(const Graph& g, Execution ex) {
    require(g, kBisectionOracleLimit, "brute_judicious_optimum");
    const int n = g.order();
    const int k = (n + 1) / 2;
    const auto nb = masks_of(g);
    Mask all = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
    Best b = best_over_combinations(n, k, ex, [&](Mask s) -> long long {
        return -static_cast<long long>(std::max(inside(nb, s), inside(nb, all & ~s)));
    });
    return {-b.value, from_mask(n, b.mask), binom(n, k)};
}

OracleResult brute_max_cut(const Graph& g, Execution ex) {
    require(g, kCutOracleLimit, "brute_max_cut");
    const int n = g.order();
    if (n == 0) return {0, Bipartition(0), 1};
    const auto nb = masks_of(g);
    const int m = g.size();
    const Mask all = static_cast<Mask>((std::uint64_t{1} << n) - 1);
    const long long total = 1LL << (n - 1);  // vertex n-1 stays on side 2
    const int chunks = ex == Execution::parallel ? 64 : 1;
    const long long per = (total + chunks - 1) / chunks;
    std::vector<Best> part(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(dynamic) if (ex == Execution::parallel)
    for (int c = 0; c < chunks; ++c) {
        Best b{0, 0, false};
        long long end = std::min(total, per * (c + 1));
        for (long long s = per * c; s < end; ++s) {
            Mask mask = static_cast<Mask>(s);
            long long v = m - inside(nb, mask) - inside(nb, all & ~mask);
            if (!b.set || v > b.value) b = {v, mask, true};
        }
        part[c] = b;
    }
    Best b{0, 0, false};
    for (const auto& p : part)
        if (p.set && (!b.set || p.value > b.value)) b = p;
    return {b.value, from_mask(n, b.mask), total};
}

namespace {

// Calls visit(pairs) for every perfect matching of the vertices in `mask`.
void each_perfect_matching(const std::vector<Mask>& nb, Mask mask, std::vector<std::pair<int, int>>& cur,
                           const std::function<void(const std::vector<std::pair<int, int>>&)>& visit) {
    if (mask == 0) {
        visit(cur);
        return;
    }
    int v = std::countr_zero(mask);
    Mask rest = mask & ~(Mask{1} << v);
    for (Mask cand = nb[v] & rest; cand; cand &= cand - 1) {
        int u = std::countr_zero(cand);
        cur.emplace_back(v, u);
        each_perfect_matching(nb, rest & ~(Mask{1} << u), cur, visit);
        cur.pop_back();
    }
}

}  // namespace

bool brute_tight_check(const Graph& g, std::span<const Vertex> component) {
    if (component.size() > 12) throw OracleTooLarge("brute_tight_check", static_cast<int>(component.size()), 12);
    if (!is_connected_set(g, component)) throw GraphError("component is not connected");
    const int k = static_cast<int>(component.size());
    std::vector<Mask> nb(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && g.adjacent(component[i], component[j])) nb[i] |= Mask{1} << j;
    const Mask all = (Mask{1} << k) - 1;
    for (int v = 0; v < k; ++v) {
        bool any = false, bad = false;
        std::vector<std::pair<int, int>> cur;
        each_perfect_matching(nb, all & ~(Mask{1} << v), cur, [&](const auto& pm) {
            any = true;
            for (auto [a, b] : pm) {
                bool ea = (nb[v] >> a) & 1U, eb = (nb[v] >> b) & 1U;
                if (ea != eb) bad = true;
            }
        });
        if (!any || bad) return false;
    }
    return true;
}

int brute_max_matching(const Graph& g) {
    if (g.order() > 20) throw OracleTooLarge("brute_max_matching", g.order(), 20);
    const int n = g.order();
    const auto nb = masks_of(g);
    std::vector<signed char> memo(std::size_t{1} << n, -1);
    std::function<int(Mask)> f = [&](Mask s) -> int {
        if (s == 0) return 0;
        if (memo[s] >= 0) return memo[s];
        int v = std::countr_zero(s);
        Mask rest = s & ~(Mask{1} << v);
        int best = f(rest);
        for (Mask c = nb[v] & rest; c; c &= c - 1) {
            int u = std::countr_zero(c);
            best = std::max(best, 1 + f(rest & ~(Mask{1} << u)));
        }
        memo[s] = static_cast<signed char>(best);
        return best;
    };
    return f(n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1));
}

int brute_max_free_count(const Graph& g) {
    if (g.order() > 14) throw OracleTooLarge("brute_max_free_count", g.order(), 14);
    const int n = g.order();
    const int target = brute_max_matching(g);
    const auto nb = masks_of(g);
    int best = -1;
    Matching m(n);
    // enumerate maximum matchings: each vertex is either skipped or matched upward
    std::function<void(Mask, int, int)> rec = [&](Mask s, int size, int skipped) {
        if (s == 0) {
            if (size == target) best = std::max(best, compute_free_info(g, m).free_count());
            return;
        }
        // prune: remaining vertices cannot reach the target
        if (size + std::popcount(s) / 2 < target) return;
        int v = std::countr_zero(s);
        Mask rest = s & ~(Mask{1} << v);
        for (Mask c = nb[v] & rest; c; c &= c - 1) {
            int u = std::countr_zero(c);
            m.mate[v] = u;
            m.mate[u] = v;
            rec(rest & ~(Mask{1} << u), size + 1, skipped);
            m.mate[v] = m.mate[u] = -1;
        }
        rec(rest, size, skipped + 1);
    };
    rec(n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1), 0, 0);
    return best;
}

}  // namespace bisect
