#include "bisect/coloring.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "bisect/rational.hpp"

namespace bisect {

namespace {

constexpr long long kEnumerationLimit = 10'000;
constexpr int kSamples = 256;

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > 1'000'000'000LL) return r;
    }
    return r;
}

// All k-subsets of {0..n-1} in increasing mask order, or seeded samples.
std::vector<std::uint64_t> subset_options(int n, int k, std::uint64_t seed, bool& sampled) {
    std::vector<std::uint64_t> out;
    sampled = binomial(n, k) > kEnumerationLimit;
    if (!sampled) {
        if (k == 0) return {0};
        std::uint64_t m = (std::uint64_t{1} << k) - 1;
        const std::uint64_t end = std::uint64_t{1} << n;
        while (m < end) {
            out.push_back(m);
            const std::uint64_t c = m & (~m + 1), r = m + c;
            m = (((r ^ m) >> 2) / c) | r;
        }
        return out;
    }
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int s = 0; s < kSamples; ++s) {
        std::iota(idx.begin(), idx.end(), 0);
        Rng rng(seed, static_cast<std::uint64_t>(s));
        rng.shuffle(idx.begin(), idx.end());
        std::uint64_t m = 0;
        for (int i = 0; i < k; ++i) m |= std::uint64_t{1} << idx[i];
        out.push_back(m);
    }
    return out;
}

// Lowest index among the maxima of value(i), i in [0, count).
template <class Value>
std::size_t best_index(std::size_t count, Execution ex, Value value) {
    std::vector<long long> v(count);
    if (ex == Execution::parallel) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(count); ++i) v[i] = value(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < count; ++i) v[i] = value(i);
    }
    return static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
}

std::vector<std::vector<int>> class_edges(const Graph& g, const Coloring& c) {
    std::vector<std::vector<int>> e(static_cast<std::size_t>(c.k), std::vector<int>(static_cast<std::size_t>(c.k), 0));
    for (const Edge& ed : g.edges()) {
        ++e[c.color[ed.u]][c.color[ed.v]];
        if (c.color[ed.u] != c.color[ed.v]) ++e[c.color[ed.v]][c.color[ed.u]];
    }
    return e;
}

long long split_crossing(const std::vector<std::vector<int>>& e, std::uint64_t mask) {
    long long x = 0;
    const int k = static_cast<int>(e.size());
    for (int a = 0; a < k; ++a)
        if ((mask >> a) & 1u)
            for (int b = 0; b < k; ++b)
                if (!((mask >> b) & 1u)) x += e[a][b];
    return x;
}

void recount(Coloring& c) {
    c.class_sizes.assign(static_cast<std::size_t>(c.k), 0);
    for (int x : c.color) ++c.class_sizes[x];
}

// One path move from a largest class to a smallest one. False if none exists.
bool path_move(const Graph& g, Coloring& c) {
    const int k = c.k;
    const int lo = *std::min_element(c.class_sizes.begin(), c.class_sizes.end());
    const int hi = *std::max_element(c.class_sizes.begin(), c.class_sizes.end());
    // witness[x][y]: a vertex of class x with no neighbour in class y
    std::vector<std::vector<Vertex>> witness(static_cast<std::size_t>(k), std::vector<Vertex>(static_cast<std::size_t>(k), -1));
    std::vector<int> seen(static_cast<std::size_t>(k));
    for (Vertex v = 0; v < g.order(); ++v) {
        const int x = c.color[v];
        std::fill(seen.begin(), seen.end(), 0);
        for (Vertex u : g.neighbors(v)) seen[c.color[u]] = 1;
        for (int y = 0; y < k; ++y)
            if (y != x && !seen[y] && witness[x][y] < 0) witness[x][y] = v;
    }
    // BFS backwards from the smallest classes
    std::vector<int> next(static_cast<std::size_t>(k), -2);
    std::deque<int> queue;
    for (int y = 0; y < k; ++y)
        if (c.class_sizes[y] == lo) {
            next[y] = -1;
            queue.push_back(y);
        }
    while (!queue.empty()) {
        const int y = queue.front();
        queue.pop_front();
        for (int x = 0; x < k; ++x) {
            if (next[x] != -2 || witness[x][y] < 0) continue;
            next[x] = y;
            if (c.class_sizes[x] == hi && hi >= lo + 2) {
                // shift one vertex along x -> ... -> smallest class
                std::vector<std::pair<Vertex, int>> moves;
                for (int a = x; next[a] >= 0; a = next[a]) moves.push_back({witness[a][next[a]], next[a]});
                for (auto [v, to] : moves) c.color[v] = to;
                recount(c);
                return true;
            }
            queue.push_back(x);
        }
    }
    return false;
}

// Neighbours of v in class y, stopping at two.
int neighbours_in(const Graph& g, const Coloring& c, Vertex v, int y, Vertex& only) {
    int cnt = 0;
    for (Vertex u : g.neighbors(v))
        if (c.color[u] == y) {
            only = u;
            if (++cnt == 2) break;
        }
    return cnt;
}

// Size-preserving change of the accessibility digraph: a random vertex moves
// into a class one smaller than its own, or swaps with its unique neighbour
// in another class.
bool neutral_move(const Graph& g, Coloring& c, Rng& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        const Vertex v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(g.order())));
        const int x = c.color[v];
        const int y = static_cast<int>(rng.below(static_cast<std::uint64_t>(c.k)));
        if (y == x) continue;
        Vertex u = -1;
        const int cnt = neighbours_in(g, c, v, y, u);
        if (cnt == 0 && c.class_sizes[y] + 1 == c.class_sizes[x]) {
            c.color[v] = y;
            recount(c);
            return true;
        }
        if (cnt != 1) continue;
        // u must fit into x once v has left
        int in_x = 0;
        for (Vertex t : g.neighbors(u))
            if (t != v && c.color[t] == x) ++in_x;
        if (in_x > 0) continue;
        c.color[v] = y;
        c.color[u] = x;
        return true;
    }
    return false;
}

void greedy_fill(const Graph& g, Coloring& c, const std::vector<Vertex>& order) {
    c.color.assign(static_cast<std::size_t>(g.order()), -1);
    c.class_sizes.assign(static_cast<std::size_t>(c.k), 0);
    std::vector<char> blocked(static_cast<std::size_t>(c.k));
    for (Vertex v : order) {
        std::fill(blocked.begin(), blocked.end(), 0);
        for (Vertex u : g.neighbors(v))
            if (c.color[u] >= 0) blocked[c.color[u]] = 1;
        int pick = -1;
        for (int y = 0; y < c.k; ++y)
            if (!blocked[y] && (pick < 0 || c.class_sizes[y] < c.class_sizes[pick])) pick = y;
        c.color[v] = pick;
        ++c.class_sizes[pick];
    }
}

bool brute_equitable(const Graph& g, Coloring& c) {
    const int n = g.order(), k = c.k;
    const int q = n / k, big = n % k;
    std::vector<int> size(static_cast<std::size_t>(k), 0);
    int big_used = 0;
    std::vector<int> col(static_cast<std::size_t>(n), -1);
    auto rec = [&](auto&& self, Vertex v, int used) -> bool {
        if (v == n) return true;
        for (int y = 0; y < std::min(k, used + 1); ++y) {
            if (size[y] == q + 1 || (size[y] == q && big_used == big)) continue;
            bool ok = true;
            for (Vertex u : g.neighbors(v))
                if (u < v && col[u] == y) ok = false;
            if (!ok) continue;
            const bool grows_big = size[y] == q;
            col[v] = y;
            ++size[y];
            big_used += grows_big;
            if (self(self, v + 1, std::max(used, y + 1))) return true;
            big_used -= grows_big;
            --size[y];
            col[v] = -1;
        }
        return false;
    };
    if (!rec(rec, 0, 0)) return false;
    c.color = col;
    recount(c);
    return true;
}

// Size-preserving pair swaps while one raises the crossing. Pairs are drawn
// from the 32 best single-move gains on each side. Returns the total gain.
int improve_by_swaps(const Graph& g, Bipartition& part) {
    const int n = g.order();
    constexpr std::size_t K = 32;
    int total = 0;
    std::vector<int> gain(static_cast<std::size_t>(n));
    for (int step = 0; step <= g.size(); ++step) {
        std::vector<Vertex> s1, s2;
        for (Vertex v = 0; v < n; ++v) {
            int own = 0, other = 0;
            for (Vertex u : g.neighbors(v)) (part[u] == part[v] ? own : other) += 1;
            gain[v] = own - other;
            (part[v] == Side::one ? s1 : s2).push_back(v);
        }
        auto top = [&](std::vector<Vertex>& s) {
            const std::size_t k = std::min(K, s.size());
            std::partial_sort(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k), s.end(),
                              [&](Vertex a, Vertex b) { return gain[a] != gain[b] ? gain[a] > gain[b] : a < b; });
            s.resize(k);
        };
        top(s1);
        top(s2);
        int best = 0;
        Vertex bu = -1, bv = -1;
        for (Vertex u : s1)
            for (Vertex v : s2) {
                const int d = gain[u] + gain[v] + (g.adjacent(u, v) ? 2 : 0);
                if (d > best) {
                    best = d;
                    bu = u;
                    bv = v;
                }
            }
        if (best <= 0) break;
        part[bu] = Side::two;
        part[bv] = Side::one;
        total += best;
    }
    return total;
}

}  // namespace

Json to_json(const Coloring& c) { return Json(c.color); }

bool is_proper(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.color.size()) != g.order()) return false;
    for (int x : c.color)
        if (x < 0 || x >= c.k) return false;
    for (const Edge& e : g.edges())
        if (c.color[e.u] == c.color[e.v]) return false;
    return true;
}

bool is_equitable(const Coloring& c) {
    if (c.class_sizes.empty()) return true;
    auto [lo, hi] = std::minmax_element(c.class_sizes.begin(), c.class_sizes.end());
    return *hi - *lo <= 1;
}

Coloring equitable_coloring(const Graph& g, int k, std::uint64_t seed) {
    if (k < 1 || k <= g.max_degree())
        throw PreconditionError("equitable coloring needs k > max degree (k = " + std::to_string(k) + ")");
    Coloring c;
    c.k = k;
    std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
    std::iota(order.begin(), order.end(), 0);
    const int budget = 50 * (g.order() + k) + 1000;
    for (int restart = 0; restart < 32; ++restart) {
        Rng rng(seed, static_cast<std::uint64_t>(restart));
        if (restart > 0) rng.shuffle(order.begin(), order.end());
        greedy_fill(g, c, order);
        for (int step = 0; step < budget && !is_equitable(c); ++step)
            if (!path_move(g, c)) neutral_move(g, c, rng);
        if (is_equitable(c)) break;
    }
    if (!is_equitable(c) && g.order() <= 12) brute_equitable(g, c);
    if (!is_equitable(c) || !is_proper(g, c)) throw std::runtime_error("equitable coloring search failed");
    return c;
}

Rational degree_cut_fraction(int r) {
    if (r < 1) throw std::invalid_argument("r must be positive");
    return r % 2 ? Rational(r + 1, 2 * r) : Rational(r + 2, 2 * (r + 1));
}

ClassSplit chromatic_split(const Graph& g, const Coloring& c, Execution ex, std::uint64_t seed) {
    std::vector<int> used;
    for (int y = 0; y < c.k; ++y)
        if (c.class_sizes[y] > 0) used.push_back(y);
    const int k = static_cast<int>(used.size());
    if (k > 63) throw std::invalid_argument("chromatic_split supports at most 63 classes");
    std::vector<int> local(static_cast<std::size_t>(c.k), -1);
    for (int i = 0; i < k; ++i) local[used[i]] = i;
    Coloring lc;
    lc.k = k;
    lc.color.resize(c.color.size());
    for (std::size_t v = 0; v < c.color.size(); ++v) lc.color[v] = local[c.color[v]];
    recount(lc);
    const auto e = class_edges(g, lc);

    ClassSplit out;
    const std::vector<std::uint64_t> opts = subset_options(k, k / 2, seed, out.sampled);
    const std::size_t best = best_index(opts.size(), ex, [&](std::size_t i) { return split_crossing(e, opts[i]); });
    out.options = static_cast<long long>(opts.size());
    out.part = Bipartition(g.order(), Side::two);
    for (Vertex v = 0; v < g.order(); ++v)
        if ((opts[best] >> lc.color[v]) & 1u) out.part[v] = Side::one;
    out.crossing = cut_stats(g, out.part).crossing;
    const long long m = g.size();
    if (k <= 1) out.bound = Rational(0);
    else out.bound = k % 2 ? Rational((k + 1) * m, 2 * k) : Rational(k * m, 2 * (k - 1));
    return out;
}

ColoringBisection bounded_degree_bisection(const Graph& g, int r, Execution ex, std::uint64_t seed) {
    if (r < 1) throw PreconditionError("r must be positive");
    if (g.max_degree() > r)
        throw PreconditionError("maximum degree " + std::to_string(g.max_degree()) + " exceeds r = " + std::to_string(r));
    ColoringBisection out;
    out.coloring = equitable_coloring(g, r + 1, seed);
    const Coloring& c = out.coloring;
    const int K = r + 1;
    const int n = g.order();

    if (r % 2 == 1) {
        const auto e = class_edges(g, c);
        const std::vector<std::uint64_t> opts = subset_options(K, K / 2, seed, out.sampled);
        const std::size_t best = best_index(opts.size(), ex, [&](std::size_t i) { return split_crossing(e, opts[i]); });
        out.options = static_cast<long long>(opts.size());
        out.part = Bipartition(n, Side::two);
        for (Vertex v = 0; v < n; ++v)
            if ((opts[best] >> c.color[v]) & 1u) out.part[v] = Side::one;
    } else {
        // options: special class k, then r/2 of the remaining r classes
        bool sampled = false;
        const std::vector<std::uint64_t> sub = subset_options(r, r / 2, seed, sampled);
        out.sampled = sampled;
        struct Option {
            int special;
            std::uint64_t mask;  // over all K classes, special excluded
        };
        std::vector<Option> opts;
        for (int k = 0; k < K; ++k)
            for (std::uint64_t s : sub) {
                std::uint64_t m = 0;
                for (int b = 0, cls = 0; cls < K; ++cls) {
                    if (cls == k) continue;
                    if ((s >> b) & 1u) m |= std::uint64_t{1} << cls;
                    ++b;
                }
                opts.push_back({k, m});
            }
        std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(K));
        for (Vertex v = 0; v < n; ++v) members[c.color[v]].push_back(v);
        const auto e = class_edges(g, c);

        // crossing and placement of the special class for one option and parity
        auto place = [&](const Option& o, bool extra_to_one, std::vector<Vertex>* ones) {
            const std::uint64_t full = o.mask;
            long long x = 0;  // edges between the fixed classes
            for (int a = 0; a < K; ++a)
                for (int b = 0; b < K; ++b)
                    if (a != o.special && b != o.special && ((full >> a) & 1u) && !((full >> b) & 1u)) x += e[a][b];
            const auto& w = members[o.special];
            std::vector<std::pair<long long, Vertex>> gain;  // to side 1: deg into side 2 minus deg into side 1
            long long base = 0;
            for (Vertex v : w) {
                long long to1 = 0, to2 = 0;
                for (Vertex u : g.neighbors(v)) ((full >> c.color[u]) & 1u ? to1 : to2) += 1;
                base += to1;  // v on side 2 crosses to side 1
                gain.push_back({to2 - to1, v});
            }
            std::stable_sort(gain.begin(), gain.end(),
                             [](const auto& a, const auto& b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });
            const std::size_t take = extra_to_one ? (w.size() + 1) / 2 : w.size() / 2;
            for (std::size_t i = 0; i < take; ++i) base += gain[i].first;
            if (ones)
                for (std::size_t i = 0; i < take; ++i) ones->push_back(gain[i].second);
            return x + base;
        };
        const std::size_t best = best_index(2 * opts.size(), ex, [&](std::size_t i) {
            return place(opts[i / 2], i % 2 == 0, nullptr);
        });
        out.options = static_cast<long long>(opts.size());
        const Option& o = opts[best / 2];
        out.special_class = o.special;
        std::vector<Vertex> ones;
        place(o, best % 2 == 0, &ones);
        out.part = Bipartition(n, Side::two);
        for (Vertex v = 0; v < n; ++v)
            if (c.color[v] != o.special && ((o.mask >> c.color[v]) & 1u)) out.part[v] = Side::one;
        for (Vertex v : ones) out.part[v] = Side::one;
    }

    const int before = cut_stats(g, out.part).crossing;
    const int polished = improve_by_swaps(g, out.part);
    const CutStats st = cut_stats(g, out.part);
    out.gap = std::abs(st.size1 - st.size2);
    auto& rep = out.report;
    rep.theorem = "bounded-degree";
    rep.bound = degree_cut_fraction(r) * Rational(g.size());
    rep.achieved = st.crossing;
    rep.sense = Sense::at_least;
    rep.satisfied = Rational(st.crossing) >= rep.bound && out.gap <= r / 2 + 1;
    rep.params = Json{{"r", r},
                      {"gap", out.gap},
                      {"gap_bound", r / 2 + 1},
                      {"options", out.options},
                      {"sampled", out.sampled},
                      {"special_class", out.special_class},
                      {"crossing_before_swaps", before},
                      {"swap_gain", polished},
                      {"class_sizes", c.class_sizes}};
    return out;
}

BalanceResult balance_to_bisection(const Graph& g, Bipartition part, int r) {
    if (part.order() != g.order()) throw std::invalid_argument("partition order does not match the graph");
    if (r < 1) throw std::invalid_argument("r must be positive");
    BalanceResult out;
    out.previous = cut_stats(g, part).crossing;
    const int n = g.order();
    for (;;) {
        const int s1 = part.count(Side::one), s2 = n - s1;
        if (std::abs(s1 - s2) <= 1) break;
        const Side big = s1 > s2 ? Side::one : Side::two;
        Vertex pick = -1;
        int pick_delta = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (part[v] != big) continue;
            int own = 0, other = 0;
            for (Vertex u : g.neighbors(v)) (part[u] == big ? own : other) += 1;
            if (pick < 0 || own - other > pick_delta) {
                pick = v;
                pick_delta = own - other;
            }
        }
        part[pick] = opposite(big);
        ++out.moved;
    }
    out.part = std::move(part);
    const int crossing = cut_stats(g, out.part).crossing;
    auto& rep = out.report;
    rep.theorem = "balance";
    const Rational slack = r % 2 ? Rational(r * (r + 1), 4) : Rational(r * (r + 2), 4);
    rep.bound = degree_cut_fraction(r) * Rational(g.size()) - slack;
    rep.achieved = crossing;
    rep.sense = Sense::at_least;
    rep.satisfied = Rational(crossing) >= rep.bound;
    rep.params = Json{{"r", r},
                      {"previous", out.previous},
                      {"moved", out.moved},
                      {"drop_within_degree_bound", out.previous - crossing <= r * out.moved && g.max_degree() <= r}};
    return out;
}

RegularBisection regular_bisection(const Graph& g, Execution ex) {
    const int n = g.order();
    const int r = n == 0 ? 0 : g.max_degree();
    if (n > 0 && g.min_degree() != r) throw PreconditionError("graph is not regular");
    RegularBisection out;
    out.r = r;
    Bipartition part(n);
    if (r > 0) part = chromatic_split(g, equitable_coloring(g, r + 1), ex).part;

    auto crossing_of = [&](const Bipartition& p) { return cut_stats(g, p).crossing; };
    int cut = crossing_of(part);
    bool forced_phase = false;
    for (;;) {
        const int s1 = part.count(Side::one), s2 = n - s1;
        if (std::abs(s1 - s2) <= 1) break;
        const Side big = s1 > s2 ? Side::one : Side::two;
        Vertex pick = -1;
        int best = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (part[v] != big) continue;
            int own = 0, other = 0;
            for (Vertex u : g.neighbors(v)) (part[u] == big ? own : other) += 1;
            if (pick < 0 || own - other > best) {
                pick = v;
                best = own - other;
            }
        }
        if (best < 0) forced_phase = true;  // every larger-side vertex has most neighbours across
        part[pick] = opposite(big);
        const int now = crossing_of(part);
        if (forced_phase) {
            ++out.forced_moves;
        } else {
            ++out.free_moves;
            if (now < cut) out.monotone = false;
        }
        cut = now;
    }
    const int before = cut;
    const int polished = improve_by_swaps(g, part);
    cut = crossing_of(part);
    out.part = std::move(part);
    if (out.forced_moves > 0) out.certificate = static_cast<long long>((n + 1) / 2) * (r / 2 + 1);

    auto& rep = out.report;
    rep.theorem = "regular";
    rep.bound = r == 0 ? Rational(0) : degree_cut_fraction(r) * Rational(g.size());
    rep.achieved = cut;
    rep.sense = Sense::at_least;
    rep.satisfied = is_bisection(g, out.part) && Rational(cut) >= rep.bound;
    rep.params = Json{{"r", r},
                      {"free_moves", out.free_moves},
                      {"forced_moves", out.forced_moves},
                      {"monotone", out.monotone},
                      {"certificate", out.certificate},
                      {"crossing_before_swaps", before},
                      {"swap_gain", polished}};
    return out;
}

}  // namespace bisect
