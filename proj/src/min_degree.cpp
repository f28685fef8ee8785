#include "bisect/min_degree.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <stdexcept>

#include "bisect/bounds.hpp"
#include "bisect/greedy_bisect.hpp"
#include "bisect/random_bisect.hpp"
#include "bisect/tight.hpp"

namespace bisect {

namespace {

using i128 = __int128;

constexpr i128 kSaturate = static_cast<i128>(1) << 100;

i128 sat_pow(i128 base, std::int64_t e) {
    i128 r = 1;
    for (std::int64_t i = 0; i < e; ++i) {
        r *= base;
        if (r > kSaturate) return kSaturate;
    }
    return r;
}

struct HalfSums {
    std::vector<long long> sum;
    std::vector<std::uint32_t> mask;
};

HalfSums enumerate_half(std::span<const long long> w) {
    const std::size_t k = w.size();
    HalfSums h;
    h.sum.resize(std::size_t{1} << k);
    h.mask.resize(h.sum.size());
    for (std::uint32_t s = 0; s < h.sum.size(); ++s) {
        h.mask[s] = s;
        if (s == 0) continue;
        const int low = __builtin_ctz(s);
        h.sum[s] = h.sum[s & (s - 1)] + w[static_cast<std::size_t>(low)];
    }
    return h;
}

long long total_of(std::span<const long long> w) {
    long long t = 0;
    for (long long x : w) {
        if (x < 0) throw std::invalid_argument("weights must be non-negative");
        t += x;
    }
    return t;
}

// Smallest subset sum >= goal, with a subset reaching it (bits of `items`).
WeightSplit split_dp(std::span<const long long> w, long long total) {
    const long long goal = (total + 1) / 2;
    std::vector<int> from(static_cast<std::size_t>(total) + 1, -1);
    std::vector<char> reach(static_cast<std::size_t>(total) + 1, 0);
    reach[0] = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0) continue;
        for (long long s = total; s >= w[i]; --s)
            if (!reach[s] && reach[s - w[i]]) {
                reach[s] = 1;
                from[s] = static_cast<int>(i);
            }
    }
    long long best = goal;
    while (!reach[best]) ++best;
    WeightSplit out;
    out.first.assign(w.size(), false);
    for (long long s = best; s > 0; s -= w[static_cast<std::size_t>(from[s])]) out.first[from[s]] = true;
    out.heavy = best;
    out.light = total - best;
    return out;
}

WeightSplit split_mitm(std::span<const long long> w, long long total) {
    const long long goal = (total + 1) / 2;
    const std::size_t k1 = w.size() / 2;
    HalfSums left = enumerate_half(w.subspan(0, k1));
    HalfSums right = enumerate_half(w.subspan(k1));
    std::vector<std::uint32_t> order(right.sum.size());
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return right.sum[a] < right.sum[b]; });
    long long best = std::numeric_limits<long long>::max();
    std::uint32_t bl = 0, br = 0;
    for (std::uint32_t a = 0; a < left.sum.size(); ++a) {
        const long long need = goal - left.sum[a];
        auto it = std::lower_bound(order.begin(), order.end(), need,
                                   [&](std::uint32_t idx, long long v) { return right.sum[idx] < v; });
        if (it == order.end()) continue;
        const long long s = left.sum[a] + right.sum[*it];
        if (s < best) {
            best = s;
            bl = a;
            br = *it;
        }
    }
    WeightSplit out;
    out.first.assign(w.size(), false);
    for (std::size_t i = 0; i < k1; ++i) out.first[i] = (bl >> i) & 1u;
    for (std::size_t i = k1; i < w.size(); ++i) out.first[i] = (br >> (i - k1)) & 1u;
    out.heavy = best;
    out.light = total - best;
    return out;
}

// Is some subset sum strictly inside (lo, hi)?
bool sum_strictly_between(std::span<const long long> w, long long lo, long long hi) {
    if (hi - lo < 2) return false;
    const long long total = total_of(w);
    if (total <= 200'000'000) {
        std::vector<std::uint64_t> bits(static_cast<std::size_t>(total / 64 + 1), 0);
        bits[0] = 1;
        for (long long x : w) {
            if (x == 0) continue;
            const std::size_t words = static_cast<std::size_t>(x / 64);
            const int shift = static_cast<int>(x % 64);
            for (std::size_t i = bits.size(); i-- > words;) {
                std::uint64_t v = bits[i - words] << shift;
                if (shift != 0 && i - words >= 1) v |= bits[i - words - 1] >> (64 - shift);
                bits[i] |= v;
            }
        }
        for (long long s = lo + 1; s < hi && s <= total; ++s)
            if ((bits[static_cast<std::size_t>(s / 64)] >> (s % 64)) & 1u) return true;
        return false;
    }
    if (w.size() > 40) throw std::invalid_argument("subset-sum check needs total <= 2e8 or at most 40 items");
    const std::size_t k1 = w.size() / 2;
    HalfSums left = enumerate_half(w.subspan(0, k1));
    HalfSums right = enumerate_half(w.subspan(k1));
    std::sort(right.sum.begin(), right.sum.end());
    for (long long a : left.sum) {
        auto it = std::upper_bound(right.sum.begin(), right.sum.end(), lo - a);
        if (it != right.sum.end() && a + *it < hi) return true;
    }
    return false;
}

}  // namespace

std::vector<Vertex> high_degree_set(const Graph& g, const Rational& exponent) {
    if (exponent < Rational(0)) throw std::invalid_argument("exponent must be non-negative");
    const std::int64_t p = exponent.numerator(), q = exponent.denominator();
    const i128 rhs = sat_pow(g.order(), p);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (sat_pow(g.degree(v), q) >= rhs) out.push_back(v);
    return out;
}

WeightSplit min_gap_split(std::span<const long long> weights, long long dp_limit) {
    const long long total = total_of(weights);
    if (total <= dp_limit) return split_dp(weights, total);
    if (weights.size() <= 40) return split_mitm(weights, total);
    throw std::invalid_argument("optimal split: more than 40 items with total weight above the DP limit");
}

long long min_gap_brute(std::span<const long long> weights) {
    if (weights.size() > 24) throw std::invalid_argument("min_gap_brute: at most 24 items");
    const long long total = total_of(weights);
    long long best = total;
    for (std::uint32_t s = 0; s < (1u << weights.size()); ++s) {
        long long a = 0;
        for (std::size_t i = 0; i < weights.size(); ++i)
            if ((s >> i) & 1u) a += weights[i];
        best = std::min(best, std::abs(total - 2 * a));
    }
    return best;
}

HighDegreeSplit make_split(const Graph& g, std::span<const Vertex> a1, std::span<const Vertex> a2) {
    const int n = g.order();
    std::vector<char> label(static_cast<std::size_t>(n), 0);
    for (auto [set, tag] : {std::pair{a1, 1}, std::pair{a2, 2}})
        for (Vertex v : set) {
            if (v < 0 || v >= n) throw std::invalid_argument("split vertex out of range");
            if (label[v] != 0) throw std::invalid_argument("A1 and A2 must be disjoint");
            label[v] = static_cast<char>(tag);
        }
    HighDegreeSplit s;
    s.A1.assign(a1.begin(), a1.end());
    s.A2.assign(a2.begin(), a2.end());
    std::sort(s.A1.begin(), s.A1.end());
    std::sort(s.A2.begin(), s.A2.end());
    for (Vertex v = 0; v < n; ++v)
        if (label[v] != 0) s.A.push_back(v);
    s.nprime = n - static_cast<int>(s.A.size());
    std::vector<long long> abar(static_cast<std::size_t>(n), 0);
    for (const Edge& e : g.edges()) {
        const int a = label[e.u], b = label[e.v];
        if (a == 0 && b == 0) ++s.m2;
        else if (a != 0 && b != 0) ++s.eA;
        else {
            ++s.m1;
            ++abar[a != 0 ? e.u : e.v];
            (a == 1 || b == 1 ? s.e1 : s.e2) += 1;
        }
    }
    if (s.e1 < s.e2) throw std::invalid_argument("A1 must carry the larger V\\A-degree sum");
    s.theta = s.e1 - s.e2;
    for (Vertex v : s.A) {
        s.abar_degree.push_back(abar[v]);
        if (abar[v] >= s.theta) ++s.alpha;
        else s.rho += abar[v];
    }
    return s;
}

HighDegreeSplit optimal_split(const Graph& g, std::span<const Vertex> A) {
    std::vector<Vertex> sorted(A.begin(), A.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<char> in_a(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : sorted) in_a[v] = 1;
    std::vector<long long> w;
    for (Vertex v : sorted) {
        long long d = 0;
        for (Vertex u : g.neighbors(v)) d += !in_a[u];
        w.push_back(d);
    }
    const WeightSplit ws = min_gap_split(w);
    std::vector<Vertex> a1, a2;
    for (std::size_t i = 0; i < sorted.size(); ++i) (ws.first[i] ? a1 : a2).push_back(sorted[i]);
    return make_split(g, a1, a2);
}

StructureReport verify_split_structure(const HighDegreeSplit& s, int delta, long long m) {
    if (delta <= 0 || delta % 2 != 0) throw std::invalid_argument("structure check needs a positive even delta");
    StructureReport r;
    r.kappa = delta / 2;
    if (s.m1 > 0) r.lambda = Rational(s.e1, s.m1);
    r.triggered = s.theta * (delta + 1) > m;
    if (!r.triggered) return r;

    std::vector<char> in1(s.A.size(), 0);
    for (std::size_t i = 0; i < s.A.size(); ++i)
        in1[i] = std::binary_search(s.A1.begin(), s.A1.end(), s.A[i]);
    int huge = 0, huge2 = 0;
    for (std::size_t i = 0; i < s.A.size(); ++i) {
        const bool big = s.abar_degree[i] >= s.theta;
        huge += big;
        if (!in1[i] && big) ++huge2;
        if (in1[i] && !big) r.part_i = false;
    }
    r.part_ii = huge <= delta - 1;
    r.part_iii = s.rho <= s.nprime - s.theta;
    r.kappa_size = static_cast<int>(s.A1.size()) <= r.kappa;
    r.kappa_huge = huge2 <= r.kappa - 1;
    r.no_middle_sum = !sum_strictly_between(s.abar_degree, s.e2, s.e1);

    if (!r.part_i) r.defects.push_back("a vertex of A1 has V\\A-degree below theta");
    if (!r.part_ii) r.defects.push_back("more than delta-1 vertices have V\\A-degree >= theta");
    if (!r.part_iii) r.defects.push_back("rho exceeds n' - theta");
    if (!r.kappa_size) r.defects.push_back("|A1| exceeds kappa");
    if (!r.kappa_huge) r.defects.push_back("A2 has kappa or more vertices of V\\A-degree >= theta");
    if (!r.no_middle_sum) r.defects.push_back("a subset sum lies strictly between e2 and e1; split is not optimal");
    return r;
}

Json to_json(const HighDegreeSplit& s) {
    return Json{{"A", s.A},   {"A1", s.A1},       {"A2", s.A2}, {"abar_degree", s.abar_degree},
                {"e1", s.e1}, {"e2", s.e2},       {"theta", s.theta}, {"alpha", s.alpha},
                {"rho", s.rho}, {"m1", s.m1},     {"m2", s.m2}, {"eA", s.eA},
                {"nprime", s.nprime}};
}

Json to_json(const StructureReport& r) {
    Json j{{"triggered", r.triggered}, {"kappa", r.kappa}, {"lambda", to_string(r.lambda)}};
    if (!r.triggered) {
        j["status"] = "hypothesis not triggered";
        return j;
    }
    j["part_i"] = r.part_i;
    j["part_ii"] = r.part_ii;
    j["part_iii"] = r.part_iii;
    j["kappa_size"] = r.kappa_size;
    j["kappa_huge"] = r.kappa_huge;
    j["no_middle_sum"] = r.no_middle_sum;
    j["defects"] = r.defects;
    j["status"] = r.ok() ? "ok" : "defects";
    return j;
}

Json to_json(const PipelineReport& r) {
    return Json{{"branch", r.branch},
                {"delta", r.delta},
                {"delta_input", r.delta_input},
                {"eps", to_string(r.eps)},
                {"theta", r.theta},
                {"alpha", r.alpha},
                {"rho", r.rho},
                {"tau", r.tau},
                {"target_fraction", to_string(r.target_fraction)},
                {"achieved1", r.achieved1},
                {"achieved2", r.achieved2},
                {"satisfied", r.satisfied},
                {"scheme_sides", {r.scheme1, r.scheme2}},
                {"main_inequality",
                 {{"lhs", to_string(r.main_lhs)}, {"rhs", to_string(r.main_rhs)}, {"holds", r.main_lhs <= r.main_rhs}}},
                {"structure", to_json(r.structure)},
                {"inner", r.inner}};
}

Bipartition judicious_refine(const Graph& g, Bipartition part, int candidates, int max_passes) {
    const int n = g.order();
    using Key = std::pair<int, int>;
    auto key = [](const CutStats& st) { return Key{st.max_inside(), st.inside1 + st.inside2}; };
    std::vector<int> own(static_cast<std::size_t>(n));
    std::vector<char> locked(static_cast<std::size_t>(n));
    std::vector<Vertex> c1, c2;
    for (int pass = 0; pass < max_passes; ++pass) {
        Bipartition cur = part, best = part;
        CutStats st = cut_stats(g, cur);
        Key best_key = key(st);
        for (Vertex v = 0; v < n; ++v) {
            own[v] = 0;
            for (Vertex u : g.neighbors(v)) own[v] += cur[u] == cur[v];
            locked[v] = 0;
        }
        auto by_own = [&](Vertex a, Vertex b) { return own[a] != own[b] ? own[a] > own[b] : a < b; };
        for (int step = 0; step < n / 2; ++step) {
            c1.clear();
            c2.clear();
            for (Vertex v = 0; v < n; ++v)
                if (!locked[v]) (cur[v] == Side::one ? c1 : c2).push_back(v);
            if (c1.empty() || c2.empty()) break;
            for (auto* c : {&c1, &c2})
                if (static_cast<int>(c->size()) > candidates) {
                    std::partial_sort(c->begin(), c->begin() + candidates, c->end(), by_own);
                    c->resize(static_cast<std::size_t>(candidates));
                }
            Vertex bu = -1, bv = -1;
            Key bk{std::numeric_limits<int>::max(), 0};
            int b1 = 0, b2 = 0;
            for (Vertex u : c1)
                for (Vertex v : c2) {
                    const int adj = g.adjacent(u, v);
                    const int i1 = st.inside1 - own[u] + (g.degree(v) - own[v] - adj);
                    const int i2 = st.inside2 - own[v] + (g.degree(u) - own[u] - adj);
                    const Key k{std::max(i1, i2), i1 + i2};
                    if (k < bk) {
                        bk = k;
                        bu = u;
                        bv = v;
                        b1 = i1;
                        b2 = i2;
                    }
                }
            for (Vertex x : {bu, bv})
                for (Vertex w : g.neighbors(x)) {
                    if (w == bu || w == bv) continue;
                    own[w] += cur[w] == cur[x] ? -1 : 1;
                }
            const int adj = g.adjacent(bu, bv);
            const int nu = g.degree(bu) - own[bu] - adj, nv = g.degree(bv) - own[bv] - adj;
            cur[bu] = Side::two;
            cur[bv] = Side::one;
            own[bu] = nu;
            own[bv] = nv;
            st.inside1 = b1;
            st.inside2 = b2;
            locked[bu] = locked[bv] = 1;
            if (key(st) < best_key) {
                best_key = key(st);
                best = cur;
            }
        }
        if (best == part) break;
        part = std::move(best);
    }
    return part;
}

namespace {

int side_edges_with(const Graph& g, const Bipartition& part, std::span<const char> in_a1, Side b) {
    // e(A1, B) + e(B) for B = the non-A vertices on side b
    int count = 0;
    for (const Edge& e : g.edges()) {
        const bool u_b = !in_a1[e.u] && part[e.u] == b, v_b = !in_a1[e.v] && part[e.v] == b;
        if (u_b && v_b) ++count;
        else if ((u_b && in_a1[e.v]) || (v_b && in_a1[e.u])) ++count;
    }
    return count;
}

}  // namespace

MinDegreeResult min_degree_bisection(const Graph& g, int delta, const PipelineOptions& opt) {
    if (delta < 2) throw PreconditionError("min-degree pipeline needs delta >= 2");
    if (g.order() > 0 && g.min_degree() < delta)
        throw PreconditionError("minimum degree " + std::to_string(g.min_degree()) + " is below delta " +
                                std::to_string(delta));
    if (opt.eps <= Rational(0)) throw std::invalid_argument("eps must be positive");
    const int n = g.order();
    const long long m = g.size();
    const int deff = delta % 2 == 0 ? delta : delta - 1;

    MinDegreeResult out;
    PipelineReport& p = out.pipeline;
    p.delta = deff;
    p.delta_input = delta;
    p.eps = opt.eps;
    p.target_fraction = judicious_target(deff);

    const std::vector<Vertex> A = high_degree_set(g, opt.exponent);
    out.split = optimal_split(g, A);
    const HighDegreeSplit& s = out.split;
    p.theta = s.theta;
    p.alpha = s.alpha;
    p.rho = s.rho;
    p.structure = verify_split_structure(s, deff, m);

    std::vector<char> in_a(static_cast<std::size_t>(n), 0);
    for (Vertex v : A) in_a[v] = 1;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v)
        if (!in_a[v]) rest.push_back(v);
    InducedSubgraph sub = induced_subgraph(g, rest);
    p.tau = count_tight_definitional(sub.graph);
    p.main_lhs = Rational(s.theta) + Rational(p.tau, 2);
    p.main_rhs = Rational(n, 2) + Rational(m, deff + 1);

    StarOptions so;
    so.eps = opt.eps;
    so.seed = opt.seed;
    so.max_trials = opt.max_trials;
    so.enforce_degree_hypothesis = false;

    auto prepartitioned = [&](const char* branch) {
        p.branch = branch;
        JudiciousResult r = judicious_with_prepartition(g, s.A1, s.A2, so);
        out.part = r.part;
        p.inner = to_json(r.report);
    };

    if (opt.eps * opt.eps * Rational(m) >= Rational(n)) {
        p.branch = "dense";
        VarianceResult r = judicious_bisection_variance(g, opt.seed, opt.max_trials);
        out.part = r.part;
        p.inner = to_json(r.report);
    } else if (A.empty()) {
        p.branch = "bounded-degree";
        JudiciousResult r = judicious_tight_bisection(g, so);
        out.part = r.part;
        p.inner = to_json(r.report);
    } else if (s.theta * (deff + 1) <= m) {
        prepartitioned("small-gap");
    } else if (deff == 2) {
        long long big = 0;
        for (long long d : s.abar_degree) big = std::max(big, d);
        if (s.m2 >= 6 * big - 4 * s.m1) {
            prepartitioned("delta2-case1");
        } else {
            p.branch = "delta2-case2";
            TightBisection tb = tight_bisection(sub.graph);
            Bipartition part(n);
            for (Vertex v : s.A2) part[v] = Side::two;
            for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
                part[sub.to_parent[i]] = tb.part[static_cast<Vertex>(i)];
            std::vector<char> in_a1(static_cast<std::size_t>(n), 0);
            for (Vertex v : s.A1) in_a1[v] = 1;
            const int with1 = side_edges_with(g, part, in_a1, Side::one);
            const int with2 = side_edges_with(g, part, in_a1, Side::two);
            const bool swapped = with1 > with2;
            if (swapped)
                for (Vertex v : rest) part[v] = opposite(part[v]);
            auto pinned = std::make_unique<bool[]>(static_cast<std::size_t>(n) + 1);
            for (Vertex v = 0; v < n; ++v) pinned[v] = in_a[v] != 0;
            // at least half the vertices have degree <= 4m/n
            const int start = static_cast<int>(std::max<long long>(1, (4 * m + n - 1) / std::max(n, 1)));
            GrowingRebalance rb;
            try {
                rb = rebalance_growing_cap(g, part, start, std::span<const bool>(pinned.get(), static_cast<std::size_t>(n)));
            } catch (const InsufficientLowDegree&) {
                rb = rebalance_growing_cap(g, part, start);
            }
            out.part = rb.part;
            p.inner = Json{{"tight", to_json(tb.report)},
                           {"orientation_swapped", swapped},
                           {"e_A1_B1_plus_e_B1", swapped ? with2 : with1},
                           {"e_A1_B2_plus_e_B2", swapped ? with1 : with2},
                           {"rebalance_cap", rb.cap},
                           {"moved", moved_vertices(part, rb.part)}};
        }
    } else {
        prepartitioned("general");
    }

    const CutStats pre = cut_stats(g, out.part);
    p.scheme1 = pre.inside1;
    p.scheme2 = pre.inside2;
    if (opt.refine) {
        out.part = judicious_refine(g, out.part);
        auto key = [&](const Bipartition& q) {
            const CutStats c = cut_stats(g, q);
            return std::pair{c.max_inside(), c.inside1 + c.inside2};
        };
        auto best = key(out.part);
        std::vector<Vertex> idx(static_cast<std::size_t>(n));
        for (int t = 0; t < opt.restarts; ++t) {
            Rng rng(opt.seed, 0x7e57a27 + static_cast<std::uint64_t>(t));
            std::iota(idx.begin(), idx.end(), 0);
            for (int j = n - 1; j > 0; --j) std::swap(idx[j], idx[rng.below(j + 1)]);
            Bipartition q(n, Side::two);
            for (int j = 0; j < (n + 1) / 2; ++j) q[idx[j]] = Side::one;
            q = judicious_refine(g, q);
            if (auto k = key(q); k < best) {
                best = k;
                out.part = std::move(q);
            }
        }
    }
    const CutStats st = cut_stats(g, out.part);
    p.achieved1 = st.inside1;
    p.achieved2 = st.inside2;
    const Rational cap = (p.target_fraction + opt.eps) * Rational(m);
    p.satisfied = is_bisection(g, out.part) && Rational(st.inside1) <= cap && Rational(st.inside2) <= cap;

    BoundReport& r = out.report;
    r.theorem = "min-degree";
    r.bound = cap;
    r.achieved = st.max_inside();
    r.sense = Sense::at_most;
    r.satisfied = p.satisfied;
    r.params = to_json(p);
    r.params["n"] = n;
    r.params["m"] = m;
    r.params["m1"] = s.m1;
    r.params["m2"] = s.m2;
    r.params["eA"] = s.eA;
    r.params["nprime"] = s.nprime;
    r.params["high_degree_count"] = static_cast<int>(A.size());
    return out;
}

}  // namespace bisect
