#include "bisect/random_bisect.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "bisect/greedy_bisect.hpp"
#include "bisect/matching.hpp"
#include "bisect/tight.hpp"
#include "bisect/trials.hpp"

namespace bisect {

namespace {

long long sum_sq_degrees(const Graph& g) {
    long long s = 0;
    for (Vertex v = 0; v < g.order(); ++v) s += 1LL * g.degree(v) * g.degree(v);
    return s;
}

// e <= m/4 + sqrt(2 lambda) with 32 lambda = 2 (3m + sum d^2)
bool within_variance_cap(long long e, long long m, long long sum_sq) {
    long long x = 4 * e - m;
    return x <= 0 || x * x <= 2 * (3 * m + sum_sq);
}

}  // namespace

LambdaBound lambda_bound(const Graph& g, const Pairing& pairing) {
    const int n = g.order();
    std::vector<int> pair_of(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < pairing.size(); ++i) {
        auto [a, b] = pairing[i];
        if (a < 0 || b < 0 || a >= n || b >= n || a == b || pair_of[a] >= 0 || pair_of[b] >= 0)
            throw std::invalid_argument("pairing is not a set of disjoint vertex pairs");
        pair_of[a] = pair_of[b] = static_cast<int>(i);
    }
    if (n - 2 * static_cast<int>(pairing.size()) > 1) throw std::invalid_argument("pairing leaves more than one vertex");
    long long f = 0;
    for (const Edge& e : g.edges())
        if (pair_of[e.u] < 0 || pair_of[e.u] != pair_of[e.v]) ++f;
    const long long sq = sum_sq_degrees(g);
    LambdaBound out;
    out.lambda = Rational(3LL * g.size() + sq, 16);
    out.lambda_refined = Rational(3 * f + sq, 16);
    out.cap = g.size() / 4.0 + std::sqrt(2.0 * to_double(out.lambda));
    return out;
}

Pairing default_pairing(const Graph& g) {
    Pairing out;
    Matching m = maximum_matching(g);
    for (const Edge& e : m.pairs()) out.emplace_back(e.u, e.v);
    auto rest = m.uncovered();
    for (std::size_t i = 0; i + 1 < rest.size(); i += 2) out.emplace_back(rest[i], rest[i + 1]);
    return out;
}

Bipartition paired_random_bisection(const Graph& g, const Pairing& pairing, Rng& rng) {
    Bipartition p(g.order(), Side::one);
    for (auto [a, b] : pairing) {
        bool flip = rng.coin();
        p[a] = flip ? Side::two : Side::one;
        p[b] = flip ? Side::one : Side::two;
    }
    return p;
}

Bipartition paired_random_bisection(const Graph& g, std::uint64_t seed) {
    Rng rng(seed);
    return paired_random_bisection(g, default_pairing(g), rng);
}

VarianceResult judicious_bisection_variance(const Graph& g, std::uint64_t seed, int max_trials, Execution ex) {
    if (max_trials < 1) throw std::invalid_argument("max_trials must be at least 1");
    const int n = g.order();
    const long long m = g.size();
    const long long sq = sum_sq_degrees(g);

    VarianceResult out;
    std::vector<Vertex> active, isolated;
    for (Vertex v = 0; v < n; ++v) (g.degree(v) > 0 ? active : isolated).push_back(v);
    out.sparse_fallback = 4 * m < n && !isolated.empty();

    // fallback: pair the non-isolated vertices only, then fill with isolated ones
    InducedSubgraph h;
    Pairing pairing;
    if (out.sparse_fallback) {
        h = induced_subgraph(g, active);
        pairing = default_pairing(h.graph);
        out.lambda = lambda_bound(h.graph, pairing);
    } else {
        pairing = default_pairing(g);
        out.lambda = lambda_bound(g, pairing);
    }

    struct Outcome {
        Bipartition part;
        CutStats st;
        bool accepted = false;
    };
    auto eval = [&](int i) {
        Rng rng(seed, static_cast<std::uint64_t>(i));
        Outcome o;
        if (out.sparse_fallback) {
            Bipartition local = paired_random_bisection(h.graph, pairing, rng);
            o.part = Bipartition(n);
            int c1 = 0, c2 = 0;
            for (int k = 0; k < h.graph.order(); ++k) {
                o.part[h.to_parent[k]] = local[k];
                (local[k] == Side::one ? c1 : c2)++;
            }
            for (Vertex v : isolated) {
                Side s = c1 <= c2 ? Side::one : Side::two;
                o.part[v] = s;
                (s == Side::one ? c1 : c2)++;
            }
        } else {
            o.part = paired_random_bisection(g, pairing, rng);
        }
        o.st = cut_stats(g, o.part);
        o.accepted = within_variance_cap(o.st.inside1, m, sq) && within_variance_cap(o.st.inside2, m, sq);
        return o;
    };
    auto run = run_trials<Outcome>(max_trials, ex, eval);

    std::size_t pick = 0;
    if (run.accepted >= 0) {
        pick = static_cast<std::size_t>(run.accepted);
    } else {
        for (std::size_t i = 1; i < run.outcomes.size(); ++i)
            if (run.outcomes[i].st.max_inside() < run.outcomes[pick].st.max_inside()) pick = i;
    }
    const Outcome& best = run.outcomes[pick];
    out.part = best.part;
    out.accepted = run.accepted >= 0;
    out.trials_used = static_cast<int>(run.outcomes.size());

    auto& r = out.report;
    r.theorem = "variance";
    r.exact = false;
    r.bound_value = out.lambda.cap;
    r.achieved = best.st.max_inside();
    r.sense = Sense::at_most;
    r.satisfied = out.accepted;
    r.params = Json{{"n", n},
                    {"m", m},
                    {"lambda", to_string(out.lambda.lambda)},
                    {"lambda_refined", to_string(out.lambda.lambda_refined)},
                    {"achieved1", best.st.inside1},
                    {"achieved2", best.st.inside2},
                    {"trials_used", out.trials_used},
                    {"sparse_fallback", out.sparse_fallback}};
    return out;
}

Rational default_density(const Graph& g) {
    if (g.order() == 0) return Rational(1);
    return std::max(Rational(1), Rational(g.size(), g.order()));
}

double gamma_of(const Rational& eps, const Rational& C) {
    const double e = to_double(eps), c = to_double(C);
    return e * e * e * e / (1024.0 * c * c * c);
}

namespace {

void check_degree_hypothesis(const Graph& g, std::span<const bool> in_a, double gamma) {
    const double limit = gamma * g.order();
    int a = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!in_a.empty() && in_a[v]) {
            ++a;
            continue;
        }
        if (g.degree(v) > limit)
            throw PreconditionError("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) +
                                    " above gamma*n; pre-partition high-degree vertices (min-degree pipeline)");
    }
    if (a > limit) throw PreconditionError("prepartitioned set is larger than gamma*n");
}

bool degree_hypothesis_holds(const Graph& g, std::span<const bool> in_a, double gamma) {
    try {
        check_degree_hypothesis(g, in_a, gamma);
        return true;
    } catch (const PreconditionError&) {
        return false;
    }
}

}  // namespace

StarSystem star_decomposition(const Graph& g, std::span<const bool> in_a, const Rational& C, const Rational& eps,
                              bool enforce_degree_hypothesis) {
    if (eps <= Rational(0)) throw std::invalid_argument("eps must be positive");
    if (enforce_degree_hypothesis) check_degree_hypothesis(g, in_a, gamma_of(eps, C));

    std::vector<Vertex> rest;
    for (Vertex v = 0; v < g.order(); ++v)
        if (in_a.empty() || !in_a[v]) rest.push_back(v);
    InducedSubgraph h = induced_subgraph(g, rest);
    const Graph& hg = h.graph;
    Matching mm = maximize_free_vertices(hg, maximum_matching(hg));
    FreeInfo fi = compute_free_info(hg, mm);
    const auto edges = mm.pairs();

    std::vector<int> edge_of(static_cast<std::size_t>(hg.order()), -1);
    for (std::size_t j = 0; j < edges.size(); ++j) edge_of[edges[j].u] = edge_of[edges[j].v] = static_cast<int>(j);

    StarSystem sys;
    std::vector<Vertex> apex(edges.size(), -1);
    std::vector<std::vector<Vertex>> leaves(edges.size());
    for (Vertex w : fi.uncovered) {
        if (!fi.free_flag[w]) {
            sys.residual.push_back(h.to_parent[w]);
            ++sys.nonfree;
            continue;
        }
        if (Rational(g.degree(h.to_parent[w])) * eps >= C) {
            sys.residual.push_back(h.to_parent[w]);
            ++sys.heavy;
            continue;
        }
        int j = -1;
        Vertex f = -1;
        for (Vertex v : fi.free_neighbors[w])
            if (j < 0 || edge_of[v] < j) {
                j = edge_of[v];
                f = v;
            }
        if (apex[j] >= 0 && apex[j] != f) throw std::logic_error("star apex conflict: matching is not free-maximal");
        apex[j] = f;
        leaves[j].push_back(w);
    }
    for (std::size_t j = 0; j < edges.size(); ++j) {
        Star s;
        s.apex = h.to_parent[apex[j] >= 0 ? apex[j] : edges[j].u];
        s.members = {h.to_parent[edges[j].u], h.to_parent[edges[j].v]};
        for (Vertex w : leaves[j]) s.members.push_back(h.to_parent[w]);
        std::sort(s.members.begin(), s.members.end());
        sys.stars.push_back(std::move(s));
    }
    std::sort(sys.residual.begin(), sys.residual.end());
    return sys;
}

Json to_json(const BudgetLedger& b) {
    auto entry = [](const Rational& budget, const Rational& used) {
        return Json{{"budget", to_double(budget)}, {"used", to_double(used)}, {"within", used <= budget}};
    };
    return Json{{"expectation", entry(b.expectation_budget, b.expectation_used)},
                {"concentration", entry(b.concentration_budget, b.concentration_used)},
                {"rebalance", entry(b.rebalance_budget, b.rebalance_used)}};
}

Json to_json(const JudiciousReport& r) {
    return Json{{"eps", to_string(r.eps)},
                {"C", to_string(r.C)},
                {"gamma", r.gamma},
                {"tau", r.tau},
                {"cap1", to_double(r.cap1)},
                {"cap2", to_double(r.cap2)},
                {"achieved1", r.achieved1},
                {"achieved2", r.achieved2},
                {"trials_used", r.trials_used},
                {"accepted", r.accepted},
                {"balance_tol", r.balance_tol},
                {"degree_hypothesis", r.degree_hypothesis},
                {"vacuous", r.vacuous},
                {"satisfied", r.satisfied},
                {"rebalance_cap", r.rebalance_cap},
                {"moved", r.moved},
                {"a_moved", r.a_moved},
                {"budget_ledger", to_json(r.budget_ledger)}};
}

namespace {

struct StarOutcome {
    Bipartition part;
    CutStats st;
    int x = 0;  // |V_1 \ A_1|
    bool accepted = false;
};

// Everything a trial needs; label: 0 outside A, 1 in A_1, 2 in A_2.
struct StarScheme {
    const Graph& g;
    std::vector<char> label;
    StarOptions opt;
    int n = 0;
    int nbar = 0;
    bool has_a = false;
    std::unique_ptr<bool[]> in_a;
    std::span<const bool> a_span;
    std::vector<Vertex> rest;
    StarSystem sys;
    JudiciousReport d;
    Rational en, tol2;
    Rational base[3], expect[3], pre_cap[3], cap[3];

    StarScheme(const Graph& graph, std::vector<char> lab, const StarOptions& o)
        : g(graph), label(std::move(lab)), opt(o), n(graph.order()) {
        if (opt.max_trials < 1) throw std::invalid_argument("max_trials must be at least 1");
        if (opt.eps <= Rational(0)) throw std::invalid_argument("eps must be positive");
        const Rational C = opt.C ? *opt.C : default_density(g);
        if (C < Rational(1)) throw std::invalid_argument("C must be at least 1");
        const Rational& eps = opt.eps;

        in_a = std::make_unique<bool[]>(static_cast<std::size_t>(n) + 1);
        for (Vertex v = 0; v < n; ++v) {
            in_a[v] = label[v] != 0;
            has_a = has_a || in_a[v];
        }
        if (has_a) a_span = std::span<const bool>(in_a.get(), static_cast<std::size_t>(n));

        d.eps = eps;
        d.C = C;
        d.gamma = gamma_of(eps, C);
        d.degree_hypothesis = degree_hypothesis_holds(g, a_span, d.gamma);
        if (opt.enforce_degree_hypothesis && !d.degree_hypothesis) check_degree_hypothesis(g, a_span, d.gamma);

        sys = star_decomposition(g, a_span, C, eps, false);
        for (Vertex v = 0; v < n; ++v)
            if (label[v] == 0) rest.push_back(v);
        d.tau = count_tight_definitional(induced_subgraph(g, rest).graph);
        nbar = static_cast<int>(rest.size());

        long long inside_a[3] = {0, 0, 0}, to_rest[3] = {0, 0, 0}, inside_rest = 0;
        for (const Edge& e : g.edges()) {
            int a = label[e.u], b = label[e.v];
            if (a == 0 && b == 0) ++inside_rest;
            else if (a == b) ++inside_a[a];
            else if (a == 0) ++to_rest[b];
            else if (b == 0) ++to_rest[a];
        }
        long long star_edges = 0;
        for (const Star& s : sys.stars) star_edges += static_cast<long long>(s.members.size()) - 1;

        en = eps * Rational(n);
        for (int i = 1; i <= 2; ++i) {
            base[i] = Rational(inside_a[i]) + Rational(to_rest[i], 2) + Rational(inside_rest, 4) -
                      Rational(n - d.tau, 8);
            expect[i] = Rational(inside_a[i]) + Rational(to_rest[i], 2) + Rational(inside_rest - star_edges, 4);
            pre_cap[i] = base[i] + en / Rational(2);
            cap[i] = base[i] + en;
        }
        d.cap1 = cap[1];
        d.cap2 = cap[2];
        // | |V_1 \ A_1| - |V \ A|/2 | <= eps n / (16 C), with an extra 1/sqrt(2) under a prepartition
        tol2 = en / (Rational(8) * C);  // bound on |2x - nbar|
        d.balance_tol = to_double(tol2) / 2 / (has_a ? std::sqrt(2.0) : 1.0);
    }

    static bool fits(long long y, const Rational& c) { return Rational(y) <= c || y == 0; }

    bool balanced(int x) const {
        Rational dev(std::abs(2 * x - nbar));
        return has_a ? Rational(2) * dev * dev <= tol2 * tol2 : dev <= tol2;
    }

    StarOutcome eval(int t) const {
        Rng rng(opt.seed, static_cast<std::uint64_t>(t));
        StarOutcome o;
        o.part = Bipartition(n);
        for (Vertex v = 0; v < n; ++v)
            if (label[v] == 2) o.part[v] = Side::two;
        for (const Star& s : sys.stars) {
            Side ap = rng.coin() ? Side::two : Side::one;
            for (Vertex u : s.members) o.part[u] = u == s.apex ? ap : opposite(ap);
        }
        for (Vertex w : sys.residual) o.part[w] = rng.coin() ? Side::two : Side::one;
        o.st = cut_stats(g, o.part);
        for (Vertex v : rest) o.x += o.part[v] == Side::one;
        o.accepted = fits(o.st.inside1, pre_cap[1]) && fits(o.st.inside2, pre_cap[2]) && balanced(o.x);
        return o;
    }

    JudiciousResult finish(const char* theorem) {
        auto run = run_trials<StarOutcome>(opt.max_trials, opt.ex, [this](int t) { return eval(t); });
        std::size_t pick = 0;
        if (run.accepted >= 0) {
            pick = static_cast<std::size_t>(run.accepted);
        } else {
            auto excess = [&](const StarOutcome& o) {
                return std::max(
                    {Rational(0), Rational(o.st.inside1) - pre_cap[1], Rational(o.st.inside2) - pre_cap[2]});
            };
            for (std::size_t i = 1; i < run.outcomes.size(); ++i) {
                const StarOutcome& a = run.outcomes[i];
                const StarOutcome& b = run.outcomes[pick];
                Rational ea = excess(a), eb = excess(b);
                if (ea < eb || (ea == eb && std::abs(2 * a.x - nbar) < std::abs(2 * b.x - nbar))) pick = i;
            }
        }
        const StarOutcome& chosen = run.outcomes[pick];
        JudiciousResult out;
        d.accepted = run.accepted >= 0;
        d.trials_used = static_cast<int>(run.outcomes.size());

        // degree below 8C, doubling the cap when those vertices run out
        const int start = std::max<int>(0, static_cast<int>(ceil_of(Rational(8) * d.C)) - 1);
        GrowingRebalance rb;
        try {
            rb = rebalance_growing_cap(g, chosen.part, start, a_span);
        } catch (const InsufficientLowDegree&) {
            // A holds too many vertices to balance around; let it move too
            rb = rebalance_growing_cap(g, chosen.part, start);
        }
        out.part = rb.part;
        d.rebalance_cap = rb.cap;
        d.moved = moved_vertices(chosen.part, out.part);
        for (Vertex v = 0; v < n; ++v) d.a_moved += label[v] != 0 && out.part[v] != chosen.part[v];

        CutStats fin = cut_stats(g, out.part);
        d.achieved1 = fin.inside1;
        d.achieved2 = fin.inside2;
        const bool strict = Rational(fin.inside1) <= cap[1] && Rational(fin.inside2) <= cap[2];
        d.satisfied = fits(fin.inside1, cap[1]) && fits(fin.inside2, cap[2]) && is_bisection(g, out.part);
        d.vacuous = d.satisfied && !strict;

        auto& b = d.budget_ledger;
        b.expectation_budget = en / Rational(4);
        b.concentration_budget = en / Rational(4);
        b.rebalance_budget = en / Rational(2);
        b.expectation_used = std::max(expect[1] - base[1], expect[2] - base[2]);
        b.concentration_used =
            std::max(Rational(chosen.st.inside1) - expect[1], Rational(chosen.st.inside2) - expect[2]);
        b.rebalance_used = Rational(std::max(fin.inside1 - chosen.st.inside1, fin.inside2 - chosen.st.inside2));

        auto& r = out.report;
        r.theorem = theorem;
        r.bound = std::max(cap[1], cap[2]);
        r.achieved = fin.max_inside();
        r.sense = Sense::at_most;
        r.satisfied = d.satisfied;
        r.params = to_json(d);
        r.params["n"] = n;
        r.params["m"] = g.size();
        out.detail = d;
        out.stars = sys;
        return out;
    }
};

}  // namespace

JudiciousResult judicious_tight_bisection(const Graph& g, const StarOptions& opt) {
    StarScheme scheme(g, std::vector<char>(static_cast<std::size_t>(g.order()), 0), opt);
    return scheme.finish("star");
}

JudiciousResult judicious_with_prepartition(const Graph& g, std::span<const Vertex> a1, std::span<const Vertex> a2,
                                            const StarOptions& opt) {
    std::vector<char> label(static_cast<std::size_t>(g.order()), 0);
    for (auto [set, tag] : {std::pair{a1, 1}, std::pair{a2, 2}})
        for (Vertex v : set) {
            if (v < 0 || v >= g.order()) throw std::invalid_argument("prepartition vertex out of range");
            if (label[v] != 0) throw std::invalid_argument("A1 and A2 must be disjoint");
            label[v] = static_cast<char>(tag);
        }
    StarScheme scheme(g, std::move(label), opt);
    return scheme.finish("prepartition");
}

}  // namespace bisect

namespace bisect {

StarTrialSample sample_star_trials(const Graph& g, const StarOptions& opt, int trials) {
    StarScheme scheme(g, std::vector<char>(static_cast<std::size_t>(g.order()), 0), opt);
    std::vector<char> ok(static_cast<std::size_t>(std::max(trials, 0)), 0);
    if (opt.ex == Execution::parallel) {
#pragma omp parallel for schedule(static)
        for (int t = 0; t < trials; ++t) ok[t] = scheme.eval(t).accepted;
    } else {
        for (int t = 0; t < trials; ++t) ok[t] = scheme.eval(t).accepted;
    }
    StarTrialSample out;
    out.trials = trials;
    for (char c : ok) out.accepted += c;
    return out;
}

}  // namespace bisect
