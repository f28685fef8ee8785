#include "bisect/generators.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "bisect/rng.hpp"

namespace bisect {

long long GeneratorSpec::get(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) throw std::invalid_argument("generator '" + family + "' needs parameter " + key);
    return it->second;
}

long long GeneratorSpec::get(const std::string& key, long long fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

GeneratorSpec parse_generator_spec(const std::string& text) {
    GeneratorSpec spec;
    auto colon = text.find(':');
    spec.family = text.substr(0, colon);
    if (spec.family.empty()) throw std::invalid_argument("empty generator family");
    if (colon == std::string::npos) return spec;
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw std::invalid_argument("bad generator parameter '" + item + "'");
        std::string key = item.substr(0, eq);
        std::string value = item.substr(eq + 1);
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(value, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != value.size())
            throw std::invalid_argument("generator parameter " + key + " is not an integer");
        spec.params[key] = v;
    }
    return spec;
}

std::string to_string(const GeneratorSpec& spec) {
    std::string out = spec.family;
    char sep = ':';
    for (const auto& [k, v] : spec.params) {
        out += sep + k + "=" + std::to_string(v);
        sep = ',';
    }
    return out;
}

namespace {

class EdgeSet {
public:
    explicit EdgeSet(int n) : n_(n), deg_(static_cast<std::size_t>(n), 0) {}

    bool has(int u, int v) const { return set_.count(key(u, v)) != 0; }
    bool add(int u, int v) {
        if (u == v || !set_.insert(key(u, v)).second) return false;
        edges_.push_back({std::min(u, v), std::max(u, v)});
        ++deg_[u];
        ++deg_[v];
        return true;
    }
    int degree(int v) const { return deg_[v]; }
    long long size() const { return static_cast<long long>(edges_.size()); }
    Graph build() const { return Graph(n_, edges_); }

private:
    std::uint64_t key(int u, int v) const {
        if (u > v) std::swap(u, v);
        return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(v);
    }
    int n_;
    std::unordered_set<std::uint64_t> set_;
    std::vector<Edge> edges_;
    std::vector<int> deg_;
};

void need(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void clique_on(EdgeSet& es, int first, int size) {
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j) es.add(first + i, first + j);
}

}  // namespace

Graph empty_graph(int n) {
    need(n >= 0, "n must be nonnegative");
    return Graph(n, {});
}

Graph complete_graph(int n) {
    need(n >= 0, "n must be nonnegative");
    EdgeSet es(n);
    clique_on(es, 0, n);
    return es.build();
}

Graph complete_bipartite(int a, int b) {
    need(a >= 0 && b >= 0, "part sizes must be nonnegative");
    EdgeSet es(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) es.add(i, a + j);
    return es.build();
}

Graph star(int n) {
    need(n >= 1, "star needs n >= 1");
    return complete_bipartite(1, n - 1);
}

Graph cycle(int n) {
    need(n >= 3, "cycle needs n >= 3");
    EdgeSet es(n);
    for (int i = 0; i < n; ++i) es.add(i, (i + 1) % n);
    return es.build();
}

Graph path(int n) {
    need(n >= 1, "path needs n >= 1");
    EdgeSet es(n);
    for (int i = 0; i + 1 < n; ++i) es.add(i, i + 1);
    return es.build();
}

Graph triangles(int t) {
    need(t >= 0, "t must be nonnegative");
    EdgeSet es(3 * t);
    for (int i = 0; i < t; ++i) clique_on(es, 3 * i, 3);
    return es.build();
}

Graph perfect_matching_graph(int n) {
    need(n >= 0 && n % 2 == 0, "perfect matching graph needs even n");
    EdgeSet es(n);
    for (int i = 0; i < n; i += 2) es.add(i, i + 1);
    return es.build();
}

Graph bowtie() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

Graph petersen() {
    EdgeSet es(10);
    for (int i = 0; i < 5; ++i) {
        es.add(i, (i + 1) % 5);
        es.add(i, i + 5);
        es.add(5 + i, 5 + (i + 2) % 5);
    }
    return es.build();
}

Graph family1(int delta, int x, int y) {
    need(delta >= 1 && x >= 0 && y >= 0, "family1 needs delta >= 1, x, y >= 0");
    need(y % 2 == 1, "family1 needs y odd");
    const int n = delta * x + (delta + 1) * y + 1;
    EdgeSet es(n);
    int at = 0;
    for (int i = 0; i < x; ++i, at += delta) clique_on(es, at, delta);
    for (int i = 0; i < y; ++i, at += delta + 1) clique_on(es, at, delta + 1);
    for (int v = 0; v < n - 1; ++v) es.add(v, n - 1);
    Graph g = es.build();
    const long long m = 1LL * delta * (delta + 1) / 2 * x + 1LL * (delta + 1) * (delta + 2) / 2 * y;
    need(g.size() == m && g.min_degree() >= delta, "family1 construction check failed");
    return g;
}

Graph family2(int delta, int n) {
    need(delta >= 1, "family2 needs delta >= 1");
    need(n % 2 == 0, "family2 needs n even");
    need(n - delta - 1 >= delta + 1, "family2 needs n >= 2 delta + 2");
    Graph g = complete_bipartite(delta + 1, n - delta - 1);
    need(g.size() == 1LL * (delta + 1) * (n - delta - 1), "family2 construction check failed");
    return g;
}

Graph gnm(int n, long long m, std::uint64_t seed) {
    need(n >= 0 && m >= 0 && m <= 1LL * n * (n - 1) / 2, "gnm: m out of range");
    Rng rng(seed);
    EdgeSet es(n);
    while (es.size() < m) {
        int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        es.add(u, v);
    }
    return es.build();
}

Graph random_no_isolated(int n, long long m, std::uint64_t seed) {
    need(n >= 2, "random_no_isolated needs n >= 2");
    Graph base = gnm(n, m, seed);
    Rng rng(seed, 1);
    EdgeSet es(n);
    for (const auto& e : base.edges()) es.add(e.u, e.v);
    for (int v = 0; v < n; ++v)
        while (es.degree(v) == 0) es.add(v, static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
    return es.build();
}

Graph random_min_degree(int n, long long m, int delta, std::uint64_t seed, int cycles) {
    need(delta >= 2 && n > delta, "random_min_degree needs delta >= 2 and n > delta");
    need(cycles >= 1 && 3LL * cycles <= n, "random_min_degree needs 1 <= cycles <= n/3");
    need(m >= (1LL * n * delta + 1) / 2 && m <= 1LL * n * (n - 1) / 2, "random_min_degree: m out of range");
    Rng rng(seed);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm.begin(), perm.end());

    // cut the permutation into `cycles` cycles, each of length >= 3
    std::vector<int> cuts{0};
    {
        std::vector<int> extra(static_cast<std::size_t>(cycles), 3);
        for (int left = n - 3 * cycles; left > 0; --left) ++extra[rng.below(static_cast<std::uint64_t>(cycles))];
        for (int len : extra) cuts.push_back(cuts.back() + len);
    }
    EdgeSet es(n);
    for (int c = 0; c < cycles; ++c) {
        int a = cuts[c], b = cuts[c + 1];
        for (int i = a; i < b; ++i) es.add(perm[i], perm[i + 1 < b ? i + 1 : a]);
    }
    for (int v = 0; v < n; ++v) {
        int guard = 0;
        while (es.degree(v) < delta) {
            int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            bool prefer = es.degree(u) < delta || ++guard > 4 * n;
            if (prefer) es.add(v, u);
        }
    }
    need(es.size() <= m, "random_min_degree: m too small for the degree patch");
    while (es.size() < m) {
        int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        es.add(u, v);
    }
    Graph g = es.build();
    need(g.min_degree() >= delta, "random_min_degree: minimum degree check failed");
    return g;
}

Graph random_bounded(int n, int r, long long m, std::uint64_t seed) {
    need(n >= 0 && r >= 0 && m >= 0, "random_bounded: bad parameters");
    Rng rng(seed);
    EdgeSet es(n);
    long long attempts = 0;
    const long long limit = 50 * (m + n) + 100;
    while (es.size() < m && attempts++ < limit) {
        int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (u == v || es.degree(u) >= r || es.degree(v) >= r) continue;
        es.add(u, v);
    }
    Graph g = es.build();
    need(g.max_degree() <= r, "random_bounded: degree check failed");
    return g;
}

Graph random_regular(int n, int r, std::uint64_t seed) {
    need(n > r && r >= 0 && (1LL * n * r) % 2 == 0, "random_regular: n*r must be even and n > r");
    Rng rng(seed);
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < r; ++i) stubs.push_back(v);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        rng.shuffle(stubs.begin(), stubs.end());
        EdgeSet es(n);
        bool ok = true;
        for (std::size_t i = 0; i < stubs.size() && ok; i += 2) ok = es.add(stubs[i], stubs[i + 1]);
        if (ok) return es.build();
    }
    throw std::invalid_argument("random_regular: rejection sampling did not converge");
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    for (const auto& e : b.edges()) edges.push_back({e.u + a.order(), e.v + a.order()});
    return Graph(a.order() + b.order(), std::move(edges));
}

Graph generate(const GeneratorSpec& spec) {
    const auto& f = spec.family;
    auto i = [&](const char* k) { return static_cast<int>(spec.get(k)); };
    auto seed = [&] { return static_cast<std::uint64_t>(spec.get("seed", 1)); };
    if (f == "triangles") return triangles(i("t"));
    if (f == "star") return star(i("n"));
    if (f == "complete") return complete_graph(i("n"));
    if (f == "complete_bipartite") return complete_bipartite(i("a"), i("b"));
    if (f == "cycle") return cycle(i("n"));
    if (f == "path") return path(i("n"));
    if (f == "empty") return empty_graph(i("n"));
    if (f == "matching") return perfect_matching_graph(i("n"));
    if (f == "bowtie") return bowtie();
    if (f == "petersen") return petersen();
    if (f == "family1") return family1(i("delta"), i("x"), i("y"));
    if (f == "family2") return family2(i("delta"), i("n"));
    if (f == "random_min_degree")
        return random_min_degree(i("n"), spec.get("m"), static_cast<int>(spec.get("delta", 2)), seed(),
                                 static_cast<int>(spec.get("cycles", 1)));
    if (f == "random_bounded") return random_bounded(i("n"), i("r"), spec.get("m"), seed());
    if (f == "random_regular") return random_regular(i("n"), i("r"), seed());
    if (f == "gnm") return gnm(i("n"), spec.get("m"), seed());
    if (f == "no_isolated") return random_no_isolated(i("n"), spec.get("m"), seed());
    throw std::invalid_argument("unknown generator family '" + f + "'");
}

}  // namespace bisect
