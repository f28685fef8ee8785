#include "bisect/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bisect/audit.hpp"
#include "bisect/bounds.hpp"
#include "bisect/coloring.hpp"
#include "bisect/generators.hpp"
#include "bisect/greedy_bisect.hpp"
#include "bisect/min_degree.hpp"
#include "bisect/oracle.hpp"
#include "bisect/random_bisect.hpp"
#include "bisect/tight.hpp"

namespace bisect {

namespace {

bool takes(const std::string& algo, const char* param) {
    const std::string p = param;
    if (p == "eps") return algo == "star" || algo == "mindeg";
    if (p == "delta") return algo == "mindeg";
    if (p == "alpha") return algo == "alpha";
    if (p == "r") return algo == "bounded";
    if (p == "max_trials") return algo == "variance" || algo == "star" || algo == "mindeg";
    return false;
}

std::string read_all(std::istream& in) {
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string read_file(const std::string& path, std::istream& in) {
    if (path == "-") return read_all(in);
    std::ifstream f(path, std::ios::binary);
    if (!f) throw GraphError("cannot read " + path);
    return read_all(f);
}

Json edges_json(const Graph& g) {
    Json a = Json::array();
    for (const Edge& e : g.edges()) a.push_back({e.u, e.v});
    return a;
}

std::string csv_double(double x) {
    std::ostringstream s;
    s.precision(10);
    s << x;
    return s.str();
}

const char* kCsvHeader = "family,params,n,m,algo,seed,bound,achieved1,achieved2,crossing,satisfied,runtime_ms";

// family,params from a source string; params use ';' so no quoting is needed
std::pair<std::string, std::string> family_columns(const std::string& source) {
    if (source.rfind("gen:", 0) != 0) return {"input", source};
    GeneratorSpec spec = parse_generator_spec(source.substr(4));
    std::string params;
    for (const auto& [k, v] : spec.params) params += (params.empty() ? "" : ";") + k + "=" + std::to_string(v);
    return {spec.family, params};
}

std::string csv_row(const std::string& source, const Graph& g, const SolveParams& p, const SolveOutcome& o,
                    const std::string& runtime) {
    const auto [family, params] = family_columns(source);
    const CutStats st = cut_stats(g, o.part);
    std::ostringstream s;
    s << family << ',' << params << ',' << g.order() << ',' << g.size() << ',' << p.algo << ',' << p.seed << ','
      << csv_double(o.report.bound_as_double()) << ',' << st.inside1 << ',' << st.inside2 << ',' << st.crossing << ','
      << (o.report.satisfied ? "true" : "false") << ',' << runtime;
    return s.str();
}

void human(const Json& j, std::ostream& out, const std::string& prefix = "") {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it->is_object()) {
            human(*it, out, prefix + it.key() + ".");
        } else if (it->is_string()) {
            out << prefix << it.key() << ": " << it->get<std::string>() << '\n';
        } else {
            out << prefix << it.key() << ": " << it->dump() << '\n';
        }
    }
}

struct Options {
    std::string input;
    std::string gen;
    std::string format = "json";
    std::string out;
    std::uint64_t seed = kDefaultSeed;
};

class Runner {
public:
    Runner(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

    Options opt;
    SolveParams solve;
    std::string eps, alpha;
    int delta = -1, r = -1, max_trials = -1;
    std::string oracle_kind;
    std::string theorem;
    std::string partition_path;
    int resolution = 200;
    int reps = 3;
    bool quick = false;
    int census_k = 7;

    int gen(bool format_given) {
        if (opt.gen.empty()) throw UsageError("gen needs --gen");
        if (!opt.input.empty()) throw UsageError("gen takes --gen only");
        Graph g = generate(parse_generator_spec(opt.gen));
        if (!format_given || opt.format == "human") return emit_text(to_edge_list(g));
        if (opt.format != "json") throw UsageError("gen supports json or the edge list");
        return emit(Json{{"command", "gen"},
                         {"spec", opt.gen},
                         {"seed", opt.seed},
                         {"graph_hash", graph_hash(g)},
                         {"n", g.order()},
                         {"m", g.size()},
                         {"edges", edges_json(g)}});
    }

    int run_solve() {
        fill_params();
        validate(solve);
        auto [g, source] = load();
        const SolveOutcome o = solve_graph(g, solve);
        if (opt.format == "csv") return emit_text(std::string(kCsvHeader) + "\n" + csv_row(source, g, solve, o, "") + "\n");
        return emit(solve_report(g, source, solve, o));
    }

    int run_oracle() {
        auto [g, source] = load();
        Json j{{"command", "oracle"}, {"kind", oracle_kind}, {"seed", opt.seed}, {"graph_hash", graph_hash(g)},
               {"source", source}, {"n", g.order()}, {"m", g.size()}};
        if (oracle_kind == "tight") {
            Json comps = Json::array();
            int tau = 0;
            for (const auto& c : connected_components(g)) {
                const bool t = brute_tight_check(g, c);
                tau += t;
                comps.push_back({{"vertices", c}, {"tight", t}});
            }
            j["tau"] = tau;
            j["components"] = comps;
        } else {
            const OracleResult r = oracle_kind == "maxbis" ? brute_max_bisection(g) : brute_judicious_optimum(g);
            j["optimum"] = r.optimum;
            j["witness"] = to_json(r.witness);
            j["instances_enumerated"] = r.instances_enumerated;
        }
        return emit(j);
    }

    int run_verify() {
        if (partition_path.empty()) throw UsageError("verify needs --partition");
        auto [g, source] = load();
        const std::string text = read_file(partition_path, in_);
        Bipartition part;
        try {
            part = parse_partition(text);
        } catch (const std::exception& e) {
            throw GraphError(std::string("partition: ") + e.what());
        }
        if (part.order() != g.order())
            throw GraphError("partition has " + std::to_string(part.order()) + " entries for " +
                             std::to_string(g.order()) + " vertices");
        const Json stored = Json::parse(text, nullptr, false);
        if (stored.is_object() && stored.contains("graph_hash") && stored["graph_hash"] != graph_hash(g))
            throw GraphError("partition was computed for graph " + stored["graph_hash"].get<std::string>() +
                             ", input is " + graph_hash(g));
        const BoundReport rep = check_theorem(g, part);
        return emit(Json{{"command", "verify"},
                         {"theorem", theorem},
                         {"seed", opt.seed},
                         {"graph_hash", graph_hash(g)},
                         {"source", source},
                         {"n", g.order()},
                         {"m", g.size()},
                         {"cut", to_json(cut_stats(g, part))},
                         {"report", to_json(rep)}});
    }

    int run_audit() {
        if (delta < 0) throw UsageError("audit needs --delta");
        if (delta < 2 || delta % 2) throw UsageError("audit needs an even --delta >= 2");
        if (resolution < 1) throw UsageError("--resolution must be positive");
        const AuditReport rep = inequality_audit(delta, resolution);
        Json j = to_json(rep);
        j["command"] = "audit";
        j["seed"] = opt.seed;
        j["satisfied"] = rep.violations() == 0;
        return emit(j);
    }

    int run_tightenum() {
        if (census_k < 1 || census_k > 7) throw UsageError("--k must be in 1..7");
        Json rows = Json::array();
        for (int k = 1; k <= census_k; ++k) {
            const TightCensus c = tight_census(k);
            Json ex = Json::array();
            for (const Graph& g : c.examples) ex.push_back(edges_json(g));
            rows.push_back({{"k", k},
                            {"connected", c.connected},
                            {"tight", c.tight},
                            {"odd_clique_trees", c.clique_built},
                            {"tight_not_clique_tree", c.tight_not_built},
                            {"clique_tree_not_tight", c.built_not_tight},
                            {"examples", ex}});
        }
        return emit(Json{{"command", "tightenum"}, {"seed", opt.seed}, {"census", rows}});
    }

    int run_bench();

private:
    std::istream& in_;
    std::ostream& out_;

    void fill_params() {
        if (!eps.empty()) solve.eps = parse_rational(eps);
        if (!alpha.empty()) solve.alpha = parse_rational(alpha);
        if (delta >= 0) solve.delta = delta;
        if (r >= 0) solve.r = r;
        if (max_trials >= 0) solve.max_trials = max_trials;
        solve.seed = opt.seed;
    }

    std::pair<Graph, std::string> load() {
        if (opt.input.empty() == opt.gen.empty()) throw UsageError("give exactly one of --input and --gen");
        if (!opt.gen.empty()) return {generate(parse_generator_spec(opt.gen)), "gen:" + opt.gen};
        return {parse_graph(read_file(opt.input, in_)), opt.input};
    }

    BoundReport check_theorem(const Graph& g, const Bipartition& part) {
        const CutStats st = cut_stats(g, part);
        const long long n = g.order(), m = g.size();
        BoundReport rep;
        rep.theorem = theorem;
        rep.achieved = st.crossing;
        rep.sense = Sense::at_least;
        bool extra = true;  // side conditions beyond the bound
        if (theorem == "edwards") {
            rep.bound = Rational(edwards_bound(m));
        } else if (theorem == "connected-cut") {
            if (connected_components(g).size() != 1) throw PreconditionError("graph is not connected");
            rep.bound = Rational(m, 2) + Rational(n - 1, 4);
        } else if (theorem == "no-isolated-cut") {
            if (n > 0 && g.min_degree() == 0) throw PreconditionError("graph has isolated vertices");
            rep.bound = Rational(m, 2) + Rational(n, 6);
        } else if (theorem == "tight") {
            const int tau = count_tight_components(g).tau;
            rep.bound = tight_bisection_bound(n, m, tau, g.max_degree());
            rep.params = Json{{"tau", tau}, {"max_degree", g.max_degree()}};
            extra = is_bisection(g, part);
        } else if (theorem == "alpha") {
            if (alpha.empty()) throw UsageError("verify --theorem alpha needs --alpha");
            const Rational a = parse_rational(alpha);
            rep.bound = Rational(ceil_of(Rational(m, 2) + a * Rational(n)) - 1);
            const long long floor_side = floor_of((Rational(1, 2) - a) * Rational(n));
            rep.params = Json{{"alpha", to_string(a)}, {"min_side_floor", floor_side}};
            extra = std::min(st.size1, st.size2) >= floor_side;
        } else if (theorem == "judicious") {
            const int d = delta >= 0 ? delta : g.min_degree();
            if (d < 2 || g.min_degree() < d) throw PreconditionError("judicious target needs minimum degree >= delta >= 2");
            const Rational e = eps.empty() ? Rational(1, 20) : parse_rational(eps);
            rep.bound = (judicious_target(d % 2 ? d - 1 : d) + e) * Rational(m);
            rep.achieved = st.max_inside();
            rep.sense = Sense::at_most;
            rep.params = Json{{"delta", d}, {"eps", to_string(e)}};
            extra = is_bisection(g, part);
        } else if (theorem == "bounded" || theorem == "regular") {
            const int rr = r >= 0 ? r : g.max_degree();
            if (rr < 1 || g.max_degree() > rr) throw PreconditionError("maximum degree exceeds r");
            if (theorem == "regular" && g.order() > 0 && g.min_degree() != g.max_degree())
                throw PreconditionError("graph is not regular");
            rep.bound = degree_cut_fraction(rr) * Rational(m);
            rep.params = Json{{"r", rr}, {"gap", std::abs(st.size1 - st.size2)}};
            extra = theorem == "regular" ? is_bisection(g, part) : std::abs(st.size1 - st.size2) <= rr / 2 + 1;
        } else {
            throw UsageError("unknown theorem '" + theorem +
                             "' (edwards, connected-cut, no-isolated-cut, tight, alpha, judicious, bounded, regular)");
        }
        rep.settle();
        rep.satisfied = rep.satisfied && extra;
        return rep;
    }

public:
    int emit(const Json& j) {
        if (opt.format == "json") return emit_text(j.dump(2) + "\n");
        if (opt.format == "human") {
            std::ostringstream s;
            human(j, s);
            return emit_text(s.str());
        }
        throw UsageError("csv output is available for solve and bench only");
    }

    int emit_text(const std::string& text) {
        if (opt.out.empty()) {
            out_ << text;
        } else {
            std::ofstream f(opt.out, std::ios::binary);
            if (!f) throw GraphError("cannot write " + opt.out);
            f << text;
        }
        return kExitOk;
    }
};

struct BenchCase {
    std::string spec;
    std::vector<std::string> algos;
    bool seeded;  // the generator takes a seed
};

int Runner::run_bench() {
    if (opt.format != "json" && opt.format != "csv") throw UsageError("bench writes csv");
    if (reps < 1) throw UsageError("--reps must be positive");
    std::vector<BenchCase> cases;
    if (quick) {
        cases = {{"triangles:t=10", {"tight", "variance"}, false},
                 {"family1:delta=2,x=4,y=3", {"mindeg"}, false},
                 {"random_bounded:n=60,r=3,m=80", {"bounded"}, true},
                 {"random_regular:n=40,r=3", {"regular"}, true}};
    } else {
        cases = {{"triangles:t=30", {"tight", "variance", "star"}, false},
                 {"star:n=16", {"tight"}, false},
                 {"family1:delta=2,x=4,y=3", {"mindeg", "tight"}, false},
                 {"family2:delta=4,n=40", {"mindeg"}, false},
                 {"random_min_degree:n=400,m=1000,delta=2", {"mindeg", "star", "variance"}, true},
                 {"random_bounded:n=300,r=3,m=400", {"bounded", "tight"}, true},
                 {"random_regular:n=300,r=3", {"regular", "bounded"}, true},
                 {"random_regular:n=200,r=4", {"regular"}, true}};
    }
    struct Job {
        std::string spec;
        std::string algo;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (const auto& c : cases)
        for (int rep = 0; rep < (c.seeded ? reps : 1); ++rep) {
            const std::uint64_t s = opt.seed + static_cast<std::uint64_t>(rep);
            const std::string spec = c.seeded ? c.spec + ",seed=" + std::to_string(s) : c.spec;
            for (const auto& a : c.algos) jobs.push_back({spec, a, s});
        }
    std::vector<std::string> rows(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < static_cast<long long>(jobs.size()); ++i) {
        const Job& job = jobs[i];
        const Graph g = generate(parse_generator_spec(job.spec));
        SolveParams p;
        p.algo = job.algo;
        p.seed = job.seed;
        p.lenient = job.algo == "star";
        const auto t0 = std::chrono::steady_clock::now();
        try {
            const SolveOutcome o = solve_graph(g, p);
            const double ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            rows[i] = csv_row("gen:" + job.spec, g, p, o, csv_double(ms));
        } catch (const std::exception&) {
            const auto [family, params] = family_columns("gen:" + job.spec);
            rows[i] = family + ',' + params + ',' + std::to_string(g.order()) + ',' + std::to_string(g.size()) + ',' +
                      job.algo + ',' + std::to_string(job.seed) + ",,,,,error,";
        }
    }
    std::string text = std::string(kCsvHeader) + "\n";
    for (const auto& row : rows) text += row + "\n";
    return emit_text(text);
}

void add_common(CLI::App* sub, Options& o, bool graph_input) {
    if (graph_input) {
        sub->add_option("--input", o.input, "graph file (edge list or DIMACS), - for stdin");
        sub->add_option("--gen", o.gen, "generator spec, e.g. family1:delta=2,x=4,y=3");
    }
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--format", o.format, "json, csv or human")->check(CLI::IsMember({"json", "csv", "human"}));
    sub->add_option("--out", o.out, "write to this file instead of stdout");
}

}  // namespace

void validate(const SolveParams& p) {
    if (std::find(kAlgorithms.begin(), kAlgorithms.end(), p.algo) == kAlgorithms.end())
        throw UsageError("unknown algorithm '" + p.algo + "'");
    auto reject = [&](bool given, const char* name, const char* flag) {
        if (given && !takes(p.algo, name)) throw UsageError(std::string(flag) + " does not apply to --algo " + p.algo);
    };
    reject(p.eps.has_value(), "eps", "--eps");
    reject(p.delta.has_value(), "delta", "--delta");
    reject(p.alpha.has_value(), "alpha", "--alpha");
    reject(p.r.has_value(), "r", "--r");
    reject(p.max_trials.has_value(), "max_trials", "--max-trials");
    if (p.lenient && p.algo != "star") throw UsageError("--lenient applies to --algo star only");
    if (p.algo == "alpha" && !p.alpha) throw UsageError("--algo alpha needs --alpha");
    if (p.eps && *p.eps <= Rational(0)) throw UsageError("--eps must be positive");
    if (p.max_trials && *p.max_trials < 1) throw UsageError("--max-trials must be positive");
    if (p.alpha && (*p.alpha < Rational(0) || *p.alpha > Rational(1, 2))) throw UsageError("--alpha must lie in [0, 1/2]");
}

SolveOutcome solve_graph(const Graph& g, const SolveParams& p) {
    validate(p);
    SolveOutcome o;
    const std::string& a = p.algo;
    if (a == "tight") {
        TightBisection t = tight_bisection(g);
        o.part = t.part;
        o.report = t.report;
        o.detail = Json{{"gain_steps", t.trace.gain_steps}};
    } else if (a == "alpha") {
        AlphaBisection t = alpha_bisection(g, *p.alpha);
        o.part = t.part;
        o.report = t.report;
        o.detail = Json{{"case", t.case_taken}, {"min_side_floor", t.min_side_floor}};
    } else if (a == "variance") {
        VarianceResult t = judicious_bisection_variance(g, p.seed, p.max_trials.value_or(64));
        o.part = t.part;
        o.report = t.report;
        o.detail = Json{{"accepted", t.accepted}, {"trials_used", t.trials_used}, {"cap", t.lambda.cap}};
    } else if (a == "star") {
        StarOptions so;
        if (p.eps) so.eps = *p.eps;
        so.seed = p.seed;
        so.max_trials = p.max_trials.value_or(64);
        so.enforce_degree_hypothesis = !p.lenient;
        JudiciousResult t = judicious_tight_bisection(g, so);
        o.part = t.part;
        o.report = t.report;
        o.detail = to_json(t.detail);
    } else if (a == "mindeg") {
        PipelineOptions po;
        if (p.eps) po.eps = *p.eps;
        po.seed = p.seed;
        po.max_trials = p.max_trials.value_or(64);
        MinDegreeResult t = min_degree_bisection(g, p.delta.value_or(g.order() ? g.min_degree() : 0), po);
        o.part = t.part;
        o.report = t.report;
        o.detail = to_json(t.pipeline);
    } else if (a == "bounded") {
        const int r = p.r.value_or(std::max(1, g.max_degree()));
        ColoringBisection t = bounded_degree_bisection(g, r, Execution::parallel, p.seed);
        BalanceResult b = balance_to_bisection(g, t.part, r);
        o.part = t.part;
        o.report = t.report;
        o.detail = Json{{"coloring", to_json(t.coloring)},
                        {"balanced", {{"partition", to_json(b.part)}, {"report", to_json(b.report)}}}};
    } else {
        RegularBisection t = regular_bisection(g);
        o.part = t.part;
        o.report = t.report;
    }
    return o;
}

Json solve_report(const Graph& g, const std::string& source, const SolveParams& p, const SolveOutcome& o) {
    Json params = Json::object();
    if (p.eps) params["eps"] = to_string(*p.eps);
    if (p.delta) params["delta"] = *p.delta;
    if (p.alpha) params["alpha"] = to_string(*p.alpha);
    if (p.r) params["r"] = *p.r;
    if (p.max_trials) params["max_trials"] = *p.max_trials;
    if (p.lenient) params["lenient"] = true;
    return Json{{"command", "solve"},
                {"algo", p.algo},
                {"seed", p.seed},
                {"params", params},
                {"graph_hash", graph_hash(g)},
                {"source", source},
                {"n", g.order()},
                {"m", g.size()},
                {"partition", to_json(o.part)},
                {"cut", to_json(cut_stats(g, o.part))},
                {"report", to_json(o.report)},
                {"detail", o.detail}};
}

Bipartition parse_partition(const std::string& text) {
    std::vector<Side> sides;
    auto push = [&](long long x) {
        if (x != 1 && x != 2) throw std::invalid_argument("sides must be 1 or 2");
        sides.push_back(x == 1 ? Side::one : Side::two);
    };
    const Json j = Json::parse(text, nullptr, false);
    if (!j.is_discarded() && (j.is_array() || j.is_object())) {
        const Json& arr = j.is_object() ? j.at("partition") : j;
        for (const auto& x : arr) push(x.get<long long>());
        return Bipartition(std::move(sides));
    }
    std::istringstream s(text);
    std::string tok;
    while (s >> tok) push(std::stoll(tok));
    return Bipartition(std::move(sides));
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Runner run(in, out);
    CLI::App app{"Large and judicious bisections of graphs"};
    app.name("bisect");
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "emit a generated graph");
    add_common(gen, run.opt, true);

    auto* solve = app.add_subcommand("solve", "compute a bisection and its bound report");
    add_common(solve, run.opt, true);
    solve->add_option("--algo", run.solve.algo, "tight, alpha, variance, star, mindeg, bounded or regular")->required();
    solve->add_option("--eps", run.eps, "slack, e.g. 1/20 or 0.05");
    solve->add_option("--delta", run.delta, "minimum degree used by mindeg");
    solve->add_option("--alpha", run.alpha, "imbalance parameter for alpha");
    solve->add_option("--r", run.r, "degree bound for bounded");
    solve->add_option("--max-trials", run.max_trials, "random trials before giving up");
    solve->add_flag("--lenient", run.solve.lenient, "star: run even when degrees exceed gamma n");

    auto* oracle = app.add_subcommand("oracle", "exhaustive optimum for small graphs");
    add_common(oracle, run.opt, true);
    oracle->add_option("kind", run.oracle_kind, "maxbis, judicious or tight")
        ->required()
        ->check(CLI::IsMember({"maxbis", "judicious", "tight"}));

    auto* verify = app.add_subcommand("verify", "recheck a partition against a bound");
    add_common(verify, run.opt, true);
    verify->add_option("--theorem", run.theorem, "edwards, connected-cut, no-isolated-cut, tight, alpha, judicious, bounded, regular")
        ->required();
    verify->add_option("--partition", run.partition_path, "partition file (JSON array, solve report, or 1/2 tokens)");
    verify->add_option("--alpha", run.alpha, "alpha for the alpha bound");
    verify->add_option("--eps", run.eps, "slack for the judicious bound");
    verify->add_option("--delta", run.delta, "minimum degree for the judicious bound");
    verify->add_option("--r", run.r, "degree bound for bounded and regular");

    auto* audit = app.add_subcommand("audit", "exact grid audit of the minimum-degree inequalities");
    add_common(audit, run.opt, false);
    audit->add_option("--delta", run.delta, "even minimum degree")->required();
    audit->add_option("--resolution", run.resolution, "grid steps per unit");

    auto* bench = app.add_subcommand("bench", "sweep families and algorithms, CSV output");
    add_common(bench, run.opt, false);
    bench->add_option("--reps", run.reps, "seeds per random family");
    bench->add_flag("--quick", run.quick, "small sweep");

    auto* tightenum = app.add_subcommand("tightenum", "tight graphs versus odd-clique trees on k vertices");
    add_common(tightenum, run.opt, false);
    tightenum->add_option("--k", run.census_k, "largest order, at most 7");

    std::vector<std::string> argv_store{"bisect"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return run.gen(gen->count("--format") > 0);
        if (solve->parsed()) return run.run_solve();
        if (oracle->parsed()) return run.run_oracle();
        if (verify->parsed()) return run.run_verify();
        if (audit->parsed()) return run.run_audit();
        if (bench->parsed()) return run.run_bench();
        if (tightenum->parsed()) return run.run_tightenum();
    } catch (const PreconditionError& e) {
        err << "precondition failed: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const OracleTooLarge& e) {
        err << "oracle limit: " << e.what() << '\n';
        return kExitOracleOverrun;
    } catch (const UsageError& e) {
        err << "invalid configuration: " << e.what() << '\n';
        return kExitUsage;
    } catch (const GraphError& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        err << "invalid configuration: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}

}  // namespace bisect
