#include "bisect/audit.hpp"

#include <functional>
#include <stdexcept>

namespace bisect {

namespace {

Exact frac(long long p, long long q) { return Exact(p) / Exact(q); }

int lp_support(int delta) { return 2 * delta + 2; }

// Deficiency coefficient of d_i when alpha huge vertices are present.
long long deficiency(int delta, int alpha, int i) { return std::max(0, delta - alpha - i); }

template <class Objective>
Exact lp_max(int delta, int alpha, const Exact& rho, bool sum_is_equality, Objective obj) {
    const int D = lp_support(delta);
    bool any = false;
    Exact best;
    auto offer = [&](const Exact& v) {
        if (!any || v > best) best = v;
        any = true;
    };
    if (!sum_is_equality) offer(Exact(0));
    for (int i = 0; i <= D; ++i) {
        const long long c = deficiency(delta, alpha, i);
        if (Exact(c) <= rho) offer(obj(i));
        if (!sum_is_equality && c > 0 && rho < Exact(c)) offer(obj(i) * rho / Exact(c));
    }
    // both constraints tight on a two-point support
    for (int i = 0; i <= D; ++i)
        for (int j = i + 1; j <= D; ++j) {
            const long long ci = deficiency(delta, alpha, i), cj = deficiency(delta, alpha, j);
            if (ci == cj) continue;
            const Exact di = (rho - Exact(cj)) / Exact(ci - cj);
            if (di < Exact(0) || di > Exact(1)) continue;
            offer(di * obj(i) + (Exact(1) - di) * obj(j));
        }
    return best;
}

struct CheckDef {
    std::string name;
    std::string statement;
    std::vector<int> alphas;
    std::function<bool(const Exact& theta)> applies;
    std::function<Exact(const Exact& theta, int j, int alpha)> slack;
};

struct Partial {
    long long points = 0;
    long long violations = 0;
    bool has_min = false;
    Exact min_slack, at_theta, at_rho;
    int at_alpha = 0;
    bool has_witness = false;
    Exact w_theta, w_rho;
    int w_alpha = 0;

    void add(const Exact& theta, const Exact& rho, int alpha, const Exact& s) {
        ++points;
        if (!has_min || s < min_slack) {
            has_min = true;
            min_slack = s;
            at_theta = theta;
            at_rho = rho;
            at_alpha = alpha;
        }
        if (s < Exact(0)) {
            ++violations;
            if (!has_witness) {
                has_witness = true;
                w_theta = theta;
                w_rho = rho;
                w_alpha = alpha;
            }
        }
    }

    // `later` covers grid rows after this one
    void merge(const Partial& later) {
        points += later.points;
        violations += later.violations;
        if (later.has_min && (!has_min || later.min_slack < min_slack)) {
            has_min = true;
            min_slack = later.min_slack;
            at_theta = later.at_theta;
            at_rho = later.at_rho;
            at_alpha = later.at_alpha;
        }
        if (!has_witness && later.has_witness) {
            has_witness = true;
            w_theta = later.w_theta;
            w_rho = later.w_rho;
            w_alpha = later.w_alpha;
        }
    }
};

}  // namespace

std::string to_string(const Exact& x) {
    const auto num = boost::multiprecision::numerator(x);
    const auto den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Exact tau_lp_max(int delta, int alpha, const Exact& rho) {
    if (alpha < 0 || alpha > delta) throw std::invalid_argument("tau_lp_max needs 0 <= alpha <= delta");
    return lp_max(delta, alpha, rho, false, [](int i) { return frac(1, i + 1); });
}

Exact degree_lp_max(int delta, int alpha, const Exact& rho) {
    if (alpha < 0 || alpha > delta) throw std::invalid_argument("degree_lp_max needs 0 <= alpha <= delta");
    return lp_max(delta, alpha, rho, true, [delta](int i) {
        return (i % 2 == 0 ? frac(1, 2 * (i + 1)) : Exact(0)) - frac(i, 2 * (delta + 1));
    });
}

Exact alpha_big_slack(int delta, int alpha, const Exact& theta, const Exact& rho) {
    const long long d = delta;
    return frac(2 * d + 1, 2 * (d + 1)) + (Exact(alpha) * theta + rho) / Exact(2 * (d + 1)) - theta -
           (Exact(1) + rho) / Exact(2 * (d - alpha + 1));
}

long long AuditReport::violations() const {
    long long v = 0;
    for (const auto& c : checks) v += c.violations;
    return v;
}

Json to_json(const AuditCheck& c) {
    Json j{{"name", c.name},
           {"statement", c.statement},
           {"points", c.points},
           {"violations", c.violations},
           {"min_slack", to_string(c.min_slack)},
           {"min_slack_value", static_cast<double>(c.min_slack)},
           {"min_slack_at", {{"theta", to_string(c.at_theta)}, {"rho", to_string(c.at_rho)}, {"alpha", c.at_alpha}}}};
    if (c.has_witness)
        j["witness"] = {{"theta", to_string(c.witness_theta)},
                        {"rho", to_string(c.witness_rho)},
                        {"alpha", c.witness_alpha}};
    else
        j["witness"] = nullptr;
    return j;
}

Json to_json(const AuditReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    return Json{{"delta", r.delta},
                {"resolution", r.resolution},
                {"violations", r.violations()},
                {"corner_slack", to_string(r.corner_slack)},
                {"checks", checks}};
}

AuditReport inequality_audit(int delta, int resolution, Execution ex) {
    if (delta < 2 || delta % 2 != 0) throw std::invalid_argument("audit needs an even delta >= 2");
    if (resolution < 1) throw std::invalid_argument("audit needs resolution >= 1");
    const int R = resolution;
    const long long d = delta;

    std::vector<Exact> rho_at(static_cast<std::size_t>(R) + 1);
    for (int j = 0; j <= R; ++j) rho_at[j] = frac(j, R);

    // LP optima depend on rho only
    std::vector<std::vector<Exact>> tau_lp(static_cast<std::size_t>(delta));
    for (int a = 1; a < delta; ++a) {
        tau_lp[a].resize(static_cast<std::size_t>(R) + 1);
        for (int j = 0; j <= R; ++j) tau_lp[a][j] = tau_lp_max(delta, a, rho_at[j]);
    }
    std::vector<Exact> deg_lp1(static_cast<std::size_t>(R) + 1), deg_lp3;
    for (int j = 0; j <= R; ++j) deg_lp1[j] = degree_lp_max(delta, 1, rho_at[j]);
    if (delta == 4) {
        deg_lp3.resize(static_cast<std::size_t>(R) + 1);
        for (int j = 0; j <= R; ++j) deg_lp3[j] = degree_lp_max(4, 3, rho_at[j]);
    }

    auto always = [](const Exact&) { return true; };
    std::vector<CheckDef> defs;
    {
        std::vector<int> as;
        for (int a = 1; a < delta; ++a) as.push_back(a);
        defs.push_back({"tau_by_rho",
                        "max sum d_i/(i+1) under the deficiency constraint <= (n'+rho)/(delta-alpha+1)", as, always,
                        [&](const Exact&, int j, int a) {
                            return (Exact(1) + rho_at[j]) / Exact(d - a + 1) - tau_lp[a][j];
                        }});
    }
    if (delta >= 4)
        defs.push_back({"alpha_two",
                        "alpha = 2, theta <= 3n'/5: theta + (n'+rho)/(2(delta-1)) <= n'/2 + delta n'/(2(delta+1))",
                        {2},
                        [](const Exact& t) { return t <= frac(3, 5); },
                        [&](const Exact& t, int j, int) {
                            return frac(1, 2) + frac(d, 2 * (d + 1)) - t -
                                   (Exact(1) + rho_at[j]) / Exact(2 * (d - 1));
                        }});
    if (delta >= 6) {
        std::vector<int> as;
        for (int a = 3; a <= delta - 1; ++a) as.push_back(a);
        defs.push_back({"alpha_big",
                        "theta + (n'+rho)/(2(delta-alpha+1)) <= (2delta+1)n'/(2(delta+1)) + (alpha theta+rho)/(2(delta+1))",
                        as, always, [&](const Exact& t, int j, int a) {
                            return alpha_big_slack(delta, a, t, rho_at[j]);
                        }});
    }
    defs.push_back({"degrees_alpha_one",
                    "theta + (1/2) sum_even d_i/(i+1) <= n'/2 + (alpha theta + rho + (1/2) sum i d_i)/(delta+1), alpha = 1",
                    {1}, always, [&](const Exact& t, int j, int) {
                        return frac(1, 2) + (t + rho_at[j]) / Exact(d + 1) - t - deg_lp1[j];
                    }});
    if (delta == 4)
        defs.push_back({"degrees_alpha_three",
                        "the degree-sequence inequality for (delta, alpha) = (4, 3)",
                        {3}, always, [&](const Exact& t, int j, int) {
                            return frac(1, 2) + (Exact(3) * t + rho_at[j]) / Exact(5) - t - deg_lp3[j];
                        }});
    defs.push_back({"objective_by_rho",
                    "max degree objective <= -(delta-1)n'/(2(delta+1)) + delta rho/((delta-1)(delta+1))",
                    {1}, always, [&](const Exact&, int j, int) {
                        return -frac(d - 1, 2 * (d + 1)) + Exact(d) * rho_at[j] / Exact((d - 1) * (d + 1)) - deg_lp1[j];
                    }});
    defs.push_back({"alpha_one_reduction",
                    "-(delta-1)n'/(2(delta+1)) + delta rho/((delta-1)(delta+1)) <= n'/2 + (theta+rho)/(delta+1) - theta",
                    {1}, always, [&](const Exact& t, int j, int) {
                        const Exact& r = rho_at[j];
                        return frac(1, 2) + (t + r) / Exact(d + 1) - t -
                               (-frac(d - 1, 2 * (d + 1)) + Exact(d) * r / Exact((d - 1) * (d + 1)));
                    }});

    const std::size_t K = defs.size();
    std::vector<std::vector<Partial>> rows(static_cast<std::size_t>(R) + 1, std::vector<Partial>(K));
    auto row = [&](int i) {
        const Exact theta = frac(i, R);
        for (std::size_t k = 0; k < K; ++k) {
            if (!defs[k].applies(theta)) continue;
            for (int j = 0; j <= R - i; ++j)
                for (int a : defs[k].alphas) rows[i][k].add(theta, rho_at[j], a, defs[k].slack(theta, j, a));
        }
    };
    if (ex == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (int i = 0; i <= R; ++i) row(i);
    } else {
        for (int i = 0; i <= R; ++i) row(i);
    }

    AuditReport rep;
    rep.delta = delta;
    rep.resolution = R;
    for (std::size_t k = 0; k < K; ++k) {
        Partial total;
        for (int i = 0; i <= R; ++i) total.merge(rows[i][k]);
        AuditCheck c;
        c.name = defs[k].name;
        c.statement = defs[k].statement;
        c.points = total.points;
        c.violations = total.violations;
        c.min_slack = total.min_slack;
        c.at_theta = total.at_theta;
        c.at_rho = total.at_rho;
        c.at_alpha = total.at_alpha;
        c.has_witness = total.has_witness;
        c.witness_theta = total.w_theta;
        c.witness_rho = total.w_rho;
        c.witness_alpha = total.w_alpha;
        rep.checks.push_back(std::move(c));
    }
    rep.corner_slack = frac(1, 2) + Exact(1) / Exact(d + 1) - Exact(1) - degree_lp_max(delta, 1, Exact(0));
    return rep;
}

}  // namespace bisect
