#include "bisect/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace bisect {

long long edwards_bound(long long m) {
    if (m <= 0) return 0;
    // smallest c with 8c - 4m + 1 >= sqrt(8m + 1)
    auto ok = [m](long long c) {
        long long lhs = 8 * c - 4 * m + 1;
        return lhs >= 0 && lhs * lhs >= 8 * m + 1;
    };
    long long c = static_cast<long long>(std::ceil((4.0 * m + std::sqrt(8.0 * m + 1) - 1) / 8.0));
    while (c > 0 && ok(c - 1)) --c;
    while (!ok(c)) ++c;
    return c;
}

Rational tight_bisection_bound(long long n, long long m, long long tau, long long max_degree) {
    return Rational(m, 2) + Rational(n - std::max(tau, max_degree - 1), 4);
}

Rational judicious_target(long long delta) { return Rational(delta + 2, 4 * (delta + 1)); }

Rational judicious_floor(long long delta, long long m) {
    return judicious_target(delta) * Rational(m) - Rational(delta + 2, 4);
}

AnalyticBounds analytic_bounds(const Graph& g, long long tau) {
    AnalyticBounds b;
    const long long n = g.order(), m = g.size();
    b.edwards = edwards_bound(m);
    b.connected_cut = Rational(m, 2) + Rational(n - 1, 4);
    b.no_isolated_cut = Rational(m, 2) + Rational(n, 6);
    b.tight_bisection = tight_bisection_bound(n, m, tau, g.max_degree());
    b.judicious_floor = judicious_floor(g.min_degree(), m);
    b.connected = n > 0 && connected_components(g).size() == 1;
    b.no_isolated = g.min_degree() > 0 || n == 0;
    return b;
}

Json to_json(const AnalyticBounds& b) {
    return Json{{"edwards", b.edwards},
                {"connected_cut", to_string(b.connected_cut)},
                {"no_isolated_cut", to_string(b.no_isolated_cut)},
                {"tight_bisection", to_string(b.tight_bisection)},
                {"judicious_floor", to_string(b.judicious_floor)},
                {"connected", b.connected},
                {"no_isolated", b.no_isolated}};
}

}  // namespace bisect
