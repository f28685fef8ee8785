// Closed-form cut and bisection bounds.
#pragma once

#include "bisect/graph.hpp"
#include "bisect/rational.hpp"
#include "bisect/report.hpp"

namespace bisect {

/// ceil(m/2 + sqrt(m/8 + 1/64) - 1/8), computed exactly in integers.
long long edwards_bound(long long m);

/// m/2 + (n - max(tau, Delta - 1))/4
Rational tight_bisection_bound(long long n, long long m, long long tau, long long max_degree);

/// (delta+2)/(4(delta+1)) m - (delta+2)/4
Rational judicious_floor(long long delta, long long m);

/// (delta+2)/(4(delta+1))
Rational judicious_target(long long delta);

struct AnalyticBounds {
    long long edwards = 0;
    Rational connected_cut;     // m/2 + (n-1)/4, connected graphs
    Rational no_isolated_cut;   // m/2 + n/6, no isolated vertices
    Rational tight_bisection;
    Rational judicious_floor;   // with delta = minimum degree
    bool connected = false;
    bool no_isolated = false;
};

AnalyticBounds analytic_bounds(const Graph& g, long long tau);

Json to_json(const AnalyticBounds& b);

}  // namespace bisect
