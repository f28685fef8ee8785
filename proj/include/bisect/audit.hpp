// Grid audit of the inequalities behind the minimum-degree bound, in exact
// arithmetic on the normalized scale n' = 1.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "bisect/parallel.hpp"
#include "bisect/report.hpp"

namespace bisect {

using Exact = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

std::string to_string(const Exact& x);

/// max sum_i d_i/(i+1) over d >= 0 with sum_i d_i <= 1 and
/// sum_{i < delta-alpha} (delta-alpha-i) d_i <= rho. Vertex enumeration over
/// degrees 0..2 delta + 2.
Exact tau_lp_max(int delta, int alpha, const Exact& rho);

/// max of (1/2) sum_{even i} d_i/(i+1) - (1/(2(delta+1))) sum_i i d_i over
/// d >= 0 with sum_i d_i = 1 and sum_{i < delta-alpha} (delta-alpha-i) d_i <= rho.
Exact degree_lp_max(int delta, int alpha, const Exact& rho);

/// rhs - lhs of theta + (n'+rho)/(2(delta-alpha+1)) <=
/// (2 delta+1) n'/(2(delta+1)) + (alpha theta + rho)/(2(delta+1)) at n' = 1.
Exact alpha_big_slack(int delta, int alpha, const Exact& theta, const Exact& rho);

struct AuditCheck {
    std::string name;
    std::string statement;
    long long points = 0;
    long long violations = 0;
    Exact min_slack;  // rhs - lhs, minimized over the grid
    Exact at_theta, at_rho;
    int at_alpha = 0;
    bool has_witness = false;  // first violation in (theta, rho, alpha) order
    Exact witness_theta, witness_rho;
    int witness_alpha = 0;
};

struct AuditReport {
    int delta = 0;
    int resolution = 0;
    std::vector<AuditCheck> checks;
    Exact corner_slack;  // theta = 1, rho = 0, alpha = 1 in the degree-sequence inequality
    long long violations() const;
};

Json to_json(const AuditCheck& c);
Json to_json(const AuditReport& r);

/// Evaluates every applicable check on theta = i/R, rho = j/R with
/// 0 <= j <= R - i. Throws std::invalid_argument unless delta is even and
/// >= 2 and resolution >= 1.
AuditReport inequality_audit(int delta, int resolution, Execution ex = Execution::parallel);

}  // namespace bisect
