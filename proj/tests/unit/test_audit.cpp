#include "bisect/audit.hpp"
#include "bisect/rng.hpp"
#include "doctest.h"

using namespace bisect;

namespace {

Exact q(long long p, long long r) { return Exact(p) / Exact(r); }

const AuditCheck& find(const AuditReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return c;
    throw std::runtime_error("no check " + name);
}

}  // namespace

TEST_CASE("tau LP optimum equals the closed form") {
    for (int delta : {2, 4, 6, 8})
        for (int alpha = 1; alpha < delta; ++alpha)
            for (int j = 0; j <= 12; ++j) {
                const Exact rho = q(j, 12);
                CHECK(tau_lp_max(delta, alpha, rho) == (Exact(1) + rho) / Exact(delta - alpha + 1));
            }
}

TEST_CASE("degree LP optimum for alpha = 1 equals the rho bound while d_0 = rho/(delta-1) <= 1") {
    for (int delta : {2, 4, 6, 10})
        for (int j = 0; j <= 10; ++j) {
            const Exact rho = q(j, 10);
            if (rho > Exact(delta - 1)) continue;
            const Exact bound = -q(delta - 1, 2 * (delta + 1)) + Exact(delta) * rho / Exact((delta - 1) * (delta + 1));
            CHECK(degree_lp_max(delta, 1, rho) == bound);
        }
}

TEST_CASE("random feasible degree vectors never beat the LP optimum") {
    Rng rng(9);
    for (int it = 0; it < 2000; ++it) {
        const int delta = 2 * (1 + static_cast<int>(rng.below(4)));
        const int alpha = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(delta - 1)));
        const int D = 2 * delta + 2;
        std::vector<long long> w(static_cast<std::size_t>(D) + 1);
        long long total = 0;
        for (auto& x : w) total += x = static_cast<long long>(rng.below(4)) * (rng.below(3) == 0);
        if (total == 0) continue;
        Exact def(0), tau(0), obj(0);
        for (int i = 0; i <= D; ++i) {
            const Exact di = q(w[i], total);
            def += Exact(std::max(0, delta - alpha - i)) * di;
            tau += di / Exact(i + 1);
            obj += (i % 2 == 0 ? di / Exact(2 * (i + 1)) : Exact(0)) - Exact(i) * di / Exact(2 * (delta + 1));
        }
        CHECK(tau <= tau_lp_max(delta, alpha, def));
        CHECK(obj <= degree_lp_max(delta, alpha, def));
    }
}

TEST_CASE("audit examples") {
    AuditReport r6 = inequality_audit(6, 40);
    CHECK(find(r6, "alpha_big").violations == 0);
    CHECK(find(r6, "alpha_big").points > 0);

    AuditReport r4 = inequality_audit(4, 40);
    CHECK(find(r4, "degrees_alpha_three").violations == 0);
    CHECK(find(r4, "alpha_two").violations == 0);

    for (int delta : {2, 4, 6, 8}) {
        AuditReport r = inequality_audit(delta, 20);
        CHECK(r.corner_slack == Exact(0));
        CHECK(r.violations() == 0);
        const AuditCheck& c = find(r, "degrees_alpha_one");
        CHECK(c.min_slack == Exact(0));
        CHECK(c.at_theta == Exact(1));
        CHECK(c.at_rho == Exact(0));
    }
}

TEST_CASE("audit applies checks by delta") {
    AuditReport r2 = inequality_audit(2, 10);
    for (const auto& c : r2.checks) {
        CHECK(c.name != "alpha_two");
        CHECK(c.name != "alpha_big");
    }
    CHECK_THROWS_AS(inequality_audit(3, 10), std::invalid_argument);
    CHECK_THROWS_AS(inequality_audit(4, 0), std::invalid_argument);
}

TEST_CASE("the crude inequality fails for alpha = 1 and 2, as the refined cases require") {
    CHECK(alpha_big_slack(6, 2, Exact(1), Exact(0)) < Exact(0));
    CHECK(alpha_big_slack(6, 1, Exact(1), Exact(0)) < Exact(0));
    CHECK(alpha_big_slack(6, 3, Exact(1), Exact(0)) >= Exact(0));
    CHECK(alpha_big_slack(6, 5, Exact(1), Exact(0)) >= Exact(0));
}

TEST_CASE("serial and parallel audits agree") {
    for (int delta : {2, 4, 6}) {
        Json a = to_json(inequality_audit(delta, 30, Execution::serial));
        Json b = to_json(inequality_audit(delta, 30, Execution::parallel));
        CHECK(a == b);
    }
}
