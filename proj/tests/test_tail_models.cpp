#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "ldmax/tail_model.hpp"

using ldmax::TailModel;

namespace {

const double kE = std::exp(1.0);

// Independent quantile oracle: bisection on survival() itself.
double bisect_quantile(const TailModel& m, double u, double lo, double hi) {
    // solve F(x) = u, i.e. survival(x) = 1 - u
    const double target = 1.0 - u;
    for (int i = 0; i < 400 && hi - lo > 1e-13 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (m.survival(mid) > target) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<TailModel> all_models() {
    return {TailModel::pareto(1.0, 1.0), TailModel::burr(1.0, 2.0),
            TailModel::log_pareto(1.0, 0.5, 1.0),
            TailModel::log_pareto(1.0, -0.5, 1.0)};
}

} // namespace

TEST_CASE("survival closed forms") {
    CHECK(TailModel::pareto(1, 1).survival(2.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(TailModel::burr(1, 2).survival(9.0) == doctest::Approx(0.01).epsilon(1e-14));
    CHECK(TailModel::log_pareto(1, 0.5, 1).survival(kE)
          == doctest::Approx(std::exp(-1.0) * std::sqrt(2.0)).epsilon(1e-14));
    // below the support
    CHECK(TailModel::pareto(1, 1).survival(0.5) == 1.0);
    CHECK(TailModel::log_pareto(1, 0.5, 1).survival(0.9) == 1.0);
    CHECK_THROWS_AS((void)TailModel::pareto(1, 1).survival(
                        std::numeric_limits<double>::quiet_NaN()),
                    std::invalid_argument);
}

TEST_CASE("density closed forms") {
    CHECK(TailModel::pareto(1, 1).density(2.0) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(TailModel::burr(1, 2).density(1.0) == doctest::Approx(0.25).epsilon(1e-14));
    const double lp_expected = std::exp(-1.0) * std::sqrt(2.0) * (1.0 - 0.25) / kE;
    CHECK(TailModel::log_pareto(1, 0.5, 1).density(kE)
          == doctest::Approx(lp_expected).epsilon(1e-13));
    CHECK(TailModel::pareto(1, 1).density(0.5) == 0.0);
    CHECK_THROWS_AS((void)TailModel::burr(1, 2).density(
                        std::numeric_limits<double>::infinity()),
                    std::invalid_argument);
}

TEST_CASE("quantile closed forms and oracle") {
    CHECK(TailModel::pareto(1, 1).quantile(0.5) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(TailModel::burr(1, 2).quantile(0.99) == doctest::Approx(9.0).epsilon(1e-12));
    const TailModel lp = TailModel::log_pareto(1, 0.5, 1);
    const double oracle = bisect_quantile(lp, 0.99, 1.0, 1e6);
    CHECK(lp.quantile(0.99) == doctest::Approx(oracle).epsilon(1e-10));
    CHECK_THROWS_AS((void)lp.quantile(0.0), std::domain_error);
    CHECK_THROWS_AS((void)lp.quantile(1.0), std::domain_error);
}

TEST_CASE("slowly varying part") {
    CHECK(TailModel::pareto(1, 1).slowly_varying_part(7.0) == doctest::Approx(1.0));
    CHECK(TailModel::burr(1, 2).slowly_varying_part(10.0)
          == doctest::Approx(100.0 / 121.0).epsilon(1e-14));
    CHECK(TailModel::log_pareto(2, 1, 1).slowly_varying_part(kE)
          == doctest::Approx(2.0).epsilon(1e-14));
    CHECK_THROWS_AS((void)TailModel::pareto(1, 2).slowly_varying_part(1.0),
                    std::domain_error);
}

TEST_CASE("construction constraints") {
    CHECK_THROWS_AS(TailModel::pareto(-1, 1), std::invalid_argument);
    CHECK_THROWS_AS(TailModel::burr(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(TailModel::log_pareto(1, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(TailModel::log_pareto(1, -1, 1), std::invalid_argument);
    CHECK(TailModel::burr(0.5, 3).alpha() == doctest::Approx(1.5));
}

TEST_CASE("round-trip survival(quantile(u)) = 1-u") {
    for (const auto& m : all_models()) {
        for (double lu = -12.0; lu < -0.05; lu += 0.5) {
            const double one_minus_u = std::pow(10.0, lu); // u = 1 - 10^lu
            const double u = 1.0 - one_minus_u;
            const double x = m.quantile(u);
            CHECK(m.survival(x)
                  == doctest::Approx(one_minus_u).epsilon(1e-10));
        }
        for (double lu = -12.0; lu < -1.0; lu += 1.0) {
            const double u = std::pow(10.0, lu); // small u
            const double x = m.quantile(u);
            CHECK(1.0 - m.survival(x) == doctest::Approx(u).epsilon(1e-8));
        }
    }
}

TEST_CASE("monotone survival, nonnegative density") {
    for (const auto& m : all_models()) {
        const double lo = std::max(m.support_low(), 1e-6);
        double prev = m.survival(lo);
        for (int i = 1; i < 10000; ++i) {
            const double x = lo * std::pow(1e8 / lo, i / 9999.0);
            const double s = m.survival(x);
            CHECK(s < prev);
            CHECK(m.density(x) >= 0.0);
            prev = s;
        }
    }
}

TEST_CASE("slow variation of L") {
    struct Case { TailModel m; double rate_const; };
    const std::vector<Case> cases = {
        {TailModel::burr(1, 2), 2.0},
        {TailModel::log_pareto(1, 0.5, 1), 1.5},
        {TailModel::log_pareto(1, -0.5, 1), 1.5},
    };
    const double ln2 = std::log(2.0);
    for (const auto& c : cases) {
        double prev = std::numeric_limits<double>::infinity();
        for (double x : {1e2, 1e4, 1e6, 1e8}) {
            const double d = std::fabs(c.m.slowly_varying_part(2.0 * x)
                                       / c.m.slowly_varying_part(x) - 1.0);
            CHECK(d < prev);
            CHECK(d <= 2.0 * c.rate_const * ln2 / std::log(x));
            prev = d;
        }
    }
    // Pareto: exactly constant
    const TailModel p = TailModel::pareto(1.5, 2.0);
    const double l0 = p.slowly_varying_part(2.0);
    for (double x : {2.0, 10.0, 1e4, 1e8})
        CHECK(p.slowly_varying_part(x) == l0);
}

TEST_CASE("density matches -d survival/dx") {
    for (const auto& m : all_models()) {
        for (double x : {1.5, 3.0, 10.0, 100.0, 1e4}) {
            const double h = x * 1e-5;
            const double fd = (m.survival(x - h) - m.survival(x + h)) / (2.0 * h);
            CHECK(fd == doctest::Approx(m.density(x)).epsilon(1e-6));
        }
    }
}

TEST_CASE("sample_one is the quantile") {
    const TailModel m = TailModel::burr(1, 2);
    CHECK(m.sample_one(0.99) == m.quantile(0.99));
}
