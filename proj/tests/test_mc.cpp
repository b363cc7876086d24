#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "ldmax/ldp.hpp"
#include "ldmax/mc.hpp"

using namespace ldmax;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

BorelSubset ray(double low) { return BorelSubset({Interval{low, kInf, false, false}}); }

// Two-sample Kolmogorov-Smirnov statistic.
double ks_two_sample(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j]) ++i; else ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / a.size()
                                  - static_cast<double>(j) / b.size()));
    }
    return d;
}

} // namespace

TEST_CASE("sample_max closed forms") {
    const TailModel p = TailModel::pareto(1, 1);
    CHECK(sample_max(p, 1, 0.5) == doctest::Approx(p.quantile(0.5)).epsilon(1e-14));
    CHECK(sample_max(p, 100, std::exp(-1.0))
          == doctest::Approx(1.0 / -std::expm1(-0.01)).epsilon(1e-12));
    const TailModel b = TailModel::burr(1, 2);
    CHECK(sample_max(b, 4, std::pow(0.99, 4)) == doctest::Approx(9.0).epsilon(1e-10));
    CHECK_THROWS_AS((void)sample_max(p, 100, 0.0), std::domain_error);
    CHECK_THROWS_AS((void)sample_max(p, std::int64_t{1} << 53, 0.5), std::domain_error);
}

TEST_CASE("brute force max") {
    const TailModel p = TailModel::pareto(1, 1);
    const std::vector<double> us = {0.5, 0.75, 0.9};
    CHECK(brute_force_max(p, 3, us) == doctest::Approx(10.0).epsilon(1e-13));
    CHECK(brute_force_max(p, 1, std::vector<double>{0.5}) == p.sample_one(0.5));
    CHECK_THROWS_AS((void)brute_force_max(p, 2, us), std::domain_error);
}

TEST_CASE("sampler law agrees with brute force (two-sample KS)") {
    const TailModel p = TailModel::pareto(1, 1);
    const std::int64_t n = 50;
    const int reps = 100000;
    std::vector<double> direct, brute;
    direct.reserve(reps);
    brute.reserve(reps);
    detail::ChunkRng rng_a(7, 0), rng_b(7, 1);
    std::vector<double> us(static_cast<std::size_t>(n));
    for (int r = 0; r < reps; ++r) {
        direct.push_back(sample_max(p, n, rng_a.next_uniform()));
        for (auto& u : us) u = rng_b.next_uniform();
        brute.push_back(brute_force_max(p, n, us));
    }
    CHECK(ks_two_sample(direct, brute) < 1.628 * std::sqrt(2.0 / reps));
}

TEST_CASE("estimate_set_prob basics") {
    const TailModel p = TailModel::pareto(1, 1);
    const BorelSubset null_set({Interval{2, 2, true, true}});
    const Estimate z = estimate_set_prob(p, 100, null_set, {1000, 3, 100});
    CHECK(z.p_hat == 0.0);
    CHECK(z.ci_low == 0.0);

    const Estimate one = estimate_set_prob(p, 100, ray(1.0), {1, 3, 1});
    CHECK((one.p_hat == 0.0 || one.p_hat == 1.0));
    CHECK(one.ci_low <= one.p_hat);
    CHECK(one.ci_high >= one.p_hat);

    CHECK_THROWS_AS((void)estimate_set_prob(p, 100, ray(1.0), {100, 3, 200}),
                    std::domain_error);
}

TEST_CASE("estimate agrees with the exact engine") {
    const TailModel p = TailModel::pareto(1, 1);
    const BorelSubset a = ray(1.5);
    const double exact = exact_set_prob(p, 1000, a);
    const Estimate est = estimate_set_prob(p, 1000, a, {100000, 99, 4096});
    CHECK(std::fabs(est.p_hat - exact) <= 4.0 * est.stderr_);
    CHECK(est.ci_low <= est.p_hat);
    CHECK(est.p_hat <= est.ci_high);
    CHECK(est.stderr_ == doctest::Approx(std::sqrt(est.p_hat * (1 - est.p_hat) / 100000)));
}

TEST_CASE("deterministic across thread counts and runs") {
    const TailModel b = TailModel::burr(1, 2);
    const BorelSubset a = ray(1.3);
    const SimConfig cfg{50000, 1234, 512};
    const Estimate serial = estimate_set_prob(b, 500, a, cfg, 1);
    const Estimate again = estimate_set_prob(b, 500, a, cfg, 1);
    const Estimate par4 = estimate_set_prob(b, 500, a, cfg, 4);
    const Estimate par7 = estimate_set_prob(b, 500, a, cfg, 7);
    CHECK(serial.p_hat == again.p_hat);
    CHECK(serial.p_hat == par4.p_hat);
    CHECK(serial.p_hat == par7.p_hat);
}

TEST_CASE("wilson interval engages for rare counts") {
    const TailModel p = TailModel::pareto(1, 1);
    // a far set: a handful of hits at most
    const Estimate est = estimate_set_prob(p, 1000, ray(8.0), {20000, 5, 1000});
    CHECK(est.p_hat < 1e-3);
    CHECK(est.ci_high > est.p_hat); // Wilson upper stays positive even at 0 hits
    CHECK(est.ci_low >= 0.0);
}
