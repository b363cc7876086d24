#include "ldmax/ruin.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ldmax/borel_set.hpp"
#include "ldmax/ldp.hpp"

namespace ldmax {

namespace {

void require_beta(double beta, bool allow_zero) {
    if (!std::isfinite(beta) || beta < 0.0 || (!allow_zero && beta == 0.0))
        throw std::domain_error("beta must be positive");
}

} // namespace

double premium(const TailModel& model, std::int64_t n, double beta) {
    require_beta(beta, true);
    const double log_n = std::log(static_cast<double>(n));
    return std::exp(log_scaling_constant(model, n) + (beta - 1.0) * log_n);
}

double log_ruin_prob(const TailModel& model, std::int64_t n, double beta) {
    require_beta(beta, true);
    // X_(n) > n pi_n  <=>  Z_n > e^(alpha beta)
    return log_exceed_prob(model, n, std::exp(model.alpha() * beta));
}

double ruin_prob_exact(const TailModel& model, std::int64_t n, double beta) {
    return std::exp(log_ruin_prob(model, n, beta));
}

Estimate ruin_prob_mc(const TailModel& model, std::int64_t n, double beta,
                      const SimConfig& cfg, int threads) {
    require_beta(beta, true);
    const BorelSubset a({Interval{std::exp(model.alpha() * beta),
                                  std::numeric_limits<double>::infinity(),
                                  false, false}});
    return estimate_set_prob(model, n, a, cfg, threads);
}

DecayFit decay_slope(const RuinScenario& scenario) {
    if (scenario.beta == 0.0)
        throw degenerate_data_error("decay fit requires beta > 0");
    require_beta(scenario.beta, false);
    if (scenario.n_grid.size() < 2)
        throw std::domain_error("decay fit requires at least two grid points");
    for (std::size_t i = 0; i < scenario.n_grid.size(); ++i) {
        if (scenario.n_grid[i] < 3)
            throw std::domain_error("n_grid entries must be >= 3");
        if (i > 0 && scenario.n_grid[i - 1] >= scenario.n_grid[i])
            throw std::domain_error("n_grid must be strictly increasing");
    }

    std::vector<double> xs, ys;
    for (std::int64_t n : scenario.n_grid) {
        const double lp = log_ruin_prob(scenario.model, n, scenario.beta);
        if (lp == -std::numeric_limits<double>::infinity())
            throw degenerate_data_error("ruin probability vanished on the grid");
        xs.push_back(std::log(static_cast<double>(n)));
        ys.push_back(lp);
    }
    const auto m = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    DecayFit fit;
    fit.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / m;
    fit.target = -scenario.model.alpha() * scenario.beta;
    for (std::size_t i = 0; i < xs.size(); ++i)
        fit.residual_max = std::max(fit.residual_max,
                                    std::fabs(fit.intercept + fit.slope * xs[i] - ys[i]));
    return fit;
}

} // namespace ldmax
