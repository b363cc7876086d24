#ifndef LDMAX_RUIN_HPP
#define LDMAX_RUIN_HPP

#include <cstdint>
#include <vector>

#include "ldmax/mc.hpp"
#include "ldmax/tail_model.hpp"

namespace ldmax {

// A maximum-claim portfolio: n policies, premium a_n n^(beta-1) per policy,
// ruin when the largest claim exceeds total premium income n pi_n = a_n n^beta.
struct RuinScenario {
    TailModel model;
    double beta = 1.0;
    std::vector<std::int64_t> n_grid;
};

struct DecayFit {
    double slope = 0.0;
    double intercept = 0.0;
    double target = 0.0; // -alpha * beta
    double residual_max = 0.0;
};

// Per-policy premium pi_n = a_n n^(beta-1).
double premium(const TailModel& model, std::int64_t n, double beta);

// RP_n = P(X_(n) > n pi_n) = P(Z_n > e^(alpha beta)), via the exact engine.
// beta = 0 is admitted for the classical-scale regime pi_n = a_n / n.
double ruin_prob_exact(const TailModel& model, std::int64_t n, double beta);
double log_ruin_prob(const TailModel& model, std::int64_t n, double beta);

Estimate ruin_prob_mc(const TailModel& model, std::int64_t n, double beta,
                      const SimConfig& cfg, int threads = 1);

// OLS fit of ln RP_n against ln n over the scenario grid; refuses beta = 0
// and any vanishing probability.
DecayFit decay_slope(const RuinScenario& scenario);

// Raised when the decay fit meets degenerate data (RP_n = 0 or beta = 0).
struct degenerate_data_error : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace ldmax

#endif
