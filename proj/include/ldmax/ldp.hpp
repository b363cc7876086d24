#ifndef LDMAX_LDP_HPP
#define LDMAX_LDP_HPP

#include <cstdint>

#include "ldmax/borel_set.hpp"
#include "ldmax/tail_model.hpp"

namespace ldmax {

// One row of a convergence table for the normalized log-probability
// R_n = ln P(Z_n in A) / ln n against the target -ess.inf_A ln x.
struct RatePoint {
    std::int64_t n = 0;
    double prob = 0.0;
    double r_n = 0.0;
    double target = 0.0;
    double gap = 0.0;
};

// a_n = F^{<-}(1 - 1/n), the typical scale of the maximum. Cached per
// (model, n); safe under concurrent reads and idempotent fills.
double log_scaling_constant(const TailModel& model, std::int64_t n);
double scaling_constant(const TailModel& model, std::int64_t n);

// t_n(x) = a_n x^{ln n / alpha}, assembled in log space.
double log_threshold(const TailModel& model, std::int64_t n, double x);
double threshold(const TailModel& model, std::int64_t n, double x);

// Z_n realized at a given maximum: (max_value / a_n)^{alpha / ln n}.
double z_value(const TailModel& model, std::int64_t n, double max_value);

// ln P(X_(n) > t) for ln t given; the shared core of the exact engine.
// Computed as ln(-expm1(n log1p(-F-bar(t)))), stable down to log
// probabilities of order -1e9 and beyond.
double log_exceed_at_log_threshold(const TailModel& model, std::int64_t n,
                                   double log_t);

// P(Z_n > x) = 1 - F^n(t_n(x)) for x >= 1, and its logarithm.
double exact_exceed_prob(const TailModel& model, std::int64_t n, double x);
double log_exceed_prob(const TailModel& model, std::int64_t n, double x);

// P(Z_n in A) over a finite union of intervals; differences of near-unity
// CDF values go through the exceedance complement. Null sets give exactly 0.
double exact_set_prob(const TailModel& model, std::int64_t n, const BorelSubset& a);
double log_set_prob(const TailModel& model, std::int64_t n, const BorelSubset& a);

// ln g_n(x), the log-density of Z_n, assembled entirely in log space:
// ln n + ln a_n + ln(alpha/ln n) + (ln n/alpha - 1) ln x + (n-1) ln F + ln f.
double log_density_zn(const TailModel& model, std::int64_t n, double x);

// Rate function I(x) = ln x on [1, infinity).
double rate_function(double x);

// The finite-n functional of the LDP over a set A.
RatePoint normalized_log_prob(const TailModel& model, std::int64_t n,
                              const BorelSubset& a);

} // namespace ldmax

#endif
