#include "ldmax/ldp.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ldmax {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_n(std::int64_t n, std::int64_t min_n) {
    if (n < min_n)
        throw std::domain_error("sample size n must be >= " + std::to_string(min_n));
}

// ln(-expm1(w)) for w <= 0.
double log_neg_expm1(double w) {
    if (w == 0.0) return -kInf;
    if (w > -1e-6) {
        // -expm1(w) = (-w)(1 + w/2 + w^2/6 + ...)
        return std::log(-w) + std::log1p(w * (0.5 + w / 6.0));
    }
    return std::log(-std::expm1(w));
}

std::shared_mutex an_cache_mutex;
std::map<std::pair<std::string, std::int64_t>, double> an_cache;

} // namespace

double log_scaling_constant(const TailModel& model, std::int64_t n) {
    require_n(n, 2);
    const auto key = std::make_pair(model.describe(), n);
    {
        std::shared_lock lock(an_cache_mutex);
        if (auto it = an_cache.find(key); it != an_cache.end()) return it->second;
    }
    // a_n solves F-bar(a_n) = 1/n for the continuous families implemented.
    const double value = model.log_quantile_tail(-std::log(static_cast<double>(n)));
    std::unique_lock lock(an_cache_mutex);
    return an_cache.try_emplace(key, value).first->second;
}

double scaling_constant(const TailModel& model, std::int64_t n) {
    return std::exp(log_scaling_constant(model, n));
}

double log_threshold(const TailModel& model, std::int64_t n, double x) {
    require_n(n, 2);
    if (std::isnan(x) || x < 0.0)
        throw std::domain_error("threshold requires x >= 0");
    const double log_n = std::log(static_cast<double>(n));
    return log_scaling_constant(model, n) + (log_n / model.alpha()) * std::log(x);
}

double threshold(const TailModel& model, std::int64_t n, double x) {
    return std::exp(log_threshold(model, n, x));
}

double z_value(const TailModel& model, std::int64_t n, double max_value) {
    require_n(n, 2);
    if (!(max_value > 0.0))
        throw std::domain_error("z_value requires a positive maximum");
    const double log_n = std::log(static_cast<double>(n));
    return std::exp((model.alpha() / log_n)
                    * (std::log(max_value) - log_scaling_constant(model, n)));
}

double log_exceed_at_log_threshold(const TailModel& model, std::int64_t n,
                                   double log_t) {
    require_n(n, 2);
    if (log_t == kInf) return -kInf;
    const double ls = model.log_survival_at_log(log_t);
    if (ls == 0.0) return 0.0;
    if (ls < -50.0) {
        // n F-bar is far below any rounding scale of 1 - (1-F-bar)^n;
        // ln p = ln n + ln F-bar + ln(1 - (n-1) F-bar / 2 + ...)
        const double sf = std::exp(ls);
        return std::log(static_cast<double>(n)) + ls
             + std::log1p(-0.5 * (static_cast<double>(n) - 1.0) * sf);
    }
    const double w = static_cast<double>(n) * std::log1p(-std::exp(ls));
    return log_neg_expm1(w);
}

double log_exceed_prob(const TailModel& model, std::int64_t n, double x) {
    if (std::isnan(x) || x < 1.0)
        throw std::domain_error("exceedance requires x >= 1");
    return log_exceed_at_log_threshold(model, n, log_threshold(model, n, x));
}

double exact_exceed_prob(const TailModel& model, std::int64_t n, double x) {
    return std::exp(log_exceed_prob(model, n, x));
}

double log_set_prob(const TailModel& model, std::int64_t n, const BorelSubset& a) {
    require_n(n, 2);
    std::vector<double> terms;
    for (const auto& iv : a.intervals()) {
        if (iv.is_null()) continue; // Z_n has a density
        const double la = log_exceed_prob(model, n, iv.low);
        const double lb = std::isinf(iv.high) ? -kInf
                                              : log_exceed_prob(model, n, iv.high);
        if (la == -kInf) continue;
        const double term = lb == -kInf ? la : la + log_neg_expm1(lb - la);
        if (term != -kInf) terms.push_back(term);
    }
    if (terms.empty()) return -kInf;
    double max_term = -kInf;
    for (double t : terms) max_term = std::max(max_term, t);
    double acc = 0.0;
    for (double t : terms) acc += std::exp(t - max_term);
    return max_term + std::log(acc);
}

double exact_set_prob(const TailModel& model, std::int64_t n, const BorelSubset& a) {
    return std::exp(log_set_prob(model, n, a));
}

double log_density_zn(const TailModel& model, std::int64_t n, double x) {
    require_n(n, 2);
    if (std::isnan(x) || x < 1.0)
        throw std::domain_error("log_density_zn requires x >= 1");
    const double log_n = std::log(static_cast<double>(n));
    const double log_an = log_scaling_constant(model, n);
    const double log_t = log_an + (log_n / model.alpha()) * std::log(x);
    const double lf = model.log_density_at_log(log_t);
    if (lf == -kInf) return -kInf;
    const double ls = model.log_survival_at_log(log_t);
    const double log_cdf = std::log1p(-std::exp(ls));
    return log_n + log_an + std::log(model.alpha() / log_n)
         + (log_n / model.alpha() - 1.0) * std::log(x)
         + (static_cast<double>(n) - 1.0) * log_cdf + lf;
}

double rate_function(double x) {
    if (std::isnan(x) || x < 1.0)
        throw std::domain_error("rate function is defined on [1, inf)");
    return std::log(x);
}

RatePoint normalized_log_prob(const TailModel& model, std::int64_t n,
                              const BorelSubset& a) {
    require_n(n, 3);
    const double log_n = std::log(static_cast<double>(n));
    const double lp = log_set_prob(model, n, a);
    RatePoint pt;
    pt.n = n;
    pt.prob = std::exp(lp);
    pt.r_n = lp == -kInf ? -kInf : lp / log_n;
    pt.target = -essential_infimum(a);
    pt.gap = (pt.r_n == -kInf && pt.target == -kInf) ? 0.0 : pt.r_n - pt.target;
    return pt;
}

} // namespace ldmax
