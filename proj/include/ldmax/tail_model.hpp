#ifndef LDMAX_TAIL_MODEL_HPP
#define LDMAX_TAIL_MODEL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ldmax {

enum class Family { Pareto, Burr, LogPareto };

// A parametric heavy-tailed law with survival function F-bar(x) = x^-alpha L(x),
// L slowly varying. Immutable after construction; all methods are pure.
//
//   Pareto:    F-bar(x) = (x/x_m)^-alpha            for x >= x_m
//   Burr:      F-bar(x) = (1 + x^c)^-k              for x > 0, alpha = c*k
//   LogPareto: F-bar(x) = (x/x_0)^-alpha (1 + ln(x/x_0))^gamma   for x >= x_0,
//              requires |gamma| < alpha so F-bar is strictly decreasing.
class TailModel {
public:
    static TailModel pareto(double alpha, double xm);
    static TailModel burr(double c, double k);
    static TailModel log_pareto(double alpha, double gamma, double x0);

    Family family() const noexcept { return family_; }
    double alpha() const noexcept { return alpha_; }
    double support_low() const noexcept { return support_low_; }

    // Family-specific parameters (meaningful fields depend on family()).
    double param_xm() const noexcept { return p1_; }       // Pareto
    double param_c() const noexcept { return p1_; }        // Burr
    double param_k() const noexcept { return p2_; }        // Burr
    double param_gamma() const noexcept { return p2_; }    // LogPareto
    double param_x0() const noexcept { return p1_; }       // LogPareto

    // P(X > x). Equals 1 below the support, decreasing on it, -> 0 at infinity.
    double survival(double x) const;

    // ln F-bar at ln x. Accepts any real log_x; finite for log_x above the
    // support so tail probabilities far below DBL_MIN stay representable.
    double log_survival_at_log(double log_x) const;

    // Density f(x) = -dF-bar/dx from the closed-form derivative; 0 outside
    // the support.
    double density(double x) const;

    // ln f at ln x; -infinity outside the support.
    double log_density_at_log(double log_x) const;

    // F^{<-}(u) = inf{x : F(x) >= u}, 0 < u < 1.
    double quantile(double u) const;

    // ln of the point x solving ln F-bar(x) = log_sf (log_sf <= 0).
    // Closed form for Pareto/Burr; bracketed bisection for LogPareto.
    double log_quantile_tail(double log_sf) const;

    // L(x) = x^alpha F-bar(x), defined for x >= support_low (x > 0 for Burr).
    double slowly_varying_part(double x) const;

    // Inverse-transform draw: quantile(u), deterministic in u.
    double sample_one(double u) const { return quantile(u); }

    // e.g. "pareto(alpha=1,xm=1)"; also serves as the cache key for a_n.
    std::string describe() const;

    bool operator==(const TailModel&) const = default;

private:
    TailModel(Family f, double alpha, double p1, double p2, double support_low)
        : family_(f), alpha_(alpha), p1_(p1), p2_(p2), support_low_(support_low) {}

    Family family_;
    double alpha_;
    double p1_;
    double p2_;
    double support_low_;
};

} // namespace ldmax

#endif
