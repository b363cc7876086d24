#include "ldmax/tail_model.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace ldmax {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw std::invalid_argument(std::string(name) + " must be a positive finite real");
}

void require_finite(double x, const char* name) {
    if (!std::isfinite(x))
        throw std::invalid_argument(std::string(name) + " must be finite");
}

// ln(1 + e^z) without overflow.
double log1p_exp(double z) {
    if (z > 0.0) return z + std::log1p(std::exp(-z));
    return std::log1p(std::exp(z));
}

} // namespace

TailModel TailModel::pareto(double alpha, double xm) {
    require_positive(alpha, "alpha");
    require_positive(xm, "xm");
    return TailModel(Family::Pareto, alpha, xm, 0.0, xm);
}

TailModel TailModel::burr(double c, double k) {
    require_positive(c, "c");
    require_positive(k, "k");
    return TailModel(Family::Burr, c * k, c, k, 0.0);
}

TailModel TailModel::log_pareto(double alpha, double gamma, double x0) {
    require_positive(alpha, "alpha");
    require_positive(x0, "x0");
    require_finite(gamma, "gamma");
    if (!(std::fabs(gamma) < alpha))
        throw std::invalid_argument("logpareto requires |gamma| < alpha");
    return TailModel(Family::LogPareto, alpha, x0, gamma, x0);
}

double TailModel::survival(double x) const {
    require_finite(x, "x");
    if (x <= support_low_) return 1.0;
    return std::exp(log_survival_at_log(std::log(x)));
}

double TailModel::log_survival_at_log(double log_x) const {
    switch (family_) {
    case Family::Pareto: {
        const double s = log_x - std::log(p1_);
        return s <= 0.0 ? 0.0 : -alpha_ * s;
    }
    case Family::Burr:
        // -k ln(1 + x^c)
        return -p2_ * log1p_exp(p1_ * log_x);
    case Family::LogPareto: {
        const double s = log_x - std::log(p1_);
        if (s <= 0.0) return 0.0;
        return -alpha_ * s + p2_ * std::log1p(s);
    }
    }
    return 0.0;
}

double TailModel::density(double x) const {
    require_finite(x, "x");
    if (x <= support_low_) return 0.0;
    const double ld = log_density_at_log(std::log(x));
    return ld == -kInf ? 0.0 : std::exp(ld);
}

double TailModel::log_density_at_log(double log_x) const {
    switch (family_) {
    case Family::Pareto: {
        const double lxm = std::log(p1_);
        if (log_x < lxm) return -kInf;
        return std::log(alpha_) + alpha_ * lxm - (alpha_ + 1.0) * log_x;
    }
    case Family::Burr:
        // c k x^(c-1) (1+x^c)^(-k-1)
        return std::log(p1_ * p2_) + (p1_ - 1.0) * log_x
             - (p2_ + 1.0) * log1p_exp(p1_ * log_x);
    case Family::LogPareto: {
        const double s = log_x - std::log(p1_);
        if (s < 0.0) return -kInf;
        // f(x) = F-bar(x) (alpha - gamma/(1+s)) / x
        return log_survival_at_log(log_x)
             + std::log(alpha_ - p2_ / (1.0 + s)) - log_x;
    }
    }
    return -kInf;
}

double TailModel::quantile(double u) const {
    if (!(u > 0.0 && u < 1.0))
        throw std::domain_error("quantile requires u in (0,1)");
    return std::exp(log_quantile_tail(std::log1p(-u)));
}

double TailModel::log_quantile_tail(double log_sf) const {
    if (!(log_sf <= 0.0))
        throw std::domain_error("log survival target must be <= 0");
    switch (family_) {
    case Family::Pareto:
        return std::log(p1_) - log_sf / alpha_;
    case Family::Burr:
        // x = (e^{-q/k} - 1)^{1/c}
        return std::log(std::expm1(-log_sf / p2_)) / p1_;
    case Family::LogPareto: {
        // Solve h(s) = -alpha s + gamma ln(1+s) = log_sf on s >= 0; h is
        // strictly decreasing since |gamma| < alpha. Seeded by the Pareto
        // solution, expanded to a bracket, then bisected.
        if (log_sf == 0.0) return std::log(p1_);
        const auto h = [this](double s) {
            return -alpha_ * s + p2_ * std::log1p(s);
        };
        double lo = 0.0;
        double hi = std::max(1.0, -log_sf / alpha_);
        int guard = 0;
        while (h(hi) > log_sf) {
            lo = hi;
            hi *= 2.0;
            if (++guard > 200) throw std::runtime_error("logpareto quantile bracket failed");
        }
        for (int it = 0; it < 200 && hi - lo > 1e-14 * (1.0 + hi); ++it) {
            const double mid = 0.5 * (lo + hi);
            if (h(mid) > log_sf) lo = mid; else hi = mid;
        }
        return std::log(p1_) + 0.5 * (lo + hi);
    }
    }
    return 0.0;
}

double TailModel::slowly_varying_part(double x) const {
    require_finite(x, "x");
    if (family_ == Family::Burr ? !(x > 0.0) : x < support_low_)
        throw std::domain_error("slowly_varying_part requires x in the support");
    if (family_ == Family::Pareto) return std::pow(p1_, alpha_); // exactly constant
    const double lx = std::log(x);
    return std::exp(alpha_ * lx + log_survival_at_log(lx));
}

std::string TailModel::describe() const {
    std::ostringstream os;
    os.precision(17);
    switch (family_) {
    case Family::Pareto:
        os << "pareto(alpha=" << alpha_ << ",xm=" << p1_ << ")";
        break;
    case Family::Burr:
        os << "burr(c=" << p1_ << ",k=" << p2_ << ")";
        break;
    case Family::LogPareto:
        os << "logpareto(alpha=" << alpha_ << ",gamma=" << p2_ << ",x0=" << p1_ << ")";
        break;
    }
    return os.str();
}

} // namespace ldmax
