#include "ldmax/diagnostics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ldmax/ldp.hpp"

namespace ldmax {

namespace {

std::vector<double> log_spaced(double lo, double hi, int count) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    const double llo = std::log(lo);
    const double lhi = std::log(hi);
    for (int i = 0; i < count; ++i) {
        const double f = count == 1 ? 0.0
                                    : static_cast<double>(i) / (count - 1);
        out.push_back(std::exp(llo + f * (lhi - llo)));
    }
    return out;
}

} // namespace

std::vector<double> default_potter_t_grid() { return log_spaced(1.0, 1e6, 10); }

std::vector<double> default_potter_x_grid(const TailModel& model) {
    const double x0 = std::max(model.support_low(), 1.0);
    return log_spaced(1.1 * x0, 1e3, 10);
}

std::vector<double> default_frechet_y_grid() { return log_spaced(0.1, 10.0, 200); }

DiagnosticReport potter_check(const TailModel& model, double eps,
                              const std::vector<double>& t_grid,
                              const std::vector<double>& x_grid) {
    if (!(eps > 0.0)) throw std::domain_error("potter_check requires eps > 0");
    if (t_grid.empty() || x_grid.empty())
        throw std::domain_error("potter_check requires nonempty grids");
    DiagnosticReport rep;
    rep.check_name = "potter";
    const double alpha = model.alpha();
    double t0 = std::numeric_limits<double>::quiet_NaN();
    for (double t : t_grid) {
        bool clean = true;
        for (double x : x_grid) {
            const double lt = std::log(t);
            const double lx = std::log(x);
            const double log_ratio = model.log_survival_at_log(lt + lx)
                                   - model.log_survival_at_log(lt);
            const double ratio = std::exp(log_ratio);
            const double lower = (1.0 - eps) * std::pow(x, -alpha - eps);
            const double upper = (1.0 + eps) * std::pow(x, -alpha + eps);
            rep.grid.push_back(t);
            rep.values.push_back(ratio);
            if (ratio < lower) {
                rep.violations.push_back({t, ratio, lower});
                clean = false;
            } else if (ratio > upper) {
                rep.violations.push_back({t, ratio, upper});
                clean = false;
            }
        }
        if (!clean) t0 = std::numeric_limits<double>::quiet_NaN();
        else if (std::isnan(t0)) t0 = t;
    }
    rep.pass = rep.violations.empty();
    rep.empirical_t0 = t0;
    return rep;
}

double von_mises_ratio(const TailModel& model, double x) {
    if (!(x > model.support_low()) || !std::isfinite(x))
        throw std::domain_error("von_mises_ratio requires x in the support interior");
    const double lx = std::log(x);
    const double ls = model.log_survival_at_log(lx);
    if (ls == -std::numeric_limits<double>::infinity())
        throw std::domain_error("survival vanishes at x");
    return std::exp(lx + model.log_density_at_log(lx) - ls);
}

DiagnosticReport scaling_exponent_table(const TailModel& model,
                                        const std::vector<std::int64_t>& n_grid) {
    if (n_grid.empty()) throw std::domain_error("scaling table requires a grid");
    DiagnosticReport rep;
    rep.check_name = "scaling";
    const double inv_alpha = 1.0 / model.alpha();
    double prev_dev = std::numeric_limits<double>::infinity();
    for (std::int64_t n : n_grid) {
        const double log_n = std::log(static_cast<double>(n));
        const double value = log_scaling_constant(model, n) / log_n;
        rep.grid.push_back(static_cast<double>(n));
        rep.values.push_back(value);
        const double dev = std::fabs(value - inv_alpha);
        if (dev > prev_dev) rep.violations.push_back({static_cast<double>(n), dev, prev_dev});
        prev_dev = dev;
        rep.supremum = std::max(rep.supremum, dev);
    }
    rep.pass = rep.violations.empty();
    return rep;
}

DiagnosticReport frechet_limit_error(const TailModel& model, std::int64_t n,
                                     const std::vector<double>& y_grid) {
    if (y_grid.empty()) throw std::domain_error("frechet check requires a grid");
    DiagnosticReport rep;
    rep.check_name = "frechet";
    const double alpha = model.alpha();
    const double log_an = log_scaling_constant(model, n);
    for (double y : y_grid) {
        const double ls = model.log_survival_at_log(log_an + std::log(y));
        const double gn = std::exp(static_cast<double>(n) * std::log1p(-std::exp(ls)));
        const double limit = std::exp(-std::pow(y, -alpha));
        const double err = std::fabs(gn - limit);
        rep.grid.push_back(y);
        rep.values.push_back(err);
        rep.supremum = std::max(rep.supremum, err);
    }
    rep.pass = true;
    return rep;
}

DiagnosticReport density_rate_error(const TailModel& model, std::int64_t n,
                                    double big_m, int points) {
    if (n < 3) throw std::domain_error("density rate check requires n >= 3");
    if (!(big_m > 1.0)) throw std::domain_error("density rate check requires M > 1");
    if (points < 2) throw std::domain_error("density rate check requires >= 2 points");
    DiagnosticReport rep;
    rep.check_name = "density";
    const double log_n = std::log(static_cast<double>(n));
    for (int i = 0; i < points; ++i) {
        const double x = 1.0 + (big_m - 1.0) * static_cast<double>(i) / (points - 1);
        const double err = std::fabs(log_density_zn(model, n, x) / log_n + std::log(x));
        rep.grid.push_back(x);
        rep.values.push_back(err);
        rep.supremum = std::max(rep.supremum, err);
    }
    rep.pass = true;
    return rep;
}

} // namespace ldmax
