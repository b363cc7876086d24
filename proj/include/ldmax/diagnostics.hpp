#ifndef LDMAX_DIAGNOSTICS_HPP
#define LDMAX_DIAGNOSTICS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ldmax/tail_model.hpp"

namespace ldmax {

struct Violation {
    double point = 0.0;
    double value = 0.0;
    double bound = 0.0;
};

struct DiagnosticReport {
    std::string check_name;
    std::vector<double> grid;
    std::vector<double> values;
    std::vector<Violation> violations;
    bool pass = false;
    double supremum = 0.0;   // sup-style checks
    double empirical_t0 = 0.0; // potter: smallest grid t with no violation above
};

// Documented default grids.
std::vector<double> default_potter_t_grid();                       // 10 log-spaced in [1, 1e6]
std::vector<double> default_potter_x_grid(const TailModel& model); // 10 log-spaced in [1.1 x_0, 1e3]
std::vector<double> default_frechet_y_grid();                      // 200 log-spaced in [0.1, 10]

// Tests the two-sided polynomial envelopes
//   (1-eps) x^(-alpha-eps) <= F-bar(tx)/F-bar(t) <= (1+eps) x^(-alpha+eps)
// on the grid cross-product. empirical_t0 is the smallest grid t above which
// no violation occurs; it is a grid observation, not a certified bound.
DiagnosticReport potter_check(const TailModel& model, double eps,
                              const std::vector<double>& t_grid,
                              const std::vector<double>& x_grid);

// x f(x) / F-bar(x); converges to alpha at infinity.
double von_mises_ratio(const TailModel& model, double x);

// ln a_n / ln n per grid point; pass iff |value - 1/alpha| is non-increasing
// along an increasing grid.
DiagnosticReport scaling_exponent_table(const TailModel& model,
                                        const std::vector<std::int64_t>& n_grid);

// Pointwise |F^n(a_n y) - exp(-y^-alpha)|; supremum in the report.
DiagnosticReport frechet_limit_error(const TailModel& model, std::int64_t n,
                                     const std::vector<double>& y_grid);

// |ln g_n(x)/ln n + ln x| over a uniform grid on [1, M]; supremum in the report.
DiagnosticReport density_rate_error(const TailModel& model, std::int64_t n,
                                    double big_m, int points);

} // namespace ldmax

#endif
