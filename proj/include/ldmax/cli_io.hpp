#ifndef LDMAX_CLI_IO_HPP
#define LDMAX_CLI_IO_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ldmax/borel_set.hpp"
#include "ldmax/diagnostics.hpp"
#include "ldmax/ldp.hpp"
#include "ldmax/ruin.hpp"
#include "ldmax/tail_model.hpp"

namespace ldmax {

// Input rejected by one of the spec grammars; carries the offset of the
// offending character within the original string.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// `family:key=value[,key=value]*`, keys case-insensitive, e.g.
// "pareto:alpha=1.5,xm=1", "burr:c=1,k=2", "logpareto:alpha=1,gamma=0.5,x0=1".
TailModel parse_model_spec(const std::string& s);

// Intervals joined by `U`; endpoints are decimal literals, `e`, `e^k`, or
// `inf`; brackets carry openness, e.g. "(2,3]U[5,inf)". Rejects points < 1.
BorelSubset parse_set_spec(const std::string& s);

// Comma-separated sizes; accepts plain integers, scientific notation, and
// `10^k`. Non-integer results are rejected (n is a sample size).
std::vector<std::int64_t> parse_n_grid(const std::string& s);

enum class OutputFormat { Csv, Json };

// 17 significant digits; infinities as "inf"/"-inf" sentinels, never NaN text
// from computed probabilities.
std::string format_value(double x);

struct RuinRow {
    std::int64_t n = 0;
    double premium = 0.0;
    double rp_exact = 0.0;
    std::optional<Estimate> mc;
};

// Fixed column order n,prob,r_n,target,gap; when Monte Carlo estimates are
// supplied (one per row) the columns p_hat,ci_low,ci_high are appended.
std::string emit_rate_table(const std::vector<RatePoint>& rows, OutputFormat fmt,
                            const std::vector<Estimate>& mc = {});
std::string emit_ruin_table(const std::vector<RuinRow>& rows,
                            const std::optional<DecayFit>& fit, OutputFormat fmt);
std::string emit_report(const DiagnosticReport& report, OutputFormat fmt);
std::string emit_samples(const std::vector<double>& values, OutputFormat fmt);

} // namespace ldmax

#endif
