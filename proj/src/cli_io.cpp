#include "ldmax/cli_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include <json.hpp>

namespace ldmax {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

double parse_number(const std::string& tok, std::size_t pos) {
    std::size_t used = 0;
    double v;
    try {
        v = std::stod(tok, &used);
    } catch (const std::exception&) {
        throw parse_error("expected a number, got '" + tok + "'", pos);
    }
    if (used != tok.size())
        throw parse_error("trailing characters in number '" + tok + "'", pos + used);
    return v;
}

} // namespace

TailModel parse_model_spec(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos)
        throw parse_error("model spec must look like family:key=value,...", s.size());
    const std::string family = lower(s.substr(0, colon));

    std::map<std::string, double> kv;
    std::size_t pos = colon + 1;
    while (pos < s.size()) {
        auto end = s.find(',', pos);
        if (end == std::string::npos) end = s.size();
        const std::string item = s.substr(pos, end - pos);
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw parse_error("expected key=value", pos);
        const std::string key = lower(item.substr(0, eq));
        if (kv.contains(key)) throw parse_error("duplicate key '" + key + "'", pos);
        kv[key] = parse_number(item.substr(eq + 1), pos + eq + 1);
        pos = end + 1;
    }

    auto take = [&](const char* key) {
        auto it = kv.find(key);
        if (it == kv.end())
            throw parse_error(std::string("missing key '") + key + "' for family " + family, colon);
        const double v = it->second;
        kv.erase(it);
        return v;
    };
    auto finish = [&](TailModel m) {
        if (!kv.empty())
            throw parse_error("unknown key '" + kv.begin()->first + "' for family " + family, colon);
        return m;
    };

    try {
        if (family == "pareto") {
            const double alpha = take("alpha");
            const double xm = take("xm");
            return finish(TailModel::pareto(alpha, xm));
        }
        if (family == "burr") {
            const double c = take("c");
            const double k = take("k");
            return finish(TailModel::burr(c, k));
        }
        if (family == "logpareto") {
            const double alpha = take("alpha");
            const double gamma = take("gamma");
            const double x0 = take("x0");
            return finish(TailModel::log_pareto(alpha, gamma, x0));
        }
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what(), colon);
    }
    throw parse_error("unknown family '" + family + "'", 0);
}

namespace {

// Endpoint literal: decimal, `e`, `e^k`, or `inf`.
double parse_endpoint(const std::string& tok, std::size_t pos) {
    const std::string t = lower(tok);
    if (t == "inf" || t == "+inf")
        return std::numeric_limits<double>::infinity();
    if (t == "e") return std::exp(1.0);
    if (t.starts_with("e^"))
        return std::exp(parse_number(t.substr(2), pos + 2));
    return parse_number(tok, pos);
}

} // namespace

BorelSubset parse_set_spec(const std::string& s) {
    std::vector<Interval> intervals;
    std::size_t pos = 0;
    while (pos < s.size()) {
        const char open = s[pos];
        if (open != '(' && open != '[')
            throw parse_error("expected '(' or '['", pos);
        auto close = s.find_first_of(")]", pos);
        if (close == std::string::npos)
            throw parse_error("unterminated interval", s.size());
        const std::string body = s.substr(pos + 1, close - pos - 1);
        const auto comma = body.find(',');
        if (comma == std::string::npos)
            throw parse_error("interval needs two endpoints", pos + 1);
        Interval iv;
        iv.low = parse_endpoint(body.substr(0, comma), pos + 1);
        iv.high = parse_endpoint(body.substr(comma + 1), pos + 2 + comma);
        iv.low_closed = open == '[';
        iv.high_closed = s[close] == ']';
        if (!(iv.low >= 1.0))
            throw parse_error("interval endpoint below 1", pos + 1);
        if (!(iv.low <= iv.high))
            throw parse_error("interval has low > high", pos + 1);
        intervals.push_back(iv);
        pos = close + 1;
        if (pos < s.size()) {
            if (s[pos] != 'U' && s[pos] != 'u')
                throw parse_error("expected 'U' between intervals", pos);
            ++pos;
            if (pos == s.size()) throw parse_error("dangling 'U'", pos);
        }
    }
    if (intervals.empty()) throw parse_error("empty set spec", 0);
    try {
        return BorelSubset(std::move(intervals));
    } catch (const std::domain_error& e) {
        throw parse_error(e.what(), 0);
    }
}

std::vector<std::int64_t> parse_n_grid(const std::string& s) {
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto end = s.find(',', pos);
        if (end == std::string::npos) end = s.size();
        const std::string tok = s.substr(pos, end - pos);
        if (tok.empty()) throw parse_error("empty n-grid entry", pos);
        double v;
        if (const auto caret = tok.find('^'); caret != std::string::npos) {
            const double base = parse_number(tok.substr(0, caret), pos);
            const double expo = parse_number(tok.substr(caret + 1), pos + caret + 1);
            v = std::pow(base, expo);
        } else {
            v = parse_number(tok, pos);
        }
        const double r = std::round(v);
        if (!std::isfinite(v) || std::fabs(v - r) > 1e-9 * std::max(1.0, std::fabs(v)))
            throw parse_error("n-grid entry '" + tok + "' is not an integer", pos);
        if (r < 2.0 || r > 9.2e18)
            throw parse_error("n-grid entry '" + tok + "' out of range", pos);
        out.push_back(static_cast<std::int64_t>(r));
        if (end == s.size()) break;
        pos = end + 1;
    }
    if (out.empty()) throw parse_error("empty n-grid", 0);
    return out;
}

std::string format_value(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

using ordered_json = nlohmann::ordered_json;

// JSON has no infinity literal; mirror the CSV sentinels.
ordered_json json_value(double x) {
    if (std::isfinite(x)) return x;
    return format_value(x);
}

ordered_json estimate_json(const Estimate& e) {
    ordered_json j;
    j["p_hat"] = json_value(e.p_hat);
    j["samples"] = e.samples;
    j["stderr"] = json_value(e.stderr_);
    j["ci_low"] = json_value(e.ci_low);
    j["ci_high"] = json_value(e.ci_high);
    return j;
}

} // namespace

std::string emit_rate_table(const std::vector<RatePoint>& rows, OutputFormat fmt,
                            const std::vector<Estimate>& mc) {
    if (!mc.empty() && mc.size() != rows.size())
        throw std::invalid_argument("one Monte Carlo estimate per rate row required");
    if (fmt == OutputFormat::Csv) {
        std::ostringstream os;
        os << "n,prob,r_n,target,gap";
        if (!mc.empty()) os << ",p_hat,ci_low,ci_high";
        os << '\n';
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& r = rows[i];
            os << r.n << ',' << format_value(r.prob) << ',' << format_value(r.r_n)
               << ',' << format_value(r.target) << ',' << format_value(r.gap);
            if (!mc.empty())
                os << ',' << format_value(mc[i].p_hat) << ','
                   << format_value(mc[i].ci_low) << ',' << format_value(mc[i].ci_high);
            os << '\n';
        }
        return os.str();
    }
    ordered_json j = ordered_json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        ordered_json row;
        row["n"] = r.n;
        row["prob"] = json_value(r.prob);
        row["r_n"] = json_value(r.r_n);
        row["target"] = json_value(r.target);
        row["gap"] = json_value(r.gap);
        if (!mc.empty()) row["mc"] = estimate_json(mc[i]);
        j.push_back(row);
    }
    return j.dump(2) + "\n";
}

std::string emit_ruin_table(const std::vector<RuinRow>& rows,
                            const std::optional<DecayFit>& fit, OutputFormat fmt) {
    if (fmt == OutputFormat::Csv) {
        std::ostringstream os;
        os << "n,premium,rp_exact,rp_mc,ci_low,ci_high\n";
        for (const auto& r : rows) {
            os << r.n << ',' << format_value(r.premium) << ','
               << format_value(r.rp_exact) << ',';
            if (r.mc)
                os << format_value(r.mc->p_hat) << ',' << format_value(r.mc->ci_low)
                   << ',' << format_value(r.mc->ci_high);
            else
                os << ",,";
            os << '\n';
        }
        return os.str();
    }
    ordered_json j;
    j["rows"] = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json row;
        row["n"] = r.n;
        row["premium"] = json_value(r.premium);
        row["rp_exact"] = json_value(r.rp_exact);
        row["rp_mc"] = r.mc ? estimate_json(*r.mc) : ordered_json(nullptr);
        j["rows"].push_back(row);
    }
    if (fit) {
        j["summary"]["slope"] = json_value(fit->slope);
        j["summary"]["intercept"] = json_value(fit->intercept);
        j["summary"]["target"] = json_value(fit->target);
        j["summary"]["residual_max"] = json_value(fit->residual_max);
    }
    return j.dump(2) + "\n";
}

std::string emit_report(const DiagnosticReport& report, OutputFormat fmt) {
    if (fmt == OutputFormat::Csv) {
        std::ostringstream os;
        os << "check,point,value\n";
        for (std::size_t i = 0; i < report.grid.size(); ++i)
            os << report.check_name << ',' << format_value(report.grid[i]) << ','
               << format_value(report.values[i]) << '\n';
        return os.str();
    }
    ordered_json j;
    j["check"] = report.check_name;
    j["pass"] = report.pass;
    j["supremum"] = json_value(report.supremum);
    if (report.check_name == "potter")
        j["empirical_t0"] = std::isnan(report.empirical_t0)
                                ? ordered_json(nullptr)
                                : json_value(report.empirical_t0);
    j["points"] = ordered_json::array();
    for (std::size_t i = 0; i < report.grid.size(); ++i) {
        ordered_json row;
        row["point"] = json_value(report.grid[i]);
        row["value"] = json_value(report.values[i]);
        j["points"].push_back(row);
    }
    j["violations"] = ordered_json::array();
    for (const auto& v : report.violations) {
        ordered_json row;
        row["point"] = json_value(v.point);
        row["value"] = json_value(v.value);
        row["bound"] = json_value(v.bound);
        j["violations"].push_back(row);
    }
    return j.dump(2) + "\n";
}

std::string emit_samples(const std::vector<double>& values, OutputFormat fmt) {
    if (fmt == OutputFormat::Csv) {
        std::ostringstream os;
        os << "value\n";
        for (double v : values) os << format_value(v) << '\n';
        return os.str();
    }
    ordered_json j = ordered_json::array();
    for (double v : values) j.push_back(json_value(v));
    return j.dump(2) + "\n";
}

} // namespace ldmax
