#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ldmax/cli_io.hpp"
#include "ldmax/diagnostics.hpp"
#include "ldmax/ldp.hpp"
#include "ldmax/mc.hpp"
#include "ldmax/ruin.hpp"

namespace {

using namespace ldmax;

struct CommonOut {
    std::string format = "csv";
    std::string out_path; // empty = stdout
};

void add_output_flags(CLI::App* cmd, CommonOut& out) {
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", out.out_path, "Output path (default: stdout)");
}

OutputFormat fmt_of(const CommonOut& out) {
    return out.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
}

void write_output(const CommonOut& out, const std::string& text) {
    if (out.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out.out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output path " + out.out_path);
    f << text;
}

std::vector<double> parse_real_list(const std::string& s) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto end = s.find(',', pos);
        if (end == std::string::npos) end = s.size();
        const std::string tok = s.substr(pos, end - pos);
        if (tok.empty()) throw parse_error("empty list entry", pos);
        out.push_back(std::stod(tok));
        if (end == s.size()) break;
        pos = end + 1;
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact and Monte Carlo tail asymptotics for heavy-tailed maxima"};
    app.require_subcommand(1);

    std::string model_spec;
    std::string set_spec;
    std::string n_grid_spec;
    double beta = 1.0;
    std::int64_t n_single = 0;
    std::int64_t samples = 100000;
    std::uint64_t seed = 0;
    std::int64_t chunk_size = 4096;
    int threads = 1;
    bool with_mc = false;

    // rate
    CommonOut rate_out;
    auto* rate = app.add_subcommand("rate", "Normalized log-probability table over an n-grid");
    rate->add_option("--model", model_spec, "Model spec")->required();
    rate->add_option("--set", set_spec, "Borel set spec")->required();
    rate->add_option("--n-grid", n_grid_spec, "Comma-separated sample sizes")->required();
    rate->add_flag("--mc", with_mc, "Add Monte Carlo estimates");
    rate->add_option("--samples", samples, "MC replicates per grid point");
    rate->add_option("--seed", seed, "MC seed");
    rate->add_option("--chunk-size", chunk_size, "MC replicates per substream");
    rate->add_option("--threads", threads, "MC worker threads");
    add_output_flags(rate, rate_out);

    // ruin
    CommonOut ruin_out;
    auto* ruin = app.add_subcommand("ruin", "Ruin probabilities and decay-slope fit");
    ruin->add_option("--model", model_spec, "Model spec")->required();
    ruin->add_option("--beta", beta, "Capital-loading exponent")->required();
    ruin->add_option("--n-grid", n_grid_spec, "Comma-separated portfolio sizes")->required();
    ruin->add_flag("--mc", with_mc, "Add Monte Carlo estimates");
    ruin->add_option("--samples", samples, "MC replicates per grid point");
    ruin->add_option("--seed", seed, "MC seed");
    ruin->add_option("--chunk-size", chunk_size, "MC replicates per substream");
    ruin->add_option("--threads", threads, "MC worker threads");
    add_output_flags(ruin, ruin_out);

    // diagnose
    CommonOut diag_out;
    std::string check;
    double eps = 0.1;
    std::string t_grid_spec, x_grid_spec, y_grid_spec;
    double big_m = std::exp(1.0);
    int points = 200;
    auto* diag = app.add_subcommand("diagnose", "Regular-variation diagnostics");
    diag->add_option("--model", model_spec, "Model spec")->required();
    diag->add_option("--check", check, "Which diagnostic to run")
        ->required()
        ->check(CLI::IsMember({"potter", "vonmises", "scaling", "frechet", "density"}));
    diag->add_option("--eps", eps, "Potter epsilon");
    diag->add_option("--t-grid", t_grid_spec, "Potter t grid (comma list)");
    diag->add_option("--x-grid", x_grid_spec, "Evaluation x grid (comma list)");
    diag->add_option("--y-grid", y_grid_spec, "Frechet y grid (comma list)");
    diag->add_option("--n", n_single, "Sample size for frechet/density checks");
    diag->add_option("--n-grid", n_grid_spec, "n grid for the scaling check");
    diag->add_option("--M", big_m, "Right endpoint for the density check");
    diag->add_option("--points", points, "Grid size for the density check");
    add_output_flags(diag, diag_out);

    // sample
    CommonOut sample_out;
    auto* sample = app.add_subcommand("sample", "Draw maxima of n-sample blocks");
    sample->add_option("--model", model_spec, "Model spec")->required();
    sample->add_option("--n", n_single, "Block size")->required();
    sample->add_option("--samples", samples, "Number of draws")->required();
    sample->add_option("--seed", seed, "Seed")->required();
    sample->add_option("--chunk-size", chunk_size, "Replicates per substream");
    add_output_flags(sample, sample_out);

    // dist
    CommonOut dist_out;
    std::string eval_what;
    double at = 0.0;
    auto* dist = app.add_subcommand("dist", "Evaluate one distribution function");
    dist->add_option("--model", model_spec, "Model spec")->required();
    dist->add_option("--eval", eval_what, "Which function to evaluate")
        ->required()
        ->check(CLI::IsMember({"survival", "density", "quantile", "L"}));
    dist->add_option("--at", at, "Evaluation point")->required();
    add_output_flags(dist, dist_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (rate->parsed()) {
        const TailModel model = parse_model_spec(model_spec);
        const BorelSubset a = parse_set_spec(set_spec);
        const auto n_grid = parse_n_grid(n_grid_spec);
        std::vector<RatePoint> rows;
        std::vector<Estimate> mc;
        for (std::int64_t n : n_grid) {
            rows.push_back(normalized_log_prob(model, n, a));
            if (with_mc)
                mc.push_back(estimate_set_prob(model, n, a,
                                               {samples, seed, chunk_size}, threads));
        }
        write_output(rate_out, emit_rate_table(rows, fmt_of(rate_out), mc));
        return 0;
    }

    if (ruin->parsed()) {
        const TailModel model = parse_model_spec(model_spec);
        const auto n_grid = parse_n_grid(n_grid_spec);
        std::vector<RuinRow> rows;
        for (std::int64_t n : n_grid) {
            RuinRow row;
            row.n = n;
            row.premium = premium(model, n, beta);
            row.rp_exact = ruin_prob_exact(model, n, beta);
            if (with_mc)
                row.mc = ruin_prob_mc(model, n, beta,
                                      {samples, seed, chunk_size}, threads);
            rows.push_back(row);
        }
        std::optional<DecayFit> fit;
        if (beta > 0.0 && n_grid.size() >= 2)
            fit = decay_slope({model, beta, n_grid});
        write_output(ruin_out, emit_ruin_table(rows, fit, fmt_of(ruin_out)));
        return 0;
    }

    if (diag->parsed()) {
        const TailModel model = parse_model_spec(model_spec);
        DiagnosticReport rep;
        if (check == "potter") {
            const auto t_grid = t_grid_spec.empty() ? default_potter_t_grid()
                                                    : parse_real_list(t_grid_spec);
            const auto x_grid = x_grid_spec.empty() ? default_potter_x_grid(model)
                                                    : parse_real_list(x_grid_spec);
            rep = potter_check(model, eps, t_grid, x_grid);
        } else if (check == "vonmises") {
            const auto x_grid = x_grid_spec.empty()
                ? std::vector<double>{1e2, 1e4, 1e6}
                : parse_real_list(x_grid_spec);
            rep.check_name = "vonmises";
            for (double x : x_grid) {
                rep.grid.push_back(x);
                rep.values.push_back(von_mises_ratio(model, x));
            }
            rep.pass = true;
        } else if (check == "scaling") {
            if (n_grid_spec.empty())
                throw parse_error("scaling check requires --n-grid", 0);
            rep = scaling_exponent_table(model, parse_n_grid(n_grid_spec));
        } else if (check == "frechet") {
            if (n_single < 2) throw std::domain_error("frechet check requires --n >= 2");
            const auto y_grid = y_grid_spec.empty() ? default_frechet_y_grid()
                                                    : parse_real_list(y_grid_spec);
            rep = frechet_limit_error(model, n_single, y_grid);
        } else {
            if (n_single < 3) throw std::domain_error("density check requires --n >= 3");
            rep = density_rate_error(model, n_single, big_m, points);
        }
        write_output(diag_out, emit_report(rep, fmt_of(diag_out)));
        return 0;
    }

    if (sample->parsed()) {
        const TailModel model = parse_model_spec(model_spec);
        if (n_single < 1) throw std::domain_error("sample requires --n >= 1");
        if (samples < 1) throw std::domain_error("sample requires --samples >= 1");
        std::vector<double> values;
        values.reserve(static_cast<std::size_t>(samples));
        const std::int64_t n_chunks = (samples + chunk_size - 1) / chunk_size;
        for (std::int64_t c = 0; c < n_chunks; ++c) {
            detail::ChunkRng rng(seed, static_cast<std::uint64_t>(c));
            const std::int64_t end = std::min((c + 1) * chunk_size, samples);
            for (std::int64_t i = c * chunk_size; i < end; ++i)
                values.push_back(sample_max(model, n_single, rng.next_uniform()));
        }
        write_output(sample_out, emit_samples(values, fmt_of(sample_out)));
        return 0;
    }

    if (dist->parsed()) {
        const TailModel model = parse_model_spec(model_spec);
        double v = 0.0;
        if (eval_what == "survival") v = model.survival(at);
        else if (eval_what == "density") v = model.density(at);
        else if (eval_what == "quantile") v = model.quantile(at);
        else v = model.slowly_varying_part(at);
        write_output(dist_out, format_value(v) + "\n");
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ldmax::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ldmax::degenerate_data_error& e) {
        std::cerr << "degenerate data: " << e.what() << "\n";
        return 4;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
