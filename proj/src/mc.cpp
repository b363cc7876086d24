#include "ldmax/mc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ldmax/ldp.hpp"

namespace ldmax {

namespace detail {

namespace {
std::uint64_t splitmix64(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
} // namespace

ChunkRng::ChunkRng(std::uint64_t seed, std::uint64_t chunk_index) {
    // Decorrelate (seed, chunk) pairs before streaming.
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s = a ^ (chunk_index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
    state_ = s;
    next_u64();
}

std::uint64_t ChunkRng::next_u64() { return splitmix64(state_); }

double ChunkRng::next_uniform() {
    // 53 random bits centered in the cell, strictly inside (0,1).
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

} // namespace detail

double sample_max(const TailModel& model, std::int64_t n, double u) {
    if (n < 1) throw std::domain_error("sample_max requires n >= 1");
    if (n >= (std::int64_t{1} << 53))
        throw std::domain_error("n too large for resolvable u^(1/n)");
    if (!(u > 0.0 && u < 1.0))
        throw std::domain_error("sample_max requires u in (0,1)");
    // u^{1/n} = exp(ln u / n); survival target 1 - u^{1/n} = -expm1(ln u / n).
    const double v = std::log(u) / static_cast<double>(n);
    const double log_sf = std::log(-std::expm1(v));
    return std::exp(model.log_quantile_tail(log_sf));
}

double brute_force_max(const TailModel& model, std::int64_t n,
                       std::span<const double> uniforms) {
    if (n < 1) throw std::domain_error("brute_force_max requires n >= 1");
    if (std::cmp_not_equal(uniforms.size(), n))
        throw std::domain_error("brute_force_max requires exactly n uniforms");
    double best = -std::numeric_limits<double>::infinity();
    for (double u : uniforms) best = std::max(best, model.sample_one(u));
    return best;
}

Estimate estimate_set_prob(const TailModel& model, std::int64_t n,
                           const BorelSubset& a, const SimConfig& cfg,
                           int threads) {
    if (cfg.samples < 1) throw std::domain_error("samples must be >= 1");
    if (cfg.chunk_size < 1 || cfg.chunk_size > cfg.samples)
        throw std::domain_error("chunk_size must be in [1, samples]");
    if (threads < 1) threads = 1;

    const std::int64_t n_chunks =
        (cfg.samples + cfg.chunk_size - 1) / cfg.chunk_size;

    auto run_chunk = [&](std::int64_t chunk) -> std::int64_t {
        const std::int64_t begin = chunk * cfg.chunk_size;
        const std::int64_t end = std::min(begin + cfg.chunk_size, cfg.samples);
        detail::ChunkRng rng(cfg.seed, static_cast<std::uint64_t>(chunk));
        std::int64_t hits = 0;
        for (std::int64_t i = begin; i < end; ++i) {
            const double m = sample_max(model, n, rng.next_uniform());
            if (a.contains(z_value(model, n, m))) ++hits;
        }
        return hits;
    };

    std::int64_t hits = 0;
    if (threads == 1 || n_chunks == 1) {
        for (std::int64_t c = 0; c < n_chunks; ++c) hits += run_chunk(c);
    } else {
        std::vector<std::int64_t> per_thread(static_cast<std::size_t>(threads), 0);
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                std::int64_t local = 0;
                for (std::int64_t c = t; c < n_chunks; c += threads)
                    local += run_chunk(c);
                per_thread[static_cast<std::size_t>(t)] = local;
            });
        }
        for (auto& th : pool) th.join();
        for (std::int64_t h : per_thread) hits += h;
    }

    Estimate est;
    est.samples = cfg.samples;
    est.p_hat = static_cast<double>(hits) / static_cast<double>(cfg.samples);
    est.stderr_ = std::sqrt(est.p_hat * (1.0 - est.p_hat)
                            / static_cast<double>(cfg.samples));
    const double z = 1.959963984540054;
    if (static_cast<double>(hits) < 10.0
        || static_cast<double>(cfg.samples - hits) < 10.0) {
        // Wilson interval for small counts.
        const double ns = static_cast<double>(cfg.samples);
        const double z2 = z * z;
        const double denom = 1.0 + z2 / ns;
        const double center = (est.p_hat + z2 / (2.0 * ns)) / denom;
        const double half = z / denom
            * std::sqrt(est.p_hat * (1.0 - est.p_hat) / ns + z2 / (4.0 * ns * ns));
        est.ci_low = hits == 0 ? 0.0 : std::max(0.0, center - half);
        est.ci_high = hits == cfg.samples ? 1.0 : std::min(1.0, center + half);
    } else {
        est.ci_low = std::max(0.0, est.p_hat - z * est.stderr_);
        est.ci_high = std::min(1.0, est.p_hat + z * est.stderr_);
    }
    return est;
}

} // namespace ldmax
