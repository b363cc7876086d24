#ifndef LDMAX_MC_HPP
#define LDMAX_MC_HPP

#include <cstdint>
#include <span>

#include "ldmax/borel_set.hpp"
#include "ldmax/tail_model.hpp"

namespace ldmax {

struct SimConfig {
    std::int64_t samples = 100000;
    std::uint64_t seed = 0;
    std::int64_t chunk_size = 4096; // replicates per deterministic substream
};

struct Estimate {
    double p_hat = 0.0;
    std::int64_t samples = 0;
    double stderr_ = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
};

// One draw of X_(n) from a single uniform, using F_{X_(n)} = F^n:
// quantile(u^{1/n}), with u^{1/n} taken in log space. Cost independent of n.
double sample_max(const TailModel& model, std::int64_t n, double u);

// Independent oracle: max of componentwise quantiles over n uniforms.
double brute_force_max(const TailModel& model, std::int64_t n,
                       std::span<const double> uniforms);

// Monte Carlo estimate of P(Z_n in A). Deterministic for fixed
// (seed, samples, chunk_size) regardless of thread count: chunks are
// independent substreams and the reduction is an integer count.
Estimate estimate_set_prob(const TailModel& model, std::int64_t n,
                           const BorelSubset& a, const SimConfig& cfg,
                           int threads = 1);

namespace detail {
// Uniform (0,1) stream for one chunk; exposed for tests.
class ChunkRng {
public:
    ChunkRng(std::uint64_t seed, std::uint64_t chunk_index);
    double next_uniform();

private:
    std::uint64_t state_;
    std::uint64_t next_u64();
};
} // namespace detail

} // namespace ldmax

#endif
