#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "phasesfs/sfs.hpp"

namespace phasesfs {

struct SimConfig {
    int n = 0;
    double theta = 0.0;      // 0 allowed: skip mutation sampling
    long replicates = 0;
    std::uint64_t seed = 0;
};

/// One simulated realization: branch-length totals per subtended-leaf count
/// and the Poisson mutation counts on them.
struct SimSample {
    std::vector<double> branch_lengths;  // length n-1
    std::vector<long> sfs;               // length n-1, zeros when theta == 0
    double tmrca = 0.0;                  // total time until full coalescence
};

/// Small deterministic generator (xoshiro256**) with explicit seeding, so
/// simulation streams are reproducible across platforms. Each replicate
/// derives its own stream from (seed, replicate index); replicates can
/// therefore run in any order or in parallel.
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();
    double uniform();                    // (0, 1)
    double exponential(double rate);
    long poisson(double mean);

private:
    std::uint64_t s_[4];
};

/// Sample trajectories of the lineage-count chain and visit one SimSample
/// per replicate (in replicate order).
void simulate_sfs(const BlockCountingModel& model, const SimConfig& cfg,
                  const std::function<void(long, const SimSample&)>& visit);

/// Materialized samples (convenience wrapper).
std::vector<SimSample> simulate_sfs(const BlockCountingModel& model,
                                    const SimConfig& cfg);

/// Draws of the linear statistic c' xi.
std::vector<double> simulate_statistic(const BlockCountingModel& model,
                                       const SimConfig& cfg,
                                       const RealVector& c);

}  // namespace phasesfs
