#include "phasesfs/simulate.hpp"

#include <cmath>

namespace phasesfs {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

void check_cfg(const BlockCountingModel& model, const SimConfig& cfg) {
    if (cfg.n != model.n) {
        throw DimensionMismatch("simulate: config n does not match the model");
    }
    if (cfg.replicates < 1) {
        throw ValidationError("simulate: need at least one replicate");
    }
    if (cfg.theta < 0.0) {
        throw ValidationError("simulate: theta must be nonnegative");
    }
}

struct StateTransitions {
    double total_rate = 0.0;
    double exit_rate = 0.0;
    std::vector<std::pair<double, int>> jumps;  // (rate, target)
};

std::vector<StateTransitions> precompute(const BlockCountingModel& model) {
    const int p = model.size();
    std::vector<StateTransitions> out(p);
    for (int s = 0; s < p; ++s) {
        out[s].total_rate = -model.T(s, s);
        double jump_total = 0.0;
        for (int t = 0; t < p; ++t) {
            if (t != s && model.T(s, t) > 0.0) {
                out[s].jumps.emplace_back(model.T(s, t), t);
                jump_total += model.T(s, t);
            }
        }
        out[s].exit_rate = out[s].total_rate - jump_total;
    }
    return out;
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
    // Two rounds of mixing keep distinct (seed, stream) pairs decorrelated.
    std::uint64_t x = seed;
    (void)splitmix64(x);
    x ^= 0x6a09e667f3bcc909ULL + stream * 0x9e3779b97f4a7c15ULL;
    for (auto& word : s_) {
        word = splitmix64(x);
    }
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Rng::uniform() {
    // 53-bit mantissa, offset by half an ulp to stay inside (0, 1).
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::exponential(double rate) {
    return -std::log(uniform()) / rate;
}

long Rng::poisson(double mean) {
    if (mean <= 0.0) {
        return 0;
    }
    // Split large means so the product-of-uniforms loop stays in range.
    long total = 0;
    while (mean > 30.0) {
        const double half = mean / 2.0;
        total += poisson(half);
        mean -= half;
    }
    const double floor = std::exp(-mean);
    long k = 0;
    double product = uniform();
    while (product > floor) {
        ++k;
        product *= uniform();
    }
    return total + k;
}

void simulate_sfs(const BlockCountingModel& model, const SimConfig& cfg,
                  const std::function<void(long, const SimSample&)>& visit) {
    check_cfg(model, cfg);
    const auto transitions = precompute(model);
    const int types = model.n - 1;
    const double lambda = cfg.theta / 2.0;

    SimSample sample;
    sample.branch_lengths.assign(types, 0.0);
    sample.sfs.assign(types, 0);

    for (long rep = 0; rep < cfg.replicates; ++rep) {
        Rng rng(cfg.seed, static_cast<std::uint64_t>(rep));
        std::fill(sample.branch_lengths.begin(), sample.branch_lengths.end(), 0.0);
        std::fill(sample.sfs.begin(), sample.sfs.end(), 0);
        sample.tmrca = 0.0;

        int state = 0;
        while (true) {
            const StateTransitions& tr = transitions[state];
            const double hold = rng.exponential(tr.total_rate);
            sample.tmrca += hold;
            const std::vector<int>& a = model.states[state];
            for (int j = 0; j < types; ++j) {
                if (a[j] > 0) {
                    sample.branch_lengths[j] += a[j] * hold;
                }
            }
            // Choose the next merge (or absorption) by rate.
            double pick = rng.uniform() * tr.total_rate;
            int next = -1;
            for (const auto& [rate, target] : tr.jumps) {
                if (pick < rate) {
                    next = target;
                    break;
                }
                pick -= rate;
            }
            if (next < 0) {
                break;  // remaining mass is the exit rate: common ancestor
            }
            state = next;
        }
        if (lambda > 0.0) {
            for (int j = 0; j < types; ++j) {
                sample.sfs[j] = rng.poisson(lambda * sample.branch_lengths[j]);
            }
        }
        visit(rep, sample);
    }
}

std::vector<SimSample> simulate_sfs(const BlockCountingModel& model,
                                    const SimConfig& cfg) {
    std::vector<SimSample> out;
    out.reserve(static_cast<std::size_t>(cfg.replicates));
    simulate_sfs(model, cfg, [&out](long, const SimSample& sample) {
        out.push_back(sample);
    });
    return out;
}

std::vector<double> simulate_statistic(const BlockCountingModel& model,
                                       const SimConfig& cfg,
                                       const RealVector& c) {
    if (c.size() != model.n - 1) {
        throw DimensionMismatch("simulate_statistic: coefficient length");
    }
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(cfg.replicates));
    simulate_sfs(model, cfg, [&](long, const SimSample& sample) {
        double value = 0.0;
        for (int j = 0; j < model.n - 1; ++j) {
            value += c(j) * static_cast<double>(sample.sfs[j]);
        }
        out.push_back(value);
    });
    return out;
}

}  // namespace phasesfs
