#pragma once

#include <vector>

#include "phasesfs/sfs.hpp"

namespace phasesfs {

/// Exact law of c' xi for nonnegative integer coefficients c, represented so
/// that 1 + c' xi is the absorption step of a block-structured discrete
/// chain. Each mutation event of weight w advances the chain w steps: one
/// entering transition plus w-1 countdown steps inside the target block.
///
/// Rows group into one block per surviving state of the lineage-count chain
/// (states where every branch carries weight zero are eliminated first).
/// Within a block, countdown positions ascend and the bottom row is the
/// "decision" row from which the next mutation or absorption is resolved;
/// initial mass therefore enters at decision rows. Trajectories that can
/// only accumulate weight zero contribute one extra immediately-absorbing
/// row so the law stays honest when some coefficients vanish.
struct IntWeightedLaw {
    std::vector<long> coefficients;  // length n-1
    DiscPhaseType law;               // shift = 1: statistic is c' xi

    std::vector<int> kept_states;    // model state index per block
    std::vector<int> block_offset;   // first row of each block
    std::vector<int> block_size;     // rows in each block

    int rows() const { return law.size(); }

    /// P(c' xi = k).
    double pmf(long k) const { return law.statistic_pmf(k); }
    std::vector<double> pmf_table(long kmax) const {
        return law.statistic_pmf_table(kmax);
    }
};

/// Build the block representation. Coefficients must be nonnegative with at
/// least one positive entry; the total row count is capped (the blocks grow
/// with both the state space and the coefficient magnitudes).
IntWeightedLaw build_intweight_law(const SfsModel& sm,
                                   const std::vector<long>& c,
                                   int max_rows = 20000);

/// Values k in 0..kmax with P(c' xi = k) > 1e-14.
std::vector<long> support_scan(const IntWeightedLaw& law, long kmax);

}  // namespace phasesfs
