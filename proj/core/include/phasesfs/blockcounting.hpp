#pragma once

#include <cstdint>
#include <vector>

#include "phasesfs/linalg.hpp"

namespace phasesfs {

/// Ancestral lineage-count process for a sample of size n. Each state is a
/// vector (a_1, ..., a_{n-1}) where a_i counts ancestral lineages subtending
/// exactly i sample leaves; the fully coalesced state is absorbing and not
/// stored. Transitions merge one pair of lineages at a time, so the number
/// of lineages sum(a) drops by one per jump and T is strictly upper
/// triangular in the canonical state order.
struct BlockCountingModel {
    int n = 0;
    std::vector<std::vector<int>> states;  // canonical order, row 0 = (n,0,...,0)
    RealMatrix T;                          // sub-intensity matrix, integers in double
    RealVector alpha;                      // initial distribution, e_1

    /// Number of transient states, p(n) - 1.
    int size() const { return static_cast<int>(states.size()); }

    /// States stacked as a size x (n-1) matrix of doubles; column i-1 holds
    /// the lineage counts of size-i blocks and doubles as the reward matrix
    /// for branch lengths by subtended-leaf count.
    RealMatrix state_matrix() const;

    /// Exit rates -T e; positive exactly on the two-lineage states.
    RealVector exit_rates() const;

    /// Number of ancestral lineages sum(a) in a given state.
    int lineage_count(int state) const;
};

/// Number of integer partitions of n (independent counting recurrence).
std::uint64_t partition_count(int n);

/// Number of transient states of the lineage-count process: partitions of n
/// minus the absorbing single-block state.
std::uint64_t state_count(int n);

/// Build the full model for 2 <= n <= 30.
///
/// Canonical order: breadth-first discovery from (n,0,...,0). From each
/// state, merge events are visited in decreasing rate order with ties broken
/// by the ascending (i,j) block-size pair, and newly reached states are
/// appended in discovery order. This order lists states in decreasing
/// lineage count and is reproduced exactly by the dumps in the tests.
BlockCountingModel build_model(int n);

}  // namespace phasesfs
