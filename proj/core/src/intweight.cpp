#include "phasesfs/intweight.hpp"

#include <string>

#include "phasesfs/phasetype.hpp"

namespace phasesfs {

IntWeightedLaw build_intweight_law(const SfsModel& sm,
                                   const std::vector<long>& c, int max_rows) {
    const int types = sm.types();
    if (static_cast<int>(c.size()) != types) {
        throw DimensionMismatch("intweight: coefficient vector must have length n - 1");
    }
    bool any_positive = false;
    for (long cj : c) {
        if (cj < 0) {
            throw NonPositiveCoefficient(
                "intweight: coefficients must be nonnegative integers");
        }
        any_positive = any_positive || cj > 0;
    }
    if (!any_positive) {
        throw NonPositiveCoefficient("intweight: all coefficients are zero");
    }

    // Mutations on branches with a zero coefficient neither advance the
    // statistic nor consume a step, so only branches with positive weight
    // drive events. States without any such branch are eliminated by the
    // zero-reward censoring of the continuous chain.
    const int p = sm.model.size();
    RealVector weighted_branches(p);
    for (int s = 0; s < p; ++s) {
        double count = 0.0;
        for (int j = 0; j < types; ++j) {
            if (c[j] > 0) {
                count += sm.model.states[s][j];
            }
        }
        weighted_branches(s) = count;
    }
    const ContPhaseType base(sm.rep.alpha, sm.rep.S);
    const ContPhaseType surviving = reward_transform(base, weighted_branches);
    const double defect = surviving.defect();
    const bool has_defect = defect > 1e-14;

    std::vector<int> kept_states;
    for (int s = 0; s < p; ++s) {
        if (weighted_branches(s) > 0.0) {
            kept_states.push_back(s);
        }
    }
    const int d = static_cast<int>(kept_states.size());

    // Per-event chain: each step of (I - (2/theta) Sw)^{-1} is one mutation
    // on a weighted branch; the complementary probability is coalescence to
    // the final common ancestor before the next such mutation.
    const RealMatrix I = RealMatrix::Identity(d, d);
    const RealMatrix M =
        solve(RealMatrix(I - surviving.S / sm.lambda()), RealMatrix(I));

    // Block size per surviving state: the largest weight among branches
    // present there. A weight-k mutation enters the target block at position
    // size - k + 1, so heavier mutations consume more countdown rows.
    std::vector<int> block_size(d);
    std::vector<int> block_offset(d);
    long total_rows = 0;
    for (int b = 0; b < d; ++b) {
        const int s = kept_states[b];
        long size = 0;
        for (int j = 0; j < types; ++j) {
            if (c[j] > 0 && sm.model.states[s][j] > 0 && c[j] > size) {
                size = c[j];
            }
        }
        block_offset[b] = static_cast<int>(total_rows);
        block_size[b] = static_cast<int>(size);
        total_rows += size;
    }
    const long rows = total_rows + (has_defect ? 1 : 0);
    if (rows > max_rows) {
        throw BlockMatrixTooLarge(
            "intweight: block matrix needs " + std::to_string(rows) +
            " rows, cap is " + std::to_string(max_rows));
    }

    // Within-block mutation weight split: entering position size - k + 1
    // receives the fraction of weighted branches whose coefficient is k.
    std::vector<RealVector> entry_split(d);
    for (int b = 0; b < d; ++b) {
        const int s = kept_states[b];
        RealVector split = RealVector::Zero(block_size[b]);
        for (int j = 0; j < types; ++j) {
            if (c[j] > 0 && sm.model.states[s][j] > 0) {
                split(block_size[b] - c[j]) +=
                    static_cast<double>(sm.model.states[s][j]);
            }
        }
        entry_split[b] = split / weighted_branches(kept_states[b]);
    }

    RealMatrix Mtilde = RealMatrix::Zero(rows, rows);
    RealVector pi = RealVector::Zero(rows);
    for (int b = 0; b < d; ++b) {
        const int off = block_offset[b];
        const int size = block_size[b];
        for (int q = 0; q + 1 < size; ++q) {
            Mtilde(off + q, off + q + 1) = 1.0;  // countdown
        }
        const int decision = off + size - 1;
        pi(decision) = surviving.alpha(b);
        for (int t = 0; t < d; ++t) {
            if (M(b, t) == 0.0) {
                continue;
            }
            for (int q = 0; q < block_size[t]; ++q) {
                if (entry_split[t](q) > 0.0) {
                    Mtilde(decision, block_offset[t] + q) +=
                        M(b, t) * entry_split[t](q);
                }
            }
        }
    }
    if (has_defect) {
        // Trajectories absorbed without ever holding a weighted branch:
        // c' xi = 0 surely, realized as absorption on the first step.
        pi(rows - 1) = defect;
    }

    IntWeightedLaw out;
    out.coefficients = c;
    out.kept_states = std::move(kept_states);
    out.block_offset = std::move(block_offset);
    out.block_size = std::move(block_size);
    out.law = DiscPhaseType(std::move(pi), std::move(Mtilde), 0.0, 1);
    return out;
}

std::vector<long> support_scan(const IntWeightedLaw& law, long kmax) {
    if (kmax < 0) {
        throw DomainError("support_scan: kmax must be >= 0");
    }
    const std::vector<double> table = law.pmf_table(kmax);
    std::vector<long> support;
    for (long k = 0; k <= kmax; ++k) {
        if (table[static_cast<std::size_t>(k)] > 1e-14) {
            support.push_back(k);
        }
    }
    return support;
}

}  // namespace phasesfs
