#pragma once

#include "phasesfs/blockcounting.hpp"
#include "phasesfs/mphstar.hpp"

namespace phasesfs {

/// Coalescent model of the site frequency spectrum for a sample of size n
/// with scaled mutation rate theta. Branch lengths subtending i leaves are
/// the joint reward totals of the lineage-count chain; mutation counts are
/// Poisson with intensity (theta/2) per unit branch length.
struct SfsModel {
    BlockCountingModel model;
    double theta = 0.0;
    MphRep rep;  // alpha = e_1, S = T, R = lineage counts by block size

    int n() const { return model.n; }
    int types() const { return model.n - 1; }
    double lambda() const { return theta / 2.0; }
};

SfsModel make_sfs_model(int n, double theta);
SfsModel make_sfs_model(BlockCountingModel model, double theta);

/// Law of the total branch length subtending exactly i leaves (1 <= i <= n-1).
/// Defective for block sizes the trajectory can miss entirely.
ContPhaseType branch_length_law(const SfsModel& sm, int i);

/// Law of the total branch length summed over the block sizes selected by a
/// 0/1 mask of length n-1 (mask = all ones gives the total tree length).
ContPhaseType masked_branch_length_law(const SfsModel& sm,
                                       const std::vector<int>& mask);

/// Law of the mutation count xi_i.
DiscPhaseType count_law(const SfsModel& sm, int i);

/// Law of sum_{i in mask} xi_i (mask = all ones gives segregating sites).
DiscPhaseType masked_count_law(const SfsModel& sm, const std::vector<int>& mask);

/// Joint generating function E[prod z_i^{xi_i}] on the closed unit polydisk.
std::complex<double> sfs_joint_pgf(const SfsModel& sm, const ComplexVector& z);

/// E[xi_i] = theta / i, computed from the model (not the closed form).
RealVector expected_sfs(const SfsModel& sm);

}  // namespace phasesfs
