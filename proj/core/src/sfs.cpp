#include "phasesfs/sfs.hpp"

#include <string>

namespace phasesfs {

namespace {

RealVector mask_to_rewards(const SfsModel& sm, const std::vector<int>& mask) {
    if (static_cast<int>(mask.size()) != sm.types()) {
        throw DimensionMismatch("mask must have length n - 1");
    }
    bool any = false;
    RealVector weights = RealVector::Zero(sm.types());
    for (int i = 0; i < sm.types(); ++i) {
        if (mask[i] != 0 && mask[i] != 1) {
            throw ValidationError("mask entries must be 0 or 1");
        }
        weights(i) = mask[i];
        any = any || mask[i] == 1;
    }
    if (!any) {
        throw AllZeroMask("mask selects no mutation type");
    }
    return sm.rep.R * weights;
}

void check_type_index(const SfsModel& sm, int i) {
    if (i < 1 || i > sm.types()) {
        throw DimensionMismatch("mutation type index must be in 1..n-1, got " +
                                std::to_string(i));
    }
}

}  // namespace

SfsModel make_sfs_model(BlockCountingModel model, double theta) {
    if (!(theta > 0.0)) {
        throw ValidationError("theta must be positive");
    }
    SfsModel sm;
    sm.theta = theta;
    sm.rep = MphRep(model.alpha, model.T, model.state_matrix());
    sm.model = std::move(model);
    return sm;
}

SfsModel make_sfs_model(int n, double theta) {
    return make_sfs_model(build_model(n), theta);
}

ContPhaseType branch_length_law(const SfsModel& sm, int i) {
    check_type_index(sm, i);
    ContPhaseType base(sm.rep.alpha, sm.rep.S);
    return reward_transform(base, RealVector(sm.rep.R.col(i - 1)));
}

ContPhaseType masked_branch_length_law(const SfsModel& sm,
                                       const std::vector<int>& mask) {
    ContPhaseType base(sm.rep.alpha, sm.rep.S);
    return reward_transform(base, mask_to_rewards(sm, mask));
}

DiscPhaseType count_law(const SfsModel& sm, int i) {
    return poisson_mix(branch_length_law(sm, i), sm.lambda());
}

DiscPhaseType masked_count_law(const SfsModel& sm, const std::vector<int>& mask) {
    return poisson_mix(masked_branch_length_law(sm, mask), sm.lambda());
}

std::complex<double> sfs_joint_pgf(const SfsModel& sm, const ComplexVector& z) {
    return mph_joint_pgf(sm.rep, sm.lambda(), z);
}

RealVector expected_sfs(const SfsModel& sm) {
    return RealVector(sm.lambda() * mph_mean(sm.rep));
}

}  // namespace phasesfs
