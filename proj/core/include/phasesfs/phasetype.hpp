#pragma once

#include <vector>

#include "phasesfs/linalg.hpp"

namespace phasesfs {

/// Absorption time of a finite-state Markov jump process with sub-intensity
/// matrix S, started from the (possibly substochastic) distribution alpha.
/// Mass missing from alpha is a point mass at zero ("defect"), which is how
/// statistics that can be identically zero are represented.
struct ContPhaseType {
    RealVector alpha;
    RealMatrix S;

    ContPhaseType() = default;
    ContPhaseType(RealVector alpha_in, RealMatrix S_in);

    int size() const { return static_cast<int>(alpha.size()); }

    /// Point mass at zero, 1 - sum(alpha).
    double defect() const { return 1.0 - alpha.sum(); }

    /// Absorption rates -S e.
    RealVector exit_rates() const;

    /// Density of the continuous part, alpha e^{St} (-S e), for t >= 0.
    double density(double t) const;

    /// P(Y <= t) = 1 - alpha e^{St} e; equals defect() at t = 0.
    double cdf(double t) const;

    /// Laplace transform E[e^{-tY}] = defect + alpha (tI - S)^{-1} (-S e).
    double laplace(double t) const;

    /// k-th moment k! alpha (-S)^{-k} e (k >= 1).
    double moment(int k) const;

    double mean() const { return moment(1); }
};

/// Absorption step count tau of a discrete Markov chain with substochastic
/// transition matrix M: P(tau = 0) = atom0 and P(tau = k) = pi M^{k-1} m for
/// k >= 1 with m = (I - M) e. The statistic of interest is X = tau - shift
/// with shift in {0, 1}; shift = 1 encodes "X + 1 is the absorption step",
/// in which case atom0 must vanish.
struct DiscPhaseType {
    RealVector pi;
    RealMatrix M;
    double atom0 = 0.0;
    int shift = 0;

    DiscPhaseType() = default;
    DiscPhaseType(RealVector pi_in, RealMatrix M_in, double atom0_in = 0.0,
                  int shift_in = 0);

    int size() const { return static_cast<int>(pi.size()); }

    /// Absorption probabilities (I - M) e.
    RealVector exit_probs() const;

    /// P(tau = k) for k >= 0.
    double pmf(long k) const;

    /// E[z^tau] = atom0 + z pi (I - zM)^{-1} m for |z| < 1 / spectral_radius(M).
    double pgf(double z) const;

    double mean() const;               // E[tau]
    double factorial_moment2() const;  // E[tau (tau - 1)]

    /// Law of the statistic X = tau - shift.
    double statistic_pmf(long k) const;
    std::vector<double> statistic_pmf_table(long kmax) const;
    double statistic_cdf(long k) const;
    double statistic_pgf(double z) const;
    double statistic_mean() const { return mean() - shift; }
    double statistic_variance() const;
};

/// Law of the reward-weighted absorption time Y = sum_i r_i (time in state i).
/// States with zero reward are eliminated through the embedded jump chain;
/// if the chain can reach absorption through zero-reward states only, the
/// result carries the corresponding point mass at zero as a defect. A
/// substochastic input alpha passes its own defect through multiplicatively.
ContPhaseType reward_transform(const ContPhaseType& ph, const RealVector& rewards);

/// Law of a Poisson count Z with random intensity lambda * Y where Y is the
/// given phase-type variable. When Y has no point mass at zero the result
/// has shift = 1: Z + 1 is the absorption step of the chain with transition
/// matrix M = (I - S/lambda)^{-1} started from alpha. A defect in Y folds
/// into the atom at Z = 0.
DiscPhaseType poisson_mix(const ContPhaseType& ph, double lambda);

}  // namespace phasesfs
