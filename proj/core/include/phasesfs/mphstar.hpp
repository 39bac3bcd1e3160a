#pragma once

#include <complex>

#include "phasesfs/phasetype.hpp"

namespace phasesfs {

/// Joint law of m reward totals Y = (Y_1, ..., Y_m), where Y_k accumulates
/// reward R(i, k) per unit time spent in transient state i of the chain
/// (alpha, S). All columns share one trajectory, which is what makes the
/// coordinates dependent.
struct MphRep {
    RealVector alpha;
    RealMatrix S;
    RealMatrix R;  // size() x dims(), nonnegative

    MphRep() = default;
    MphRep(RealVector alpha_in, RealMatrix S_in, RealMatrix R_in);

    int size() const { return static_cast<int>(alpha.size()); }
    int dims() const { return static_cast<int>(R.cols()); }
};

/// Joint transform E[exp(a . Y)] for a with nonpositive entries:
/// alpha (diag(R a) + S)^{-1} S e.
double mph_laplace(const MphRep& rep, const RealVector& a);

/// Mean vector E[Y] = alpha (-S)^{-1} R.
RealVector mph_mean(const MphRep& rep);

/// Second cross moment E[Y_i Y_j] (0-based coordinates).
double mph_cross_moment(const MphRep& rep, int i, int j);

/// Covariance matrix of Y.
RealMatrix mph_covariance(const MphRep& rep);

/// Joint probability generating function E[prod_k z_k^{Z_k}] of the Poisson
/// counts Z_k | Y ~ Poisson(lambda Y_k), evaluated on the closed unit
/// polydisk: alpha (diag(R lambda (z - e)) + S)^{-1} S e.
std::complex<double> mph_joint_pgf(const MphRep& rep, double lambda,
                                   const ComplexVector& z);

/// Covariance matrix of the Poisson counts Z:
/// lambda diag(E[Y]) + lambda^2 Cov(Y).
RealMatrix poisson_covariance(const MphRep& rep, double lambda);

}  // namespace phasesfs
