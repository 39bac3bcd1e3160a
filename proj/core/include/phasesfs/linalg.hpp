#pragma once

#include <Eigen/Dense>
#include <complex>

#include "phasesfs/errors.hpp"

namespace phasesfs {

using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Solve A X = B by partial-pivot LU. Throws SingularMatrix when a pivot
/// falls below 1e-12 relative to the largest entry of A.
RealMatrix solve(const RealMatrix& A, const RealMatrix& B);
ComplexMatrix solve(const ComplexMatrix& A, const ComplexMatrix& B);

RealVector solve(const RealMatrix& A, const RealVector& b);
ComplexVector solve(const ComplexMatrix& A, const ComplexVector& b);

/// Matrix exponential e^A by scaling-and-squaring with diagonal Pade
/// approximants (orders 3/5/7/9/13 selected from the 1-norm of A).
RealMatrix matrix_exponential(const RealMatrix& A);

/// Convenience overload for e^{A t}.
RealMatrix matrix_exponential(const RealMatrix& A, double t);

/// (-S)^{-1} for a nonsingular sub-intensity matrix S, materialized densely.
RealMatrix green_matrix(const RealMatrix& S);

/// Derivative of z -> (V + U(z))^{-1} given U(z) and U'(z):
///   -(V + U)^{-1} U' (V + U)^{-1}.
RealMatrix inverse_derivative(const RealMatrix& V, const RealMatrix& Uz,
                              const RealMatrix& dUz);

/// Spectral-radius estimate of a nonnegative matrix by power iteration on
/// |M|, converged to 1e-12 (used for power-series domain guards).
double spectral_radius(const RealMatrix& M);

/// In-place radix-2 decimation-in-time FFT, sign convention
/// X_h = sum_k x_k exp(-2 pi i k h / N). N must be a power of two.
void fft_inplace(std::vector<std::complex<double>>& data);

}  // namespace phasesfs
