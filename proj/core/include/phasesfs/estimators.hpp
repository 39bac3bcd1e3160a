#pragma once

#include <string>
#include <vector>

#include "phasesfs/rational.hpp"
#include "phasesfs/sfs.hpp"

namespace phasesfs {

/// Harmonic number a1 = sum_{i=1}^{n-1} 1/i as an exact fraction.
Rational harmonic_number(int n);

/// Names of the classical linear unbiased estimators of theta:
/// singleton, watterson, pairwise, H, L.
const std::vector<std::string>& estimator_names();

/// Names of the classical neutrality test statistics (differences of two
/// unbiased estimators, hence mean zero):
/// taj_D, pi_minus_H, L_minus_W, W_minus_H, xi1_minus_W.
const std::vector<std::string>& test_names();

/// SFS coefficient vector of a classical estimator, exact.
std::vector<Rational> classical_coefficients_exact(const std::string& name, int n);

/// SFS coefficient vector of a classical estimator or test statistic,
/// as doubles. Throws UnknownName for anything else.
RealVector classical_coefficients(const std::string& name, int n);

/// Coefficients of the named statistic, including "blue" (which depends on
/// theta through the model).
RealVector statistic_coefficients(const std::string& name, const SfsModel& sm);

/// Covariance matrix of the SFS: (theta^2/4) Cov(Y) + theta diag(1/i).
RealMatrix sfs_covariance(const SfsModel& sm);

/// Var(c' xi) = c' Cov(xi) c.
double estimator_variance(const SfsModel& sm, const RealVector& c);

/// E[c' xi] = theta * sum_i c_i / i.
double statistic_mean(const SfsModel& sm, const RealVector& c);

/// Minimum-variance coefficients among linear unbiased estimators of theta:
/// solve Cov(xi) x = v with v_i = 1/i, normalize so c'v = 1.
RealVector blue_coefficients(const SfsModel& sm);

}  // namespace phasesfs
