#pragma once

#include <vector>

#include "phasesfs/sfs.hpp"

namespace phasesfs {

/// Lattice for numerical CDF recovery. The statistic is centered by mu, the
/// characteristic function is sampled at frequencies eta*k, and the CDF is
/// read off at the H-1 points 2*pi*h/(eta*H) for h in (-H/2, H/2).
struct InversionGrid {
    int H = 16384;     // power of two, >= 64
    double eta = 0.0;  // frequency step
    double mu = 0.0;   // centering mean of the statistic
};

/// Recovered CDF on the lattice. Points are on the original statistic scale
/// (centering undone); `raw` keeps the direct inversion output and `values`
/// the monotone-regularized, clipped version.
struct CdfTable {
    std::vector<double> points;
    std::vector<double> raw;
    std::vector<double> values;
    InversionGrid grid;

    double step() const { return 2.0 * M_PI / (grid.eta * grid.H); }
};

/// Generating function G(z) = E[z^{c' xi}] for real coefficients c and z on
/// or inside the unit circle (principal branch for z^{c_j}).
std::complex<double> weighted_pgf(const SfsModel& sm, const RealVector& c,
                                  std::complex<double> z);

/// Characteristic function E[exp(i t c' xi)] = G(e^{it}), evaluated with
/// z^{c_j} = exp(i t c_j) directly so non-integer coefficients need no
/// branch choice.
std::complex<double> characteristic_function(const SfsModel& sm,
                                             const RealVector& c, double t);

/// Default grid: H = 2^14 and eta = pi / (5 sd) with sd the exact standard
/// deviation of c' xi, so the lattice spans +-5 sd around the exact mean.
InversionGrid default_grid(const SfsModel& sm, const RealVector& c);

/// Recover the CDF of c' xi on the lattice by FFT over characteristic
/// function samples. Throws GridTooCoarse when the recovered endpoints
/// deviate from {0, 1} by more than 0.01 or the monotonicity violation
/// before regularization exceeds 0.01 in total variation.
CdfTable invert_cdf(const SfsModel& sm, const RealVector& c,
                    const InversionGrid& grid);

/// Left-continuous inverse of the regularized table at the given
/// probabilities (each in (0,1)).
std::vector<double> quantiles(const CdfTable& table,
                              const std::vector<double>& probs);

}  // namespace phasesfs
