#include "phasesfs/inversion.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "phasesfs/estimators.hpp"

namespace phasesfs {

namespace {

void check_coefficients(const SfsModel& sm, const RealVector& c) {
    if (c.size() != sm.types()) {
        throw DimensionMismatch("inversion: coefficient vector must have length n - 1");
    }
}

void check_grid(const InversionGrid& grid) {
    if (grid.H < 64 || (grid.H & (grid.H - 1)) != 0) {
        throw ValidationError("inversion: H must be a power of two >= 64");
    }
    if (!(grid.eta > 0.0)) {
        throw ValidationError("inversion: eta must be positive");
    }
}

}  // namespace

std::complex<double> weighted_pgf(const SfsModel& sm, const RealVector& c,
                                  std::complex<double> z) {
    check_coefficients(sm, c);
    if (std::abs(z) > 1.0 + 1e-9) {
        throw DomainError("weighted_pgf: |z| must be at most one");
    }
    ComplexVector zc(c.size());
    for (Eigen::Index j = 0; j < c.size(); ++j) {
        if (c(j) == 0.0) {
            zc(j) = 1.0;
        } else if (z == std::complex<double>(0.0, 0.0)) {
            if (c(j) < 0.0) {
                throw DomainError("weighted_pgf: z = 0 with negative coefficient");
            }
            zc(j) = 0.0;
        } else {
            zc(j) = std::exp(c(j) * std::log(z));  // principal branch
        }
    }
    // Clamp tiny excursions outside the closed polydisk caused by rounding.
    for (Eigen::Index j = 0; j < zc.size(); ++j) {
        const double r = std::abs(zc(j));
        if (r > 1.0) {
            zc(j) /= r;
        }
    }
    return sfs_joint_pgf(sm, zc);
}

std::complex<double> characteristic_function(const SfsModel& sm,
                                             const RealVector& c, double t) {
    check_coefficients(sm, c);
    ComplexVector zc(c.size());
    for (Eigen::Index j = 0; j < c.size(); ++j) {
        zc(j) = std::polar(1.0, t * c(j));
    }
    return sfs_joint_pgf(sm, zc);
}

InversionGrid default_grid(const SfsModel& sm, const RealVector& c) {
    check_coefficients(sm, c);
    const double variance = estimator_variance(sm, c);
    if (!(variance > 0.0)) {
        throw ValidationError("default_grid: statistic has zero variance");
    }
    InversionGrid grid;
    grid.H = 16384;
    grid.eta = M_PI / (5.0 * std::sqrt(variance));
    grid.mu = statistic_mean(sm, c);
    return grid;
}

CdfTable invert_cdf(const SfsModel& sm, const RealVector& c,
                    const InversionGrid& grid) {
    check_coefficients(sm, c);
    check_grid(grid);
    const int H = grid.H;
    const double eta = grid.eta;

    // phi_Z(eta k) for the centered statistic Z = c' xi - mu; the k = 0 term
    // is excluded (its contribution is the 1/2 + h/H baseline).
    std::vector<std::complex<double>> work(static_cast<std::size_t>(H),
                                           std::complex<double>(0.0, 0.0));
    for (int k = 1; k < H; ++k) {
        const double t = eta * k;
        const std::complex<double> phi =
            characteristic_function(sm, c, t) * std::polar(1.0, -t * grid.mu);
        work[static_cast<std::size_t>(k)] =
            phi / std::complex<double>(0.0, M_PI * k);
    }
    fft_inplace(work);  // sum_k w_k exp(-2 pi i k h / H)

    // Assemble F at lattice points h in (-H/2, H/2). Pairing the +-k
    // frequency samples of the 1/(pi i t) kernel folds into minus the real
    // part of the transform plus the linear baseline.
    CdfTable table;
    table.grid = grid;
    table.points.reserve(static_cast<std::size_t>(H) - 1);
    table.raw.reserve(static_cast<std::size_t>(H) - 1);
    const double lattice_step = 2.0 * M_PI / (eta * H);
    for (int h = -H / 2 + 1; h <= H / 2 - 1; ++h) {
        const int idx = h >= 0 ? h : h + H;
        const double value = 0.5 + static_cast<double>(h) / H -
                             work[static_cast<std::size_t>(idx)].real();
        table.points.push_back(grid.mu + lattice_step * h);
        table.raw.push_back(value);
    }

    const double left = table.raw.front();
    const double right = table.raw.back();
    if (std::abs(left) > 0.01 || std::abs(right - 1.0) > 0.01) {
        throw GridTooCoarse(
            "invert_cdf: recovered endpoints " + std::to_string(left) + ", " +
            std::to_string(right) +
            " deviate from {0,1} by more than 0.01; widen the range or "
            "refine the grid");
    }
    // A lattice-valued statistic makes the direct inversion ring around each
    // jump; that ringing integrates to zero over a short window, so
    // monotonicity is assessed on a locally averaged copy. Range or aliasing
    // failures produce broad descents that survive the averaging.
    const int m = static_cast<int>(table.raw.size());
    const int w = std::max(1, H / 256);
    std::vector<double> prefix(static_cast<std::size_t>(m) + 1, 0.0);
    for (int i = 0; i < m; ++i) {
        prefix[static_cast<std::size_t>(i) + 1] =
            prefix[static_cast<std::size_t>(i)] + table.raw[static_cast<std::size_t>(i)];
    }
    const auto window_mean = [&](int i) {
        const int lo = std::max(0, i - w);
        const int hi = std::min(m - 1, i + w);
        return (prefix[static_cast<std::size_t>(hi) + 1] -
                prefix[static_cast<std::size_t>(lo)]) /
               (hi - lo + 1);
    };
    double violation = 0.0;
    double prev = window_mean(0);
    for (int i = 1; i < m; ++i) {
        const double cur = window_mean(i);
        violation += std::max(0.0, prev - cur);
        prev = cur;
    }
    if (violation > 0.01) {
        throw GridTooCoarse(
            "invert_cdf: monotonicity violation " + std::to_string(violation) +
            " exceeds 0.01 before regularization");
    }

    table.values.reserve(table.raw.size());
    double running = 0.0;
    for (double v : table.raw) {
        running = std::max(running, v);
        table.values.push_back(std::min(1.0, running));
    }
    return table;
}

std::vector<double> quantiles(const CdfTable& table,
                              const std::vector<double>& probs) {
    std::vector<double> out;
    out.reserve(probs.size());
    for (double p : probs) {
        if (!(p > 0.0 && p < 1.0)) {
            throw DomainError("quantiles: probabilities must lie in (0,1)");
        }
        std::size_t lo = 0;
        std::size_t hi = table.values.size();
        while (lo < hi) {  // first index with values[idx] >= p
            const std::size_t mid = (lo + hi) / 2;
            if (table.values[mid] >= p) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        out.push_back(lo < table.values.size() ? table.points[lo]
                                               : table.points.back());
    }
    return out;
}

}  // namespace phasesfs
