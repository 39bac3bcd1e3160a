#include "phasesfs/phasetype.hpp"

#include <cmath>
#include <string>

namespace phasesfs {

namespace {

constexpr double kSlack = 1e-9;

void check_sub_intensity(const RealVector& alpha, const RealMatrix& S) {
    const Eigen::Index p = alpha.size();
    if (S.rows() != p || S.cols() != p) {
        throw DimensionMismatch("phase type: alpha and S sizes disagree");
    }
    double total = 0.0;
    for (Eigen::Index i = 0; i < p; ++i) {
        if (alpha(i) < -kSlack) {
            throw ValidationError("phase type: negative initial probability");
        }
        total += alpha(i);
        if (S(i, i) >= 0.0) {
            throw ValidationError("phase type: diagonal of S must be negative");
        }
        double row = 0.0;
        for (Eigen::Index j = 0; j < p; ++j) {
            if (j != i && S(i, j) < -kSlack) {
                throw ValidationError("phase type: negative off-diagonal rate");
            }
            row += S(i, j);
        }
        if (row > kSlack) {
            throw ValidationError("phase type: positive row sum in S");
        }
    }
    if (total > 1.0 + kSlack) {
        throw ValidationError("phase type: initial probabilities exceed one");
    }
}

void check_substochastic(const RealVector& pi, const RealMatrix& M,
                         double atom0, int shift) {
    const Eigen::Index p = pi.size();
    if (M.rows() != p || M.cols() != p) {
        throw DimensionMismatch("discrete phase type: pi and M sizes disagree");
    }
    if (shift != 0 && shift != 1) {
        throw ValidationError("discrete phase type: shift must be 0 or 1");
    }
    if (shift == 1 && atom0 != 0.0) {
        throw ValidationError(
            "discrete phase type: shift = 1 requires no atom at zero");
    }
    if (atom0 < -kSlack || atom0 > 1.0 + kSlack) {
        throw ValidationError("discrete phase type: atom0 outside [0, 1]");
    }
    for (Eigen::Index i = 0; i < p; ++i) {
        if (pi(i) < -kSlack) {
            throw ValidationError("discrete phase type: negative initial mass");
        }
        double row = 0.0;
        for (Eigen::Index j = 0; j < p; ++j) {
            if (M(i, j) < -kSlack) {
                throw ValidationError(
                    "discrete phase type: negative transition probability");
            }
            row += M(i, j);
        }
        if (row > 1.0 + kSlack) {
            throw ValidationError("discrete phase type: row sum exceeds one");
        }
    }
    if (pi.sum() + atom0 > 1.0 + kSlack) {
        throw ValidationError("discrete phase type: total mass exceeds one");
    }
}

}  // namespace

ContPhaseType::ContPhaseType(RealVector alpha_in, RealMatrix S_in)
    : alpha(std::move(alpha_in)), S(std::move(S_in)) {
    check_sub_intensity(alpha, S);
}

RealVector ContPhaseType::exit_rates() const {
    return RealVector(-S.rowwise().sum());
}

double ContPhaseType::density(double t) const {
    if (t < 0.0) {
        throw DomainError("density: t must be nonnegative");
    }
    return alpha.dot(matrix_exponential(S, t) * exit_rates());
}

double ContPhaseType::cdf(double t) const {
    if (t < 0.0) {
        throw DomainError("cdf: t must be nonnegative");
    }
    return 1.0 - (alpha.transpose() * matrix_exponential(S, t)).sum();
}

double ContPhaseType::laplace(double t) const {
    if (t < 0.0) {
        throw DomainError("laplace: t must be nonnegative");
    }
    const Eigen::Index p = size();
    const RealMatrix A = t * RealMatrix::Identity(p, p) - S;
    return defect() + alpha.dot(solve(A, RealVector(exit_rates())));
}

double ContPhaseType::moment(int k) const {
    if (k < 1) {
        throw DomainError("moment: order must be >= 1");
    }
    RealVector x = RealVector::Ones(size());
    double factorial = 1.0;
    for (int i = 1; i <= k; ++i) {
        x = solve(RealMatrix(-S), x);
        factorial *= i;
    }
    return factorial * alpha.dot(x);
}

DiscPhaseType::DiscPhaseType(RealVector pi_in, RealMatrix M_in, double atom0_in,
                             int shift_in)
    : pi(std::move(pi_in)), M(std::move(M_in)), atom0(atom0_in), shift(shift_in) {
    check_substochastic(pi, M, atom0, shift);
}

RealVector DiscPhaseType::exit_probs() const {
    return RealVector((RealMatrix::Identity(size(), size()) - M).rowwise().sum());
}

double DiscPhaseType::pmf(long k) const {
    if (k < 0) {
        return 0.0;
    }
    if (k == 0) {
        return atom0;
    }
    RealVector v = pi;
    for (long step = 1; step < k; ++step) {
        v = (v.transpose() * M).transpose();
    }
    return v.dot(exit_probs());
}

double DiscPhaseType::pgf(double z) const {
    const double rho = spectral_radius(M);
    if (std::abs(z) * rho >= 1.0 + 1e-12) {
        throw DomainError("pgf: |z| outside the radius of convergence");
    }
    const RealMatrix A = RealMatrix::Identity(size(), size()) - z * M;
    return atom0 + z * pi.dot(solve(A, RealVector(exit_probs())));
}

double DiscPhaseType::mean() const {
    const RealMatrix A = RealMatrix::Identity(size(), size()) - M;
    return pi.dot(solve(A, RealVector(RealVector::Ones(size()))));
}

double DiscPhaseType::factorial_moment2() const {
    const RealMatrix A = RealMatrix::Identity(size(), size()) - M;
    RealVector x = solve(A, RealVector(RealVector::Ones(size())));
    x = solve(A, x);
    return 2.0 * pi.dot(M * x);
}

double DiscPhaseType::statistic_pmf(long k) const {
    return pmf(k + shift);
}

std::vector<double> DiscPhaseType::statistic_pmf_table(long kmax) const {
    if (kmax < 0) {
        throw DomainError("statistic_pmf_table: kmax must be >= 0");
    }
    std::vector<double> table(static_cast<std::size_t>(kmax) + 1, 0.0);
    const RealVector m = exit_probs();
    RealVector v = pi;
    if (shift == 0) {
        table[0] = atom0;
        for (long k = 1; k <= kmax; ++k) {
            table[static_cast<std::size_t>(k)] = v.dot(m);
            v = (v.transpose() * M).transpose();
        }
    } else {
        for (long k = 0; k <= kmax; ++k) {
            table[static_cast<std::size_t>(k)] = v.dot(m);
            v = (v.transpose() * M).transpose();
        }
    }
    return table;
}

double DiscPhaseType::statistic_cdf(long k) const {
    if (k < 0) {
        return 0.0;
    }
    // Accumulate the pmf; stop early once essentially all mass is seen.
    constexpr double kTailCutoff = 1.0 - 1e-12;
    constexpr long kMaxTerms = 1000000;
    const RealVector m = exit_probs();
    double total = (shift == 0) ? atom0 : 0.0;
    RealVector v = pi;
    const long last_step = std::min(k + shift, kMaxTerms);
    for (long step = 1; step <= last_step; ++step) {
        total += v.dot(m);
        if (total >= kTailCutoff) {
            return total;
        }
        v = (v.transpose() * M).transpose();
    }
    return total;
}

double DiscPhaseType::statistic_pgf(double z) const {
    if (shift == 0) {
        return pgf(z);
    }
    const double rho = spectral_radius(M);
    if (std::abs(z) * rho >= 1.0 + 1e-12) {
        throw DomainError("statistic_pgf: |z| outside the radius of convergence");
    }
    const RealMatrix A = RealMatrix::Identity(size(), size()) - z * M;
    return pi.dot(solve(A, RealVector(exit_probs())));
}

double DiscPhaseType::statistic_variance() const {
    const double mu = mean();
    return factorial_moment2() + mu - mu * mu;
}

ContPhaseType reward_transform(const ContPhaseType& ph, const RealVector& rewards) {
    const Eigen::Index p = ph.size();
    if (rewards.size() != p) {
        throw DimensionMismatch("reward_transform: reward vector has wrong size");
    }
    std::vector<Eigen::Index> plus, zero;
    for (Eigen::Index i = 0; i < p; ++i) {
        if (rewards(i) < 0.0) {
            throw ValidationError("reward_transform: rewards must be nonnegative");
        }
        if (rewards(i) > 0.0) {
            plus.push_back(i);
        } else {
            zero.push_back(i);
        }
    }
    if (plus.empty()) {
        throw AllZeroReward("reward_transform: all rewards are zero");
    }

    if (zero.empty()) {
        RealMatrix Sr = ph.S;
        for (Eigen::Index i = 0; i < p; ++i) {
            Sr.row(i) /= rewards(i);
        }
        return ContPhaseType(ph.alpha, std::move(Sr));
    }

    // Embedded jump chain q_ij = -s_ij / s_ii (i != j); rows are
    // substochastic where the original state can absorb directly.
    RealMatrix Q = RealMatrix::Zero(p, p);
    for (Eigen::Index i = 0; i < p; ++i) {
        for (Eigen::Index j = 0; j < p; ++j) {
            if (i != j) {
                Q(i, j) = -ph.S(i, j) / ph.S(i, i);
            }
        }
    }

    const Eigen::Index np = static_cast<Eigen::Index>(plus.size());
    const Eigen::Index nz = static_cast<Eigen::Index>(zero.size());
    RealMatrix Qpp(np, np), Qpz(np, nz), Qzp(nz, np), Qzz(nz, nz);
    for (Eigen::Index a = 0; a < np; ++a) {
        for (Eigen::Index b = 0; b < np; ++b) Qpp(a, b) = Q(plus[a], plus[b]);
        for (Eigen::Index b = 0; b < nz; ++b) Qpz(a, b) = Q(plus[a], zero[b]);
    }
    for (Eigen::Index a = 0; a < nz; ++a) {
        for (Eigen::Index b = 0; b < np; ++b) Qzp(a, b) = Q(zero[a], plus[b]);
        for (Eigen::Index b = 0; b < nz; ++b) Qzz(a, b) = Q(zero[a], zero[b]);
    }

    // Fold excursions through zero-reward states into one-step transition
    // probabilities between positive-reward states.
    const RealMatrix Izz = RealMatrix::Identity(nz, nz);
    const RealMatrix G = solve(RealMatrix(Izz - Qzz), Qzp);  // (I - Qzz)^{-1} Qzp
    const RealMatrix P = Qpp + Qpz * G;

    RealVector alpha_plus(np), alpha_zero(nz);
    for (Eigen::Index a = 0; a < np; ++a) alpha_plus(a) = ph.alpha(plus[a]);
    for (Eigen::Index a = 0; a < nz; ++a) alpha_zero(a) = ph.alpha(zero[a]);
    const RealVector pi = alpha_plus + (alpha_zero.transpose() * G).transpose();

    // Rebuild a sub-intensity matrix: state i leaves at rate -s_ii / r_i and
    // lands according to row i of P; the self-transition mass collapses into
    // a slower effective exit.
    RealMatrix Sstar(np, np);
    for (Eigen::Index a = 0; a < np; ++a) {
        const double rate = -ph.S(plus[a], plus[a]) / rewards(plus[a]);
        for (Eigen::Index b = 0; b < np; ++b) {
            Sstar(a, b) = (a == b) ? -rate * (1.0 - P(a, a)) : rate * P(a, b);
        }
    }
    return ContPhaseType(std::move(pi), std::move(Sstar));
}

DiscPhaseType poisson_mix(const ContPhaseType& ph, double lambda) {
    if (!(lambda > 0.0)) {
        throw DomainError("poisson_mix: lambda must be positive");
    }
    const Eigen::Index p = ph.size();
    const RealMatrix I = RealMatrix::Identity(p, p);
    const RealMatrix M = solve(RealMatrix(I - ph.S / lambda), RealMatrix(I));
    const double defect = ph.defect();
    if (defect <= 1e-14) {
        // Z + 1 is the absorption step of (alpha, M).
        return DiscPhaseType(ph.alpha, M, 0.0, 1);
    }
    // Fold the point mass of Y at zero into P(Z = 0) and re-anchor the chain
    // so that Z itself is the absorption step count.
    const RealVector m = (I - M).rowwise().sum();
    const double atom0 = defect + ph.alpha.dot(m);
    const RealVector pi = (ph.alpha.transpose() * M).transpose();
    return DiscPhaseType(std::move(pi), M, atom0, 0);
}

}  // namespace phasesfs
