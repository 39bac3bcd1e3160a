#include "phasesfs/mphstar.hpp"

namespace phasesfs {

namespace {

void check_dims(const MphRep& rep, int i, int j) {
    if (i < 0 || j < 0 || i >= rep.dims() || j >= rep.dims()) {
        throw DimensionMismatch("mph: coordinate index out of range");
    }
}

// alpha (-S)^{-1} as a row vector, via one transposed solve.
RealVector occupancy_row(const MphRep& rep) {
    return solve(RealMatrix((-rep.S).transpose()), RealVector(rep.alpha));
}

}  // namespace

MphRep::MphRep(RealVector alpha_in, RealMatrix S_in, RealMatrix R_in)
    : alpha(std::move(alpha_in)), S(std::move(S_in)), R(std::move(R_in)) {
    ContPhaseType base(alpha, S);  // reuse the sub-intensity validation
    if (R.rows() != alpha.size()) {
        throw DimensionMismatch("mph: reward matrix rows must match state count");
    }
    if ((R.array() < 0.0).any()) {
        throw ValidationError("mph: rewards must be nonnegative");
    }
}

double mph_laplace(const MphRep& rep, const RealVector& a) {
    if (a.size() != rep.dims()) {
        throw DimensionMismatch("mph_laplace: argument dimension mismatch");
    }
    if ((a.array() > 0.0).any()) {
        throw DomainError("mph_laplace: arguments must be nonpositive");
    }
    const RealVector diag = rep.R * a;
    RealMatrix A = rep.S;
    A.diagonal() += diag;
    const RealVector rhs = rep.S * RealVector::Ones(rep.size());
    return rep.alpha.dot(solve(A, rhs));
}

RealVector mph_mean(const MphRep& rep) {
    return rep.R.transpose() * occupancy_row(rep);
}

double mph_cross_moment(const MphRep& rep, int i, int j) {
    check_dims(rep, i, j);
    const RealVector w = occupancy_row(rep);  // alpha U
    const RealMatrix negS = -rep.S;
    const RealVector Uri = solve(negS, RealVector(rep.R.col(i)));
    const RealVector Urj = solve(negS, RealVector(rep.R.col(j)));
    return w.dot(rep.R.col(i).cwiseProduct(Urj)) +
           w.dot(rep.R.col(j).cwiseProduct(Uri));
}

RealMatrix mph_covariance(const MphRep& rep) {
    const int m = rep.dims();
    const RealVector w = occupancy_row(rep);
    const RealMatrix negS = -rep.S;
    const RealMatrix UR = solve(negS, rep.R);  // column k = U R_k
    const RealVector mu = rep.R.transpose() * w;
    RealMatrix cov(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            const double second =
                w.dot(rep.R.col(i).cwiseProduct(UR.col(j))) +
                w.dot(rep.R.col(j).cwiseProduct(UR.col(i)));
            cov(i, j) = second - mu(i) * mu(j);
            cov(j, i) = cov(i, j);
        }
    }
    return cov;
}

std::complex<double> mph_joint_pgf(const MphRep& rep, double lambda,
                                   const ComplexVector& z) {
    if (z.size() != rep.dims()) {
        throw DimensionMismatch("mph_joint_pgf: argument dimension mismatch");
    }
    if (!(lambda > 0.0)) {
        throw DomainError("mph_joint_pgf: lambda must be positive");
    }
    for (Eigen::Index k = 0; k < z.size(); ++k) {
        if (std::abs(z(k)) > 1.0 + 1e-9) {
            throw DomainError("mph_joint_pgf: |z_k| must be at most one");
        }
    }
    const Eigen::Index p = rep.size();
    const ComplexVector shifted =
        z - ComplexVector::Ones(z.size());  // z - e, Re <= 0 on the polydisk
    const ComplexVector diag = rep.R.cast<std::complex<double>>() * shifted;
    ComplexMatrix A = rep.S.cast<std::complex<double>>();
    A.diagonal() += lambda * diag;
    const ComplexVector rhs =
        rep.S.cast<std::complex<double>>() * ComplexVector::Ones(p);
    return rep.alpha.cast<std::complex<double>>().dot(solve(A, rhs));
}

RealMatrix poisson_covariance(const MphRep& rep, double lambda) {
    if (!(lambda > 0.0)) {
        throw DomainError("poisson_covariance: lambda must be positive");
    }
    const RealVector mu = mph_mean(rep);
    RealMatrix cov = lambda * lambda * mph_covariance(rep);
    cov.diagonal() += lambda * mu;
    return cov;
}

}  // namespace phasesfs
