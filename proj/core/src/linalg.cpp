#include "phasesfs/linalg.hpp"

#include <cmath>
#include <vector>

namespace phasesfs {

namespace {

constexpr double kPivotTolerance = 1e-12;

template <typename Matrix>
Matrix lu_solve(const Matrix& A, const Matrix& B) {
    if (A.rows() != A.cols()) {
        throw DimensionMismatch("solve: matrix must be square");
    }
    if (A.rows() != B.rows()) {
        throw DimensionMismatch("solve: right-hand side has incompatible rows");
    }
    if (A.rows() == 0) {
        return B;
    }
    const double scale = A.cwiseAbs().maxCoeff();
    if (scale == 0.0) {
        throw SingularMatrix("solve: zero matrix");
    }
    Eigen::PartialPivLU<Matrix> lu(A);
    const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
    if (!(min_pivot > kPivotTolerance * scale)) {
        throw SingularMatrix("solve: pivot below tolerance, matrix is singular "
                             "to working precision");
    }
    return lu.solve(B);
}

// Diagonal Pade approximant of order m for e^A: returns (U, V) with
// p_m(A) = V + U and p_m(-A) = V - U.
void pade_uv(const RealMatrix& A, int m, RealMatrix& U, RealMatrix& V) {
    const Eigen::Index p = A.rows();
    const RealMatrix I = RealMatrix::Identity(p, p);
    const RealMatrix A2 = A * A;
    switch (m) {
        case 3: {
            U = A * (A2 + 60.0 * I);
            V = 12.0 * A2 + 120.0 * I;
            return;
        }
        case 5: {
            const RealMatrix A4 = A2 * A2;
            U = A * (A4 + 420.0 * A2 + 15120.0 * I);
            V = 30.0 * A4 + 3360.0 * A2 + 30240.0 * I;
            return;
        }
        case 7: {
            const RealMatrix A4 = A2 * A2;
            const RealMatrix A6 = A4 * A2;
            U = A * (A6 + 1512.0 * A4 + 277200.0 * A2 + 8648640.0 * I);
            V = 56.0 * A6 + 25200.0 * A4 + 1995840.0 * A2 + 17297280.0 * I;
            return;
        }
        case 9: {
            const RealMatrix A4 = A2 * A2;
            const RealMatrix A6 = A4 * A2;
            const RealMatrix A8 = A6 * A2;
            U = A * (A8 + 3960.0 * A6 + 2162160.0 * A4 + 302702400.0 * A2 +
                     8821612800.0 * I);
            V = 90.0 * A8 + 110880.0 * A6 + 30270240.0 * A4 +
                2075673600.0 * A2 + 17643225600.0 * I;
            return;
        }
        default: {  // m == 13
            const RealMatrix A4 = A2 * A2;
            const RealMatrix A6 = A4 * A2;
            U = A * (A6 * (A6 + 16380.0 * A4 + 40840800.0 * A2) +
                     33522128640.0 * A6 + 10559470521600.0 * A4 +
                     1187353796428800.0 * A2 + 32382376266240000.0 * I);
            V = A6 * (182.0 * A6 + 960960.0 * A4 + 1323241920.0 * A2) +
                670442572800.0 * A6 + 129060195264000.0 * A4 +
                64764752532480000.0 * I + 7771770303897600.0 * A2;
            return;
        }
    }
}

}  // namespace

RealMatrix solve(const RealMatrix& A, const RealMatrix& B) {
    return lu_solve<RealMatrix>(A, B);
}

ComplexMatrix solve(const ComplexMatrix& A, const ComplexMatrix& B) {
    return lu_solve<ComplexMatrix>(A, B);
}

RealVector solve(const RealMatrix& A, const RealVector& b) {
    return RealVector(lu_solve<RealMatrix>(A, b));
}

ComplexVector solve(const ComplexMatrix& A, const ComplexVector& b) {
    return ComplexVector(lu_solve<ComplexMatrix>(A, b));
}

RealMatrix matrix_exponential(const RealMatrix& A) {
    if (A.rows() != A.cols()) {
        throw DimensionMismatch("matrix_exponential: matrix must be square");
    }
    const Eigen::Index p = A.rows();
    if (p == 0) {
        return A;
    }

    // 1-norm thresholds for each Pade order (double precision).
    constexpr double theta3 = 1.495585217958292e-2;
    constexpr double theta5 = 2.539398330063230e-1;
    constexpr double theta7 = 9.504178996162932e-1;
    constexpr double theta9 = 2.097847961257068;
    constexpr double theta13 = 5.371920351148152;

    const double norm = A.colwise().lpNorm<1>().maxCoeff();
    RealMatrix U, V;
    int squarings = 0;
    if (norm <= theta3) {
        pade_uv(A, 3, U, V);
    } else if (norm <= theta5) {
        pade_uv(A, 5, U, V);
    } else if (norm <= theta7) {
        pade_uv(A, 7, U, V);
    } else if (norm <= theta9) {
        pade_uv(A, 9, U, V);
    } else {
        squarings = std::max(0, static_cast<int>(
            std::ceil(std::log2(norm / theta13))));
        const RealMatrix scaled = A / std::pow(2.0, squarings);
        pade_uv(scaled, 13, U, V);
    }

    RealMatrix E = solve(RealMatrix(V - U), RealMatrix(V + U));
    for (int i = 0; i < squarings; ++i) {
        E = E * E;
    }
    return E;
}

RealMatrix matrix_exponential(const RealMatrix& A, double t) {
    return matrix_exponential(RealMatrix(A * t));
}

RealMatrix green_matrix(const RealMatrix& S) {
    const Eigen::Index p = S.rows();
    return solve(RealMatrix(-S), RealMatrix(RealMatrix::Identity(p, p)));
}

RealMatrix inverse_derivative(const RealMatrix& V, const RealMatrix& Uz,
                              const RealMatrix& dUz) {
    const Eigen::Index p = V.rows();
    if (Uz.rows() != p || Uz.cols() != p || dUz.rows() != p || dUz.cols() != p ||
        V.cols() != p) {
        throw DimensionMismatch("inverse_derivative: shape mismatch");
    }
    const RealMatrix I = RealMatrix::Identity(p, p);
    const RealMatrix inv = solve(RealMatrix(V + Uz), RealMatrix(I));
    return -inv * dUz * inv;
}

double spectral_radius(const RealMatrix& M) {
    if (M.rows() != M.cols()) {
        throw DimensionMismatch("spectral_radius: matrix must be square");
    }
    const Eigen::Index p = M.rows();
    if (p == 0) {
        return 0.0;
    }
    const RealMatrix absM = M.cwiseAbs();
    RealVector v = RealVector::Ones(p);
    double estimate = 0.0;
    for (int iter = 0; iter < 2000; ++iter) {
        RealVector w = absM * v;
        const double next = w.lpNorm<Eigen::Infinity>();
        if (next == 0.0) {
            return 0.0;
        }
        v = w / next;
        if (std::abs(next - estimate) <= 1e-12 * std::max(1.0, next)) {
            return next;
        }
        estimate = next;
    }
    return estimate;
}

void fft_inplace(std::vector<std::complex<double>>& data) {
    const std::size_t n = data.size();
    if (n == 0 || (n & (n - 1)) != 0) {
        throw ValidationError("fft_inplace: length must be a power of two");
    }
    // Bit-reversal permutation.
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) {
            j ^= bit;
        }
        j ^= bit;
        if (i < j) {
            std::swap(data[i], data[j]);
        }
    }
    // Butterflies, forward sign exp(-2 pi i / len).
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double angle = -2.0 * M_PI / static_cast<double>(len);
        const std::complex<double> wlen(std::cos(angle), std::sin(angle));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = data[i + k];
                const std::complex<double> t = w * data[i + k + len / 2];
                data[i + k] = u + t;
                data[i + k + len / 2] = u - t;
                w *= wlen;
            }
        }
    }
}

}  // namespace phasesfs
