#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <complex>
#include <vector>

#include "oracles.hpp"
#include "phasesfs/linalg.hpp"

using namespace phasesfs;

namespace {

// Deterministic, full-rank test matrix with mixed-sign entries.
RealMatrix dense_matrix(int p, double scale) {
    RealMatrix A(p, p);
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
            A(i, j) = scale * std::sin(1.0 + 3.0 * i + 7.0 * j);
        }
        A(i, i) += scale * p;  // diagonally dominant, well conditioned
    }
    return A;
}

}  // namespace

TEST_CASE("solve returns solutions with small relative residual") {
    const RealMatrix A = dense_matrix(6, 2.0);
    RealMatrix B(6, 2);
    for (int i = 0; i < 6; ++i) {
        B(i, 0) = i + 1;
        B(i, 1) = std::cos(static_cast<double>(i));
    }
    const RealMatrix X = solve(A, B);
    const double residual = (A * X - B).cwiseAbs().maxCoeff();
    CHECK(residual <= 1e-10 * B.cwiseAbs().maxCoeff() * A.cwiseAbs().maxCoeff());
}

TEST_CASE("solve rejects singular input") {
    RealMatrix A(3, 3);
    A << 1, 2, 3, 2, 4, 6, 0, 1, 1;  // first two rows dependent
    CHECK_THROWS_AS(solve(A, RealMatrix(RealMatrix::Identity(3, 3))),
                    SingularMatrix);
    CHECK_THROWS_AS(solve(RealMatrix(RealMatrix::Zero(2, 2)),
                          RealMatrix(RealMatrix::Identity(2, 2))),
                    SingularMatrix);
}

TEST_CASE("solve rejects shape mismatches") {
    CHECK_THROWS_AS(solve(RealMatrix(RealMatrix::Ones(2, 3)),
                          RealMatrix(RealMatrix::Ones(2, 2))),
                    DimensionMismatch);
    CHECK_THROWS_AS(solve(RealMatrix(RealMatrix::Identity(2, 2)),
                          RealMatrix(RealMatrix::Ones(3, 2))),
                    DimensionMismatch);
}

TEST_CASE("complex solve matches hand inverse") {
    ComplexMatrix A(2, 2);
    A << std::complex<double>(1, 1), std::complex<double>(0, -1),
        std::complex<double>(2, 0), std::complex<double>(1, -1);
    const ComplexMatrix X =
        solve(A, ComplexMatrix(ComplexMatrix::Identity(2, 2)));
    CHECK((A * X - ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() <=
          1e-12);
}

TEST_CASE("matrix exponential agrees with the Taylor-series oracle") {
    // Small norm (low-order Pade path).
    const RealMatrix A = 0.01 * dense_matrix(4, 1.0);
    CHECK((matrix_exponential(A) - oracles::expm_taylor(A)).cwiseAbs().maxCoeff() <=
          1e-12);

    // Moderate norm.
    RealMatrix B = dense_matrix(5, 0.3);
    B.diagonal().array() -= 2.0;
    CHECK((matrix_exponential(B) - oracles::expm_taylor(B)).cwiseAbs().maxCoeff() <=
          1e-11);

    // Norm large enough to require scaling and squaring: coalescent-style
    // upper-triangular rate matrix with fast early rates.
    RealMatrix T(4, 4);
    T << -6, 6, 0, 0, 0, -3, 2, 1, 0, 0, -1, 0, 0, 0, 0, -1;
    CHECK((matrix_exponential(T, 1.0) - oracles::expm_taylor(T)).cwiseAbs().maxCoeff() <=
          1e-11);
    // At this norm the Taylor reference itself loses a few digits to
    // cancellation, so the tolerance is looser than above.
    CHECK((matrix_exponential(T, 2.5) -
           oracles::expm_taylor(RealMatrix(2.5 * T)))
              .cwiseAbs()
              .maxCoeff() <= 1e-9);
}

TEST_CASE("matrix exponential basics") {
    CHECK((matrix_exponential(RealMatrix(RealMatrix::Zero(3, 3))) -
           RealMatrix::Identity(3, 3))
              .cwiseAbs()
              .maxCoeff() == 0.0);
    RealMatrix one(1, 1);
    one << -1.7;
    CHECK(matrix_exponential(one)(0, 0) == doctest::Approx(std::exp(-1.7)).epsilon(1e-13));
}

TEST_CASE("matrix exponential semigroup property") {
    const RealMatrix A = dense_matrix(4, 0.4);
    const RealMatrix both = matrix_exponential(A, 0.9);
    const RealMatrix split =
        matrix_exponential(A, 0.5) * matrix_exponential(A, 0.4);
    CHECK((both - split).cwiseAbs().maxCoeff() <= 1e-11);
}

TEST_CASE("green matrix inverts the negated rate matrix") {
    RealMatrix T(3, 3);
    T << -6, 6, 0, 0, -3, 2, 0, 0, -1;
    const RealMatrix U = green_matrix(T);
    CHECK(((-T) * U - RealMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() <= 1e-13);
}

TEST_CASE("inverse derivative matches central finite differences") {
    const RealMatrix V = dense_matrix(4, 1.5);
    const auto U_of = [](double z) {
        RealMatrix U(4, 4);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                U(i, j) = z * z * (i + 1) * 0.1 + z * std::cos(i + 2.0 * j);
            }
        }
        return U;
    };
    const auto dU_of = [](double z) {
        RealMatrix dU(4, 4);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                dU(i, j) = 2.0 * z * (i + 1) * 0.1 + std::cos(i + 2.0 * j);
            }
        }
        return dU;
    };
    const double z = 0.3;
    const RealMatrix analytic = inverse_derivative(V, U_of(z), dU_of(z));
    const auto resolvent = [&](double zz) {
        return RealMatrix(
            solve(RealMatrix(V + U_of(zz)), RealMatrix(RealMatrix::Identity(4, 4))));
    };
    const RealMatrix numeric = oracles::central_difference(resolvent, z, 1e-6);
    CHECK((analytic - numeric).cwiseAbs().maxCoeff() <= 1e-7);
}

TEST_CASE("spectral radius matches eigenvalues on nonnegative matrices") {
    RealMatrix M(3, 3);
    M << 0.2, 0.3, 0.0, 0.1, 0.4, 0.2, 0.0, 0.3, 0.3;
    const Eigen::EigenSolver<RealMatrix> es(M);
    const double exact = es.eigenvalues().cwiseAbs().maxCoeff();
    CHECK(spectral_radius(M) == doctest::Approx(exact).epsilon(1e-9));

    RealMatrix Tri(3, 3);
    Tri << 0.5, 0.1, 0.2, 0.0, 0.25, 0.3, 0.0, 0.0, 0.75;
    CHECK(spectral_radius(Tri) == doctest::Approx(0.75).epsilon(1e-9));

    CHECK(spectral_radius(RealMatrix(RealMatrix::Zero(2, 2))) == 0.0);
}

TEST_CASE("fft matches the naive transform and inverts correctly") {
    const std::size_t N = 64;
    std::vector<std::complex<double>> data(N);
    for (std::size_t k = 0; k < N; ++k) {
        data[k] = std::complex<double>(std::sin(0.7 * k), std::cos(1.3 * k));
    }
    std::vector<std::complex<double>> naive(N, {0.0, 0.0});
    for (std::size_t h = 0; h < N; ++h) {
        for (std::size_t k = 0; k < N; ++k) {
            const double angle = -2.0 * M_PI * static_cast<double>(k * h) / N;
            naive[h] += data[k] * std::polar(1.0, angle);
        }
    }
    std::vector<std::complex<double>> fast = data;
    fft_inplace(fast);
    for (std::size_t h = 0; h < N; ++h) {
        CHECK(std::abs(fast[h] - naive[h]) <= 1e-10);
    }

    // Parseval: sum |x|^2 = (1/N) sum |X|^2.
    double time_energy = 0.0, freq_energy = 0.0;
    for (std::size_t k = 0; k < N; ++k) {
        time_energy += std::norm(data[k]);
        freq_energy += std::norm(fast[k]);
    }
    CHECK(time_energy == doctest::Approx(freq_energy / N).epsilon(1e-12));

    std::vector<std::complex<double>> bad(3);
    CHECK_THROWS_AS(fft_inplace(bad), ValidationError);
}
