#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "phasesfs/errors.hpp"
#include "phasesfs/estimators.hpp"
#include "phasesfs/intweight.hpp"
#include "phasesfs/inversion.hpp"

using namespace phasesfs;

namespace {

RealVector to_real(const std::vector<long>& c) {
    RealVector out(static_cast<Eigen::Index>(c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        out(static_cast<Eigen::Index>(i)) = static_cast<double>(c[i]);
    }
    return out;
}

}  // namespace

TEST_CASE("pair-sample weighted counts stretch the geometric law") {
    for (double theta : {0.7, 1.0}) {
        const SfsModel sm = make_sfs_model(2, theta);

        const IntWeightedLaw unit = build_intweight_law(sm, {1});
        for (long k = 0; k <= 60; ++k) {
            CHECK(std::abs(unit.pmf(k) - oracles::geometric_pmf(theta, k)) <
                  1e-12);
        }

        // Doubling the weight doubles every jump: mass sits on even values.
        const IntWeightedLaw twice = build_intweight_law(sm, {2});
        CHECK(twice.rows() == 2);
        for (long k = 0; k <= 40; ++k) {
            CHECK(std::abs(twice.pmf(2 * k) -
                           oracles::geometric_pmf(theta, k)) < 1e-12);
            CHECK(twice.pmf(2 * k + 1) == 0.0);
        }
    }
}

TEST_CASE("block layout for mixed weights") {
    const SfsModel sm = make_sfs_model(4, 1.0);
    const IntWeightedLaw law = build_intweight_law(sm, {1, 2, 3});

    REQUIRE(law.rows() == 8);
    CHECK(law.block_size == std::vector<int>{1, 2, 3, 2});
    CHECK(law.block_offset == std::vector<int>{0, 1, 3, 6});
    CHECK(law.kept_states == std::vector<int>{0, 1, 2, 3});
    CHECK(law.law.shift == 1);
    CHECK(law.law.atom0 == 0.0);

    // Initial mass sits on the decision row of the first block (which is a
    // single row because the first state only carries weight-one branches).
    CHECK(law.law.pi(0) == 1.0);
    CHECK(std::abs(law.law.pi.sum() - 1.0) < 1e-14);

    // Countdown rows advance deterministically toward the decision row.
    CHECK(law.law.M(1, 2) == 1.0);
    CHECK(law.law.M(3, 4) == 1.0);
    CHECK(law.law.M(4, 5) == 1.0);
    CHECK(law.law.M(6, 7) == 1.0);

    // Recompute the per-event chain directly: rates divided by the number of
    // weighted branches per state, then the one-mutation resolvent.
    const BlockCountingModel& model = sm.model;
    RealVector w(4);
    for (int s = 0; s < 4; ++s) {
        w(s) = model.states[s][0] + model.states[s][1] + model.states[s][2];
    }
    const RealMatrix Sw = w.cwiseInverse().asDiagonal() * model.T;
    const RealMatrix I = RealMatrix::Identity(4, 4);
    const RealMatrix M = solve(RealMatrix(I - Sw / sm.lambda()), I);

    // Decision row of block one, written out entry by entry. In the second
    // state two of three weighted branches carry weight one; in the third
    // state the weight splits evenly between one and three; the fourth state
    // only carries weight two.
    const RealVector row = law.law.M.row(0);
    CHECK(std::abs(row(0) - M(0, 0)) < 1e-13);
    CHECK(std::abs(row(1) - M(0, 1) / 3.0) < 1e-13);
    CHECK(std::abs(row(2) - 2.0 * M(0, 1) / 3.0) < 1e-13);
    CHECK(std::abs(row(3) - M(0, 2) / 2.0) < 1e-13);
    CHECK(row(4) == 0.0);
    CHECK(std::abs(row(5) - M(0, 2) / 2.0) < 1e-13);
    CHECK(std::abs(row(6) - M(0, 3)) < 1e-13);
    CHECK(row(7) == 0.0);

    // Rows never exceed unit mass.
    for (int r = 0; r < law.rows(); ++r) {
        CHECK(law.law.M.row(r).sum() <= 1.0 + 1e-12);
    }
}

TEST_CASE("block layout for squared weights") {
    const SfsModel sm = make_sfs_model(4, 1.0);
    const IntWeightedLaw law = build_intweight_law(sm, {1, 4, 9});
    REQUIRE(law.rows() == 18);
    CHECK(law.block_size == std::vector<int>{1, 4, 9, 4});
    CHECK(law.block_offset == std::vector<int>{0, 1, 5, 14});

    const BlockCountingModel& model = sm.model;
    RealVector w(4);
    for (int s = 0; s < 4; ++s) {
        w(s) = model.states[s][0] + model.states[s][1] + model.states[s][2];
    }
    const RealMatrix Sw = w.cwiseInverse().asDiagonal() * model.T;
    const RealMatrix I = RealMatrix::Identity(4, 4);
    const RealMatrix M = solve(RealMatrix(I - Sw / sm.lambda()), I);

    // Into the second block a weight-four mutation enters at the top and a
    // weight-one mutation jumps straight to the decision row, in proportion
    // one to two.
    const RealVector row = law.law.M.row(0);
    CHECK(std::abs(row(1) - M(0, 1) / 3.0) < 1e-13);
    CHECK(row(2) == 0.0);
    CHECK(row(3) == 0.0);
    CHECK(std::abs(row(4) - 2.0 * M(0, 1) / 3.0) < 1e-13);
}

TEST_CASE("support reflects the attainable weight sums") {
    const SfsModel sm4 = make_sfs_model(4, 1.0);

    const IntWeightedLaw pairwise = build_intweight_law(sm4, {3, 4, 3});
    const std::vector<long> missing4 = {1, 2, 5};
    std::vector<long> expected4;
    for (long k = 0; k <= 30; ++k) {
        if (std::find(missing4.begin(), missing4.end(), k) == missing4.end()) {
            expected4.push_back(k);
        }
    }
    CHECK(support_scan(pairwise, 30) == expected4);

    const IntWeightedLaw ones = build_intweight_law(sm4, {1, 1, 1});
    std::vector<long> all;
    for (long k = 0; k <= 30; ++k) {
        all.push_back(k);
    }
    CHECK(support_scan(ones, 30) == all);

    const SfsModel sm6 = make_sfs_model(6, 1.0);
    const IntWeightedLaw pairwise6 = build_intweight_law(sm6, {5, 8, 9, 8, 5});
    const std::vector<long> missing6 = {1, 2, 3, 4, 6, 7, 11, 12};
    std::vector<long> expected6;
    for (long k = 0; k <= 30; ++k) {
        if (std::find(missing6.begin(), missing6.end(), k) == missing6.end()) {
            expected6.push_back(k);
        }
    }
    CHECK(support_scan(pairwise6, 30) == expected6);
}

TEST_CASE("pmf matches direct path enumeration") {
    const long kmax = 40;
    for (const std::vector<long>& c :
         {std::vector<long>{3, 4, 3}, std::vector<long>{1, 2, 3},
          std::vector<long>{1, 4, 9}}) {
        const SfsModel sm = make_sfs_model(4, 1.0);
        const IntWeightedLaw law = build_intweight_law(sm, c);
        const std::vector<double> table = law.pmf_table(kmax);
        const std::vector<double> oracle =
            oracles::weighted_pmf_by_paths(sm.model, sm.theta, c, kmax);
        for (long k = 0; k <= kmax; ++k) {
            CHECK(std::abs(table[static_cast<std::size_t>(k)] -
                           oracle[static_cast<std::size_t>(k)]) < 1e-10);
        }
    }

    // Zero coefficients eliminate whole states; one run with a reachable
    // defect and one with mixed weights over a partially weighted model.
    {
        const SfsModel sm = make_sfs_model(5, 0.8);
        const IntWeightedLaw law = build_intweight_law(sm, {1, 0, 2, 0});
        const std::vector<double> oracle = oracles::weighted_pmf_by_paths(
            sm.model, sm.theta, {1, 0, 2, 0}, kmax);
        const std::vector<double> table = law.pmf_table(kmax);
        for (long k = 0; k <= kmax; ++k) {
            CHECK(std::abs(table[static_cast<std::size_t>(k)] -
                           oracle[static_cast<std::size_t>(k)]) < 1e-10);
        }
    }
    {
        const SfsModel sm = make_sfs_model(5, 1.0);
        const IntWeightedLaw law = build_intweight_law(sm, {0, 0, 0, 2});
        const std::vector<double> oracle = oracles::weighted_pmf_by_paths(
            sm.model, sm.theta, {0, 0, 0, 2}, 30);
        const std::vector<double> table = law.pmf_table(30);
        for (long k = 0; k <= 30; ++k) {
            CHECK(std::abs(table[static_cast<std::size_t>(k)] -
                           oracle[static_cast<std::size_t>(k)]) < 1e-10);
        }
    }
}

TEST_CASE("single-class weights rescale the marginal count law") {
    const SfsModel sm = make_sfs_model(5, 1.0);
    const DiscPhaseType quad = count_law(sm, 4);

    const IntWeightedLaw unit = build_intweight_law(sm, {0, 0, 0, 1});
    CHECK(unit.kept_states == std::vector<int>{5});
    CHECK(unit.rows() == 2);  // one real row plus the defect row
    for (long k = 0; k <= 50; ++k) {
        CHECK(std::abs(unit.pmf(k) - quad.statistic_pmf(k)) < 1e-12);
    }

    const IntWeightedLaw twice = build_intweight_law(sm, {0, 0, 0, 2});
    for (long k = 0; k <= 25; ++k) {
        CHECK(std::abs(twice.pmf(2 * k) - quad.statistic_pmf(k)) < 1e-12);
        CHECK(twice.pmf(2 * k + 1) == 0.0);
    }
}

TEST_CASE("moments agree with the covariance calculus") {
    struct Case {
        int n;
        double theta;
        std::vector<long> c;
    };
    for (const Case& tc :
         {Case{4, 1.0, {1, 2, 3}}, Case{5, 2.0, {1, 0, 2, 0}},
          Case{6, 0.7, {5, 8, 9, 8, 5}}}) {
        const SfsModel sm = make_sfs_model(tc.n, tc.theta);
        const IntWeightedLaw law = build_intweight_law(sm, tc.c);
        double mean = 0.0;
        for (int j = 1; j <= tc.n - 1; ++j) {
            mean += tc.theta * static_cast<double>(tc.c[j - 1]) / j;
        }
        CHECK(std::abs(law.law.statistic_mean() - mean) < 1e-9);

        const RealVector cr = to_real(tc.c);
        const double var = estimator_variance(sm, cr);
        CHECK(std::abs(law.law.statistic_variance() - var) < 1e-9 * var);
    }
}

TEST_CASE("generating functions agree between representations") {
    {
        const SfsModel sm = make_sfs_model(4, 1.0);
        for (const std::vector<long>& c :
             {std::vector<long>{3, 4, 3}, std::vector<long>{1, 2, 3},
              std::vector<long>{1, 4, 9}}) {
            const IntWeightedLaw law = build_intweight_law(sm, c);
            for (int k = 1; k <= 10; ++k) {
                const double z = k / 11.0;
                const std::complex<double> g =
                    weighted_pgf(sm, to_real(c), {z, 0.0});
                CHECK(std::abs(g.imag()) < 1e-12);
                CHECK(std::abs(law.law.statistic_pgf(z) - g.real()) < 1e-9);
            }
        }
    }
    {
        const SfsModel sm = make_sfs_model(6, 0.7);
        const IntWeightedLaw law = build_intweight_law(sm, {5, 8, 9, 8, 5});
        for (int k = 1; k <= 10; ++k) {
            const double z = k / 11.0;
            const std::complex<double> g =
                weighted_pgf(sm, to_real({5, 8, 9, 8, 5}), {z, 0.0});
            CHECK(std::abs(law.law.statistic_pgf(z) - g.real()) < 1e-9);
        }
    }
}

TEST_CASE("input validation") {
    const SfsModel sm = make_sfs_model(4, 1.0);
    CHECK_THROWS_AS(build_intweight_law(sm, {1, -1, 2}),
                    NonPositiveCoefficient);
    CHECK_THROWS_AS(build_intweight_law(sm, {0, 0, 0}), NonPositiveCoefficient);
    CHECK_THROWS_AS(build_intweight_law(sm, {1, 1}), DimensionMismatch);
    CHECK_THROWS_AS(build_intweight_law(sm, {1, 2, 3}, 5), BlockMatrixTooLarge);

    const IntWeightedLaw law = build_intweight_law(sm, {1, 1, 1});
    CHECK_THROWS_AS(support_scan(law, -1), DomainError);
}
