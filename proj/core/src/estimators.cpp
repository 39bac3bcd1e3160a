#include "phasesfs/estimators.hpp"

#include <algorithm>

namespace phasesfs {

namespace {

void check_n(int n) {
    if (n < 2) {
        throw InvalidSampleSize("estimators: need n >= 2");
    }
}

std::vector<Rational> subtract(const std::vector<Rational>& a,
                               const std::vector<Rational>& b) {
    std::vector<Rational> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] - b[i];
    }
    return out;
}

}  // namespace

Rational harmonic_number(int n) {
    check_n(n);
    Rational a1(0);
    for (int i = 1; i <= n - 1; ++i) {
        a1 = a1 + Rational(1, i);
    }
    return a1;
}

const std::vector<std::string>& estimator_names() {
    static const std::vector<std::string> names = {"singleton", "watterson",
                                                   "pairwise", "H", "L"};
    return names;
}

const std::vector<std::string>& test_names() {
    static const std::vector<std::string> names = {
        "taj_D", "pi_minus_H", "L_minus_W", "W_minus_H", "xi1_minus_W"};
    return names;
}

std::vector<Rational> classical_coefficients_exact(const std::string& name,
                                                   int n) {
    check_n(n);
    const int m = n - 1;
    std::vector<Rational> c(m, Rational(0));
    if (name == "singleton") {
        c[0] = Rational(1);
    } else if (name == "watterson") {
        const Rational inv_a1 = Rational(1) / harmonic_number(n);
        std::fill(c.begin(), c.end(), inv_a1);
    } else if (name == "pairwise") {
        for (int i = 1; i <= m; ++i) {
            c[i - 1] = Rational(2LL * i * (n - i),
                                static_cast<std::int64_t>(n) * (n - 1));
        }
    } else if (name == "H") {
        for (int i = 1; i <= m; ++i) {
            c[i - 1] = Rational(2LL * i * i,
                                static_cast<std::int64_t>(n) * (n - 1));
        }
    } else if (name == "L") {
        for (int i = 1; i <= m; ++i) {
            c[i - 1] = Rational(i, n - 1);
        }
    } else if (name == "taj_D") {
        return subtract(classical_coefficients_exact("pairwise", n),
                        classical_coefficients_exact("watterson", n));
    } else if (name == "pi_minus_H") {
        return subtract(classical_coefficients_exact("pairwise", n),
                        classical_coefficients_exact("H", n));
    } else if (name == "L_minus_W") {
        return subtract(classical_coefficients_exact("L", n),
                        classical_coefficients_exact("watterson", n));
    } else if (name == "W_minus_H") {
        return subtract(classical_coefficients_exact("watterson", n),
                        classical_coefficients_exact("H", n));
    } else if (name == "xi1_minus_W") {
        return subtract(classical_coefficients_exact("singleton", n),
                        classical_coefficients_exact("watterson", n));
    } else {
        throw UnknownName("unknown statistic name: " + name);
    }
    return c;
}

RealVector classical_coefficients(const std::string& name, int n) {
    const std::vector<Rational> exact = classical_coefficients_exact(name, n);
    RealVector c(n - 1);
    for (int i = 0; i < n - 1; ++i) {
        c(i) = exact[i].to_double();
    }
    return c;
}

RealVector statistic_coefficients(const std::string& name, const SfsModel& sm) {
    if (name == "blue") {
        return blue_coefficients(sm);
    }
    return classical_coefficients(name, sm.n());
}

RealMatrix sfs_covariance(const SfsModel& sm) {
    const double theta = sm.theta;
    RealMatrix cov = 0.25 * theta * theta * mph_covariance(sm.rep);
    for (int i = 1; i <= sm.types(); ++i) {
        cov(i - 1, i - 1) += theta / i;
    }
    return cov;
}

double estimator_variance(const SfsModel& sm, const RealVector& c) {
    if (c.size() != sm.types()) {
        throw DimensionMismatch("estimator_variance: coefficient length");
    }
    const RealMatrix cov = sfs_covariance(sm);
    return c.dot(cov * c);
}

double statistic_mean(const SfsModel& sm, const RealVector& c) {
    if (c.size() != sm.types()) {
        throw DimensionMismatch("statistic_mean: coefficient length");
    }
    double s = 0.0;
    for (int i = 1; i <= sm.types(); ++i) {
        s += c(i - 1) / i;
    }
    return sm.theta * s;
}

RealVector blue_coefficients(const SfsModel& sm) {
    RealVector v(sm.types());
    for (int i = 1; i <= sm.types(); ++i) {
        v(i - 1) = 1.0 / i;
    }
    const RealMatrix cov = sfs_covariance(sm);
    const RealVector x = solve(cov, v);
    const double scale = v.dot(x);
    if (!(scale > 0.0)) {
        throw NumericalError("blue_coefficients: covariance not positive on v");
    }
    return RealVector(x / scale);
}

}  // namespace phasesfs
