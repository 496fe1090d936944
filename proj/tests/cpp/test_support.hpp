#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <random>
#include <vector>

#include "qglab/galg.hpp"
#include "qglab/qnum.hpp"

namespace qglab::testsup {

inline std::mt19937& rng() {
    static std::mt19937 gen(987654321u);
    return gen;
}

inline Complex rand_complex() {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return {u(rng()), u(rng())};
}

/// Random operator homogeneous of the given parity on the given space.
inline GradedOperator random_homogeneous(const GradedSpace& s, int parity) {
    Matrix m = Matrix::Zero(s.dim, s.dim);
    for (int r = 0; r < s.dim; ++r)
        for (int c = 0; c < s.dim; ++c)
            if (((s.parity[r] + s.parity[c]) & 1) == (parity & 1)) m(r, c) = rand_complex();
    return GradedOperator(std::move(m), s, parity, std::nullopt);
}

/// Dense symmetric eigenvalue oracle (QR-based, independent of the Sturm
/// bisection path under test).
inline std::vector<double> dense_sym_eigen_oracle(const std::vector<double>& diag,
                                                  const std::vector<double>& off) {
    const int n = static_cast<int>(diag.size());
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) T(i, i) = diag[i];
    for (int i = 0; i + 1 < n; ++i) T(i, i + 1) = T(i + 1, i) = off[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T, Eigen::EigenvaluesOnly);
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = es.eigenvalues()(i);
    return out;
}

/// Characteristic-polynomial root scan: evaluates det(T - x I) by dense LU
/// on a grid and bisects each sign change.  Requires simple, separated
/// eigenvalues; used as a second oracle on small matrices.
inline std::vector<double> charpoly_root_scan(const std::vector<double>& diag,
                                              const std::vector<double>& off,
                                              int grid = 200000) {
    const int n = static_cast<int>(diag.size());
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) T(i, i) = diag[i];
    for (int i = 0; i + 1 < n; ++i) T(i, i + 1) = T(i + 1, i) = off[i];
    double lo = diag[0], hi = diag[0];
    for (int i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::abs(off[i - 1]) : 0.0) +
                         (i + 1 < n ? std::abs(off[i]) : 0.0);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }
    lo -= 1e-6;
    hi += 1e-6;
    auto det_at = [&](double x) {
        Eigen::MatrixXd M = T - x * Eigen::MatrixXd::Identity(n, n);
        return Eigen::PartialPivLU<Eigen::MatrixXd>(M).determinant();
    };
    std::vector<double> roots;
    double xprev = lo, fprev = det_at(lo);
    for (int g = 1; g <= grid; ++g) {
        const double x = lo + (hi - lo) * g / grid;
        const double f = det_at(x);
        if ((fprev < 0 && f > 0) || (fprev > 0 && f < 0) || f == 0.0) {
            double a = xprev, b = x, fa = fprev;
            for (int it = 0; it < 200; ++it) {
                const double m = 0.5 * (a + b);
                const double fm = det_at(m);
                if ((fa < 0 && fm < 0) || (fa > 0 && fm > 0)) {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
                if (b - a < 1e-14 * std::max(1.0, std::abs(a))) break;
            }
            roots.push_back(0.5 * (a + b));
        }
        xprev = x;
        fprev = f;
    }
    return roots;
}

}  // namespace qglab::testsup
