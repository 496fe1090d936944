#pragma once

#include <cmath>

#include "qglab/errors.hpp"

namespace qglab {

/// Deformation parameter q together with the derived scalars that appear
/// everywhere downstream, and the default tolerance policy.
///
/// Conventions: lambda = q - 1/q, omega = sqrt(q) - 1/sqrt(q),
/// mu = sqrt(q) + 1/sqrt(q) = lambda / omega.  All three are recomputed from
/// q at construction; callers never store them independently.
struct QContext {
    double q;
    double lambda;
    double omega;
    double mu;
    double tol_rel;
    double tol_abs;

    explicit QContext(double q_, double tol_rel_ = 1e-10, double tol_abs_ = 1e-12)
        : q(q_), tol_rel(tol_rel_), tol_abs(tol_abs_) {
        if (!(q > 0.0) || q == 1.0)
            throw domain_error("QContext: q must be positive and != 1");
        if (!(tol_rel > 0.0) || !(tol_abs > 0.0))
            throw domain_error("QContext: tolerances must be positive");
        lambda = q - 1.0 / q;
        const double s = std::sqrt(q);
        omega = s - 1.0 / s;
        mu = s + 1.0 / s;
    }

    /// Context at the inverse deformation parameter (used by the contraction
    /// checks, which only converge for lambda > 0).
    QContext inverse() const { return QContext(1.0 / q, tol_rel, tol_abs); }

    /// Context at sqrt(q); relates the two ladder conventions of the
    /// one-parameter oscillator family.
    QContext sqrt_param() const { return QContext(std::sqrt(q), tol_rel, tol_abs); }
};

/// Box bracket [x; p] = (1 - p^x) / (1 - p).  x may be any real; the
/// half-integer case shows up in spin-shifted eigenvalues.
double bracket_box(double x, double p);

/// Symmetric bracket [x]_q = (q^x - q^{-x}) / (q - q^{-1}).
double bracket_sym(double x, const QContext& ctx);

/// Box-bracket factorial: product of [k; p] for k = 1..n, empty product = 1.
double qfact_box(int n, double p);

/// Box-bracket double factorial, stepping down by 2.  By convention the
/// values at n = 0 and n = -1 are both 1 (required so the j = 0 term of the
/// Bogoliubov vacuum series equals 1).
double qdoublefact_box(int n, double p);

/// Ladder coefficient c_n = sqrt(1 - q^{2n}) of the compact quantum-group
/// Fock representation; requires a non-negative radicand.
double coeff_cn_su2(int n, const QContext& ctx);

/// Ladder coefficient c_m = sqrt(1 + q^{-2m-1}) of the non-compact
/// quantum-group representation on the integer window.
double coeff_cm_su11(long m, const QContext& ctx);

}  // namespace qglab
