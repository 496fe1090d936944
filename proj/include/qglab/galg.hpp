#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qglab/errors.hpp"
#include "qglab/report.hpp"

namespace qglab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// A finite-dimensional Z2-graded space with excitation-level metadata.
///
/// `level` is the total excitation number of each basis vector; `headroom`
/// is its distance to the nearest truncation boundary (kExact when the space
/// is not a truncation of anything, e.g. a spin irrep or a fermion doublet).
/// Tensor products add levels and parities mod 2 and take the minimum
/// headroom; the basis is ordered leg-major (first leg slowest).
struct GradedSpace {
    static constexpr int kExact = 1 << 28;

    int dim = 0;
    std::vector<int> parity;
    std::vector<int> level;
    std::vector<int> headroom;

    /// Bosonic Fock truncation |0..dim-1>: level n, headroom dim-1-n.
    static GradedSpace fock(int dim);
    /// Exact (non-truncated) space with given parities; levels default to 0.
    static GradedSpace exact(int dim, std::vector<int> parity = {}, std::vector<int> level = {});
    /// Two-sided window m = -M..M (basis index m + M): truncated at both
    /// ends, headroom = distance to the nearer end.
    static GradedSpace window(int M);

    GradedSpace tensor(const GradedSpace& other) const;
    bool same_as(const GradedSpace& other) const;
};

/// A dense complex matrix together with its domain metadata, its own parity,
/// and (when homogeneous) the exact level shift of its nonzero entries.
struct GradedOperator {
    Matrix mat;
    GradedSpace space;
    int parity = 0;
    std::optional<int> level_shift;  // nullopt = mixed

    GradedOperator() = default;
    GradedOperator(Matrix m, GradedSpace s, int p = 0, std::optional<int> shift = 0)
        : mat(std::move(m)), space(std::move(s)), parity(p), level_shift(shift) {}

    static GradedOperator identity(const GradedSpace& s);
    static GradedOperator zero(const GradedSpace& s);

    /// Largest entry violating graded homogeneity / the declared level shift;
    /// used by construction-time sanity checks.
    double homogeneity_defect() const;
};

/// Koszul-signed Kronecker product:
/// (A kron B)(v kron w) = (-1)^{p(B) p(v)} (A v) kron (B w).
GradedOperator graded_kron(const GradedOperator& A, const GradedOperator& B);

GradedOperator dagger(const GradedOperator& A);
GradedOperator commutator(const GradedOperator& A, const GradedOperator& B);
GradedOperator anticommutator(const GradedOperator& A, const GradedOperator& B);

GradedOperator operator*(const GradedOperator& A, const GradedOperator& B);
GradedOperator operator*(const Complex& c, const GradedOperator& A);
GradedOperator operator+(const GradedOperator& A, const GradedOperator& B);
GradedOperator operator-(const GradedOperator& A, const GradedOperator& B);

/// Max column-sum norm; all residuals in the artifact use this norm.
double op_norm(const Matrix& m);

/// One summand of a relation residual: coeff * product of factors.
struct ExprTerm {
    Complex coeff;
    std::vector<const GradedOperator*> word;
};

/// Smallest guard that keeps every intermediate state of every word inside
/// the truncated space (max positive suffix sum of level shifts).
int required_guard(std::span<const ExprTerm> expr);

/// Zeroes every row and column whose basis vector has headroom < guard.
Matrix guard_project(const Matrix& m, const GradedSpace& space, int guard);

/// Residual of sum(coeff * word) measured on the guarded interior only.
CheckReport guarded_residual(std::string check_id, std::span<const ExprTerm> expr, int guard,
                             double tolerance,
                             std::map<std::string, std::string> meta = {});

/// All eigenvalues of the real symmetric tridiagonal matrix with the given
/// diagonal and off-diagonal, ascending, by bisection on Sturm sequences.
std::vector<double> tridiag_eigenvalues(const std::vector<double>& diag,
                                        const std::vector<double>& offdiag);

}  // namespace qglab
