#pragma once

#include <array>
#include <string>

#include "qglab/galg.hpp"
#include "qglab/qnum.hpp"
#include "qglab/repcat.hpp"

namespace qglab {

/// Braid-form R-matrix on a d-dimensional leg (matrix acts on leg (x) leg).
struct RMatrix {
    Matrix mat;                  // d^2 x d^2
    int leg_dim = 0;
    std::vector<int> leg_parity;
    std::string normalization;
};

/// Permutation (flip) matrix on C^d (x) C^d.
Matrix flip_matrix(int d);
/// P R P (both legs swapped).
Matrix conjugate_by_flip(const Matrix& r, int d);

/// The 4x4 braid matrix of the rank-1 quantum group, fixed by the
/// upper-triangular-plus-permutation ansatz, the braid relation, the Hecke
/// condition with eigenvalues {q, -1/q}, and consistency with the
/// central-extension exchange relation in the renamed Fock representation.
/// The last condition selects between the two mirror orientations.
RMatrix rmatrix_slq2(const QContext& ctx);

CheckReport braid_check(const std::string& id, const RMatrix& R, double tol);
/// (R - a)(R - b) = 0 for the given eigenvalue pair.
CheckReport hecke_check(const std::string& id, const RMatrix& R, Complex a, Complex b,
                        double tol);

/// Exchange relation with inhomogeneous term in the renamed Fock
/// representation: R (X (x) X) = q X (x) X - (1/q) J with X = (A, A+) and
/// J = (0, 1, -q, 0).
CheckReport central_extension_check(const RMatrix& R, int dim, const QContext& ctx,
                                    double tol);

/// R T1 T2 = T1 T2 R for a represented 2x2 matrix of operators.
CheckReport frt_check(const std::string& id, const RMatrix& R,
                      const std::array<std::array<const GradedOperator*, 2>, 2>& T,
                      int guard, double tol);

/// Exchange relations of the two-mode system: annihilation, creation
/// (against P R^t P) and the mixed relation with the unit inhomogeneity.
std::vector<CheckReport> zf_checks(const RMatrix& R, const MultimodeRep& mm, double tol);

/// Reflection equation R12 K1 R21 K2 = K2 R12 K1 R21 for an operator-valued
/// 2x2 K (R12 = flip * braid form).
CheckReport reflection_equation_check(const std::string& id, const RMatrix& R,
                                      const std::array<std::array<const GradedOperator*, 2>, 2>& K,
                                      int guard, double tol);

/// q-metric identities T eps T^t = eps det_q and T1 T2 J = det_q J with
/// det_q = 1 substituted.
std::vector<CheckReport> eps_metric_checks(const std::string& id,
                                           const std::array<std::array<const GradedOperator*, 2>, 2>& T,
                                           int guard, double tol);

/// Twisted super-oscillator realization of the quantum plane of the
/// orthosymplectic supergroup: a (even), xi = q^N (x) eta (odd), b = a+.
/// The boson dressing is selected by brute force so the three exchange
/// relations hold; c2 is the central combination (both printed forms).
struct OspPlaneRep {
    NamedRep rep;           // gens a, b, xi, c2
    std::string dressing;
    double c2_value = 0.0;  // scalar the central element takes in this irrep
};
OspPlaneRep osp_plane_rep(int dim, const QContext& ctx);

std::vector<CheckReport> osp_plane_checks(const OspPlaneRep& rep, double tol);

/// Validator for a user-supplied 9x9 braid matrix with leg grading (0,1,0):
/// minimal polynomial (x-q)(x+1/q)(x+1/q^2), trace multiplicities {5,3,1},
/// braid relation, the metric vector J as -q^{-2}-eigenvector, and the
/// inhomogeneous exchange relation in the twisted super-oscillator rep.
struct OspValidation {
    std::vector<CheckReport> checks;
    bool accepted = false;
};
OspValidation osp_R_validate(const RMatrix& cand, const QContext& ctx, int repdim = 12);
OspValidation osp_R_validate_file(const std::string& path, const QContext& ctx);

/// Nine-component metric vector of the orthosymplectic plane,
/// (0, 0, -q^{-1/2}, 0, 1, 0, q^{1/2}, 0, 0).
Eigen::VectorXcd osp_metric_vector(const QContext& ctx);

/// Subalgebra validator for user-supplied T-matrix fragments: checks the
/// four printed exchange relations among T12, T32, T13, T31.
std::vector<CheckReport> osp_subalgebra_checks(const std::map<std::string, GradedOperator>& T,
                                               const QContext& ctx, int guard, double tol);

}  // namespace qglab
