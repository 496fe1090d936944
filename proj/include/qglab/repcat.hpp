#pragma once

#include <map>
#include <string>

#include "qglab/galg.hpp"
#include "qglab/qnum.hpp"

namespace qglab {

/// The one-parameter oscillator family.  small_a, big_A and alpha satisfy
/// the three standard quadratic/commutator conventions literally at ctx.q
/// (ladders sqrt([n]_sym), sqrt([n;q^2]), sqrt([n;q^-2])) and are
/// interlinked by A = q^{N/2} a = q^N alpha as matrices.  big_A_renamed is
/// the same algebra after renaming q^2 -> q: ladder sqrt([n;q]), relation
/// A A+ = q A+ A + 1 at ctx.q; it is the convention the Bogoliubov-sector
/// constructions use.
enum class OscVariant { small_a, big_A, alpha, big_A_renamed };

std::string to_string(OscVariant v);

/// A concrete representation: space plus a named generator table.
struct NamedRep {
    std::string kind;
    QContext ctx;
    GradedSpace space;
    std::map<std::string, GradedOperator> gens;

    const GradedOperator& gen(const std::string& name) const;
    bool has(const std::string& name) const { return gens.count(name) != 0; }
};

/// Fock representation of the chosen oscillator variant on |0..dim-1>.
/// Generators: a, ad, N, qN, qNi, qNh, qNhi (q^{N/2} and its inverse).
NamedRep fock_qosc(OscVariant v, int dim, const QContext& ctx);

/// Spin-j irreducible representation of the rank-1 quantum algebra,
/// dim 2j+1.  Generators: Xp, Xm, J, qJ, qJi.
NamedRep suq2_irrep(double j, const QContext& ctx);

/// Fock representation of the compact quantum group (q < 1 only).
/// Generators: a (lowering, c_n = sqrt(1-q^{2n})), ad, b = bd = q^N.
NamedRep suq2_group_rep(int dim, const QContext& ctx);

/// Representation of the non-compact quantum group on the integer window
/// m = -M..M.  Generators: a (raising, c_m), ad, b, bd; b has eigenvalues
/// e^{i phi} q^{-m}.  Truncated at both window ends.
NamedRep suq11_group_rep(int M, double phi, const QContext& ctx);

/// Graded super-oscillator on boson (x) fermion: A = A_bigA (x) 1 even,
/// B = q^N (x) f odd.  Generators: A, Ad, B, Bd, f, fd, qN, qNi, N.
NamedRep super_osc_rep(int dimB, const QContext& ctx);

/// Two covariant modes on Fock (x) Fock.  The q^N dressing direction is
/// selected by brute force against the exchange relations with the given
/// braid matrix (see rmx::rmatrix_slq2); the rejected dressing's residual is
/// kept in `rejected_residual`.  Generators: A1, A2, A1d, A2d, qN1, qN2,
/// N1, N2.
struct MultimodeRep {
    NamedRep rep;
    std::string dressing;
    double selected_residual = 0.0;
    double rejected_residual = 0.0;
};
MultimodeRep multimode_rep(int nmodes, int dim, const QContext& ctx);

/// Four-dimensional representation of the rank-(1|1) quantum supergroup on
/// the exterior algebra basis {1, eta, eta*, eta eta*}.  The formal
/// conjugates are found by a search over structured odd operators; the
/// *-structure is a formal anti-involution, not the Hilbert adjoint.
/// Generators: a, as, bet, bets, Lam, Lami, D.
struct GrassmannRep {
    NamedRep rep;
    std::string ansatz;
    double residual = 0.0;  // worst defining-relation residual at selection
};
GrassmannRep grassmann_suq11_rep(double phi, const QContext& ctx);

/// Defining-relation residual suite for each catalog representation
/// (guarded; used by the relations suite and the acceptance gate).
std::vector<CheckReport> relation_checks(const NamedRep& rep, double tol);
std::vector<CheckReport> relation_checks_multimode(const MultimodeRep& mm, double tol);

/// Matrix elements of sqrt(lambda) Xp / q^j under the level identification
/// |n> ~ |j-n; j>, compared against the alpha-variant ladder; returns the
/// max deviation on levels 1..L.  Converges for lambda > 0 only.
double contraction_error(double j, int levels, const QContext& ctx);

/// Writes one matrix JSON file per generator plus manifest.json.
void export_rep(const NamedRep& rep, const std::string& dir);

}  // namespace qglab
