#pragma once

#include <memory>

#include "qglab/ncpoly.hpp"

namespace qglab::ncpoly {

/// Built-in presentation catalog.  Each builder instantiates the DSL source
/// at a concrete q; rule coefficients are numbers, not symbols.
Presentation pres_alpha_osc(const QContext& ctx);    // [alpha, alpha+] = q^{-2N} family
Presentation pres_osc_renamed(const QContext& ctx);  // A A+ = q A+ A + 1
Presentation pres_super_osc(const QContext& ctx);    // graded oscillator pair (A, B)
Presentation pres_su2_alg(const QContext& ctx);      // Xp, Xm, q^{+-J}
Presentation pres_su11_group(const QContext& ctx);   // a, b and conjugates, unit q-det
Presentation pres_su11_super(const QContext& ctx);   // a, beta and formal conjugates
Presentation pres_k_algebra(const QContext& ctx);    // reflection-equation algebra
Presentation pres_osp_plane(const QContext& ctx);    // a, xi, b with central extension
/// Quantum-supergroup T-matrix fragment: only the four printed exchange
/// relations among T12, T32, T13, T31 are known; the remaining generators
/// are declared without rules, so reductions that touch them report an
/// incomplete presentation.  That is the documented limitation path.
Presentation pres_osp_T_fragment(const QContext& ctx);

/// Raw DSL source of a catalog presentation (exercises the parser and
/// doubles as the file-format reference).
std::string_view presentation_source(std::string_view name);
std::vector<std::string> presentation_names();

/// Central elements.
NcPoly central_z_alpha(const Presentation& p, const QContext& ctx);     // alpha+ alpha - [N; q^-2]
NcPoly central_c1_k(const Presentation& p, const QContext& ctx);        // q^-1 alpha + q delta
NcPoly central_c2_k(const Presentation& p, const QContext& ctx);        // alpha delta - q^2 beta gamma
NcPoly central_c2_osp(const Presentation& p, const QContext& ctx);      // lam(q xi^2/om - a b)/...

/// A coaction instance: source presentation, combined target system, and
/// the generator images (plus the trivial embedding used by invariance
/// checks).  `legs` keeps the per-leg presentations alive.
struct Coaction {
    std::string id;
    std::shared_ptr<Presentation> source;
    std::vector<std::shared_ptr<Presentation>> legs;  // leg order as combined
    std::shared_ptr<System> target;
    Substitution phi;    // coaction images
    Substitution embed;  // v -> 1 (x) v on the algebra leg
    int algebra_leg = 0;
};

/// Oscillator/spin coaction (algebra leg first, quantum-algebra leg second).
Coaction coaction_osc_spin(const QContext& ctx);
/// Bogoliubov-type coaction of the non-compact quantum group on the
/// one-parameter oscillator (group leg first).
Coaction coaction_bogoliubov(const QContext& ctx);
/// Super-oscillator coaction of the rank-(1|1) quantum supergroup, with the
/// derived substitutions for the dependent T-entries (group leg first).
Coaction coaction_super(const QContext& ctx);
/// Quantum plane coaction for the orthosymplectic fragment; deliberately
/// incomplete, see pres_osp_T_fragment.
Coaction coaction_osp_fragment(const QContext& ctx);

/// Coproduct of the quantum algebra leg; `mirrored` swaps the two standard
/// conventions.  The coassociativity check selects the closing one.
Substitution su2_coproduct(const Presentation& single, System& two_leg, bool mirrored);

/// Coassociativity of the osc/spin coaction against the given coproduct
/// convention, and the counit identity.  Both reduce symbolically.
CheckReport coassociativity_check(const QContext& ctx, bool mirrored_coproduct,
                                  double tol = 1e-12);
CheckReport counit_check(const QContext& ctx, double tol = 1e-12);

}  // namespace qglab::ncpoly
