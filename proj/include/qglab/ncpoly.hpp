#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qglab/errors.hpp"
#include "qglab/qnum.hpp"
#include "qglab/report.hpp"

namespace qglab::ncpoly {

using Coeff = std::complex<double>;

/// Named generator of a presentation.  `leg` tags the tensor factor the
/// symbol lives on when presentations are combined; words are normal-ordered
/// leg-major first, then by declaration order within a leg.
struct GenSym {
    std::string name;
    int parity = 0;
    int leg = 0;
};

using Word = std::vector<int32_t>;

/// Sparse noncommutative polynomial: canonicalized map word -> coefficient.
/// Coefficients below 1e-14 in magnitude are pruned.
struct NcPoly {
    std::map<Word, Coeff> terms;

    static NcPoly zero() { return {}; }
    static NcPoly one() { return monomial({}, 1.0); }
    static NcPoly monomial(Word w, Coeff c = 1.0);

    NcPoly& add(const Word& w, Coeff c);
    NcPoly& operator+=(const NcPoly& o);
    NcPoly& operator-=(const NcPoly& o);
    NcPoly& prune(double eps = 1e-14);
    bool empty() const { return terms.empty(); }
    double max_abs_coeff() const;
};

NcPoly operator+(NcPoly a, const NcPoly& b);
NcPoly operator-(NcPoly a, const NcPoly& b);
NcPoly operator*(const NcPoly& a, const NcPoly& b);  // free concatenation
NcPoly operator*(Coeff c, NcPoly a);

/// A rewrite system over a fixed alphabet: quadratic exchange rules keyed on
/// adjacent symbol pairs (misordered exchanges plus explicit contractions
/// such as inverse-pair collapses).  Cross-leg pairs always swap with the
/// Koszul sign and need no stored rule.
class System {
  public:
    std::vector<GenSym> gens;

    int find(std::string_view name, int leg = 0) const;  // -1 when absent
    int require(std::string_view name, int leg = 0) const;

    void set_rule(int left, int right, NcPoly rhs);
    const NcPoly* rule(int left, int right) const;

    NcPoly monomial(std::initializer_list<std::string_view> names, Coeff c = 1.0,
                    int leg = 0) const;

    /// Canonical normal form; throws incomplete_presentation when a
    /// misordered same-leg pair has no rule.
    NcPoly normal_form(const NcPoly& p) const;

    /// All overlap ambiguities x*y*z with rules on both (x,y) and (y,z);
    /// returns the largest coefficient of nf(rule_xy applied) - nf(rule_yz
    /// applied) over all of them.
    double worst_overlap_defect() const;

    std::string word_str(const Word& w) const;

  private:
    std::unordered_map<uint64_t, NcPoly> rules_;
    static uint64_t key(int l, int r) {
        return (static_cast<uint64_t>(static_cast<uint32_t>(l)) << 32) |
               static_cast<uint32_t>(r);
    }
};

/// Single-leg named presentation (System with all legs 0).
struct Presentation {
    std::string name;
    System sys;
};

/// Parse the presentation DSL.  Format, one directive per line ('#' starts a
/// comment):
///   pres <name>
///   gen <name> <parity>            # declaration order = normal order
///   rule <g> <h> -> [coeff] w1 w2 ... + [coeff] ...   # empty word = 1
/// Coefficients are products of factors inside the brackets: decimal
/// numbers, i, q^r, lam^r, om^r, mu^r with r a (possibly negative) rational
/// like 2, -1 or 1/2; factors are separated by spaces.  Parse errors carry
/// line and column positions.
Presentation parse_presentation(std::string_view text, const QContext& ctx);

/// Merge presentations onto tensor legs (leg index = position in the list).
/// Generator names stay per-leg; rules are remapped.
System combine(std::span<const Presentation* const> parts);

/// Generator-wise substitution into a (possibly different, possibly
/// multi-leg) target system.
struct Substitution {
    const System* target = nullptr;
    std::map<int32_t, NcPoly> images;  // source gen id -> poly over target

    NcPoly apply(const NcPoly& p) const;  // no normal form
};

/// residual = max |coefficient| of normal_form(p); pass iff <= tol.
CheckReport is_zero(std::string check_id, const System& sys, const NcPoly& p,
                    double tol = 1e-12, std::map<std::string, std::string> meta = {});

/// Graded commutators [elem, g] for every generator g of the presentation.
CheckReport is_central(std::string check_id, const Presentation& pres, const NcPoly& elem,
                       double tol = 1e-12);

/// For every rule g*h -> rhs of `source`, checks that the substituted
/// difference phi(g)phi(h) - phi(rhs) reduces to zero in phi's target.
CheckReport coaction_check(std::string check_id, const Presentation& source,
                           const Substitution& phi, double tol = 1e-12);

/// residual of phi(elem) - (1 tensor elem); `embed` maps source generators to
/// their copies on the algebra leg of the target.
CheckReport invariance_check(std::string check_id, const Substitution& phi,
                             const Substitution& embed, const NcPoly& elem,
                             double tol = 1e-12);

/// Deterministic q samples in (0.15, 0.85) for multi-sample zero testing.
std::vector<QContext> sampled_contexts(uint64_t seed, int count = 5);

}  // namespace qglab::ncpoly
