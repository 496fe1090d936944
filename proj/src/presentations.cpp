#include "qglab/presentations.hpp"

#include <array>
#include <cmath>

namespace qglab::ncpoly {

namespace {

// --- DSL sources -----------------------------------------------------------

constexpr std::string_view kAlphaOsc = R"(# oscillator in the alpha convention
pres alpha-osc
gen ad 0
gen a 0
gen qN 0
gen qNi 0
rule a ad -> ad a + qNi qNi
rule qN a -> [q^-1] a qN
rule qN ad -> [q] ad qN
rule qNi a -> [q] a qNi
rule qNi ad -> [q^-1] ad qNi
rule qNi qN -> [1]
rule qN qNi -> [1]
)";

constexpr std::string_view kOscRenamed = R"(# oscillator, quadratic convention at base q
pres osc-renamed
gen Ad 0
gen A 0
rule A Ad -> [q] Ad A + [1]
)";

constexpr std::string_view kSuperOsc = R"(# graded oscillator pair, quadratic convention at base q^2
pres super-osc
gen Ad 0
gen Bd 1
gen B 1
gen A 0
rule A Ad -> [q^2] Ad A + [1]
rule B Bd -> [-1] Bd B + [1] + [q^2] Ad A + [-1] Ad A
rule A Bd -> [q] Bd A
rule A B -> [q] B A
rule B Ad -> [q] Ad B
rule Bd Ad -> [q] Ad Bd
rule B B -> [0]
rule Bd Bd -> [0]
)";

constexpr std::string_view kSu2Alg = R"(# rank-1 quantum algebra
pres su2-alg
gen Xp 0
gen Xm 0
gen qJ 0
gen qJi 0
rule Xm Xp -> Xp Xm + [- lam^-1] qJ qJ + [lam^-1] qJi qJi
rule qJ Xp -> [q] Xp qJ
rule qJ Xm -> [q^-1] Xm qJ
rule qJi Xp -> [q^-1] Xp qJi
rule qJi Xm -> [q] Xm qJi
rule qJ qJi -> [1]
rule qJi qJ -> [1]
)";

constexpr std::string_view kSu11Group = R"(# non-compact quantum group, unit q-determinant built in
# normal order keeps the diagonal pair (b, bs) leftmost so that both
# determinant contractions a as and as a stay confluent
pres su11-group
gen bs 0
gen b 0
gen as 0
gen a 0
rule b bs -> bs b
rule as bs -> [q^-1] bs as
rule as b -> [q^-1] b as
rule a bs -> [q] bs a
rule a b -> [q] b a
rule a as -> [1] + [q] bs b
rule as a -> [1] + [q^-1] bs b
)";

constexpr std::string_view kSu11Super = R"(# rank-(1|1) quantum supergroup in unitary-gauge generators
# same ordering principle as su11-group: nilpotent pair leftmost
pres su11-super
gen bets 1
gen bet 1
gen as 0
gen a 0
rule bet bets -> [- q^2] bets bet
rule bet bet -> [0]
rule bets bets -> [0]
rule as bets -> [q^-1] bets as
rule as bet -> [q^-1] bet as
rule a bets -> [q] bets a
rule a bet -> [q] bet a
rule a as -> [1] + [- q^2] bets bet
rule as a -> [1] + [-1] bets bet
)";

constexpr std::string_view kKAlgebra = R"(# reflection-equation algebra
pres k-algebra
gen al 0
gen be 0
gen ga 0
gen de 0
rule be al -> [q^2] al be
rule ga al -> [q^-2] al ga
rule de al -> al de
rule ga be -> be ga + [- q^-1 lam] al de + [q^-1 lam] al al
rule de be -> be de + [q^-1 lam] al be
rule de ga -> ga de + [- q^-3 lam] al ga
)";

constexpr std::string_view kOspPlane = R"(# quantum plane of the orthosymplectic supergroup
pres osp-plane
gen a 0
gen xi 1
gen b 0
rule xi a -> [q^-1] a xi
rule b a -> a b + [- mu] xi xi
rule b xi -> [q^-1] xi b
)";

constexpr std::string_view kOspTFragment = R"(# T-matrix fragment: only the printed exchange relations are known;
# all other generator pairs are deliberately left without rules
pres osp-T-fragment
gen T12 1
gen T32 1
gen T13 0
gen T31 0
gen T11 0
gen T21 1
gen T22 0
gen T23 1
gen T33 0
rule T13 T12 -> [q^-1] T12 T13
rule T13 T32 -> [q] T32 T13
rule T31 T13 -> T13 T31
rule T32 T12 -> [- q^-1] T12 T32 + [q^-1 lam q^1/2] T13 T31
)";

struct CatalogEntry {
    std::string_view name;
    std::string_view source;
};

constexpr std::array<CatalogEntry, 9> kCatalog = {{
    {"alpha-osc", kAlphaOsc},
    {"osc-renamed", kOscRenamed},
    {"super-osc", kSuperOsc},
    {"su2-alg", kSu2Alg},
    {"su11-group", kSu11Group},
    {"su11-super", kSu11Super},
    {"k-algebra", kKAlgebra},
    {"osp-plane", kOspPlane},
    {"osp-T-fragment", kOspTFragment},
}};

NcPoly mono(const System& sys, int leg, std::initializer_list<std::string_view> names,
            Coeff c = 1.0) {
    Word w;
    for (auto n : names) w.push_back(sys.require(n, leg));
    return NcPoly::monomial(std::move(w), c);
}

}  // namespace

std::string_view presentation_source(std::string_view name) {
    for (const auto& e : kCatalog)
        if (e.name == name) return e.source;
    throw domain_error("unknown presentation '" + std::string(name) + "'");
}

std::vector<std::string> presentation_names() {
    std::vector<std::string> out;
    for (const auto& e : kCatalog) out.emplace_back(e.name);
    return out;
}

Presentation pres_alpha_osc(const QContext& c) { return parse_presentation(kAlphaOsc, c); }
Presentation pres_osc_renamed(const QContext& c) { return parse_presentation(kOscRenamed, c); }
Presentation pres_super_osc(const QContext& c) { return parse_presentation(kSuperOsc, c); }
Presentation pres_su2_alg(const QContext& c) { return parse_presentation(kSu2Alg, c); }
Presentation pres_su11_group(const QContext& c) { return parse_presentation(kSu11Group, c); }
Presentation pres_su11_super(const QContext& c) { return parse_presentation(kSu11Super, c); }
Presentation pres_k_algebra(const QContext& c) { return parse_presentation(kKAlgebra, c); }
Presentation pres_osp_plane(const QContext& c) { return parse_presentation(kOspPlane, c); }
Presentation pres_osp_T_fragment(const QContext& c) {
    return parse_presentation(kOspTFragment, c);
}

NcPoly central_z_alpha(const Presentation& p, const QContext& ctx) {
    const double s = 1.0 / (1.0 - std::pow(ctx.q, -2.0));
    NcPoly z = p.sys.monomial({"ad", "a"});
    z += NcPoly::monomial({}, -s);
    z += p.sys.monomial({"qNi", "qNi"}, s);
    return z;
}

NcPoly central_c1_k(const Presentation& p, const QContext& ctx) {
    return p.sys.monomial({"al"}, 1.0 / ctx.q) + p.sys.monomial({"de"}, ctx.q);
}

NcPoly central_c2_k(const Presentation& p, const QContext& ctx) {
    // the quadratic central element; the gamma-before-beta ordering is the
    // one that commutes with all four generators under these relations
    return p.sys.monomial({"al", "de"}) + p.sys.monomial({"ga", "be"}, -ctx.q * ctx.q);
}

NcPoly central_c2_osp(const Presentation& p, const QContext& ctx) {
    const double q = ctx.q;
    const double pref = ctx.lambda / (q * q * (std::pow(q, 1.5) + std::pow(q, -1.5)));
    return p.sys.monomial({"xi", "xi"}, pref * q / ctx.omega) +
           p.sys.monomial({"a", "b"}, -pref);
}

// --- coactions --------------------------------------------------------------

Coaction coaction_osc_spin(const QContext& ctx) {
    Coaction co;
    co.id = "osc-spin";
    co.algebra_leg = 0;
    co.source = std::make_shared<Presentation>(pres_alpha_osc(ctx));
    co.legs = {std::make_shared<Presentation>(pres_alpha_osc(ctx)),
               std::make_shared<Presentation>(pres_su2_alg(ctx))};
    const Presentation* parts[] = {co.legs[0].get(), co.legs[1].get()};
    co.target = std::make_shared<System>(combine(parts));
    System& t = *co.target;
    const Coeff sl = std::sqrt(Coeff(ctx.lambda, 0.0));

    auto img = [&](std::string_view src, NcPoly p) {
        co.phi.images[co.source->sys.require(src)] = std::move(p);
    };
    img("a", mono(t, 0, {"a"}) * mono(t, 1, {"qJi"}) +
                 sl * (mono(t, 0, {"qNi"}) * mono(t, 1, {"Xp"})));
    img("ad", mono(t, 0, {"ad"}) * mono(t, 1, {"qJi"}) +
                  sl * (mono(t, 0, {"qNi"}) * mono(t, 1, {"Xm"})));
    img("qN", mono(t, 0, {"qN"}) * mono(t, 1, {"qJi"}));
    img("qNi", mono(t, 0, {"qNi"}) * mono(t, 1, {"qJ"}));
    co.phi.target = co.target.get();

    for (auto name : {"a", "ad", "qN", "qNi"})
        co.embed.images[co.source->sys.require(name)] = mono(t, 0, {name});
    co.embed.target = co.target.get();
    return co;
}

Coaction coaction_bogoliubov(const QContext& ctx) {
    Coaction co;
    co.id = "bogoliubov";
    co.algebra_leg = 1;
    co.source = std::make_shared<Presentation>(pres_osc_renamed(ctx));
    co.legs = {std::make_shared<Presentation>(pres_su11_group(ctx)),
               std::make_shared<Presentation>(pres_osc_renamed(ctx))};
    const Presentation* parts[] = {co.legs[0].get(), co.legs[1].get()};
    co.target = std::make_shared<System>(combine(parts));
    System& t = *co.target;

    co.phi.images[co.source->sys.require("A")] =
        mono(t, 0, {"a"}) * mono(t, 1, {"A"}) + mono(t, 0, {"b"}) * mono(t, 1, {"Ad"});
    co.phi.images[co.source->sys.require("Ad")] =
        mono(t, 0, {"as"}) * mono(t, 1, {"Ad"}) + mono(t, 0, {"bs"}) * mono(t, 1, {"A"});
    co.phi.target = co.target.get();

    for (auto name : {"A", "Ad"})
        co.embed.images[co.source->sys.require(name)] = mono(t, 1, {name});
    co.embed.target = co.target.get();
    return co;
}

Coaction coaction_super(const QContext& ctx) {
    Coaction co;
    co.id = "super";
    co.algebra_leg = 1;
    co.source = std::make_shared<Presentation>(pres_super_osc(ctx));
    co.legs = {std::make_shared<Presentation>(pres_su11_super(ctx)),
               std::make_shared<Presentation>(pres_super_osc(ctx))};
    const Presentation* parts[] = {co.legs[0].get(), co.legs[1].get()};
    co.target = std::make_shared<System>(combine(parts));
    System& t = *co.target;

    // dependent T-entries: gamma = a bets a, d = a + a bets bet, and the
    // derived conjugates; the sign on the Ad-part of Bd is forced by the
    // graded relations
    const NcPoly gam = mono(t, 0, {"a", "bets", "a"});
    const NcPoly dd = mono(t, 0, {"a"}) + mono(t, 0, {"a", "bets", "bet"});
    const NcPoly gam_s = mono(t, 0, {"as", "bet", "as"});
    const NcPoly dd_s = mono(t, 0, {"as"}) + mono(t, 0, {"bets", "bet", "as"});

    co.phi.images[co.source->sys.require("A")] =
        mono(t, 0, {"a"}) * mono(t, 1, {"A"}) + mono(t, 0, {"bet"}) * mono(t, 1, {"B"});
    co.phi.images[co.source->sys.require("B")] =
        gam * mono(t, 1, {"A"}) + dd * mono(t, 1, {"B"});
    co.phi.images[co.source->sys.require("Ad")] =
        mono(t, 0, {"as"}) * mono(t, 1, {"Ad"}) + mono(t, 0, {"bets"}) * mono(t, 1, {"Bd"});
    co.phi.images[co.source->sys.require("Bd")] =
        Coeff(-1.0) * (gam_s * mono(t, 1, {"Ad"})) + dd_s * mono(t, 1, {"Bd"});
    co.phi.target = co.target.get();

    for (auto name : {"A", "Ad", "B", "Bd"})
        co.embed.images[co.source->sys.require(name)] = mono(t, 1, {name});
    co.embed.target = co.target.get();
    return co;
}

Coaction coaction_osp_fragment(const QContext& ctx) {
    Coaction co;
    co.id = "osp-fragment";
    co.algebra_leg = 1;
    co.source = std::make_shared<Presentation>(pres_osp_plane(ctx));
    co.legs = {std::make_shared<Presentation>(pres_osp_T_fragment(ctx)),
               std::make_shared<Presentation>(pres_osp_plane(ctx))};
    const Presentation* parts[] = {co.legs[0].get(), co.legs[1].get()};
    co.target = std::make_shared<System>(combine(parts));
    System& t = *co.target;

    const char* Trow[3][3] = {{"T11", "T12", "T13"}, {"T21", "T22", "T23"}, {"T31", "T32", "T33"}};
    const char* X[3] = {"a", "xi", "b"};
    for (int i = 0; i < 3; ++i) {
        NcPoly img;
        for (int j = 0; j < 3; ++j) img += mono(t, 0, {Trow[i][j]}) * mono(t, 1, {X[j]});
        co.phi.images[co.source->sys.require(X[i])] = std::move(img);
    }
    co.phi.target = co.target.get();
    for (auto name : {"a", "xi", "b"})
        co.embed.images[co.source->sys.require(name)] = mono(t, 1, {name});
    co.embed.target = co.target.get();
    return co;
}

Substitution su2_coproduct(const Presentation& single, System& two_leg, bool mirrored) {
    Substitution d;
    d.target = &two_leg;
    auto m0 = [&](std::string_view n) { return mono(two_leg, 0, {n}); };
    auto m1 = [&](std::string_view n) { return mono(two_leg, 1, {n}); };
    const char* lo = mirrored ? "qJ" : "qJi";
    const char* hi = mirrored ? "qJi" : "qJ";
    d.images[single.sys.require("Xp")] = m0("Xp") * m1(lo) + m0(hi) * m1("Xp");
    d.images[single.sys.require("Xm")] = m0("Xm") * m1(lo) + m0(hi) * m1("Xm");
    d.images[single.sys.require("qJ")] = m0("qJ") * m1("qJ");
    d.images[single.sys.require("qJi")] = m0("qJi") * m1("qJi");
    return d;
}

CheckReport coassociativity_check(const QContext& ctx, bool mirrored, double tol) {
    Coaction co = coaction_osc_spin(ctx);
    auto alg = co.legs[0];
    auto grp = co.legs[1];
    const Presentation* three_parts[] = {alg.get(), grp.get(), grp.get()};
    System three = combine(three_parts);

    // (psi x id): algebra-leg symbols follow psi into legs (0,1), group-leg
    // symbols move to leg 2
    Substitution psi_x_id;
    psi_x_id.target = &three;
    for (int g = 0; g < (int)co.target->gens.size(); ++g) {
        const GenSym& gs = co.target->gens[g];
        if (gs.leg == 0) {
            const NcPoly& img2 = co.phi.images.at(co.source->sys.require(gs.name));
            NcPoly lifted;
            for (const auto& [w, c] : img2.terms) {
                Word v;
                for (auto id : w)
                    v.push_back(three.require(co.target->gens[id].name, co.target->gens[id].leg));
                lifted.add(v, c);
            }
            psi_x_id.images[g] = std::move(lifted);
        } else {
            psi_x_id.images[g] = mono(three, 2, {gs.name});
        }
    }

    // (id x Delta): algebra-leg symbols stay on leg 0, group-leg symbols
    // split over legs (1,2)
    const Presentation* grp_pair[] = {grp.get(), grp.get()};
    System grp2 = combine(grp_pair);
    Substitution delta = su2_coproduct(*grp, grp2, mirrored);
    Substitution id_x_delta;
    id_x_delta.target = &three;
    for (int g = 0; g < (int)co.target->gens.size(); ++g) {
        const GenSym& gs = co.target->gens[g];
        if (gs.leg == 0) {
            id_x_delta.images[g] = mono(three, 0, {gs.name});
        } else {
            const NcPoly& dimg = delta.images.at(grp->sys.require(gs.name));
            NcPoly lifted;
            for (const auto& [w, c] : dimg.terms) {
                Word v;
                for (auto id : w)
                    v.push_back(three.require(grp2.gens[id].name, grp2.gens[id].leg + 1));
                lifted.add(v, c);
            }
            id_x_delta.images[g] = std::move(lifted);
        }
    }

    double worst = 0.0;
    for (const auto& [src, img] : co.phi.images) {
        NcPoly diff = psi_x_id.apply(img) - id_x_delta.apply(img);
        worst = std::max(worst, three.normal_form(diff).max_abs_coeff());
    }
    return CheckReport::make(mirrored ? "coassociativity-mirrored" : "coassociativity", worst,
                             tol, {{"q", std::to_string(ctx.q)}});
}

CheckReport counit_check(const QContext& ctx, double tol) {
    Coaction co = coaction_osc_spin(ctx);
    Substitution eps;
    eps.target = &co.source->sys;
    for (int g = 0; g < (int)co.target->gens.size(); ++g) {
        const GenSym& gs = co.target->gens[g];
        if (gs.leg == 0) {
            eps.images[g] = co.source->sys.monomial({gs.name});
        } else if (gs.name == "qJ" || gs.name == "qJi") {
            eps.images[g] = NcPoly::one();
        } else {
            eps.images[g] = NcPoly::zero();
        }
    }
    double worst = 0.0;
    for (const auto& [src, img] : co.phi.images) {
        NcPoly diff = eps.apply(img) - NcPoly::monomial({src});
        worst = std::max(worst, co.source->sys.normal_form(diff).max_abs_coeff());
    }
    return CheckReport::make("counit", worst, tol, {{"q", std::to_string(ctx.q)}});
}

}  // namespace qglab::ncpoly
