#include "qglab/repcat.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "qglab/galg_io.hpp"
#include "qglab/rmx.hpp"

namespace qglab {

std::string to_string(OscVariant v) {
    switch (v) {
        case OscVariant::small_a: return "small_a";
        case OscVariant::big_A: return "big_A";
        case OscVariant::alpha: return "alpha";
        case OscVariant::big_A_renamed: return "big_A_renamed";
    }
    return "?";
}

const GradedOperator& NamedRep::gen(const std::string& name) const {
    auto it = gens.find(name);
    if (it == gens.end())
        throw domain_error("representation '" + kind + "' has no generator '" + name + "'");
    return it->second;
}

namespace {

GradedOperator diag_op(const GradedSpace& s, const std::function<Complex(int)>& f,
                       int parity = 0) {
    Matrix m = Matrix::Zero(s.dim, s.dim);
    for (int i = 0; i < s.dim; ++i) m(i, i) = f(i);
    return GradedOperator(std::move(m), s, parity, 0);
}

void add_power_diagonals(NamedRep& rep, const GradedSpace& s) {
    const double q = rep.ctx.q;
    rep.gens.emplace("N", diag_op(s, [&](int n) { return Complex(n, 0); }));
    rep.gens.emplace("qN", diag_op(s, [&](int n) { return std::pow(q, n); }));
    rep.gens.emplace("qNi", diag_op(s, [&](int n) { return std::pow(q, -n); }));
    rep.gens.emplace("qNh", diag_op(s, [&](int n) { return std::pow(q, 0.5 * n); }));
    rep.gens.emplace("qNhi", diag_op(s, [&](int n) { return std::pow(q, -0.5 * n); }));
}

}  // namespace

NamedRep fock_qosc(OscVariant v, int dim, const QContext& ctx) {
    if (dim < 2) throw shape_error("fock_qosc: dim must be >= 2");
    NamedRep rep{"osc-" + to_string(v), ctx, GradedSpace::fock(dim), {}};
    const double q = ctx.q;
    auto ladder = [&](int n) -> double {
        switch (v) {
            case OscVariant::small_a: return std::sqrt(bracket_sym(n, ctx));
            case OscVariant::big_A: return std::sqrt(bracket_box(n, q * q));
            case OscVariant::alpha: return std::sqrt(bracket_box(n, 1.0 / (q * q)));
            case OscVariant::big_A_renamed: return std::sqrt(bracket_box(n, q));
        }
        return 0.0;
    };
    Matrix m = Matrix::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) m(n - 1, n) = ladder(n);
    GradedOperator a(std::move(m), rep.space, 0, -1);
    rep.gens.emplace("ad", dagger(a));
    rep.gens.emplace("a", std::move(a));
    add_power_diagonals(rep, rep.space);
    return rep;
}

NamedRep suq2_irrep(double j, const QContext& ctx) {
    const double twoj = 2.0 * j;
    if (j < 0 || std::abs(twoj - std::round(twoj)) > 1e-12)
        throw domain_error("suq2_irrep: 2j must be a non-negative integer");
    const int dim = static_cast<int>(std::round(twoj)) + 1;
    NamedRep rep{"su2-irrep", ctx, GradedSpace::exact(dim), {}};
    const double q = ctx.q;
    Matrix xp = Matrix::Zero(dim, dim);
    for (int t = 0; t + 1 < dim; ++t) {
        const double mval = t - j;
        const double n2 = bracket_sym(j - mval, ctx) * bracket_sym(j + mval + 1, ctx);
        xp(t + 1, t) = std::sqrt(n2);
    }
    GradedOperator Xp(std::move(xp), rep.space, 0, 0);
    rep.gens.emplace("Xm", dagger(Xp));
    rep.gens.emplace("Xp", std::move(Xp));
    rep.gens.emplace("J", diag_op(rep.space, [&](int t) { return Complex(t - j, 0); }));
    rep.gens.emplace("qJ", diag_op(rep.space, [&](int t) { return std::pow(q, t - j); }));
    rep.gens.emplace("qJi", diag_op(rep.space, [&](int t) { return std::pow(q, j - t); }));
    return rep;
}

NamedRep suq2_group_rep(int dim, const QContext& ctx) {
    if (ctx.q >= 1.0)
        throw domain_error("suq2_group_rep: only the q < 1 regime carries this Fock representation");
    if (dim < 2) throw shape_error("suq2_group_rep: dim must be >= 2");
    NamedRep rep{"su2-group", ctx, GradedSpace::fock(dim), {}};
    Matrix m = Matrix::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) m(n - 1, n) = coeff_cn_su2(n, ctx);
    GradedOperator a(std::move(m), rep.space, 0, -1);
    rep.gens.emplace("ad", dagger(a));
    rep.gens.emplace("a", std::move(a));
    auto b = diag_op(rep.space, [&](int n) { return std::pow(ctx.q, n); });
    rep.gens.emplace("bd", b);
    rep.gens.emplace("b", std::move(b));
    return rep;
}

NamedRep suq11_group_rep(int M, double phi, const QContext& ctx) {
    if (M < 1) throw shape_error("suq11_group_rep: M must be >= 1");
    NamedRep rep{"su11-group", ctx, GradedSpace::window(M), {}};
    const int dim = 2 * M + 1;
    Matrix m = Matrix::Zero(dim, dim);
    for (int t = 0; t + 1 < dim; ++t) m(t + 1, t) = coeff_cm_su11(t - M, ctx);
    GradedOperator a(std::move(m), rep.space, 0, +1);
    rep.gens.emplace("ad", dagger(a));
    rep.gens.emplace("a", std::move(a));
    const Complex phase = std::exp(Complex(0, phi));
    auto b = diag_op(rep.space, [&](int t) { return phase * std::pow(ctx.q, M - t); });
    rep.gens.emplace("bd", dagger(b));
    rep.gens.emplace("b", std::move(b));
    return rep;
}

NamedRep super_osc_rep(int dimB, const QContext& ctx) {
    if (dimB < 2) throw shape_error("super_osc_rep: dimB must be >= 2");
    auto bose = fock_qosc(OscVariant::big_A, dimB, ctx);
    const GradedSpace fermi = GradedSpace::exact(2, {0, 1}, {0, 1});
    Matrix fm = Matrix::Zero(2, 2);
    fm(0, 1) = 1.0;
    GradedOperator f(fm, fermi, 1, -1);
    GradedOperator fd = dagger(f);
    GradedOperator idf = GradedOperator::identity(fermi);
    GradedOperator idb = GradedOperator::identity(bose.space);

    NamedRep rep{"super-osc", ctx, bose.space.tensor(fermi), {}};
    rep.gens.emplace("A", graded_kron(bose.gen("a"), idf));
    rep.gens.emplace("Ad", graded_kron(bose.gen("ad"), idf));
    rep.gens.emplace("B", graded_kron(bose.gen("qN"), f));
    rep.gens.emplace("Bd", graded_kron(bose.gen("qN"), fd));
    rep.gens.emplace("f", graded_kron(idb, f));
    rep.gens.emplace("fd", graded_kron(idb, fd));
    rep.gens.emplace("qN", graded_kron(bose.gen("qN"), idf));
    rep.gens.emplace("qNi", graded_kron(bose.gen("qNi"), idf));
    rep.gens.emplace("N", graded_kron(bose.gen("N"), idf));
    return rep;
}

MultimodeRep multimode_rep(int nmodes, int dim, const QContext& ctx) {
    if (nmodes != 2) throw domain_error("multimode_rep: only n = 2 is supported");
    if (dim < 2) throw shape_error("multimode_rep: dim must be >= 2");
    auto mode = fock_qosc(OscVariant::big_A, dim, ctx);
    const auto& a = mode.gen("a");
    const auto& qN = mode.gen("qN");
    auto id = GradedOperator::identity(mode.space);
    const RMatrix R = rmatrix_slq2(ctx);

    struct Candidate {
        std::string tag;
        GradedOperator A1, A2;
    };
    std::vector<Candidate> cands;
    cands.push_back({"qN2-on-mode1", graded_kron(a, qN), graded_kron(id, a)});
    cands.push_back({"qN1-on-mode2", graded_kron(a, id), graded_kron(qN, a)});

    auto annihilation_residual = [&](const Candidate& c) {
        const GradedOperator* A[2] = {&c.A1, &c.A2};
        double worst = 0.0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                Matrix acc = -ctx.q * (A[i]->mat * A[j]->mat);
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l)
                        acc += R.mat(2 * i + j, 2 * k + l) * (A[k]->mat * A[l]->mat);
                worst = std::max(worst, op_norm(guard_project(acc, c.A1.space, 0)));
            }
        return worst;
    };

    const double r0 = annihilation_residual(cands[0]);
    const double r1 = annihilation_residual(cands[1]);
    const int sel = r0 <= r1 ? 0 : 1;
    const double rsel = std::min(r0, r1), rrej = std::max(r0, r1);
    if (rsel > 1e-10)
        throw construction_failed("multimode_rep: no dressing satisfies the exchange relations",
                                  rsel);

    MultimodeRep mm;
    mm.dressing = cands[sel].tag;
    mm.selected_residual = rsel;
    mm.rejected_residual = rrej;
    mm.rep = NamedRep{"multimode-2", ctx, cands[sel].A1.space, {}};
    mm.rep.gens.emplace("A1", cands[sel].A1);
    mm.rep.gens.emplace("A2", cands[sel].A2);
    mm.rep.gens.emplace("A1d", dagger(cands[sel].A1));
    mm.rep.gens.emplace("A2d", dagger(cands[sel].A2));
    mm.rep.gens.emplace("qN1", graded_kron(qN, id));
    mm.rep.gens.emplace("qN2", graded_kron(id, qN));
    mm.rep.gens.emplace("N1", graded_kron(mode.gen("N"), id));
    mm.rep.gens.emplace("N2", graded_kron(id, mode.gen("N")));
    return mm;
}

// ---------------------------------------------------------------------------
// exterior-algebra representation of the rank-(1|1) supergroup

namespace {

struct GrassmannBasisOps {
    GradedSpace space = GradedSpace::exact(4, {0, 1, 1, 0}, {0, 1, 1, 2});
    Matrix Lam, Lami, signD, mul_eta, mul_etas, der_eta, der_etas;

    explicit GrassmannBasisOps(double q) {
        auto Z = [] { return Matrix::Zero(4, 4); };
        Lam = Z();
        Lami = Z();
        signD = Z();
        const double deg[4] = {0, 1, 1, 2};
        for (int i = 0; i < 4; ++i) {
            Lam(i, i) = std::pow(q, deg[i]);
            Lami(i, i) = std::pow(q, -deg[i]);
            signD(i, i) = (static_cast<int>(deg[i]) % 2) ? -1.0 : 1.0;
        }
        mul_eta = Z();
        mul_eta(1, 0) = 1.0;   // eta * 1
        mul_eta(3, 2) = 1.0;   // eta * eta'
        mul_etas = Z();
        mul_etas(2, 0) = 1.0;  // eta' * 1
        mul_etas(3, 1) = -1.0; // eta' * eta = -eta eta'
        der_eta = Z();
        der_eta(0, 1) = 1.0;
        der_eta(2, 3) = 1.0;
        der_etas = Z();
        der_etas(0, 2) = 1.0;
        der_etas(1, 3) = -1.0;
    }
};

}  // namespace

GrassmannRep grassmann_suq11_rep(double phi, const QContext& ctx) {
    const double q = ctx.q;
    GrassmannBasisOps ops(q);
    const Complex phase = std::exp(Complex(0, phi));

    const Matrix beta = ops.Lam * ops.mul_eta;  // multiply by eta, then scale

    struct Candidate {
        std::string tag;
        Matrix m;
    };
    std::vector<Candidate> cands;
    const std::pair<std::string, const Matrix*> structures[] = {
        {"mul_etas", &ops.mul_etas}, {"der_eta", &ops.der_eta}, {"der_etas", &ops.der_etas}};
    const std::pair<std::string, Matrix> powers[] = {
        {"Lami", ops.Lami}, {"1", Matrix::Identity(4, 4)}, {"Lam", ops.Lam}};
    for (const auto& [sname, S] : structures)
        for (const auto& [pname, P] : powers)
            for (int twist = 0; twist < 2; ++twist)
                for (int side = 0; side < 2; ++side) {
                    Matrix m = side ? Matrix(P * (*S)) : Matrix((*S) * P);
                    std::string tag = side ? (pname + "*" + sname) : (sname + "*" + pname);
                    if (twist) {
                        m = m * ops.signD;
                        tag += "*signD";
                    }
                    cands.push_back({std::move(tag), std::move(m)});
                }

    auto residual_for = [&](const Matrix& bets) {
        const Matrix betsbet = bets * beta;
        const Matrix a = phase * ops.Lam * (Matrix::Identity(4, 4) - 0.5 * betsbet);
        const Matrix as =
            (Matrix::Identity(4, 4) - 0.5 * betsbet) * (std::conj(phase) * ops.Lami);
        const Matrix I = Matrix::Identity(4, 4);
        const double q2 = q * q;
        double r = 0.0;
        auto upd = [&](const Matrix& m) { r = std::max(r, op_norm(m)); };
        upd(a * beta - q * beta * a);
        upd(a * bets - q * bets * a);
        upd(as * beta - (1.0 / q) * beta * as);
        upd(as * bets - (1.0 / q) * bets * as);
        upd(a * as - as * a - (1.0 - q2) * betsbet);
        upd(beta * bets + q2 * betsbet);
        upd(a * as - I - beta * bets);
        upd(as * a - I + betsbet);
        upd(ops.Lam * beta - q * beta * ops.Lam);
        upd(ops.Lam * bets - q * bets * ops.Lam);
        upd(beta * beta);
        upd(bets * bets);
        return r;
    };

    double best = 1e300;
    int best_idx = -1;
    for (int i = 0; i < (int)cands.size(); ++i) {
        if (op_norm(cands[i].m) < 1e-14) continue;
        const double r = residual_for(cands[i].m);
        if (r < best) {
            best = r;
            best_idx = i;
        }
    }
    if (best_idx < 0 || best > 1e-10)
        throw construction_failed("grassmann_suq11_rep: conjugate ansatz search failed", best);

    const Matrix& bets = cands[best_idx].m;
    const Matrix betsbet = bets * beta;
    const Matrix a = phase * ops.Lam * (Matrix::Identity(4, 4) - 0.5 * betsbet);
    const Matrix as = (Matrix::Identity(4, 4) - 0.5 * betsbet) * (std::conj(phase) * ops.Lami);

    GrassmannRep out;
    out.ansatz = cands[best_idx].tag;
    out.residual = best;
    out.rep = NamedRep{"grassmann-su11", ctx, ops.space, {}};
    out.rep.gens.emplace("a", GradedOperator(a, ops.space, 0, std::nullopt));
    out.rep.gens.emplace("as", GradedOperator(as, ops.space, 0, std::nullopt));
    out.rep.gens.emplace("bet", GradedOperator(beta, ops.space, 1, +1));
    out.rep.gens.emplace("bets", GradedOperator(bets, ops.space, 1, std::nullopt));
    out.rep.gens.emplace("Lam", GradedOperator(ops.Lam, ops.space, 0, 0));
    out.rep.gens.emplace("Lami", GradedOperator(ops.Lami, ops.space, 0, 0));
    out.rep.gens.emplace(
        "D", diag_op(ops.space, [&](int i) { return Complex(ops.space.level[i], 0); }));
    return out;
}

// ---------------------------------------------------------------------------
// defining-relation suites

namespace {

CheckReport rel(const std::string& id, std::vector<ExprTerm> expr, double tol,
                const QContext& ctx) {
    const int g = required_guard(expr);
    return guarded_residual(id, expr, g, tol, {{"q", std::to_string(ctx.q)}});
}

}  // namespace

std::vector<CheckReport> relation_checks(const NamedRep& rep, double tol) {
    std::vector<CheckReport> out;
    const QContext& c = rep.ctx;
    const double q = c.q;
    const std::string& k = rep.kind;

    if (k.rfind("osc-", 0) == 0) {
        const auto &a = rep.gen("a"), &ad = rep.gen("ad"), &N = rep.gen("N");
        if (k == "osc-small_a") {
            out.push_back(rel(k + "/ccr", {{1, {&a, &ad}}, {-q, {&ad, &a}}, {-1, {&rep.gen("qNi")}}},
                              tol, c));
        } else if (k == "osc-big_A") {
            out.push_back(rel(k + "/ccr", {{1, {&a, &ad}}, {-q * q, {&ad, &a}}, {-1, {}}}, tol, c));
        } else if (k == "osc-big_A_renamed") {
            out.push_back(rel(k + "/ccr", {{1, {&a, &ad}}, {-q, {&ad, &a}}, {-1, {}}}, tol, c));
        } else {  // alpha
            const auto& qNi = rep.gen("qNi");
            out.push_back(rel(k + "/ccr",
                              {{1, {&a, &ad}}, {-1, {&ad, &a}}, {-1, {&qNi, &qNi}}}, tol, c));
        }
        out.push_back(rel(k + "/number-lowering",
                          {{1, {&N, &a}}, {-1, {&a, &N}}, {1, {&a}}}, tol, c));
        out.push_back(rel(k + "/number-raising",
                          {{1, {&N, &ad}}, {-1, {&ad, &N}}, {-1, {&ad}}}, tol, c));
        // scaling interlinks hold between the literal variants at one ctx
        return out;
    }

    if (k == "su2-irrep") {
        const auto &Xp = rep.gen("Xp"), &Xm = rep.gen("Xm"), &J = rep.gen("J");
        out.push_back(rel(k + "/raise", {{1, {&J, &Xp}}, {-1, {&Xp, &J}}, {-1, {&Xp}}}, tol, c));
        out.push_back(rel(k + "/lower", {{1, {&J, &Xm}}, {-1, {&Xm, &J}}, {1, {&Xm}}}, tol, c));
        GradedOperator sym2J = rep.gen("J");
        for (int i = 0; i < rep.space.dim; ++i)
            sym2J.mat(i, i) = bracket_sym(2.0 * std::real(rep.gen("J").mat(i, i)), c);
        out.push_back(rel(k + "/cartan",
                          {{1, {&Xp, &Xm}}, {-1, {&Xm, &Xp}}, {-1, {&sym2J}}}, tol, c));
        out.push_back(CheckReport::make(k + "/dagger", op_norm(Xm.mat - Xp.mat.adjoint()), tol));
        return out;
    }

    if (k == "su2-group") {
        const auto &a = rep.gen("a"), &ad = rep.gen("ad"), &b = rep.gen("b"), &bd = rep.gen("bd");
        out.push_back(rel(k + "/ab", {{1, {&a, &b}}, {-q, {&b, &a}}}, tol, c));
        out.push_back(rel(k + "/abd", {{1, {&a, &bd}}, {-q, {&bd, &a}}}, tol, c));
        out.push_back(rel(k + "/bbd", {{1, {&b, &bd}}, {-1, {&bd, &b}}}, tol, c));
        out.push_back(rel(k + "/qdet", {{1, {&a, &ad}}, {q * q, {&bd, &b}}, {-1, {}}}, tol, c));
        out.push_back(rel(k + "/unitarity", {{1, {&ad, &a}}, {1, {&bd, &b}}, {-1, {}}}, tol, c));
        return out;
    }

    if (k == "su11-group") {
        const auto &a = rep.gen("a"), &ad = rep.gen("ad"), &b = rep.gen("b"), &bd = rep.gen("bd");
        const double lam = c.lambda;
        out.push_back(rel(k + "/ab", {{1, {&a, &b}}, {-q, {&b, &a}}}, tol, c));
        out.push_back(rel(k + "/abd", {{1, {&a, &bd}}, {-q, {&bd, &a}}}, tol, c));
        out.push_back(rel(k + "/b-normal", {{1, {&b, &bd}}, {-1, {&bd, &b}}}, tol, c));
        out.push_back(rel(k + "/aad-comm",
                          {{1, {&a, &ad}}, {-1, {&ad, &a}}, {-lam, {&bd, &b}}}, tol, c));
        out.push_back(rel(k + "/aad", {{1, {&a, &ad}}, {-q, {&bd, &b}}, {-1, {}}}, tol, c));
        out.push_back(rel(k + "/ada", {{1, {&ad, &a}}, {-1.0 / q, {&bd, &b}}, {-1, {}}}, tol, c));
        out.push_back(rel(k + "/qdet", {{1, {&a, &ad}}, {-q, {&b, &bd}}, {-1, {}}}, tol, c));
        return out;
    }

    if (k == "super-osc") {
        const auto &A = rep.gen("A"), &Ad = rep.gen("Ad"), &B = rep.gen("B"), &Bd = rep.gen("Bd");
        out.push_back(rel(k + "/ccr", {{1, {&A, &Ad}}, {-q * q, {&Ad, &A}}, {-1, {}}}, tol, c));
        out.push_back(rel(k + "/bbd",
                          {{1, {&B, &Bd}}, {1, {&Bd, &B}}, {-1, {}}, {-(q * q - 1), {&Ad, &A}}},
                          tol, c));
        out.push_back(rel(k + "/ab", {{1, {&A, &B}}, {-q, {&B, &A}}}, tol, c));
        out.push_back(rel(k + "/abd", {{1, {&A, &Bd}}, {-q, {&Bd, &A}}}, tol, c));
        out.push_back(rel(k + "/b-nilpotent", {{1, {&B, &B}}}, tol, c));
        out.push_back(rel(k + "/bd-nilpotent", {{1, {&Bd, &Bd}}}, tol, c));
        out.push_back(
            CheckReport::make(k + "/b-odd", rep.gen("B").homogeneity_defect(), tol));
        return out;
    }

    if (k == "grassmann-su11") {
        const auto &a = rep.gen("a"), &as = rep.gen("as"), &bet = rep.gen("bet"),
                   &bets = rep.gen("bets"), &Lam = rep.gen("Lam");
        const double q2 = q * q;
        out.push_back(rel(k + "/a-bet", {{1, {&a, &bet}}, {-q, {&bet, &a}}}, tol, c));
        out.push_back(rel(k + "/as-bet", {{1, {&as, &bet}}, {-1.0 / q, {&bet, &as}}}, tol, c));
        out.push_back(rel(k + "/comm",
                          {{1, {&a, &as}}, {-1, {&as, &a}}, {-(1.0 - q2), {&bets, &bet}}}, tol, c));
        out.push_back(rel(k + "/bet-bets", {{1, {&bet, &bets}}, {q2, {&bets, &bet}}}, tol, c));
        out.push_back(rel(k + "/aas", {{1, {&a, &as}}, {-1, {}}, {-1, {&bet, &bets}}}, tol, c));
        out.push_back(rel(k + "/asa", {{1, {&as, &a}}, {-1, {}}, {1, {&bets, &bet}}}, tol, c));
        out.push_back(rel(k + "/lam-bet", {{1, {&Lam, &bet}}, {-q, {&bet, &Lam}}}, tol, c));
        out.push_back(rel(k + "/bet-nilpotent", {{1, {&bet, &bet}}}, tol, c));
        // Lam fixes the vacuum of the exterior algebra
        out.push_back(CheckReport::make(k + "/lam-vacuum",
                                        std::abs(Lam.mat(0, 0) - Complex(1, 0)), tol));
        return out;
    }

    throw domain_error("relation_checks: unknown representation kind '" + k + "'");
}

std::vector<CheckReport> relation_checks_multimode(const MultimodeRep& mm, double tol) {
    std::vector<CheckReport> out = zf_checks(rmatrix_slq2(mm.rep.ctx), mm, tol);
    // invariant combination equals the closed form in the mode numbers
    const auto &A1 = mm.rep.gen("A1"), &A2 = mm.rep.gen("A2");
    const auto &A1d = mm.rep.gen("A1d"), &A2d = mm.rep.gen("A2d");
    const auto &qN1 = mm.rep.gen("qN1"), &qN2 = mm.rep.gen("qN2");
    const double q = mm.rep.ctx.q;
    const double denom = q * q - 1.0;
    std::vector<ExprTerm> expr = {{1, {&A1d, &A1}},
                                  {1, {&A2d, &A2}},
                                  {-1.0 / denom, {&qN1, &qN1, &qN2, &qN2}},
                                  {1.0 / denom, {}}};
    out.push_back(guarded_residual("multimode-2/hamiltonian-closed-form", expr,
                                   required_guard(expr), tol,
                                   {{"q", std::to_string(q)}, {"dressing", mm.dressing}}));
    return out;
}

double contraction_error(double j, int levels, const QContext& ctx) {
    if (ctx.lambda <= 0.0)
        throw domain_error("contraction_error: needs lambda > 0 (q > 1); the limit diverges otherwise");
    auto rep = suq2_irrep(j, ctx);
    const Matrix& xp = rep.gen("Xp").mat;
    const double scale = std::sqrt(ctx.lambda) * std::pow(ctx.q, -j);
    const int dim = rep.space.dim;
    double worst = 0.0;
    for (int n = 1; n <= levels; ++n) {
        // Fock level n sits at spin index t = 2j - n under |n> ~ |j-n; j>
        const int t = dim - 1 - n;
        const double elem = scale * std::real(xp(t + 1, t));
        const double target = std::sqrt(bracket_box(n, 1.0 / (ctx.q * ctx.q)));
        worst = std::max(worst, std::abs(elem - target));
    }
    return worst;
}

void export_rep(const NamedRep& rep, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    nlohmann::json manifest;
    manifest["kind"] = rep.kind;
    manifest["q"] = rep.ctx.q;
    manifest["dim"] = rep.space.dim;
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& [name, op] : rep.gens) {
        const std::string file = name + ".json";
        save_matrix((fs::path(dir) / file).string(), op);
        nlohmann::json g;
        g["name"] = name;
        g["file"] = file;
        g["parity"] = op.parity;
        if (op.level_shift)
            g["level_shift"] = *op.level_shift;
        else
            g["level_shift"] = nullptr;
        gens.push_back(std::move(g));
    }
    manifest["gens"] = std::move(gens);
    std::ofstream f(fs::path(dir) / "manifest.json");
    f << manifest.dump(2) << "\n";
}

}  // namespace qglab
