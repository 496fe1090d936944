#include "qglab/ncpoly.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <sstream>

namespace qglab::ncpoly {

NcPoly NcPoly::monomial(Word w, Coeff c) {
    NcPoly p;
    if (c != Coeff(0, 0)) p.terms.emplace(std::move(w), c);
    return p;
}

NcPoly& NcPoly::add(const Word& w, Coeff c) {
    auto [it, inserted] = terms.emplace(w, c);
    if (!inserted) it->second += c;
    return *this;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
    for (const auto& [w, c] : o.terms) add(w, c);
    return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
    for (const auto& [w, c] : o.terms) add(w, -c);
    return *this;
}

NcPoly& NcPoly::prune(double eps) {
    for (auto it = terms.begin(); it != terms.end();)
        it = (std::abs(it->second) < eps) ? terms.erase(it) : std::next(it);
    return *this;
}

double NcPoly::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [w, c] : terms) m = std::max(m, std::abs(c));
    return m;
}

NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b, a; }
NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b, a; }

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
    NcPoly out;
    for (const auto& [wa, ca] : a.terms)
        for (const auto& [wb, cb] : b.terms) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add(w, ca * cb);
        }
    return out;
}

NcPoly operator*(Coeff c, NcPoly a) {
    for (auto& [w, v] : a.terms) v *= c;
    return a;
}

int System::find(std::string_view name, int leg) const {
    for (int i = 0; i < (int)gens.size(); ++i)
        if (gens[i].leg == leg && gens[i].name == name) return i;
    return -1;
}

int System::require(std::string_view name, int leg) const {
    const int i = find(name, leg);
    if (i < 0)
        throw domain_error("unknown generator '" + std::string(name) + "' on leg " +
                           std::to_string(leg));
    return i;
}

void System::set_rule(int left, int right, NcPoly rhs) {
    rules_[key(left, right)] = std::move(rhs).prune();
}

const NcPoly* System::rule(int left, int right) const {
    auto it = rules_.find(key(left, right));
    return it == rules_.end() ? nullptr : &it->second;
}

NcPoly System::monomial(std::initializer_list<std::string_view> names, Coeff c,
                        int leg) const {
    Word w;
    for (auto n : names) w.push_back(require(n, leg));
    return NcPoly::monomial(std::move(w), c);
}

std::string System::word_str(const Word& w) const {
    std::string s;
    for (auto id : w) {
        if (!s.empty()) s += ' ';
        s += gens[id].name;
        if (gens[id].leg) s += "@" + std::to_string(gens[id].leg);
    }
    return s.empty() ? "1" : s;
}

NcPoly System::normal_form(const NcPoly& p) const {
    // worklist rewriting; step ceiling catches non-terminating rule sets,
    // which would be a catalog bug
    constexpr long kMaxSteps = 20'000'000;
    long steps = 0;
    NcPoly out;
    std::deque<std::pair<Word, Coeff>> work(p.terms.begin(), p.terms.end());
    while (!work.empty()) {
        auto [w, c] = std::move(work.front());
        work.pop_front();
        if (++steps > kMaxSteps)
            throw internal_inconsistency("normal_form: step ceiling hit (rule set bug)");
        bool fired = false;
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            const auto &x = gens[w[i]], &y = gens[w[i + 1]];
            if (x.leg > y.leg) {
                // cross-leg swap with Koszul sign
                Word v = w;
                std::swap(v[i], v[i + 1]);
                work.emplace_back(std::move(v), (x.parity & y.parity) ? -c : c);
                fired = true;
                break;
            }
            if (x.leg < y.leg) continue;
            if (const NcPoly* r = rule(w[i], w[i + 1])) {
                for (const auto& [rw, rc] : r->terms) {
                    Word v(w.begin(), w.begin() + i);
                    v.insert(v.end(), rw.begin(), rw.end());
                    v.insert(v.end(), w.begin() + i + 2, w.end());
                    work.emplace_back(std::move(v), c * rc);
                }
                fired = true;
                break;
            }
            if (w[i] > w[i + 1]) throw incomplete_presentation(x.name, y.name);
        }
        if (!fired) out.add(w, c);
    }
    return out.prune();
}

double System::worst_overlap_defect() const {
    double worst = 0.0;
    const int n = (int)gens.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const NcPoly* rxy = rule(x, y);
            if (!rxy) continue;
            for (int z = 0; z < n; ++z) {
                const NcPoly* ryz = rule(y, z);
                if (!ryz) continue;
                // reduce x y z both ways
                NcPoly left = (*rxy) * NcPoly::monomial({z});
                NcPoly right = NcPoly::monomial({x}) * (*ryz);
                NcPoly diff = normal_form(left) - normal_form(right);
                worst = std::max(worst, diff.prune().max_abs_coeff());
            }
        }
    return worst;
}

// ---------------------------------------------------------------------------
// DSL parser

namespace {

struct Cursor {
    std::string_view text;
    size_t pos = 0;
    int line = 1, col = 1;
};

[[noreturn]] void fail(const Cursor& c, const std::string& msg) {
    throw domain_error("presentation parse error at line " + std::to_string(c.line) +
                       ", col " + std::to_string(c.col) + ": " + msg);
}

// coefficient factor: number | i | q^r | lam^r | om^r | mu^r
Coeff parse_factor(const Cursor& where, const std::string& tok, const QContext& ctx) {
    auto powc = [](double base, const std::string& expstr, const Cursor& w) {
        double num = 0, den = 1;
        const auto slash = expstr.find('/');
        try {
            if (slash == std::string::npos) {
                num = std::stod(expstr);
            } else {
                num = std::stod(expstr.substr(0, slash));
                den = std::stod(expstr.substr(slash + 1));
            }
        } catch (...) {
            fail(w, "bad exponent '" + expstr + "'");
        }
        return std::pow(Coeff(base, 0.0), num / den);
    };
    if (tok == "i") return Coeff(0, 1);
    auto caret = tok.find('^');
    const std::string head = tok.substr(0, caret);
    const std::string expo = caret == std::string::npos ? "1" : tok.substr(caret + 1);
    if (head == "q") return powc(ctx.q, expo, where);
    if (head == "lam") return powc(ctx.lambda, expo, where);
    if (head == "om") return powc(ctx.omega, expo, where);
    if (head == "mu") return powc(ctx.mu, expo, where);
    try {
        size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) fail(where, "bad coefficient factor '" + tok + "'");
        if (caret != std::string::npos) fail(where, "numbers take no exponent");
        return Coeff(v, 0);
    } catch (const domain_error&) {
        throw;
    } catch (...) {
        fail(where, "bad coefficient factor '" + tok + "'");
    }
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

}  // namespace

Presentation parse_presentation(std::string_view text, const QContext& ctx) {
    Presentation pres;
    Cursor cur{text};
    std::istringstream stream{std::string(text)};
    std::string raw;
    int lineno = 0;

    struct PendingRule {
        int left, right;
        std::string rhs;
        int line;
    };
    std::vector<PendingRule> pending;

    while (std::getline(stream, raw)) {
        ++lineno;
        cur.line = lineno;
        cur.col = 1;
        const auto hash = raw.find('#');
        std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks[0] == "pres") {
            if (toks.size() != 2) fail(cur, "pres takes one name");
            pres.name = toks[1];
        } else if (toks[0] == "gen") {
            if (toks.size() != 3) fail(cur, "gen takes <name> <parity>");
            if (pres.sys.find(toks[1]) >= 0) fail(cur, "duplicate generator " + toks[1]);
            if (toks[2] != "0" && toks[2] != "1") fail(cur, "parity must be 0 or 1");
            pres.sys.gens.push_back({toks[1], toks[2] == "1" ? 1 : 0, 0});
        } else if (toks[0] == "rule") {
            const auto arrow = line.find("->");
            if (arrow == std::string::npos) fail(cur, "rule needs '->'");
            auto lhs = split_ws(line.substr(0, arrow));
            if (lhs.size() != 3) fail(cur, "rule lhs must be 'rule <g> <h>'");
            const int l = pres.sys.find(lhs[1]);
            const int r = pres.sys.find(lhs[2]);
            if (l < 0) fail(cur, "unknown generator '" + lhs[1] + "'");
            if (r < 0) fail(cur, "unknown generator '" + lhs[2] + "'");
            if (pres.sys.rule(l, r)) fail(cur, "duplicate rule for pair " + lhs[1] + " " + lhs[2]);
            pending.push_back({l, r, line.substr(arrow + 2), lineno});
            pres.sys.set_rule(l, r, NcPoly::zero());  // placeholder for duplicate detection
        } else {
            fail(cur, "unknown directive '" + toks[0] + "'");
        }
    }

    // second pass: right-hand sides (all generators now known)
    for (const auto& p : pending) {
        cur.line = p.line;
        NcPoly rhs;
        std::string term;
        std::vector<std::string> termstrs;
        std::istringstream ts(p.rhs);
        std::string tok;
        std::string current;
        auto flush = [&]() {
            if (!current.empty()) termstrs.push_back(current);
            current.clear();
        };
        while (ts >> tok) {
            if (tok == "+") {
                flush();
            } else {
                current += current.empty() ? tok : " " + tok;
            }
        }
        flush();
        if (termstrs.empty()) fail(cur, "rule rhs is empty (use [0] for zero)");
        for (auto& tstr : termstrs) {
            Coeff coeff(1, 0);
            std::string rest = tstr;
            const auto lb = tstr.find('[');
            if (lb != std::string::npos) {
                const auto rb = tstr.find(']');
                if (rb == std::string::npos || rb < lb) fail(cur, "unbalanced coefficient brackets");
                for (const auto& f : split_ws(tstr.substr(lb + 1, rb - lb - 1))) {
                    if (f == "-") {
                        coeff *= -1.0;
                    } else if (!f.empty() && f[0] == '-') {
                        coeff *= -parse_factor(cur, f.substr(1), ctx);
                    } else {
                        coeff *= parse_factor(cur, f, ctx);
                    }
                }
                rest = tstr.substr(rb + 1);
            }
            Word w;
            for (const auto& g : split_ws(rest)) {
                const int id = pres.sys.find(g);
                if (id < 0) fail(cur, "unknown generator '" + g + "' in rhs");
                w.push_back(id);
            }
            rhs.add(w, coeff);
        }
        pres.sys.set_rule(p.left, p.right, std::move(rhs));
    }
    if (pres.name.empty()) fail(cur, "missing 'pres <name>' directive");
    return pres;
}

System combine(std::span<const Presentation* const> parts) {
    System out;
    std::vector<int> offset(parts.size());
    for (size_t leg = 0; leg < parts.size(); ++leg) {
        offset[leg] = (int)out.gens.size();
        for (const auto& g : parts[leg]->sys.gens)
            out.gens.push_back({g.name, g.parity, (int)leg});
    }
    for (size_t leg = 0; leg < parts.size(); ++leg) {
        const System& s = parts[leg]->sys;
        const int n = (int)s.gens.size();
        for (int l = 0; l < n; ++l)
            for (int r = 0; r < n; ++r)
                if (const NcPoly* rp = s.rule(l, r)) {
                    NcPoly rhs;
                    for (const auto& [w, c] : rp->terms) {
                        Word v;
                        v.reserve(w.size());
                        for (auto id : w) v.push_back(id + offset[leg]);
                        rhs.add(v, c);
                    }
                    out.set_rule(l + offset[leg], r + offset[leg], std::move(rhs));
                }
    }
    return out;
}

NcPoly Substitution::apply(const NcPoly& p) const {
    NcPoly out;
    for (const auto& [w, c] : p.terms) {
        NcPoly prod = NcPoly::monomial({}, c);
        for (auto id : w) {
            auto it = images.find(id);
            if (it == images.end())
                throw domain_error("substitution: no image for generator id " +
                                   std::to_string(id));
            prod = prod * it->second;
        }
        out += prod;
    }
    return out;
}

CheckReport is_zero(std::string check_id, const System& sys, const NcPoly& p, double tol,
                    std::map<std::string, std::string> meta) {
    const NcPoly nf = sys.normal_form(p);
    const double res = nf.max_abs_coeff();
    if (!nf.empty()) meta["leading_word"] = sys.word_str(nf.terms.begin()->first);
    return CheckReport::make(std::move(check_id), res, tol, std::move(meta));
}

CheckReport is_central(std::string check_id, const Presentation& pres, const NcPoly& elem,
                       double tol) {
    // parity of elem (graded commutator needs it); mixed-parity centrals do
    // not occur in the catalog
    int ep = 0;
    for (const auto& [w, c] : elem.terms) {
        int p = 0;
        for (auto id : w) p ^= pres.sys.gens[id].parity;
        ep = p;
    }
    double worst = 0.0;
    std::map<std::string, std::string> meta;
    for (int g = 0; g < (int)pres.sys.gens.size(); ++g) {
        NcPoly gen = NcPoly::monomial({g});
        const double sign = (ep && pres.sys.gens[g].parity) ? -1.0 : 1.0;
        NcPoly comm = elem * gen - sign * (gen * elem);
        const double res = pres.sys.normal_form(comm).max_abs_coeff();
        meta["[.," + pres.sys.gens[g].name + "]"] = std::to_string(res);
        worst = std::max(worst, res);
    }
    return CheckReport::make(std::move(check_id), worst, tol, std::move(meta));
}

CheckReport coaction_check(std::string check_id, const Presentation& source,
                           const Substitution& phi, double tol) {
    double worst = 0.0;
    std::map<std::string, std::string> meta;
    const int n = (int)source.sys.gens.size();
    int checked = 0;
    for (int l = 0; l < n; ++l)
        for (int r = 0; r < n; ++r)
            if (const NcPoly* rhs = source.sys.rule(l, r)) {
                NcPoly rel = NcPoly::monomial({l}) * NcPoly::monomial({r}) - *rhs;
                const NcPoly img = phi.apply(rel);
                const double res = phi.target->normal_form(img).max_abs_coeff();
                worst = std::max(worst, res);
                ++checked;
            }
    meta["relations_checked"] = std::to_string(checked);
    return CheckReport::make(std::move(check_id), worst, tol, std::move(meta));
}

CheckReport invariance_check(std::string check_id, const Substitution& phi,
                             const Substitution& embed, const NcPoly& elem, double tol) {
    NcPoly diff = phi.apply(elem) - embed.apply(elem);
    return is_zero(std::move(check_id), *phi.target, diff, tol);
}

std::vector<QContext> sampled_contexts(uint64_t seed, int count) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(0.15, 0.85);
    std::vector<double> qs(count);
    for (auto& q : qs) q = u(gen);
    std::sort(qs.begin(), qs.end());
    std::vector<QContext> out;
    out.reserve(count);
    for (double q : qs) out.emplace_back(q);
    return out;
}

}  // namespace qglab::ncpoly
