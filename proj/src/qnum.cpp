#include "qglab/qnum.hpp"

namespace qglab {

double bracket_box(double x, double p) {
    if (p == 1.0) throw domain_error("bracket_box: base p = 1 is not allowed");
    if (x == 0.0) return 0.0;
    return (1.0 - std::pow(p, x)) / (1.0 - p);
}

double bracket_sym(double x, const QContext& ctx) {
    if (x == 0.0) return 0.0;
    return (std::pow(ctx.q, x) - std::pow(ctx.q, -x)) / ctx.lambda;
}

double qfact_box(int n, double p) {
    if (n < 0) throw domain_error("qfact_box: n must be >= 0");
    double f = 1.0;
    for (int k = 1; k <= n; ++k) f *= bracket_box(k, p);
    return f;
}

double qdoublefact_box(int n, double p) {
    if (n < -1) throw domain_error("qdoublefact_box: n must be >= -1");
    double f = 1.0;
    for (int k = n; k >= 1; k -= 2) f *= bracket_box(k, p);
    return f;
}

double coeff_cn_su2(int n, const QContext& ctx) {
    if (n < 0) throw domain_error("coeff_cn_su2: n must be >= 0");
    const double r = 1.0 - std::pow(ctx.q, 2.0 * n);
    if (r < 0.0) throw domain_error("coeff_cn_su2: negative radicand (q > 1 regime)");
    return std::sqrt(r);
}

double coeff_cm_su11(long m, const QContext& ctx) {
    return std::sqrt(1.0 + std::pow(ctx.q, -2.0 * static_cast<double>(m) - 1.0));
}

}  // namespace qglab
