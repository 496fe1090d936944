#include "qglab/galg.hpp"

#include <algorithm>
#include <cmath>

namespace qglab {

GradedSpace GradedSpace::fock(int dim) {
    if (dim < 1) throw shape_error("GradedSpace::fock: dim must be >= 1");
    GradedSpace s;
    s.dim = dim;
    s.parity.assign(dim, 0);
    s.level.resize(dim);
    s.headroom.resize(dim);
    for (int n = 0; n < dim; ++n) {
        s.level[n] = n;
        s.headroom[n] = dim - 1 - n;
    }
    return s;
}

GradedSpace GradedSpace::exact(int dim, std::vector<int> parity, std::vector<int> level) {
    if (dim < 1) throw shape_error("GradedSpace::exact: dim must be >= 1");
    GradedSpace s;
    s.dim = dim;
    s.parity = parity.empty() ? std::vector<int>(dim, 0) : std::move(parity);
    s.level = level.empty() ? std::vector<int>(dim, 0) : std::move(level);
    if ((int)s.parity.size() != dim || (int)s.level.size() != dim)
        throw shape_error("GradedSpace::exact: metadata length mismatch");
    s.headroom.assign(dim, kExact);
    return s;
}

GradedSpace GradedSpace::window(int M) {
    if (M < 1) throw shape_error("GradedSpace::window: M must be >= 1");
    const int dim = 2 * M + 1;
    GradedSpace s;
    s.dim = dim;
    s.parity.assign(dim, 0);
    s.level.resize(dim);
    s.headroom.resize(dim);
    for (int t = 0; t < dim; ++t) {
        s.level[t] = t;  // t = m + M
        s.headroom[t] = std::min(t, dim - 1 - t);
    }
    return s;
}

GradedSpace GradedSpace::tensor(const GradedSpace& other) const {
    GradedSpace s;
    s.dim = dim * other.dim;
    s.parity.resize(s.dim);
    s.level.resize(s.dim);
    s.headroom.resize(s.dim);
    for (int i = 0; i < dim; ++i)
        for (int k = 0; k < other.dim; ++k) {
            const int idx = i * other.dim + k;
            s.parity[idx] = (parity[i] + other.parity[k]) & 1;
            s.level[idx] = level[i] + other.level[k];
            s.headroom[idx] = std::min(headroom[i], other.headroom[k]);
        }
    return s;
}

bool GradedSpace::same_as(const GradedSpace& other) const {
    return dim == other.dim && parity == other.parity && level == other.level &&
           headroom == other.headroom;
}

GradedOperator GradedOperator::identity(const GradedSpace& s) {
    return GradedOperator(Matrix::Identity(s.dim, s.dim), s, 0, 0);
}

GradedOperator GradedOperator::zero(const GradedSpace& s) {
    return GradedOperator(Matrix::Zero(s.dim, s.dim), s, 0, 0);
}

double GradedOperator::homogeneity_defect() const {
    double worst = 0.0;
    for (int c = 0; c < space.dim; ++c)
        for (int r = 0; r < space.dim; ++r) {
            const double a = std::abs(mat(r, c));
            if (a == 0.0) continue;
            const bool parity_ok = ((space.parity[r] + space.parity[c]) & 1) == (parity & 1);
            const bool level_ok =
                !level_shift || (space.level[r] - space.level[c]) == *level_shift;
            if (!parity_ok || !level_ok) worst = std::max(worst, a);
        }
    return worst;
}

GradedOperator graded_kron(const GradedOperator& A, const GradedOperator& B) {
    const int da = A.space.dim, db = B.space.dim;
    Matrix m = Matrix::Zero(da * db, da * db);
    for (int ja = 0; ja < da; ++ja) {
        const double sign = (B.parity & A.space.parity[ja] & 1) ? -1.0 : 1.0;
        for (int ia = 0; ia < da; ++ia) {
            const Complex a = A.mat(ia, ja);
            if (a == Complex(0, 0)) continue;
            m.block(ia * db, ja * db, db, db) += (sign * a) * B.mat;
        }
    }
    std::optional<int> shift;
    if (A.level_shift && B.level_shift) shift = *A.level_shift + *B.level_shift;
    return GradedOperator(std::move(m), A.space.tensor(B.space), (A.parity + B.parity) & 1,
                          shift);
}

GradedOperator dagger(const GradedOperator& A) {
    std::optional<int> shift;
    if (A.level_shift) shift = -*A.level_shift;
    return GradedOperator(A.mat.adjoint(), A.space, A.parity, shift);
}

GradedOperator operator*(const GradedOperator& A, const GradedOperator& B) {
    if (A.space.dim != B.space.dim) throw shape_error("operator*: dimension mismatch");
    std::optional<int> shift;
    if (A.level_shift && B.level_shift) shift = *A.level_shift + *B.level_shift;
    return GradedOperator(A.mat * B.mat, A.space, (A.parity + B.parity) & 1, shift);
}

GradedOperator operator*(const Complex& c, const GradedOperator& A) {
    return GradedOperator(c * A.mat, A.space, A.parity, A.level_shift);
}

static std::optional<int> merged_shift(const GradedOperator& A, const GradedOperator& B) {
    if (A.level_shift && B.level_shift && *A.level_shift == *B.level_shift)
        return A.level_shift;
    return std::nullopt;
}

GradedOperator operator+(const GradedOperator& A, const GradedOperator& B) {
    if (A.space.dim != B.space.dim) throw shape_error("operator+: dimension mismatch");
    if (A.parity != B.parity) throw shape_error("operator+: parity mismatch");
    return GradedOperator(A.mat + B.mat, A.space, A.parity, merged_shift(A, B));
}

GradedOperator operator-(const GradedOperator& A, const GradedOperator& B) {
    if (A.space.dim != B.space.dim) throw shape_error("operator-: dimension mismatch");
    if (A.parity != B.parity) throw shape_error("operator-: parity mismatch");
    return GradedOperator(A.mat - B.mat, A.space, A.parity, merged_shift(A, B));
}

GradedOperator commutator(const GradedOperator& A, const GradedOperator& B) {
    return A * B - B * A;
}

GradedOperator anticommutator(const GradedOperator& A, const GradedOperator& B) {
    return A * B + B * A;
}

double op_norm(const Matrix& m) {
    double worst = 0.0;
    for (int c = 0; c < m.cols(); ++c) {
        double s = 0.0;
        for (int r = 0; r < m.rows(); ++r) s += std::abs(m(r, c));
        worst = std::max(worst, s);
    }
    return worst;
}

int required_guard(std::span<const ExprTerm> expr) {
    int g = 0;
    for (const auto& t : expr) {
        // factors act right to left; track the running level of a state fed
        // through the word and keep the highest point above the start
        int run = 0, peak = 0;
        for (auto it = t.word.rbegin(); it != t.word.rend(); ++it) {
            if (!(*it)->level_shift) continue;  // mixed operators do not move levels
            run += *(*it)->level_shift;
            peak = std::max(peak, run);
        }
        g = std::max(g, peak);
    }
    return g;
}

Matrix guard_project(const Matrix& m, const GradedSpace& space, int guard) {
    Matrix out = m;
    for (int i = 0; i < space.dim; ++i)
        if (space.headroom[i] < guard) {
            out.row(i).setZero();
            out.col(i).setZero();
        }
    return out;
}

CheckReport guarded_residual(std::string check_id, std::span<const ExprTerm> expr, int guard,
                             double tolerance, std::map<std::string, std::string> meta) {
    if (expr.empty()) return CheckReport::make(std::move(check_id), 0.0, tolerance, std::move(meta));
    const GradedSpace* space = nullptr;
    for (const auto& t : expr)
        for (const auto* f : t.word) {
            if (!space) space = &f->space;
            if (f->space.dim != space->dim)
                throw shape_error("guarded_residual: operators on different spaces");
        }
    const int dim = space ? space->dim : 0;
    Matrix acc = Matrix::Zero(dim, dim);
    for (const auto& t : expr) {
        if (t.word.empty()) {
            acc += t.coeff * Matrix::Identity(dim, dim);
            continue;
        }
        Matrix prod = t.word.front()->mat;
        for (size_t k = 1; k < t.word.size(); ++k) prod *= t.word[k]->mat;
        acc += t.coeff * prod;
    }
    bool any_inside = false;
    for (int i = 0; i < dim; ++i) any_inside |= (space->headroom[i] >= guard);
    if (!any_inside)
        throw guard_infeasible("guarded_residual: guard " + std::to_string(guard) +
                               " leaves no interior states");
    const double res = op_norm(guard_project(acc, *space, guard));
    meta["guard"] = std::to_string(guard);
    meta["dim"] = std::to_string(dim);
    return CheckReport::make(std::move(check_id), res, tolerance, std::move(meta));
}

// ---------------------------------------------------------------------------
// Symmetric tridiagonal eigenvalues by bisection on the Sturm sequence.

namespace {

// Number of eigenvalues of T strictly below x (negative pivots of the
// LDL^T factorization of T - x I).
int sturm_count(const std::vector<double>& d, const std::vector<double>& e2, double x) {
    int count = 0;
    double piv = 1.0;
    const size_t n = d.size();
    for (size_t i = 0; i < n; ++i) {
        piv = d[i] - x - (i > 0 ? e2[i - 1] / piv : 0.0);
        if (piv == 0.0) piv = -1e-300;  // nudge off the exact eigenvalue
        if (piv < 0.0) ++count;
    }
    return count;
}

}  // namespace

std::vector<double> tridiag_eigenvalues(const std::vector<double>& diag,
                                        const std::vector<double>& offdiag) {
    const size_t n = diag.size();
    if (n == 0) throw domain_error("tridiag_eigenvalues: empty matrix");
    if (offdiag.size() + 1 != n)
        throw shape_error("tridiag_eigenvalues: offdiag length must be diag length - 1");

    std::vector<double> e2(offdiag.size());
    for (size_t i = 0; i < offdiag.size(); ++i) e2[i] = offdiag[i] * offdiag[i];

    // Gershgorin bounds
    double lo = diag[0], hi = diag[0];
    for (size_t i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::abs(offdiag[i - 1]) : 0.0) +
                         (i + 1 < n ? std::abs(offdiag[i]) : 0.0);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }
    const double span = std::max(hi - lo, 1.0e-300);
    lo -= 1e-12 * span;
    hi += 1e-12 * span;

    std::vector<double> out(n);
    for (size_t k = 0; k < n; ++k) {
        double a = lo, b = hi;
        // invariant: count(a) <= k < count(b)
        for (int it = 0; it < 120; ++it) {
            const double mid = 0.5 * (a + b);
            if (mid == a || mid == b) break;
            if (sturm_count(diag, e2, mid) <= static_cast<int>(k))
                a = mid;
            else
                b = mid;
            if (b - a <= 1e-15 * std::max(1.0, std::max(std::abs(a), std::abs(b)))) break;
        }
        out[k] = 0.5 * (a + b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qglab
