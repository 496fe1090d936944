#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qglab/qnum.hpp"

using namespace qglab;

namespace {
// independent oracle: [n; p] as an explicit geometric sum
double geometric_sum(int n, double p) {
    double s = 0.0, t = 1.0;
    for (int k = 0; k < n; ++k, t *= p) s += t;
    return s;
}
}  // namespace

TEST_CASE("QContext construction and derived scalars") {
    QContext c(0.5);
    CHECK(c.lambda == doctest::Approx(0.5 - 2.0).epsilon(1e-15));
    CHECK(c.omega == doctest::Approx(std::sqrt(0.5) - std::sqrt(2.0)).epsilon(1e-15));
    CHECK(c.mu == doctest::Approx(std::sqrt(0.5) + std::sqrt(2.0)).epsilon(1e-15));
    CHECK(c.mu * c.omega == doctest::Approx(c.lambda).epsilon(1e-14));
    CHECK_THROWS_AS(QContext(1.0), domain_error);
    CHECK_THROWS_AS(QContext(0.0), domain_error);
    CHECK_THROWS_AS(QContext(-0.3), domain_error);
    CHECK_NOTHROW(QContext(2.0));
}

TEST_CASE("box bracket basics") {
    CHECK(bracket_box(0, 0.37) == 0.0);
    CHECK(bracket_box(1, 0.37) == 1.0);
    CHECK(bracket_box(3, 4.0) == doctest::Approx(21.0).epsilon(1e-15));  // 1 + 4 + 16
    CHECK_THROWS_AS(bracket_box(2, 1.0), domain_error);
}

TEST_CASE("box bracket equals geometric sum at base q^-2") {
    for (double q : {0.3, 0.5, 0.8}) {
        const double p = 1.0 / (q * q);
        for (int n = 0; n <= 20; ++n)
            CHECK(bracket_box(n, p) ==
                  doctest::Approx(geometric_sum(n, p)).epsilon(1e-12));
    }
}

TEST_CASE("symmetric bracket") {
    QContext c(0.5);
    CHECK(bracket_sym(0, c) == 0.0);
    CHECK(bracket_sym(1, c) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(bracket_sym(2, c) == doctest::Approx(2.5).epsilon(1e-15));  // q + 1/q
}

TEST_CASE("symmetric bracket vs box bracket identity") {
    // [n]_q = [n; q^2] * q^{1-n}
    for (double q : {0.31, 0.47, 0.5, 0.66, 0.8}) {
        QContext c(q);
        for (int n = 0; n <= 20; ++n)
            CHECK(bracket_sym(n, c) ==
                  doctest::Approx(bracket_box(n, q * q) * std::pow(q, 1 - n)).epsilon(1e-11));
    }
}

TEST_CASE("q-factorials") {
    CHECK(qfact_box(0, 0.77) == 1.0);
    CHECK(qfact_box(3, 4.0) == doctest::Approx(105.0).epsilon(1e-14));  // 1 * 5 * 21
    CHECK_THROWS_AS(qfact_box(-1, 0.5), domain_error);
    // recurrence F(n) = [n; p] F(n-1)
    for (double p : {0.25, 0.8, 2.0}) {
        for (int n = 1; n <= 12; ++n)
            CHECK(qfact_box(n, p) ==
                  doctest::Approx(bracket_box(n, p) * qfact_box(n - 1, p)).epsilon(1e-13));
    }
}

TEST_CASE("q double factorials") {
    CHECK(qdoublefact_box(-1, 0.5) == 1.0);
    CHECK(qdoublefact_box(0, 0.5) == 1.0);
    CHECK(qdoublefact_box(1, 0.5) == doctest::Approx(bracket_box(1, 0.5)));
    CHECK(qdoublefact_box(4, 0.5) ==
          doctest::Approx(bracket_box(4, 0.5) * bracket_box(2, 0.5)).epsilon(1e-14));
    CHECK(qdoublefact_box(5, 0.5) ==
          doctest::Approx(bracket_box(5, 0.5) * bracket_box(3, 0.5) * bracket_box(1, 0.5))
              .epsilon(1e-14));
    CHECK_THROWS_AS(qdoublefact_box(-2, 0.5), domain_error);
}

TEST_CASE("ladder coefficients") {
    QContext c(0.5);
    CHECK(coeff_cn_su2(0, c) == 0.0);
    CHECK(coeff_cn_su2(1, c) == doctest::Approx(std::sqrt(0.75)).epsilon(1e-15));
    CHECK(coeff_cm_su11(0, c) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    CHECK(coeff_cm_su11(-1, c) == doctest::Approx(std::sqrt(1.0 + 0.5)).epsilon(1e-15));
    QContext big(2.0);
    CHECK_THROWS_AS(coeff_cn_su2(1, big), domain_error);
}

TEST_CASE("purity: identical inputs give bitwise identical outputs") {
    QContext c(0.437);
    for (int n = 0; n <= 15; ++n) {
        CHECK(bracket_box(n, 0.437) == bracket_box(n, 0.437));
        CHECK(bracket_sym(n, c) == bracket_sym(n, c));
        CHECK(qfact_box(n, 0.437) == qfact_box(n, 0.437));
    }
}
