#include <doctest.h>

#include <cmath>

#include "isingx/combinatorics.hpp"
#include "isingx/errors.hpp"
#include "isingx/expansion.hpp"

using namespace isingx;

TEST_CASE("square free-energy coefficients") {
    FreeEnergySeries fes = expand_free_energy(LatticeSpec::preset(Preset::Square), 16);
    CHECK(fes.term(4) == Rational(1));
    CHECK(fes.term(6) == Rational(2));
    CHECK(fes.term(8) == Rational(9, 2));
    CHECK(fes.term(10) == Rational(12));
    CHECK(fes.term(12) == Rational(112, 3));
    CHECK(fes.term(14) == Rational(130));
    CHECK(fes.term(16) == Rational(1961, 4));
    CHECK(fes.log_x_prefactor == Rational(-1));
    CHECK(fes.log2_constant == Rational(0));

    CHECK(a_square_closed(3) == Rational(0));
    CHECK(a_square_closed(8) / Rational(factorial(8)) == Rational(9, 2));
    CHECK(a_square_closed(12) / Rational(factorial(12)) == Rational(112, 3));
}

TEST_CASE("triangular free-energy coefficients") {
    FreeEnergySeries fes = expand_free_energy(LatticeSpec::preset(Preset::Triangular), 20);
    CHECK(fes.term(6) == Rational(1));
    CHECK(fes.term(10) == Rational(3));
    CHECK(fes.term(12) == Rational(-3, 2));
    CHECK(fes.term(14) == Rational(12));
    CHECK(fes.term(16) == Rational(-12));
    CHECK(fes.term(18) == Rational(181, 3));
    CHECK(fes.term(20) == Rational(-165, 2));
    CHECK(fes.log_x_prefactor == Rational(-3, 2));

    CHECK(a_triangular_closed(6) / Rational(factorial(6)) == Rational(1));
    CHECK(a_triangular_closed(12) / Rational(factorial(12)) == Rational(-3, 2));
    CHECK(a_triangular_closed(18) / Rational(factorial(18)) == Rational(181, 3));
}

TEST_CASE("hexagonal free-energy coefficients") {
    FreeEnergySeries fes = expand_free_energy(LatticeSpec::preset(Preset::Hexagonal), 11);
    const Rational expected[] = {Rational(0), Rational(0), Rational(1),      Rational(3, 2),
                                 Rational(3), Rational(11, 2), Rational(12), Rational(111, 4),
                                 Rational(208, 3), Rational(363, 2), Rational(495)};
    for (int n = 1; n <= 11; ++n) CHECK(fes.term(n) == expected[n - 1]);
    CHECK(fes.log_x_prefactor == Rational(-3, 4));

    CHECK(a_hexagonal_closed(1) == Rational(0));
    CHECK(a_hexagonal_closed(3) / Rational(factorial(3)) == Rational(1));
    CHECK(a_hexagonal_closed(8) / Rational(factorial(8)) == Rational(111, 4));
}

TEST_CASE("generic engine equals the closed forms up to n = 20") {
    FreeEnergySeries sq = expand_free_energy(LatticeSpec::preset(Preset::Square), 20);
    FreeEnergySeries tr = expand_free_energy(LatticeSpec::preset(Preset::Triangular), 20);
    FreeEnergySeries hx = expand_free_energy(LatticeSpec::preset(Preset::Hexagonal), 20);
    for (int n = 1; n <= 20; ++n) {
        CHECK(sq.term(n) == a_square_closed(n) / Rational(factorial(n)));
        CHECK(tr.term(n) == a_triangular_closed(n) / Rational(factorial(n)));
        CHECK(hx.term(n) == a_hexagonal_closed(n) / Rational(factorial(n)));
    }
}

TEST_CASE("parity and sign structure") {
    FreeEnergySeries sq = expand_free_energy(LatticeSpec::preset(Preset::Square), 30);
    FreeEnergySeries tr = expand_free_energy(LatticeSpec::preset(Preset::Triangular), 30);
    FreeEnergySeries hx = expand_free_energy(LatticeSpec::preset(Preset::Hexagonal), 20);
    for (int n = 1; n <= 30; n += 2) {
        CHECK(sq.term(n) == Rational(0));
        CHECK(tr.term(n) == Rational(0));
    }
    for (int n = 1; n <= 30; ++n) CHECK(sq.term(n).sign() >= 0);
    for (int n = 1; n <= 20; ++n) CHECK(hx.term(n).sign() >= 0);
    CHECK(tr.term(12).sign() < 0);
    CHECK(hx.term(1) == Rational(0));
    CHECK(hx.term(2) == Rational(0));
}

TEST_CASE("kagome expansion") {
    FreeEnergySeries kg = expand_free_energy(LatticeSpec::preset(Preset::Kagome), 12);
    CHECK(kg.term(1) == Rational(0));
    CHECK(kg.term(2) == Rational(0));  // constant_term(p_tri) = 0 kills the x^2 term
    CHECK(kg.log_x_prefactor == Rational(-1));
    CHECK(kg.log2_constant == Rational(0));
    // first nonzero term exists and the series is not trivial
    bool any = false;
    for (int n = 1; n <= 12; ++n) any = any || !kg.term(n).is_zero();
    CHECK(any);
}

TEST_CASE("critical points and the asymptotic ratio band") {
    CHECK(critical_x(Preset::Square) == Surd(Rational(-1), Rational(1), 2));
    CHECK(critical_x(Preset::Triangular) == Surd(Rational(0), Rational(1, 3), 3));
    CHECK(critical_x(Preset::Hexagonal) == Surd(Rational(2), Rational(-1), 3));
    CHECK_THROWS_AS(critical_x(Preset::Kagome), spec_error);

    // |a(n)|/n! x_c^n stays in (0, 2) for even 10 <= n <= 30 on the square
    // lattice; the convergence rate itself is not asserted anywhere.
    for (int n = 10; n <= 30; n += 2) {
        Surd r = asymptotic_ratio(Preset::Square, n);
        CHECK(r.greater_than(Rational(0)));
        CHECK(r.less_than(Rational(2)));
    }
}

TEST_CASE("series numeric evaluation includes the prefactors") {
    FreeEnergySeries sq = expand_free_energy(LatticeSpec::preset(Preset::Square), 8);
    const double x = 0.1;
    double expected = -std::log(x) + 1e-4 + 2e-6 + 4.5e-8 + 0.0;  // x^4 + 2x^6 + 9/2 x^8
    CHECK(doctest::Approx(sq.value_at(x)).epsilon(1e-12) == expected);
    CHECK_THROWS_AS(sq.value_at(1.5), spec_error);
}

TEST_CASE("order validation") {
    CHECK_THROWS_AS(expand_free_energy(LatticeSpec::preset(Preset::Square), 0), spec_error);
    CHECK_THROWS_AS(a_square_closed(0), spec_error);
}
