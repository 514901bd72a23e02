#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "isingx/errors.hpp"
#include "isingx/expansion.hpp"
#include "isingx/lattices.hpp"
#include "isingx/series.hpp"

using namespace isingx;

namespace {

// Numeric value of q(x, t1, t2) for an integrand.
double eval_q(const Integrand& ig, double x, double t1, double t2) {
    double acc = 0.0, xn = 1.0;
    for (int n = 0; n <= ig.q.order(); ++n) {
        if (!ig.q.coeff(n).is_zero()) acc += xn * ig.q.coeff(n).eval(t1, t2);
        xn *= x;
    }
    return acc;
}

}  // namespace

TEST_CASE("preset integrands match the hand-reduced forms") {
    const TrigPoly u = p_square();
    const TrigPoly p3 = p_triangular();
    const TrigPoly ph = p_hexagonal();
    const TrigPoly one(Rational(1));

    Integrand sq = build_integrand(LatticeSpec::preset(Preset::Square), 6);
    CHECK(sq.q.coeff(0) == one);
    CHECK(sq.q.coeff(1) == u.scaled(Rational(-2)));
    CHECK(sq.q.coeff(2) == one.scaled(Rational(2)));
    CHECK(sq.q.coeff(3) == u.scaled(Rational(2)));
    CHECK(sq.q.coeff(4) == one);
    CHECK(sq.q.coeff(5).is_zero());
    CHECK(sq.log_x_prefactor == Rational(-1));
    CHECK(sq.site_divisor == Rational(1, 2));
    CHECK(sq.log2_constant == Rational(0));
    CHECK(sq.sites_per_cell() == 1);

    Integrand tri = build_integrand(LatticeSpec::preset(Preset::Triangular), 6);
    CHECK(tri.q.coeff(2) == p3.scaled(Rational(-2)));
    CHECK(tri.q.coeff(4) == p3.scaled(Rational(2)) + one.scaled(Rational(3)));
    CHECK(tri.log_x_prefactor == Rational(-3, 2));
    CHECK(tri.sites_per_cell() == 1);

    Integrand hex = build_integrand(LatticeSpec::preset(Preset::Hexagonal), 6);
    CHECK(hex.q.coeff(1) == one.scaled(Rational(3)) + ph.scaled(Rational(-2)));
    CHECK(hex.q.coeff(3) == one.scaled(Rational(2)) + ph.scaled(Rational(4)));
    CHECK(hex.q.coeff(6) == one);
    CHECK(hex.log_x_prefactor == Rational(-3, 4));
    CHECK(hex.site_divisor == Rational(1, 4));
    CHECK(hex.sites_per_cell() == 2);

    Integrand kag = kagome_integrand(8);
    CHECK(kag.q.coeff(0) == one);
    CHECK(kag.q.coeff(8) == one.scaled(Rational(21)) + p3.scaled(Rational(-4)));
    CHECK(kag.log_x_prefactor == Rational(-1));
    CHECK(kag.site_divisor == Rational(1, 6));
    CHECK(kag.sites_per_cell() == 3);
}

TEST_CASE("edge densities") {
    CHECK(edge_density(LatticeSpec::preset(Preset::Square)) == Rational(1));
    CHECK(edge_density(LatticeSpec::preset(Preset::Triangular)) == Rational(3, 2));
    CHECK(edge_density(LatticeSpec::preset(Preset::Hexagonal)) == Rational(3, 4));
    CHECK(edge_density(LatticeSpec::preset(Preset::Kagome)) == Rational(1));
    // generic route agrees on the presets
    for (Preset p : {Preset::Square, Preset::Triangular, Preset::Hexagonal}) {
        CHECK(edge_density(LatticeSpec::utiyama(preset_utiyama_bonds(p))) ==
              edge_density(LatticeSpec::preset(p)));
    }
}

TEST_CASE("generic Utiyama builder reproduces the presets") {
    // The square assignment reduces to the identical polynomial.
    Integrand direct = build_integrand(LatticeSpec::preset(Preset::Square), 6);
    Integrand generic = utiyama_integrand(preset_utiyama_bonds(Preset::Square), 6);
    CHECK(generic.q == direct.q);
    CHECK(generic.log_x_prefactor == direct.log_x_prefactor);
    CHECK(generic.site_divisor == direct.site_divisor);
    CHECK(generic.log2_constant == direct.log2_constant);

    // Triangular and hexagonal agree after integration (the generic route
    // lands on a reflected angle convention), so compare expansions.
    for (Preset p : {Preset::Triangular, Preset::Hexagonal}) {
        FreeEnergySeries a = expand_free_energy(LatticeSpec::preset(p), 14);
        FreeEnergySeries b = expand_free_energy(LatticeSpec::utiyama(preset_utiyama_bonds(p)), 14);
        CHECK(a.log_x_prefactor == b.log_x_prefactor);
        CHECK(a.log2_constant == b.log2_constant);
        for (int n = 1; n <= 14; ++n) CHECK(a.term(n) == b.term(n));
    }
}

TEST_CASE("integrands agree pointwise with the original integral forms") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> xs(0.01, 0.3);

    Integrand sq = build_integrand(LatticeSpec::preset(Preset::Square), 6);
    Integrand tri = build_integrand(LatticeSpec::preset(Preset::Triangular), 6);
    Integrand hex = build_integrand(LatticeSpec::preset(Preset::Hexagonal), 8);
    Integrand kag = build_integrand(LatticeSpec::preset(Preset::Kagome), 10);

    for (int i = 0; i < 100; ++i) {
        const double x = xs(rng), t1 = angle(rng), t2 = angle(rng);
        const double bj2 = -std::log(x);  // 2 beta J
        const double ch = std::cosh(bj2), sh = std::sinh(bj2);

        // square: cosh^2 - sinh (cos t1 + cos t2) = q / (4 x^2)
        double lhs = ch * ch - sh * (std::cos(t1) + std::cos(t2));
        double rhs = eval_q(sq, x, t1, t2) / (4.0 * x * x);
        CHECK(doctest::Approx(lhs).epsilon(1e-12) == rhs);

        // triangular: the reduction to q shifts both angles by pi, so
        // cosh^3 + sinh^3 + sinh (cos t1 + cos t2 - cos(t1+t2)) = q(t+pi) / (4 x^3)
        lhs = ch * ch * ch + sh * sh * sh +
              sh * (std::cos(t1) + std::cos(t2) - std::cos(t1 + t2));
        rhs = eval_q(tri, x, t1 + std::numbers::pi, t2 + std::numbers::pi) / (4.0 * x * x * x);
        CHECK(doctest::Approx(lhs).epsilon(1e-12) == rhs);

        // hexagonal: cosh^3 + 1 - sinh^2 (cos t1 + cos t2 + cos(t1+t2)) = q / (8 x^3)
        lhs = ch * ch * ch + 1.0 -
              sh * sh * (std::cos(t1) + std::cos(t2) + std::cos(t1 + t2));
        rhs = eval_q(hex, x, t1, t2) / (8.0 * x * x * x);
        CHECK(doctest::Approx(lhs).epsilon(1e-12) == rhs);

        // kagome: the quarter-bracket of the nu=1 cell equals q / (64 x^6)
        const double p = std::cos(t1) + std::cos(t2) + std::cos(t1 + t2);
        const double c3 = ch * ch * ch, s3 = sh * sh * sh;
        lhs = 0.25 * (c3 * c3 + s3 * s3 + 2.0 * c3 * s3 + 3.0 * ch * ch -
                      2.0 * (ch * s3 + ch * ch * sh * sh) * p);
        rhs = eval_q(kag, x, t1, t2) / (64.0 * std::pow(x, 6));
        CHECK(doctest::Approx(lhs).epsilon(1e-12) == rhs);
    }
}

TEST_CASE("nu=0 integrands only use nearest Fourier modes") {
    for (Preset p : {Preset::Square, Preset::Triangular, Preset::Hexagonal}) {
        Integrand ig = build_integrand(LatticeSpec::preset(p), 8);
        for (int n = 0; n <= ig.q.order(); ++n) {
            CHECK(ig.q.coeff(n).max_abs_mode() <= 1);
        }
    }
}

TEST_CASE("Utiyama spec validation") {
    CHECK_THROWS_AS(LatticeSpec::parse_utiyama("I,I,J,J"), spec_error);
    CHECK_THROWS_AS(LatticeSpec::parse_utiyama("J,J"), spec_error);
    CHECK_THROWS_AS(LatticeSpec::parse_utiyama("X,J,J,J"), spec_error);
    CHECK(LatticeSpec::parse_utiyama("I,0,J,J") ==
          LatticeSpec::utiyama(preset_utiyama_bonds(Preset::Square)));
    CHECK(LatticeSpec::parse_utiyama("IJJJ").name() == "utiyama:I,J,J,J");
    CHECK(LatticeSpec::parse("square").name() == "square");
    CHECK_THROWS_AS(LatticeSpec::parse("cubic"), spec_error);

    // J,J,0,0: the x^-2 coefficient keeps a cos(t1-t2) term, so the
    // constant-term-1 normalization must fail with a diagnostic.
    CHECK_THROWS_AS(utiyama_integrand(LatticeSpec::parse_utiyama("J,J,0,0").utiyama_bonds(), 8),
                    spec_error);
}

TEST_CASE("degenerate but reducible Utiyama specs are accepted") {
    // All four bonds coupled: a valid nu=0 graph (the "union jack"-type cell
    // with no contraction); the builder must produce a unit constant term.
    Integrand ig = utiyama_integrand(LatticeSpec::parse_utiyama("J,J,J,J").utiyama_bonds(), 8);
    CHECK(ig.q.coeff(0) == TrigPoly(Rational(1)));
    CHECK(ig.log_x_prefactor < Rational(0));
}
