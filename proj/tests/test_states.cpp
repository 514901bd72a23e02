#include <doctest.h>

#include <cmath>

#include "isingx/bell.hpp"
#include "isingx/combinatorics.hpp"
#include "isingx/errors.hpp"
#include "isingx/states.hpp"

using namespace isingx;

namespace {

VPoly vp(std::initializer_list<Rational> coeffs) {
    VPoly p;
    for (const Rational& c : coeffs) p.c.push_back(c);
    p.normalize();
    return p;
}

}  // namespace

TEST_CASE("VPoly ring behaves") {
    VPoly a = vp({Rational(1), Rational(2)});       // 1 + 2V
    VPoly b = vp({Rational(0), Rational(0), Rational(1)});  // V^2
    CHECK((a * b).coefficient(3) == Rational(2));
    CHECK((a + b).degree() == 2);
    CHECK(a.evaluate(Rational(3)) == Rational(7));
    CHECK(vp({Rational(1)}).str() == "1");
    CHECK(vp({Rational(0), Rational(-3, 2), Rational(1, 2)}).str() == "-3/2*V + 1/2*V^2");
}

TEST_CASE("bulk states for the three simple lattices") {
    FreeEnergySeries sq = expand_free_energy(LatticeSpec::preset(Preset::Square), 17);
    DOSTable gs = bulk_states(sq, 17);
    const long expected_sq[] = {1, 0, 0, 0, 1, 0, 2, 0, 5, 0, 14, 0, 44, 0, 152, 0, 566, 0};
    for (int n = 0; n <= 17; ++n) CHECK(gs.entry_rational(n) == Rational(expected_sq[n]));

    FreeEnergySeries tr = expand_free_energy(LatticeSpec::preset(Preset::Triangular), 20);
    DOSTable gt = bulk_states(tr, 20);
    CHECK(gt.entry_rational(0) == Rational(1));
    CHECK(gt.entry_rational(6) == Rational(1));
    CHECK(gt.entry_rational(10) == Rational(3));
    CHECK(gt.entry_rational(12) == Rational(-1));
    CHECK(gt.entry_rational(14) == Rational(12));
    CHECK(gt.entry_rational(16) == Rational(-9));
    CHECK(gt.entry_rational(18) == Rational(59));
    CHECK(gt.entry_rational(20) == Rational(-66));

    FreeEnergySeries hx = expand_free_energy(LatticeSpec::preset(Preset::Hexagonal), 9);
    DOSTable gh = bulk_states(hx, 9);
    const long expected_hx[] = {1, 0, 0, 2, 3, 6, 13, 30, 72, 180};
    for (int n = 0; n <= 9; ++n) CHECK(gh.entry_rational(n) == Rational(expected_hx[n]));
}

TEST_CASE("bulk values are the sum over k of partial Bell polynomials") {
    FreeEnergySeries tr = expand_free_energy(LatticeSpec::preset(Preset::Triangular), 14);
    DOSTable g = bulk_states(tr, 14);
    std::vector<Rational> args;
    for (int n = 1; n <= 14; ++n) args.push_back(tr.term(n) * Rational(factorial(n)));
    for (int N = 1; N <= 14; ++N) {
        Rational y(0);
        for (int k = 1; k <= N; ++k) y += bell::partial_bell(N, k, args);
        CHECK(g.entry_rational(N) == y / Rational(factorial(N)));
    }
}

TEST_CASE("bulk equals the finite prediction at V = sites-per-cell") {
    for (Preset p : {Preset::Square, Preset::Triangular, Preset::Hexagonal, Preset::Kagome}) {
        FreeEnergySeries fes = expand_free_energy(LatticeSpec::preset(p), 12);
        DOSTable bulk = bulk_states(fes, 12);
        DOSTable finite = finite_states_at(fes, fes.sites_per_cell, 12);
        for (int n = 0; n <= 12; ++n) {
            CHECK(bulk.entry_rational(n) == finite.entry_rational(n));
        }
    }
}

TEST_CASE("bulk non-negativity up to N = 30 where the cluster picture holds") {
    FreeEnergySeries sq = expand_free_energy(LatticeSpec::preset(Preset::Square), 30);
    DOSTable gs = bulk_states(sq, 30);
    for (int n = 0; n <= 30; ++n) CHECK(gs.entry_rational(n).sign() >= 0);
    FreeEnergySeries hx = expand_free_energy(LatticeSpec::preset(Preset::Hexagonal), 30);
    DOSTable gh = bulk_states(hx, 30);
    for (int n = 0; n <= 30; ++n) CHECK(gh.entry_rational(n).sign() >= 0);
}

TEST_CASE("symbolic finite-lattice predictions") {
    FreeEnergySeries sq = expand_free_energy(LatticeSpec::preset(Preset::Square), 12);
    DOSTable g = finite_states(sq, 12);
    CHECK(g.entry(0) == vp({Rational(1)}));
    CHECK(g.entry(4) == vp({Rational(0), Rational(1)}));                       // V
    CHECK(g.entry(8) == vp({Rational(0), Rational(9, 2), Rational(1, 2)}));    // 9V/2 + V^2/2
    CHECK(g.entry(10) == vp({Rational(0), Rational(12), Rational(2)}));        // 12V + 2V^2
    CHECK(g.entry(12) ==
          vp({Rational(0), Rational(112, 3), Rational(13, 2), Rational(1, 6)}));

    FreeEnergySeries tr = expand_free_energy(LatticeSpec::preset(Preset::Triangular), 12);
    DOSTable gt = finite_states(tr, 12);
    CHECK(gt.entry(6) == vp({Rational(0), Rational(1)}));  // single-cluster term: exactly V
    CHECK(gt.entry(12) == vp({Rational(0), Rational(-3, 2), Rational(1, 2)}));
}

TEST_CASE("partition polynomial carries the factor 2 and the edge density") {
    FreeEnergySeries sq = expand_free_energy(LatticeSpec::preset(Preset::Square), 12);
    PartitionPolynomial z = partition_polynomial(finite_states(sq, 12));
    CHECK(z.factor == 2);
    CHECK(z.edge_density == Rational(1));
    CHECK(z.coeffs[0] == vp({Rational(2)}));
    CHECK(z.coeffs[8] == vp({Rational(0), Rational(9), Rational(1)}));  // 2*(9V/2 + V^2/2)

    FreeEnergySeries hx = expand_free_energy(LatticeSpec::preset(Preset::Hexagonal), 7);
    PartitionPolynomial zh = partition_polynomial(finite_states(hx, 7));
    CHECK(zh.edge_density == Rational(3, 4));
    CHECK(zh.coeffs[3] == vp({Rational(0), Rational(2)}));
    CHECK(zh.coeffs[6] == vp({Rational(0), Rational(11), Rational(1)}));  // 2*V(11+V)/2
    CHECK(zh.coeffs[7] == vp({Rational(0), Rational(24), Rational(3)}));  // 2*3V(4+V/2)

    FreeEnergySeries tr = expand_free_energy(LatticeSpec::preset(Preset::Triangular), 14);
    PartitionPolynomial zt = partition_polynomial(finite_states(tr, 14));
    CHECK(zt.coeffs[12] == vp({Rational(0), Rational(-3), Rational(1)}));  // V^2 - 3V
    CHECK(zt.coeffs[14] == vp({Rational(0), Rational(24)}));

    DOSTable bulk = bulk_states(sq, 12);
    CHECK_THROWS_AS(partition_polynomial(bulk), spec_error);
}

TEST_CASE("energy distribution normalizes and matches the direct ratio") {
    FreeEnergySeries sq = expand_free_energy(LatticeSpec::preset(Preset::Square), 24);
    DOSTable g = bulk_states(sq, 24);
    EnergyDistribution dist = energy_distribution(g, 0.2, 24);
    double total = 0.0;
    for (double p : dist.p) total += p;
    CHECK(doctest::Approx(total).epsilon(1e-12) == 1.0);
    CHECK_FALSE(dist.negative_states_warning);
    // P(4)/P(0) = g(4) x^4 = 0.0016 exactly, unchanged by normalization.
    CHECK(doctest::Approx(dist.p[4] / dist.p[0]).epsilon(1e-12) == 0.0016);

    // Ground state dominates as x -> 0.
    EnergyDistribution cold = energy_distribution(g, 1e-3, 24);
    CHECK(cold.p[0] > 0.999999);

    FreeEnergySeries tr = expand_free_energy(LatticeSpec::preset(Preset::Triangular), 24);
    DOSTable gt = bulk_states(tr, 24);
    EnergyDistribution warn = energy_distribution(gt, 0.15, 24);
    CHECK(warn.negative_states_warning);

    CHECK_THROWS_AS(energy_distribution(g, 0.5, 24), spec_error);   // beyond 0.95 x_c
    CHECK_THROWS_AS(energy_distribution(g, 0.39, 4), spec_error);   // tail too heavy
    CHECK_THROWS_AS(energy_distribution(finite_states(sq, 12), 0.1, 12), spec_error);
}

TEST_CASE("exactness horizon metadata") {
    FreeEnergySeries sq = expand_free_energy(LatticeSpec::preset(Preset::Square), 12);
    CHECK(finite_states_at(sq, 16, 12).exact_below == 7);   // 4x4: N < 2M
    CHECK(finite_states_at(sq, 25, 12).exact_below == 9);   // 5x5
    CHECK(finite_states_at(sq, 24, 12).exact_below == -1);  // not a square
    FreeEnergySeries tr = expand_free_energy(LatticeSpec::preset(Preset::Triangular), 12);
    CHECK(finite_states_at(tr, 16, 12).exact_below == 15);  // N < 4 sqrt(V)
}
