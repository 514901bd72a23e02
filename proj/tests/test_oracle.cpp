#include <doctest.h>

#include <cstdint>
#include <numeric>

#include "isingx/combinatorics.hpp"
#include "isingx/errors.hpp"
#include "isingx/expansion.hpp"
#include "isingx/oracle.hpp"
#include "isingx/states.hpp"

using namespace isingx;
using oracle::Boundary;
using oracle::FiniteLattice;

namespace {

mpz_class hist_total(const std::vector<std::uint64_t>& h) {
    mpz_class t = 0;
    for (auto v : h) t += mpz_class(static_cast<unsigned long>(v));
    return t;
}

}  // namespace

TEST_CASE("finite lattice construction") {
    auto sq = FiniteLattice::make(Preset::Square, 4, 4);
    CHECK(sq.V == 16);
    CHECK(sq.edges.size() == 32);
    auto tri = FiniteLattice::make(Preset::Triangular, 4, 4);
    CHECK(tri.edges.size() == 48);
    auto hex = FiniteLattice::make(Preset::Hexagonal, 4, 4);
    CHECK(hex.V == 16);
    CHECK(hex.edges.size() == 24);
    for (const auto& nbrs : hex.adj) CHECK(nbrs.size() == 3);

    auto free_sq = FiniteLattice::make(Preset::Square, 3, 3, Boundary::Free);
    CHECK(free_sq.edges.size() == 12);

    CHECK_THROWS_AS(FiniteLattice::make(Preset::Square, 2, 4), spec_error);
    CHECK_THROWS_AS(FiniteLattice::make(Preset::Hexagonal, 3, 4), spec_error);
    CHECK_THROWS_AS(FiniteLattice::make(Preset::Kagome, 4, 4), spec_error);
}

TEST_CASE("square 4x4 exact histogram") {
    auto lat = FiniteLattice::make(Preset::Square, 4, 4);
    auto counts = oracle::enumerate_dos_serial(lat);
    CHECK(hist_total(counts) == pow_int(2, 16));
    CHECK(counts[0] == 2);   // two ground states
    CHECK(counts[1] == 0);
    CHECK(counts[4] == 32);  // one flipped spin, either sign sector: 2V
    CHECK(counts[6] == 64);  // flipped nearest-neighbour pair: 2 * 2V

    // bipartite: histogram symmetric under r -> E - r
    const size_t E = lat.edges.size();
    for (size_t r = 0; r <= E; ++r) CHECK(counts[r] == counts[E - r]);
}

TEST_CASE("bipartite DOS symmetry also holds on the honeycomb") {
    auto lat = FiniteLattice::make(Preset::Hexagonal, 4, 4);
    auto counts = oracle::enumerate_dos(lat);
    const size_t E = lat.edges.size();
    for (size_t r = 0; r <= E; ++r) CHECK(counts[r] == counts[E - r]);
}

TEST_CASE("serial and parallel enumerations are identical") {
    for (auto [preset, rows, cols] :
         {std::tuple{Preset::Square, 4, 5}, std::tuple{Preset::Triangular, 4, 5},
          std::tuple{Preset::Hexagonal, 4, 6}}) {
        auto lat = FiniteLattice::make(preset, rows, cols);
        CHECK(oracle::enumerate_dos_serial(lat) == oracle::enumerate_dos(lat));
    }
}

TEST_CASE("triangular 4x4 matches the finite-lattice predictions") {
    auto lat = FiniteLattice::make(Preset::Triangular, 4, 4);
    auto counts = oracle::enumerate_dos(lat);
    CHECK(counts[0] == 2);
    CHECK(counts[6] == 32);    // 2V
    CHECK(counts[10] == 96);   // 6V
    CHECK(counts[12] == 208);  // V^2 - 3V at V=16, inside the horizon
    // no odd-r states below the first excitation
    for (int r : {1, 2, 3, 4, 5, 7, 8, 9}) CHECK(counts[static_cast<size_t>(r)] == 0);
}

TEST_CASE("hexagonal finite lattices: wrap-around horizon is the column count") {
    // On the 4x6 brick torus the shortest wrapping defect is a full row with
    // 6 boundary edges, so predictions hold for r < 6 and break at r = 6.
    auto lat = FiniteLattice::make(Preset::Hexagonal, 4, 6);
    auto counts = oracle::enumerate_dos(lat);
    FreeEnergySeries fes = expand_free_energy(LatticeSpec::preset(Preset::Hexagonal), 8);
    DOSTable pred = finite_states_at(fes, lat.V, 8);
    for (int r = 0; r < 6; ++r) {
        CHECK(Rational(static_cast<long>(counts[static_cast<size_t>(r)])) ==
              pred.entry_rational(r) * Rational(2));
    }
    CHECK_FALSE(Rational(static_cast<long>(counts[6])) == pred.entry_rational(6) * Rational(2));
}

TEST_CASE("free boundary enumeration works but is not compared to bulk") {
    auto lat = FiniteLattice::make(Preset::Square, 3, 3, Boundary::Free);
    auto counts = oracle::enumerate_dos(lat);
    CHECK(hist_total(counts) == pow_int(2, 9));
    CHECK(counts[0] == 2);
    CHECK(counts[2] == 8);  // corner flips: 4 corners, 2 sectors
}

TEST_CASE("enumeration budget guard") {
    auto lat = FiniteLattice::make(Preset::Square, 6, 6);  // V = 36 builds fine
    CHECK_THROWS_AS(oracle::enumerate_dos(lat), budget_error);
    CHECK_THROWS_AS(oracle::enumerate_dos_serial(lat), budget_error);
}

TEST_CASE("high-temperature coefficients match the even-subgraph oracle") {
    struct Case {
        Preset p;
        int rows, cols;
        int spot_r;
        unsigned long spot_q;
    };
    // Wrapping cycles of the torus count too: the 4x4 square carries its 16
    // plaquettes plus 8 wrapping rows/columns, the 3x3 triangular torus its
    // 18 triangles plus 9 wrapping lines.
    for (const auto& tc : {Case{Preset::Square, 4, 4, 4, 24},
                           Case{Preset::Triangular, 3, 3, 3, 27},
                           Case{Preset::Hexagonal, 4, 4, 4, 4}}) {  // wrapping rows only
        auto lat = FiniteLattice::make(tc.p, tc.rows, tc.cols);
        auto q = oracle::high_temp_coefficients(lat, oracle::enumerate_dos(lat));
        auto sap = oracle::even_subgraph_counts(lat);
        REQUIRE(q.size() == sap.size());
        for (size_t r = 0; r < q.size(); ++r) {
            CHECK(q[r] == mpz_class(static_cast<unsigned long>(sap[r])));
        }
        CHECK(q[0] == 1);
        CHECK(q[1] == 0);
        CHECK(q[2] == 0);
        CHECK(q[static_cast<size_t>(tc.spot_r)] == mpz_class(tc.spot_q));
    }
}

TEST_CASE("plaquette and triangle counts on tori without short wraps") {
    // Wrapping cycles are longer than the elementary faces here, so q picks
    // out the face counts exactly: q(4) = V plaquettes, q(3) = 2V triangles.
    auto sq = FiniteLattice::make(Preset::Square, 5, 5);
    auto qs = oracle::high_temp_coefficients(sq, oracle::enumerate_dos(sq));
    CHECK(qs[3] == 0);
    CHECK(qs[4] == 25);

    auto tri = FiniteLattice::make(Preset::Triangular, 4, 4);
    auto qt = oracle::high_temp_coefficients(tri, oracle::enumerate_dos(tri));
    CHECK(qt[3] == 32);
}

TEST_CASE("quadrature agrees with the truncated series at small x") {
    for (Preset p : {Preset::Square, Preset::Triangular, Preset::Hexagonal, Preset::Kagome}) {
        LatticeSpec spec = LatticeSpec::preset(p);
        FreeEnergySeries fes = expand_free_energy(spec, 30);
        for (double x : {0.02, 0.05, 0.08}) {
            auto quad = oracle::quadrature_free_energy(spec, x, 256);
            CHECK(std::abs(quad.value - fes.value_at(x)) < 1e-8);
        }
    }
}

TEST_CASE("serial and parallel quadrature agree") {
    LatticeSpec spec = LatticeSpec::preset(Preset::Triangular);
    auto a = oracle::quadrature_free_energy(spec, 0.05, 128);
    auto b = oracle::quadrature_free_energy_serial(spec, 0.05, 128);
    CHECK(doctest::Approx(a.value).epsilon(1e-13) == b.value);
}

TEST_CASE("quadrature rejects bad input") {
    LatticeSpec sq = LatticeSpec::preset(Preset::Square);
    CHECK_THROWS_AS(oracle::quadrature_free_energy(sq, 0.05, 100), spec_error);  // not power of 2
    CHECK_THROWS_AS(oracle::quadrature_free_energy(sq, 1.2, 64), spec_error);
    // right at the critical point the integrand touches zero
    CHECK_THROWS_AS(oracle::quadrature_free_energy(sq, 0.41421356237309515, 256),
                    convergence_error);
}

TEST_CASE("the Wannier form of the triangular free energy matches the product form") {
    for (double x : {0.05, 0.1, 0.2}) {
        double wannier = oracle::wannier_triangular_value(x, 256);
        double product =
            oracle::quadrature_free_energy(LatticeSpec::preset(Preset::Triangular), x, 256).value;
        CHECK(std::abs(wannier - product) < 1e-10);
    }
}

TEST_CASE("generic Utiyama quadrature matches its own expansion") {
    LatticeSpec spec = LatticeSpec::parse_utiyama("J,J,J,J");
    FreeEnergySeries fes = expand_free_energy(spec, 24);
    auto quad = oracle::quadrature_free_energy(spec, 0.05, 256);
    CHECK(std::abs(quad.value - fes.value_at(0.05)) < 1e-8);
}

TEST_CASE("sign invariance of the mixed-sign cosine moments") {
    CHECK(oracle::sign_invariance_check(12));
    // n = 2: both settings give constant term 3/2
    TrigPoly plus = p_triangular();
    CHECK((plus * plus).constant_term() == Rational(3, 2));
    TrigPoly minus = TrigPoly::cosine(1, 1) - TrigPoly::cosine(1, 0) - TrigPoly::cosine(0, 1);
    CHECK((minus * minus).constant_term() == Rational(3, 2));
}
