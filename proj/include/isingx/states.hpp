#ifndef ISINGX_STATES_HPP
#define ISINGX_STATES_HPP

#include <string>
#include <vector>

#include "isingx/expansion.hpp"
#include "isingx/rational.hpp"
#include "isingx/series.hpp"

namespace isingx {

// Dense polynomial in the vertex count V with rational coefficients.
struct VPoly {
    std::vector<Rational> c;  // c[k] multiplies V^k; normalized (no trailing zeros)

    VPoly() = default;
    explicit VPoly(Rational constant);
    static VPoly variable(Rational coeff);  // coeff * V

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    Rational coefficient(int k) const;
    Rational evaluate(const Rational& v) const;

    VPoly operator-() const;
    VPoly& operator+=(const VPoly& o);
    VPoly& operator-=(const VPoly& o);
    friend VPoly operator+(VPoly a, const VPoly& b) { return a += b; }
    friend VPoly operator-(VPoly a, const VPoly& b) { return a -= b; }
    friend VPoly operator*(const VPoly& a, const VPoly& b);
    VPoly scaled(const Rational& s) const;
    friend bool operator==(const VPoly&, const VPoly&) = default;

    void normalize();
    std::string str() const;  // e.g. "-3/2*V + 1/2*V^2"
};

template <>
struct RingOps<VPoly> {
    static VPoly zero() { return VPoly(); }
    static VPoly one() { return VPoly(Rational(1)); }
    static bool is_zero(const VPoly& p) { return p.is_zero(); }
    static VPoly scale(const VPoly& p, const Rational& s) { return p.scaled(s); }
};

enum class DosMode { Bulk, FiniteSymbolic, FiniteAt };

// Numbers of states indexed by the energy level r (energy 2Jr above the
// ground state).  Bulk entries are counted per elementary integration cell:
// g(N) = Y_N({m a(n)})/N! with m the number of sites in the Utiyama cell
// (1 for square/triangular, 2 for hexagonal, 3 for kagome), which equals
// the finite-lattice prediction evaluated at V = m.
struct DOSTable {
    LatticeSpec lattice;
    DosMode mode = DosMode::Bulk;
    long V = 0;          // FiniteAt only
    int order = 0;
    int exact_below = -1;  // finite modes: known-exact horizon, -1 if unknown
    std::vector<VPoly> entries;  // [0..order]; Bulk/FiniteAt entries are constants

    const VPoly& entry(int r) const { return entries.at(static_cast<size_t>(r)); }
    Rational entry_rational(int r) const;  // Bulk / FiniteAt only
};

DOSTable bulk_states(const FreeEnergySeries& fes, int order);
DOSTable finite_states(const FreeEnergySeries& fes, int order);             // symbolic in V
DOSTable finite_states_at(const FreeEnergySeries& fes, long V, int order);  // evaluated

// 2 x^{-E/2} sum_r g_V(r) x^r with the spin-reversal factor 2 explicit and
// E/2 = V * edge_density in the ln(x) exponent.
struct PartitionPolynomial {
    LatticeSpec lattice;
    bool symbolic = true;
    long V = 0;
    long factor = 2;
    Rational edge_density;       // E/(2V); the prefactor exponent is -V*edge_density
    std::vector<VPoly> coeffs;   // coefficient of x^r, factor included
};

PartitionPolynomial partition_polynomial(const DOSTable& dos);

struct EnergyDistribution {
    std::vector<double> p;  // P(N), N = 0..truncation, sums to 1 exactly
    bool negative_states_warning = false;
    double tail_estimate = 0.0;
};

// Normalized distribution of the energy level at low-temperature variable x,
// P(N) = g(N) x^N / sum_r g(r) x^r over the truncated support.
// max_x_override replaces the default 0.95*x_c admissibility bound for
// lattices without a tabulated critical point.
EnergyDistribution energy_distribution(const DOSTable& dos, double x, int truncation,
                                       double max_x_override = 0.0);

}  // namespace isingx

#endif
