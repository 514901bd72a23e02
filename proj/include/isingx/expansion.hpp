#ifndef ISINGX_EXPANSION_HPP
#define ISINGX_EXPANSION_HPP

#include <vector>

#include "isingx/lattices.hpp"
#include "isingx/rational.hpp"
#include "isingx/surd.hpp"

namespace isingx {

// Low-temperature expansion of the bulk free energy:
//   -beta*phi(x) = log2_constant*ln2 + log_x_prefactor*ln x + sum terms[n] x^n
// with terms[n] = a(n)/n!, exact.
struct FreeEnergySeries {
    LatticeSpec lattice;
    int order = 0;
    std::vector<Rational> terms;  // index 0 unused (zero)
    Rational log_x_prefactor;
    Rational log2_constant;
    long sites_per_cell = 1;

    const Rational& term(int n) const { return terms.at(static_cast<size_t>(n)); }
    // Numeric value of the truncated series at x (prefactors included).
    double value_at(double x) const;
};

// Generic engine: build_integrand -> series_log over the TrigPoly ring ->
// constant-term extraction -> site divisor.  Works for every lattice spec.
FreeEnergySeries expand_free_energy(const LatticeSpec& spec, int order);

// Closed forms; all three return a(n) with the n! included, zero at odd n
// (square, triangular) and for n < 3 (hexagonal).
Rational a_square_closed(int n);
Rational a_triangular_closed(int n);
Rational a_hexagonal_closed(int n);

// Critical low-temperature variable: sqrt(2)-1, 1/sqrt(3), 2-sqrt(3).
Surd critical_x(Preset p);

// |a(n)|/n! * x_c^n evaluated exactly in the quadratic field.
Surd asymptotic_ratio(Preset p, int n);

}  // namespace isingx

#endif
