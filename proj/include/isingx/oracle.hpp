#ifndef ISINGX_ORACLE_HPP
#define ISINGX_ORACLE_HPP

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <vector>

#include "isingx/lattices.hpp"

namespace isingx {
namespace oracle {

enum class Boundary { Periodic, Free };

// Concrete finite lattice with explicit adjacency.  The hexagonal lattice is
// embedded brick-wall style: all horizontal edges exist, vertical edges only
// where (row+col) is even, so every vertex has degree 3 under periodic
// boundary (rows and cols must be even there).
struct FiniteLattice {
    Preset preset = Preset::Square;
    int rows = 0, cols = 0;
    Boundary boundary = Boundary::Periodic;
    int V = 0;
    std::vector<std::array<int, 2>> edges;
    std::vector<std::vector<int>> adj;

    static FiniteLattice make(Preset p, int rows, int cols,
                              Boundary boundary = Boundary::Periodic);
};

// Exact spin-configuration histogram: counts[r] = number of configurations
// with exactly r unsatisfied edges, summing to 2^V.  Both spin-reversal
// sectors are counted, so counts[0] == 2 for a ferromagnetic ground state.
// Gray-code iteration with incremental energy updates; guarded to V <= 30.
std::vector<std::uint64_t> enumerate_dos_serial(const FiniteLattice& lat);
// Same result, parallelized over the top configuration bits.
std::vector<std::uint64_t> enumerate_dos(const FiniteLattice& lat);

// High-temperature coefficients q(r) from the exact configuration histogram:
// substitutes v = (1-x)/(1+x) into the partition polynomial and demands that
// every q(r) comes out a non-negative integer with q(0)=1, q(1)=q(2)=0.
std::vector<mpz_class> high_temp_coefficients(const FiniteLattice& lat,
                                              const std::vector<std::uint64_t>& counts);

// Independent check of the q(r): enumerates the cycle space (all even-degree
// edge subsets) from a spanning-tree basis and histograms subset sizes.
std::vector<std::uint64_t> even_subgraph_counts(const FiniteLattice& lat);

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;  // |I(K) - I(K/2)| from node doubling
    int nodes = 0;
};

// -beta*phi from the original double-integral representations, evaluated with
// the equally spaced periodic product rule (spectrally accurate here).
// nodes must be a power of two >= 32.  Fails with convergence_error when the
// node-doubling estimate stalls (x too close to the critical point).
QuadratureResult quadrature_free_energy(const LatticeSpec& spec, double x, int nodes);
QuadratureResult quadrature_free_energy_serial(const LatticeSpec& spec, double x, int nodes);

// Triangular free energy in the historical form (kappa-parametrized
// integrand); equals the product form for every x.
double wannier_triangular_value(double x, int nodes);

// Constant terms of (+(cos t1 + cos t2) + cos(t1+t2))^n and
// (-(cos t1 + cos t2) + cos(t1+t2))^n agree for every n <= n_max.
bool sign_invariance_check(int n_max);

}  // namespace oracle
}  // namespace isingx

#endif
