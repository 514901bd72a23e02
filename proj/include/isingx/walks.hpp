#ifndef ISINGX_WALKS_HPP
#define ISINGX_WALKS_HPP

#include <gmpxx.h>

#include "isingx/lattices.hpp"

namespace isingx {
namespace walks {

// Closed walks returning to the origin.  S_square and S_hexagonal take the
// walk length itself (even); S_triangular takes any length.
//
// Three independent routes exist for every value and are kept equal by the
// test suite: the closed forms below, the constant-term route
// 2^l * <p^l>, and exhaustive counting on the lattice graph.

mpz_class s_square(int length);      // C(l, l/2)^2, normalization fixed by S(2) = 4
mpz_class s_triangular(int length);  // sum_{i,j} (-2)^{l-i} C(l,i) C(i,j)^3
mpz_class s_hexagonal(int length);   // sum_j C(l,j) 3^{l-j} S_tri(j), l = length/2

// 2^l * constant_term(p^l) with p the lattice structure polynomial
// (for square and triangular l = length; for hexagonal l = length/2).
mpz_class s_by_constant_term(Preset p, int length);

// Counts every closed walk on the actual lattice graph by dynamic
// programming over displacement (honeycomb walks alternate sublattices).
// Guarded to length <= 12.
mpz_class walk_oracle(Preset p, int length);

}  // namespace walks
}  // namespace isingx

#endif
