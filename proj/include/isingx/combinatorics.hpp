#ifndef ISINGX_COMBINATORICS_HPP
#define ISINGX_COMBINATORICS_HPP

#include <gmpxx.h>

#include "isingx/rational.hpp"

namespace isingx {

mpz_class factorial(int n);
mpz_class binomial(int n, int k);  // 0 when k < 0 or k > n
mpz_class pow_int(long base, int e);

inline Rational rat(const mpz_class& z) { return Rational(z); }

}  // namespace isingx

#endif
