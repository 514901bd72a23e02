#ifndef ISINGX_ASYMPT_HPP
#define ISINGX_ASYMPT_HPP

#include <vector>

#include "isingx/lattices.hpp"
#include "isingx/rational.hpp"

namespace isingx {
namespace asympt {

// (a)_n = a(a+1)...(a+n-1); (-m)_n = 0 for n > m.
Rational pochhammer(const Rational& a, int n);

// pFq by direct summation.  Exact mode requires a terminating series (some
// upper parameter a non-positive integer); float mode sums until the term
// drops below tol and refuses visibly divergent input.
Rational pfq_exact(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                   const Rational& z);
double pfq_double(const std::vector<double>& upper, const std::vector<double>& lower, double z,
                  double tol = 1e-14, int max_terms = 20000);

// 1F1(1 - m; 2; -1), the factor shared by every asymptotic state count.
Rational hyp1f1_unit(int m);

// g(N) ~ x_c^-N * 1F1(1-N/2; 2; -1); the triangular lattice carries the
// extra -(-1)^(N/2) sign.  Returns 0 for odd N.
double asymptotic_states(Preset p, int N);

// Asymptotic energy distribution with the denominator truncated at
// `truncation`; requires 0 < x < x_c.
double asymptotic_distribution(Preset p, double x, int N, int truncation);

struct OnsagerComparison {
    double kappa = 0.0;          // sinh(2bJ) / (2 cosh^2(2bJ))
    double series_value = 0.0;   // ln[2 cosh 2bJ] - kappa^2 4F3(...; 16 kappa^2)
    double quadrature_value = 0.0;
};

// Both members evaluate -beta*phi(square); they must agree.
OnsagerComparison onsager_kappa_check(double betaJ, int nodes = 512);

}  // namespace asympt
}  // namespace isingx

#endif
