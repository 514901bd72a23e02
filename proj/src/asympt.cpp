#include "isingx/asympt.hpp"

#include <cmath>

#include "isingx/errors.hpp"
#include "isingx/expansion.hpp"
#include "isingx/oracle.hpp"

namespace isingx {
namespace asympt {

Rational pochhammer(const Rational& a, int n) {
    if (n < 0) throw spec_error("pochhammer: negative n");
    Rational r(1);
    Rational f = a;
    for (int k = 0; k < n; ++k) {
        r *= f;
        f += Rational(1);
    }
    return r;
}

Rational pfq_exact(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                   const Rational& z) {
    // Terminating index: smallest m with some upper parameter equal to -m.
    long terminate_at = -1;
    for (const Rational& a : upper) {
        if (a.is_integer() && a.sign() <= 0) {
            long m = -a.num().get_si();
            if (terminate_at < 0 || m < terminate_at) terminate_at = m;
        }
    }
    if (terminate_at < 0) {
        throw spec_error("pfq_exact: series does not terminate; use the float mode");
    }
    Rational sum(0);
    Rational term(1);  // product of pochhammers * z^k / k!
    for (long k = 0; k <= terminate_at; ++k) {
        sum += term;
        if (k == terminate_at) break;
        Rational factor(1);
        for (const Rational& a : upper) factor *= a + Rational(k);
        for (const Rational& b : lower) {
            Rational d = b + Rational(k);
            if (d.is_zero()) {
                throw spec_error("pfq_exact: lower parameter hits a non-positive integer");
            }
            factor /= d;
        }
        term *= factor * z / Rational(k + 1);
    }
    return sum;
}

double pfq_double(const std::vector<double>& upper, const std::vector<double>& lower, double z,
                  double tol, int max_terms) {
    double sum = 0.0, term = 1.0;
    int growing = 0;
    for (int k = 0; k < max_terms; ++k) {
        sum += term;
        double next = term;
        for (double a : upper) next *= a + k;
        for (double b : lower) {
            double d = b + k;
            if (d == 0.0) throw spec_error("pfq_double: lower parameter hits zero");
            next /= d;
        }
        next *= z / (k + 1);
        if (std::abs(next) < tol * std::max(1.0, std::abs(sum))) return sum + next;
        growing = std::abs(next) > std::abs(term) ? growing + 1 : 0;
        if (growing > 64) {
            throw convergence_error("pfq_double: terms keep growing; series diverges here");
        }
        term = next;
    }
    throw convergence_error("pfq_double: no convergence within the term budget");
}

Rational hyp1f1_unit(int m) {
    if (m < 0) throw spec_error("hyp1f1_unit: negative argument");
    if (m == 0) return Rational(1);  // empty-partition convention, matches g(0) = 1
    return pfq_exact({Rational(1 - m)}, {Rational(2)}, Rational(-1));
}

double asymptotic_states(Preset p, int N) {
    if (N < 0) throw spec_error("asymptotic_states: negative N");
    if (N % 2 != 0) return 0.0;
    const double xc = critical_x(p).to_double();
    double value = std::pow(xc, -N) * hyp1f1_unit(N / 2).to_double();
    if (p == Preset::Triangular) {
        value *= -(((N / 2) % 2 == 1) ? -1.0 : 1.0);
    }
    return value;
}

double asymptotic_distribution(Preset p, double x, int N, int truncation) {
    if (N < 0) throw spec_error("asymptotic_distribution: negative N");
    if (truncation < 1) throw spec_error("asymptotic_distribution: truncation must be >= 1");
    const double xc = critical_x(p).to_double();
    if (!(x > 0.0 && x < xc)) {
        throw spec_error("asymptotic_distribution: need 0 < x < x_c, the denominator "
                         "series diverges otherwise");
    }
    if (N % 2 != 0) return 0.0;
    const double u = x / xc;
    double denom = 1.0;
    double last = 0.0;
    for (int r = 1; r <= truncation; ++r) {
        last = std::pow(u, 2 * r) * hyp1f1_unit(r).to_double();
        denom += last;
    }
    // Geometric tail bound with ratio (x/x_c)^2.
    const double ratio = u * u;
    const double tail = last * ratio / (1.0 - ratio);
    if (tail > 1e-12 * denom) {
        throw convergence_error("asymptotic_distribution: truncation too small for the tail");
    }
    return std::pow(u, N) * hyp1f1_unit(N / 2).to_double() / denom;
}

OnsagerComparison onsager_kappa_check(double betaJ, int nodes) {
    if (!(betaJ > 0.0)) throw spec_error("onsager_kappa_check: need betaJ > 0");
    const double t = 2.0 * betaJ;
    // The expansion variable that makes the 4F3 form an identity is
    // sinh(2bJ)/(2 cosh^2(2bJ)); its square times 16 stays below 1 for every
    // temperature off criticality.
    const double kappa = std::sinh(t) / (2.0 * std::cosh(t) * std::cosh(t));
    const double z = 16.0 * kappa * kappa;
    if (!(z < 1.0)) {
        throw convergence_error("onsager_kappa_check: 16 kappa^2 >= 1, too close to critical");
    }
    OnsagerComparison cmp;
    cmp.kappa = kappa;
    const double f = pfq_double({1.0, 1.0, 1.5, 1.5}, {2.0, 2.0, 2.0}, z);
    cmp.series_value = std::log(2.0 * std::cosh(t)) - kappa * kappa * f;
    const double x = std::exp(-t);
    cmp.quadrature_value =
        oracle::quadrature_free_energy(LatticeSpec::preset(Preset::Square), x, nodes).value;
    return cmp;
}

}  // namespace asympt
}  // namespace isingx
