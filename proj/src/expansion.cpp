#include "isingx/expansion.hpp"

#include <cmath>

#include "isingx/bell.hpp"
#include "isingx/combinatorics.hpp"
#include "isingx/errors.hpp"
#include "isingx/series.hpp"
#include "isingx/walks.hpp"

namespace isingx {

double FreeEnergySeries::value_at(double x) const {
    if (!(x > 0.0 && x < 1.0)) throw spec_error("FreeEnergySeries::value_at: need 0 < x < 1");
    double v = log2_constant.to_double() * std::log(2.0) + log_x_prefactor.to_double() * std::log(x);
    double xn = 1.0;
    for (int n = 1; n <= order; ++n) {
        xn *= x;
        if (!terms[static_cast<size_t>(n)].is_zero()) {
            v += terms[static_cast<size_t>(n)].to_double() * xn;
        }
    }
    return v;
}

FreeEnergySeries expand_free_energy(const LatticeSpec& spec, int order) {
    if (order < 1) throw spec_error("expand_free_energy: order must be >= 1");
    Integrand ig = build_integrand(spec, order);
    XSeries<TrigPoly> lnq = series_log(ig.q);

    FreeEnergySeries fes{spec, order, std::vector<Rational>(static_cast<size_t>(order) + 1),
                         ig.log_x_prefactor, ig.log2_constant, ig.sites_per_cell()};
    for (int n = 1; n <= order; ++n) {
        fes.terms[static_cast<size_t>(n)] = ig.site_divisor * lnq.coeff(n).constant_term();
    }
    return fes;
}

Rational a_square_closed(int n) {
    if (n < 1) throw spec_error("a_square_closed: n must be positive");
    if (n % 2 == 1) return Rational(0);
    // Sum over integer quadruples c1,c2,c3,c4 >= 0 with c1+2c2+3c3+4c4 = n of
    //   multinomial(k; c) (-1)^(c2+c3+c4-1) 2^c2 / k * C(c1+c3, (c1+c3)/2)^2,
    // k = c1+c2+c3+c4, times n!/2.  Terms with odd c1+c3 vanish.
    Rational sum(0);
    for (int c4 = 0; 4 * c4 <= n; ++c4) {
        for (int c3 = 0; 4 * c4 + 3 * c3 <= n; ++c3) {
            for (int c2 = 0; 4 * c4 + 3 * c3 + 2 * c2 <= n; ++c2) {
                const int c1 = n - 2 * c2 - 3 * c3 - 4 * c4;
                if ((c1 + c3) % 2 != 0) continue;
                const int k = c1 + c2 + c3 + c4;
                mpz_class multinomial = factorial(k) / (factorial(c1) * factorial(c2) *
                                                        factorial(c3) * factorial(c4));
                mpz_class central = binomial(c1 + c3, (c1 + c3) / 2);
                mpz_class num = multinomial * pow_int(2, c2) * central * central;
                if ((c2 + c3 + c4 - 1) % 2 != 0) num = -num;
                sum += Rational(num, mpz_class(k));
            }
        }
    }
    return sum * Rational(factorial(n)) * Rational(1, 2);
}

Rational a_triangular_closed(int n) {
    if (n < 1) throw spec_error("a_triangular_closed: n must be positive");
    if (n % 2 == 1) return Rational(0);
    const int h = n / 2;
    Rational sum(0);
    for (int k = 1; k <= h; ++k) {
        for (int l = 0; l <= h - k; ++l) {
            // C(k, h-k) vanishes unless k >= h/2, which also keeps k-l >= 0.
            mpz_class binoms = binomial(k, h - k) * binomial(h - k, l);
            if (binoms == 0) continue;
            mpz_class num = binoms * pow_int(3, l) * walks::s_triangular(k - l);
            if (num == 0) continue;
            if ((k + h + 1) % 2 != 0) num = -num;
            sum += Rational(num, mpz_class(k));
        }
    }
    return sum * Rational(factorial(n)) * Rational(1, 2);
}

Rational a_hexagonal_closed(int n) {
    if (n < 1) throw spec_error("a_hexagonal_closed: n must be positive");
    // Expansion of ln[1 + (3-2p)x + 3x^2 + (2+4p)x^3 + 3x^4 + (3-2p)x^5 + x^6]
    // through logarithmic Bell polynomials and the binomial expansions of
    // (3-2p)^(c1+c5) and (1+2p)^c3, leaving the walk moments S_hex(2(l+r)).
    Rational sum(0);
    for (int k = 1; k <= n; ++k) {
        for (const bell::PartitionIndex& part : bell::partition_indices(n, k)) {
            int c[7] = {0, 0, 0, 0, 0, 0, 0};
            bool fits = true;
            for (const auto& [j, cnt] : part) {
                if (j > 6) { fits = false; break; }
                c[j] = cnt;
            }
            if (!fits) continue;
            const int c15 = c[1] + c[5];
            mpz_class fact_den = factorial(c[1]) * factorial(c[2]) * factorial(c[4]) *
                                 factorial(c[5]) * factorial(c[6]);
            for (int l = 0; l <= c15; ++l) {
                for (int r = 0; r <= c[3]; ++r) {
                    // exponent of 3 is c1+c2+c4+c5-l = k-c3-c6-l
                    mpz_class num = factorial(k - 1) * factorial(c15) *
                                    pow_int(3, k - c[3] - c[6] - l) *
                                    walks::s_hexagonal(2 * (r + l));
                    mpz_class den = fact_den * factorial(c15 - l) * factorial(c[3] - r) *
                                    factorial(l) * factorial(r) * 2;
                    num *= pow_int(2, c[3]);
                    if ((k + l + 1) % 2 != 0) num = -num;
                    sum += Rational(num, den);
                }
            }
        }
    }
    return sum * Rational(factorial(n)) * Rational(1, 2);
}

Surd critical_x(Preset p) {
    switch (p) {
        case Preset::Square: return Surd(Rational(-1), Rational(1), 2);   // sqrt(2) - 1
        case Preset::Triangular: return Surd(Rational(0), Rational(1, 3), 3);  // 1/sqrt(3)
        case Preset::Hexagonal: return Surd(Rational(2), Rational(-1), 3);     // 2 - sqrt(3)
        case Preset::Kagome: break;
    }
    throw spec_error("critical_x: no closed-form critical point for this lattice");
}

Surd asymptotic_ratio(Preset p, int n) {
    if (n < 1) throw spec_error("asymptotic_ratio: n must be positive");
    Rational coeff;
    switch (p) {
        case Preset::Square: coeff = a_square_closed(n); break;
        case Preset::Triangular: coeff = a_triangular_closed(n); break;
        case Preset::Hexagonal: coeff = a_hexagonal_closed(n); break;
        default: throw spec_error("asymptotic_ratio: unsupported lattice");
    }
    Rational scaled = coeff.abs() / Rational(factorial(n));
    return critical_x(p).pow(n).scaled(scaled);
}

}  // namespace isingx
