#include "isingx/rational.hpp"

namespace isingx {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw spec_error("Rational: empty string");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw spec_error("Rational: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw spec_error("Rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(q);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = e < 0 ? reciprocal() : *this;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), k);
    return Rational(num, den);
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

}  // namespace isingx
