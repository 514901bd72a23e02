#ifndef ISINGX_RATIONAL_HPP
#define ISINGX_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "isingx/errors.hpp"

namespace isingx {

// Exact fraction, always reduced, denominator > 0.  GMP does the integer
// arithmetic; this wrapper pins the canonical-form invariant and the
// serialization format used everywhere else.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rational(long num, long den) : v_(num, den) { canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) { canonicalize(); }
    explicit Rational(const mpq_class& q) : v_(q) { canonicalize(); }

    // Accepts "p", "-p", "p/q".
    static Rational parse(const std::string& s);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_negative() const { return v_ < 0; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw spec_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return v_ < 0 ? -*this : *this; }
    Rational pow(long e) const;
    Rational reciprocal() const {
        if (is_zero()) throw spec_error("Rational: reciprocal of zero");
        return Rational(mpq_class(1) / v_);
    }

    double to_double() const { return v_.get_d(); }

    // Canonical form: "p" when the value is an integer, otherwise "p/q".
    std::string str() const;

private:
    void canonicalize() {
        if (v_.get_den() == 0) throw spec_error("Rational: zero denominator");
        v_.canonicalize();
    }
    mpq_class v_;
};

}  // namespace isingx

#endif
