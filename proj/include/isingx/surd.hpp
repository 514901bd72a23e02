#ifndef ISINGX_SURD_HPP
#define ISINGX_SURD_HPP

#include <cmath>

#include "isingx/errors.hpp"
#include "isingx/rational.hpp"

namespace isingx {

// Exact element a + b*sqrt(d) of a fixed real quadratic field (d squarefree,
// d > 1).  Enough to carry the critical points sqrt(2)-1, 1/sqrt(3), 2-sqrt(3)
// through exact powers and products.
struct Surd {
    Rational a;
    Rational b;
    long d = 2;

    Surd() = default;
    Surd(Rational a_, Rational b_, long d_) : a(std::move(a_)), b(std::move(b_)), d(d_) {
        if (d <= 1) throw spec_error("Surd: need d > 1");
    }
    static Surd rational(Rational r, long d_) { return Surd(std::move(r), Rational(0), d_); }

    friend Surd operator+(const Surd& x, const Surd& y) {
        x.check(y);
        return Surd(x.a + y.a, x.b + y.b, x.d);
    }
    friend Surd operator-(const Surd& x, const Surd& y) {
        x.check(y);
        return Surd(x.a - y.a, x.b - y.b, x.d);
    }
    friend Surd operator*(const Surd& x, const Surd& y) {
        x.check(y);
        return Surd(x.a * y.a + x.b * y.b * Rational(x.d), x.a * y.b + x.b * y.a, x.d);
    }
    Surd scaled(const Rational& s) const { return Surd(a * s, b * s, d); }

    // (a + b sqrt d)^-1 = (a - b sqrt d) / (a^2 - b^2 d)
    Surd inverse() const {
        Rational norm = a * a - b * b * Rational(d);
        if (norm.is_zero()) throw spec_error("Surd: not invertible");
        return Surd(a / norm, -b / norm, d);
    }

    Surd pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        Surd r = rational(Rational(1), d);
        Surd base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    // Exact sign of a + b*sqrt(d).
    int sign() const {
        int sa = a.sign(), sb = b.sign();
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // Opposite signs: compare a^2 with b^2 d.
        Rational lhs = a * a, rhs = b * b * Rational(d);
        if (lhs == rhs) return 0;
        bool a_dominates = lhs > rhs;
        return a_dominates ? sa : sb;
    }

    friend bool operator==(const Surd& x, const Surd& y) {
        x.check(y);
        return x.a == y.a && x.b == y.b;
    }
    bool less_than(const Rational& r) const { return (*this - rational(r, d)).sign() < 0; }
    bool greater_than(const Rational& r) const { return (*this - rational(r, d)).sign() > 0; }

    double to_double() const { return a.to_double() + b.to_double() * std::sqrt(double(d)); }

    std::string str() const { return a.str() + (b.sign() < 0 ? "" : "+") + b.str() + "*sqrt(" +
                                     std::to_string(d) + ")"; }

private:
    void check(const Surd& o) const {
        if (d != o.d) throw spec_error("Surd: mixed field extensions");
    }
};

}  // namespace isingx

#endif
