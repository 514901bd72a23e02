#ifndef ISINGX_TRIGPOLY_HPP
#define ISINGX_TRIGPOLY_HPP

#include <compare>
#include <map>
#include <string>

#include "isingx/rational.hpp"

namespace isingx {

// Fourier mode index (m1, m2) of exp(i(m1*theta1 + m2*theta2)).
struct Mode {
    int m1 = 0;
    int m2 = 0;
    friend auto operator<=>(const Mode&, const Mode&) = default;
    Mode negated() const { return {-m1, -m2}; }
};

// Exact Laurent polynomial in the two unit-circle variables exp(i*theta1),
// exp(i*theta2).  Represents a real-valued trigonometric polynomial: the
// coefficient of (m1, m2) always equals the coefficient of (-m1, -m2).
// Averaging over [0,2pi]^2 is constant-mode extraction, so exact integration
// never leaves the rationals.
class TrigPoly {
public:
    using Map = std::map<Mode, Rational>;

    TrigPoly() = default;
    explicit TrigPoly(const Rational& constant);

    // cos(m1*theta1 + m2*theta2)
    static TrigPoly cosine(int m1, int m2);
    // Validates the real-symmetry invariant; throws spec_error on violation.
    static TrigPoly from_modes(const Map& modes);

    const Map& modes() const { return modes_; }
    Rational coefficient(Mode m) const;
    // (1/4pi^2) * integral over [0,2pi]^2, i.e. the (0,0) coefficient.
    Rational constant_term() const { return coefficient({0, 0}); }

    bool is_zero() const { return modes_.empty(); }
    bool is_constant() const;
    int max_abs_mode() const;

    TrigPoly operator-() const;
    TrigPoly& operator+=(const TrigPoly& o);
    TrigPoly& operator-=(const TrigPoly& o);
    friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
    friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
    friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);
    TrigPoly scaled(const Rational& s) const;

    friend bool operator==(const TrigPoly& a, const TrigPoly& b) = default;

    double eval(double theta1, double theta2) const;
    std::string str() const;

private:
    void add_mode(Mode m, const Rational& c);
    Map modes_;  // zero coefficients are never stored
};

}  // namespace isingx

#endif
