#include "isingx/trigpoly.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "isingx/errors.hpp"

namespace isingx {

TrigPoly::TrigPoly(const Rational& constant) {
    if (!constant.is_zero()) modes_[{0, 0}] = constant;
}

TrigPoly TrigPoly::cosine(int m1, int m2) {
    TrigPoly t;
    if (m1 == 0 && m2 == 0) {
        t.modes_[{0, 0}] = Rational(1);
        return t;
    }
    t.modes_[{m1, m2}] = Rational(1, 2);
    t.modes_[{-m1, -m2}] = Rational(1, 2);
    return t;
}

TrigPoly TrigPoly::from_modes(const Map& modes) {
    TrigPoly t;
    for (const auto& [m, c] : modes) {
        if (c.is_zero()) continue;
        auto it = modes.find(m.negated());
        if (it == modes.end() || !(it->second == c)) {
            throw spec_error("TrigPoly: coefficients must satisfy c(m) == c(-m) to be real");
        }
        t.modes_[m] = c;
    }
    return t;
}

Rational TrigPoly::coefficient(Mode m) const {
    auto it = modes_.find(m);
    return it == modes_.end() ? Rational(0) : it->second;
}

bool TrigPoly::is_constant() const {
    if (modes_.empty()) return true;
    return modes_.size() == 1 && modes_.begin()->first == Mode{0, 0};
}

int TrigPoly::max_abs_mode() const {
    int m = 0;
    for (const auto& [k, c] : modes_) {
        m = std::max({m, std::abs(k.m1), std::abs(k.m2)});
    }
    return m;
}

void TrigPoly::add_mode(Mode m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = modes_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) modes_.erase(it);
    }
}

TrigPoly TrigPoly::operator-() const {
    TrigPoly t;
    for (const auto& [m, c] : modes_) t.modes_[m] = -c;
    return t;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
    for (const auto& [m, c] : o.modes_) add_mode(m, c);
    return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& o) {
    for (const auto& [m, c] : o.modes_) add_mode(m, -c);
    return *this;
}

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
    TrigPoly t;
    // Convolution of the mode maps; keep the smaller factor outermost.
    const TrigPoly& small = a.modes_.size() <= b.modes_.size() ? a : b;
    const TrigPoly& large = a.modes_.size() <= b.modes_.size() ? b : a;
    for (const auto& [ma, ca] : small.modes_) {
        for (const auto& [mb, cb] : large.modes_) {
            t.add_mode({ma.m1 + mb.m1, ma.m2 + mb.m2}, ca * cb);
        }
    }
    return t;
}

TrigPoly TrigPoly::scaled(const Rational& s) const {
    TrigPoly t;
    if (s.is_zero()) return t;
    for (const auto& [m, c] : modes_) t.modes_[m] = c * s;
    return t;
}

double TrigPoly::eval(double theta1, double theta2) const {
    // Imaginary parts cancel pairwise by the symmetry invariant.
    double v = 0.0;
    for (const auto& [m, c] : modes_) {
        v += c.to_double() * std::cos(m.m1 * theta1 + m.m2 * theta2);
    }
    return v;
}

std::string TrigPoly::str() const {
    if (modes_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : modes_) {
        if (!first) os << " + ";
        os << c.str() << "*e(" << m.m1 << "," << m.m2 << ")";
        first = false;
    }
    return os.str();
}

}  // namespace isingx
