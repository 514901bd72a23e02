#ifndef ISINGX_SERIES_HPP
#define ISINGX_SERIES_HPP

#include <string>
#include <utility>
#include <vector>

#include "isingx/errors.hpp"
#include "isingx/rational.hpp"
#include "isingx/trigpoly.hpp"

namespace isingx {

template <class R>
struct RingOps;

template <>
struct RingOps<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& r) { return r.is_zero(); }
    static Rational scale(const Rational& r, const Rational& s) { return r * s; }
};

template <>
struct RingOps<TrigPoly> {
    static TrigPoly zero() { return TrigPoly(); }
    static TrigPoly one() { return TrigPoly(Rational(1)); }
    static bool is_zero(const TrigPoly& t) { return t.is_zero(); }
    static TrigPoly scale(const TrigPoly& t, const Rational& s) { return t.scaled(s); }
};

// Truncated power series in the low-temperature variable x over a declared
// coefficient ring.  The order is fixed at construction; binary operations
// demand equal orders (use truncated()/extended() to convert explicitly).
//
// The two prefactor fields keep the non-power-series parts of a free energy
// out of the coefficient array: a value is read as
//     log_x_prefactor * ln(x) + log_2_prefactor * ln(2) + sum c_n x^n
// in additive (log) space, or x^log_x_prefactor * 2^log_2_prefactor * series
// after exponentiation.  series_exp/series_log carry the fields across
// unchanged, which matches that reinterpretation; series_mul adds them.
template <class R>
class XSeries {
public:
    explicit XSeries(int order)
        : order_(check_order(order)), c_(static_cast<size_t>(order) + 1, RingOps<R>::zero()) {}

    XSeries(int order, std::vector<R> coeffs, Rational log_x = Rational(0),
            Rational log_2 = Rational(0))
        : order_(check_order(order)), c_(std::move(coeffs)), log_x_(std::move(log_x)),
          log_2_(std::move(log_2)) {
        if (c_.size() != static_cast<size_t>(order_) + 1) {
            throw spec_error("XSeries: coefficient count must be order+1");
        }
    }

    static XSeries one(int order) {
        XSeries s(order);
        s.c_[0] = RingOps<R>::one();
        return s;
    }

    int order() const { return order_; }
    const R& coeff(int n) const { return c_.at(static_cast<size_t>(n)); }
    void set_coeff(int n, R v) { c_.at(static_cast<size_t>(n)) = std::move(v); }
    const std::vector<R>& coeffs() const { return c_; }

    const Rational& log_x_prefactor() const { return log_x_; }
    const Rational& log_2_prefactor() const { return log_2_; }
    void set_prefactors(Rational log_x, Rational log_2) {
        log_x_ = std::move(log_x);
        log_2_ = std::move(log_2);
    }

    XSeries truncated(int new_order) const {
        if (new_order > order_) throw spec_error("XSeries: truncated() cannot raise the order");
        XSeries s(new_order);
        for (int n = 0; n <= new_order; ++n) s.c_[static_cast<size_t>(n)] = c_[static_cast<size_t>(n)];
        s.log_x_ = log_x_;
        s.log_2_ = log_2_;
        return s;
    }

    XSeries extended(int new_order) const {
        if (new_order < order_) throw spec_error("XSeries: extended() cannot lower the order");
        XSeries s(new_order);
        for (int n = 0; n <= order_; ++n) s.c_[static_cast<size_t>(n)] = c_[static_cast<size_t>(n)];
        s.log_x_ = log_x_;
        s.log_2_ = log_2_;
        return s;
    }

    friend bool operator==(const XSeries& a, const XSeries& b) {
        return a.order_ == b.order_ && a.c_ == b.c_ && a.log_x_ == b.log_x_ && a.log_2_ == b.log_2_;
    }

private:
    static int check_order(int order) {
        if (order < 0) throw spec_error("XSeries: negative order");
        return order;
    }

    int order_;
    std::vector<R> c_;
    Rational log_x_;
    Rational log_2_;
};

namespace detail {
template <class R>
void require_same_order(const XSeries<R>& a, const XSeries<R>& b, const char* op) {
    if (a.order() != b.order()) {
        throw spec_error(std::string(op) + ": order mismatch (" + std::to_string(a.order()) +
                         " vs " + std::to_string(b.order()) + ")");
    }
}
}  // namespace detail

template <class R>
XSeries<R> series_add(const XSeries<R>& a, const XSeries<R>& b) {
    detail::require_same_order(a, b, "series_add");
    if (!(a.log_x_prefactor() == b.log_x_prefactor() && a.log_2_prefactor() == b.log_2_prefactor())) {
        throw spec_error("series_add: prefactor mismatch");
    }
    XSeries<R> s(a.order());
    for (int n = 0; n <= a.order(); ++n) s.set_coeff(n, a.coeff(n) + b.coeff(n));
    s.set_prefactors(a.log_x_prefactor(), a.log_2_prefactor());
    return s;
}

// Truncated Cauchy product; prefactors add.
template <class R>
XSeries<R> series_mul(const XSeries<R>& a, const XSeries<R>& b) {
    detail::require_same_order(a, b, "series_mul");
    const int N = a.order();
    XSeries<R> s(N);
    for (int n = 0; n <= N; ++n) {
        R acc = RingOps<R>::zero();
        for (int k = 0; k <= n; ++k) {
            if (RingOps<R>::is_zero(a.coeff(k)) || RingOps<R>::is_zero(b.coeff(n - k))) continue;
            acc += a.coeff(k) * b.coeff(n - k);
        }
        s.set_coeff(n, std::move(acc));
    }
    s.set_prefactors(a.log_x_prefactor() + b.log_x_prefactor(),
                     a.log_2_prefactor() + b.log_2_prefactor());
    return s;
}

template <class R>
XSeries<R> series_scale(const XSeries<R>& a, const Rational& s) {
    XSeries<R> r(a.order());
    for (int n = 0; n <= a.order(); ++n) r.set_coeff(n, RingOps<R>::scale(a.coeff(n), s));
    r.set_prefactors(a.log_x_prefactor(), a.log_2_prefactor());
    return r;
}

// ln f for f with unit constant coefficient, via the O(N^2) recurrence
// n*g_n = n*f_n - sum_{k<n} k*g_k*f_{n-k} obtained from f' = f*(ln f)'.
// Coefficient n equals L_n({f_i * i!}) / n!; the Bell-polynomial route is the
// reference implementation and the equality is property-tested.
template <class R>
XSeries<R> series_log(const XSeries<R>& f) {
    if (!(f.coeff(0) == RingOps<R>::one())) {
        throw spec_error("series_log: constant coefficient must be the ring unit");
    }
    const int N = f.order();
    XSeries<R> g(N);
    for (int n = 1; n <= N; ++n) {
        R acc = f.coeff(n);
        for (int k = 1; k < n; ++k) {
            if (RingOps<R>::is_zero(g.coeff(k)) || RingOps<R>::is_zero(f.coeff(n - k))) continue;
            acc -= RingOps<R>::scale(g.coeff(k) * f.coeff(n - k), Rational(k, n));
        }
        g.set_coeff(n, std::move(acc));
    }
    g.set_prefactors(f.log_x_prefactor(), f.log_2_prefactor());
    return g;
}

// exp f for f with zero constant coefficient, via n*h_n = sum k*f_k*h_{n-k}.
// Coefficient N equals Y_N({f_n * n!}) / N!.
template <class R>
XSeries<R> series_exp(const XSeries<R>& f) {
    if (!RingOps<R>::is_zero(f.coeff(0))) {
        throw spec_error("series_exp: constant coefficient must be zero");
    }
    const int N = f.order();
    XSeries<R> h = XSeries<R>::one(N);
    for (int n = 1; n <= N; ++n) {
        R acc = RingOps<R>::zero();
        for (int k = 1; k <= n; ++k) {
            if (RingOps<R>::is_zero(f.coeff(k)) || RingOps<R>::is_zero(h.coeff(n - k))) continue;
            acc += RingOps<R>::scale(f.coeff(k) * h.coeff(n - k), Rational(k, n));
        }
        h.set_coeff(n, std::move(acc));
    }
    h.set_prefactors(f.log_x_prefactor(), f.log_2_prefactor());
    return h;
}

// g(f(x)) truncated, for f with zero constant term.  Horner scheme over the
// truncated ring; used as the oracle side of the Bell-composition identity.
inline XSeries<Rational> series_compose(const XSeries<Rational>& g, const XSeries<Rational>& f) {
    detail::require_same_order(g, f, "series_compose");
    if (!f.coeff(0).is_zero()) {
        throw spec_error("series_compose: inner series must have zero constant term");
    }
    if (!(f.log_x_prefactor().is_zero() && f.log_2_prefactor().is_zero() &&
          g.log_x_prefactor().is_zero() && g.log_2_prefactor().is_zero())) {
        throw spec_error("series_compose: prefactors are not composable");
    }
    const int N = g.order();
    XSeries<Rational> acc(N);
    for (int i = N; i >= 0; --i) {
        acc = series_mul(acc, f);
        acc.set_coeff(0, acc.coeff(0) + g.coeff(i));
        acc.set_prefactors(Rational(0), Rational(0));
    }
    return acc;
}

}  // namespace isingx

#endif
