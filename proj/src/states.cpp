#include "isingx/states.hpp"

#include <cmath>
#include <sstream>

#include "isingx/errors.hpp"

namespace isingx {

VPoly::VPoly(Rational constant) {
    if (!constant.is_zero()) c.push_back(std::move(constant));
}

VPoly VPoly::variable(Rational coeff) {
    VPoly p;
    if (!coeff.is_zero()) {
        p.c.resize(2);
        p.c[1] = std::move(coeff);
    }
    return p;
}

Rational VPoly::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(c.size())) return Rational(0);
    return c[static_cast<size_t>(k)];
}

Rational VPoly::evaluate(const Rational& v) const {
    Rational acc(0);
    for (size_t k = c.size(); k-- > 0;) acc = acc * v + c[k];
    return acc;
}

VPoly VPoly::operator-() const {
    VPoly p = *this;
    for (auto& x : p.c) x = -x;
    return p;
}

VPoly& VPoly::operator+=(const VPoly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size());
    for (size_t k = 0; k < o.c.size(); ++k) c[k] += o.c[k];
    normalize();
    return *this;
}

VPoly& VPoly::operator-=(const VPoly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size());
    for (size_t k = 0; k < o.c.size(); ++k) c[k] -= o.c[k];
    normalize();
    return *this;
}

VPoly operator*(const VPoly& a, const VPoly& b) {
    VPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.normalize();
    return r;
}

VPoly VPoly::scaled(const Rational& s) const {
    VPoly r;
    if (s.is_zero()) return r;
    r.c = c;
    for (auto& x : r.c) x *= s;
    return r;
}

void VPoly::normalize() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

std::string VPoly::str() const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        if (!first) os << (c[k].sign() > 0 ? " + " : " - ");
        else if (c[k].sign() < 0) os << "-";
        Rational mag = c[k].abs();
        if (k == 0) {
            os << mag.str();
        } else {
            if (!mag.is_one()) os << mag.str() << "*";
            os << "V";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

Rational DOSTable::entry_rational(int r) const {
    if (mode == DosMode::FiniteSymbolic) {
        throw spec_error("DOSTable: symbolic entries have no single rational value");
    }
    const VPoly& p = entry(r);
    if (p.degree() > 0) throw spec_error("DOSTable: entry not constant");
    return p.coefficient(0);
}

namespace {

// exp of the free-energy tail over the chosen ring, with tail coefficient n
// equal to weight(n) * a(n)/n!.
template <class R, class Weight>
std::vector<R> exp_of_tail(const FreeEnergySeries& fes, int order, Weight weight) {
    if (order > fes.order) {
        throw spec_error("states: requested order " + std::to_string(order) +
                         " exceeds the expanded free energy order " + std::to_string(fes.order));
    }
    XSeries<R> tail(order);
    for (int n = 1; n <= order; ++n) tail.set_coeff(n, weight(fes.term(n), n));
    XSeries<R> z = series_exp(tail);
    std::vector<R> out;
    out.reserve(static_cast<size_t>(order) + 1);
    for (int r = 0; r <= order; ++r) out.push_back(z.coeff(r));
    return out;
}

int known_exact_horizon(const LatticeSpec& lattice, long V) {
    if (!lattice.is_preset() || V <= 0) return -1;
    long m = static_cast<long>(std::lround(std::sqrt(static_cast<double>(V))));
    if (m * m != V) return -1;
    switch (lattice.preset_kind()) {
        case Preset::Square:
            return static_cast<int>(2 * m - 1);  // exact for N < 2M
        case Preset::Triangular:
            return static_cast<int>(4 * m - 1);  // exact for N < 4*sqrt(V)
        default:
            return -1;  // measured empirically by the oracle tests
    }
}

}  // namespace

DOSTable bulk_states(const FreeEnergySeries& fes, int order) {
    const Rational m(fes.sites_per_cell);
    auto entries = exp_of_tail<VPoly>(
        fes, order, [&](const Rational& t, int) { return VPoly(t * m); });
    return DOSTable{fes.lattice, DosMode::Bulk, 0, order, -1, std::move(entries)};
}

DOSTable finite_states(const FreeEnergySeries& fes, int order) {
    auto entries = exp_of_tail<VPoly>(
        fes, order, [](const Rational& t, int) { return VPoly::variable(t); });
    return DOSTable{fes.lattice, DosMode::FiniteSymbolic, 0, order, -1, std::move(entries)};
}

DOSTable finite_states_at(const FreeEnergySeries& fes, long V, int order) {
    if (V <= 0) throw spec_error("finite_states_at: V must be positive");
    const Rational v(V);
    auto entries = exp_of_tail<VPoly>(
        fes, order, [&](const Rational& t, int) { return VPoly(t * v); });
    return DOSTable{fes.lattice, DosMode::FiniteAt, V, order,
                    known_exact_horizon(fes.lattice, V), std::move(entries)};
}

PartitionPolynomial partition_polynomial(const DOSTable& dos) {
    if (dos.mode == DosMode::Bulk) {
        throw spec_error("partition_polynomial: bulk tables use a different factor-2 "
                         "convention; pass a finite-lattice table");
    }
    PartitionPolynomial z{dos.lattice, dos.mode == DosMode::FiniteSymbolic, dos.V, 2,
                          edge_density(dos.lattice), {}};
    z.coeffs.reserve(dos.entries.size());
    for (const VPoly& g : dos.entries) z.coeffs.push_back(g.scaled(Rational(2)));
    return z;
}

EnergyDistribution energy_distribution(const DOSTable& dos, double x, int truncation,
                                       double max_x_override) {
    if (truncation < 0 || truncation > dos.order) {
        throw spec_error("energy_distribution: truncation must lie in [0, order]");
    }
    if (dos.mode == DosMode::FiniteSymbolic) {
        throw spec_error("energy_distribution: needs numeric state counts, not symbolic V");
    }
    double max_x = max_x_override;
    if (max_x <= 0.0) {
        if (!dos.lattice.is_preset() || dos.lattice.preset_kind() == Preset::Kagome) {
            throw spec_error("energy_distribution: no tabulated critical point for " +
                             dos.lattice.name() + "; pass an explicit x bound");
        }
        max_x = 0.95 * critical_x(dos.lattice.preset_kind()).to_double();
    }
    if (!(x > 0.0 && x < max_x)) {
        throw spec_error("energy_distribution: x must lie in (0, " + std::to_string(max_x) + ")");
    }

    EnergyDistribution dist;
    std::vector<double> weight(static_cast<size_t>(truncation) + 1, 0.0);
    double denom = 0.0;
    double xn = 1.0;
    for (int r = 0; r <= truncation; ++r) {
        Rational g = dos.entry_rational(r);
        if (g.sign() < 0) dist.negative_states_warning = true;
        weight[static_cast<size_t>(r)] = g.to_double() * xn;
        denom += weight[static_cast<size_t>(r)];
        xn *= x;
    }
    if (!(denom > 0.0)) {
        throw spec_error("energy_distribution: non-positive normalization");
    }

    // Geometric tail estimate from the last retained term; the admissible-x
    // precondition makes the ratio strictly below one for the presets.
    double ratio = 1.0;
    if (dos.lattice.is_preset() && dos.lattice.preset_kind() != Preset::Kagome) {
        double xc = critical_x(dos.lattice.preset_kind()).to_double();
        ratio = (x / xc) * (x / xc);
    } else {
        ratio = x;  // crude but conservative for x << 1
    }
    double last = std::abs(weight[static_cast<size_t>(truncation)]);
    if (truncation >= 1) last = std::max(last, std::abs(weight[static_cast<size_t>(truncation - 1)]));
    dist.tail_estimate = ratio < 1.0 ? last * ratio / (1.0 - ratio) / denom : 1.0;
    if (dist.tail_estimate > 1e-6) {
        throw spec_error("energy_distribution: truncation too small, tail mass estimate " +
                         std::to_string(dist.tail_estimate) + " exceeds 1e-6");
    }

    dist.p.resize(weight.size());
    double sum = 0.0;
    for (size_t r = 0; r < weight.size(); ++r) sum += weight[r];
    for (size_t r = 0; r < weight.size(); ++r) dist.p[r] = weight[r] / sum;
    return dist;
}

}  // namespace isingx
