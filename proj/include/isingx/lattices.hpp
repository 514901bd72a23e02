#ifndef ISINGX_LATTICES_HPP
#define ISINGX_LATTICES_HPP

#include <optional>
#include <string>
#include <variant>

#include "isingx/rational.hpp"
#include "isingx/series.hpp"
#include "isingx/trigpoly.hpp"

namespace isingx {

enum class Preset { Square, Triangular, Hexagonal, Kagome };

std::string preset_name(Preset p);

// Bond assignment inside the nu=0 Utiyama elementary cell.  Zero means the
// bond is absent, Infinite contracts its two endpoints into one vertex.
enum class BondClass { Zero, Coupling, Infinite };

struct UtiyamaBonds {
    BondClass j = BondClass::Coupling;     // J
    BondClass j1 = BondClass::Coupling;    // J_1
    BondClass j0 = BondClass::Coupling;    // J_0
    BondClass j0up = BondClass::Coupling;  // J^0
    friend bool operator==(const UtiyamaBonds&, const UtiyamaBonds&) = default;

    int count(BondClass c) const;
    std::string str() const;  // e.g. "I,J,J,J" in the order J,J1,J0,J^0
};

class LatticeSpec {
public:
    static LatticeSpec preset(Preset p) { return LatticeSpec(p); }
    static LatticeSpec utiyama(const UtiyamaBonds& b);
    // Accepts "square", "triangular", "hexagonal", "kagome".
    static LatticeSpec parse(const std::string& name);
    // Accepts a 4-bond string over {0,J,I}: "I,J,J,J" or "IJJJ" (J,J1,J0,J^0).
    static LatticeSpec parse_utiyama(const std::string& bonds);

    bool is_preset() const { return std::holds_alternative<Preset>(kind_); }
    Preset preset_kind() const { return std::get<Preset>(kind_); }
    const UtiyamaBonds& utiyama_bonds() const { return std::get<UtiyamaBonds>(kind_); }

    std::string name() const;
    friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;

private:
    explicit LatticeSpec(Preset p) : kind_(p) {}
    explicit LatticeSpec(const UtiyamaBonds& b) : kind_(b) {}
    std::variant<Preset, UtiyamaBonds> kind_;
};

// Normalized integrand of the free-energy double integral:
//   -beta*phi = log2_constant*ln2 + log_x_prefactor*ln x
//               + site_divisor * <ln q(x; theta1, theta2)>
// where <.> is the (1/4pi^2) integral over [0,2pi]^2 (constant-mode
// extraction) and q has constant coefficient exactly 1.
struct Integrand {
    XSeries<TrigPoly> q;
    Rational log_x_prefactor;  // equals -E/(2V)
    Rational site_divisor;     // 1/(2(2-n_inf)) for nu=0; 1/6 for the kagome cell
    Rational log2_constant;

    // Sites in the elementary integration cell: 1/(2*site_divisor).
    long sites_per_cell() const;
};

Integrand build_integrand(const LatticeSpec& spec, int order);
// Generic nu=0 route; presets are cross-checked against it.
Integrand utiyama_integrand(const UtiyamaBonds& bonds, int order);
// Hard-coded nu=1, J1=inf cell.
Integrand kagome_integrand(int order);

Rational edge_density(const LatticeSpec& spec);  // E/(2V) in the bulk limit

// The nu=0 assignments realizing the three simple presets.
UtiyamaBonds preset_utiyama_bonds(Preset p);

// p_triangle = cos t1 + cos t2 + cos(t1+t2); p_hex = 3/2 + p_triangle.
TrigPoly p_triangular();
TrigPoly p_hexagonal();
TrigPoly p_square();  // cos t1 + cos t2

}  // namespace isingx

#endif
