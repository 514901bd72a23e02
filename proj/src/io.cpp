#include "isingx/io.hpp"

#include <sstream>

namespace isingx {
namespace io {

namespace {

std::string mode_name(DosMode m) {
    switch (m) {
        case DosMode::Bulk: return "bulk";
        case DosMode::FiniteSymbolic: return "finite-symbolic";
        case DosMode::FiniteAt: return "finite-at";
    }
    return "?";
}

}  // namespace

nlohmann::json vpoly_to_json(const VPoly& p) {
    if (p.degree() <= 0) return p.coefficient(0).str();
    nlohmann::json j = nlohmann::json::object();
    for (int k = 0; k <= p.degree(); ++k) {
        Rational c = p.coefficient(k);
        if (c.is_zero()) continue;
        j["V^" + std::to_string(k)] = c.str();
    }
    return j;
}

nlohmann::json to_json(const FreeEnergySeries& fes) {
    nlohmann::json j;
    j["schema"] = "1";
    j["kind"] = "free-energy-series";
    j["lattice"] = fes.lattice.name();
    j["order"] = fes.order;
    j["log_x_prefactor"] = fes.log_x_prefactor.str();
    j["log2_constant"] = fes.log2_constant.str();
    nlohmann::json terms = nlohmann::json::object();
    for (int n = 1; n <= fes.order; ++n) terms[std::to_string(n)] = fes.term(n).str();
    j["terms"] = terms;
    return j;
}

nlohmann::json to_json(const DOSTable& dos) {
    nlohmann::json j;
    j["schema"] = "1";
    j["kind"] = "states";
    j["lattice"] = dos.lattice.name();
    j["mode"] = mode_name(dos.mode);
    j["order"] = dos.order;
    if (dos.mode == DosMode::FiniteAt) j["V"] = dos.V;
    if (dos.exact_below >= 0) j["exact_below"] = dos.exact_below;
    nlohmann::json entries = nlohmann::json::object();
    for (int r = 0; r <= dos.order; ++r) entries[std::to_string(r)] = vpoly_to_json(dos.entry(r));
    j["entries"] = entries;
    return j;
}

nlohmann::json to_json(const PartitionPolynomial& z) {
    nlohmann::json j;
    j["schema"] = "1";
    j["kind"] = "partition-polynomial";
    j["lattice"] = z.lattice.name();
    j["symbolic"] = z.symbolic;
    if (!z.symbolic) j["V"] = z.V;
    j["factor"] = z.factor;
    j["edge_density"] = z.edge_density.str();
    j["log_x_exponent"] = "-" + z.edge_density.str() + "*V";
    nlohmann::json coeffs = nlohmann::json::object();
    for (size_t r = 0; r < z.coeffs.size(); ++r) {
        coeffs[std::to_string(r)] = vpoly_to_json(z.coeffs[r]);
    }
    j["coefficients"] = coeffs;
    return j;
}

std::string to_csv(const FreeEnergySeries& fes) {
    std::ostringstream os;
    os << "n,a_over_nfact\n";
    for (int n = 1; n <= fes.order; ++n) os << n << "," << fes.term(n).str() << "\n";
    return os.str();
}

std::string to_csv(const DOSTable& dos) {
    std::ostringstream os;
    os << "r,states\n";
    for (int r = 0; r <= dos.order; ++r) os << r << "," << dos.entry(r).str() << "\n";
    return os.str();
}

std::string to_csv(const PartitionPolynomial& z) {
    std::ostringstream os;
    os << "r,coefficient\n";
    for (size_t r = 0; r < z.coeffs.size(); ++r) os << r << "," << z.coeffs[r].str() << "\n";
    return os.str();
}

std::string dump(const nlohmann::json& j) {
    return j.dump(2) + "\n";
}

}  // namespace io
}  // namespace isingx
