#ifndef ISINGX_IO_HPP
#define ISINGX_IO_HPP

#include <json.hpp>

#include <string>

#include "isingx/expansion.hpp"
#include "isingx/oracle.hpp"
#include "isingx/states.hpp"

namespace isingx {
namespace io {

// Every exact value is serialized as a canonical rational string ("p" or
// "p/q"), never a float; approximate outputs carry an explicit "approx" flag.
// nlohmann::json keeps object keys sorted, so output is byte-stable.

nlohmann::json to_json(const FreeEnergySeries& fes);
nlohmann::json to_json(const DOSTable& dos);
nlohmann::json to_json(const PartitionPolynomial& z);
nlohmann::json vpoly_to_json(const VPoly& p);  // {"V^1": "-3/2", ...} or plain string

std::string to_csv(const FreeEnergySeries& fes);
std::string to_csv(const DOSTable& dos);
std::string to_csv(const PartitionPolynomial& z);

std::string dump(const nlohmann::json& j);  // stable 2-space indent + newline

}  // namespace io
}  // namespace isingx

#endif
