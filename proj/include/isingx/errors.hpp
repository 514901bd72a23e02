#ifndef ISINGX_ERRORS_HPP
#define ISINGX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace isingx {

// Invalid input: bad lattice spec, precondition violation, malformed value.
// Maps to CLI exit code 2.
class spec_error : public std::runtime_error {
public:
    explicit spec_error(const std::string& what) : std::runtime_error(what) {}
};

// Request exceeds a configured resource guard (order, lattice size, ...).
// Maps to CLI exit code 3.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Approximate evaluation failed to reach its tolerance.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace isingx

#endif
