#pragma once

#include <stdexcept>
#include <string>

namespace ioncoupler {

/// Bad or inconsistent input: wrong sign, missing field, unsupported combination.
/// CLI maps this to exit code 1.
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& what)
        : std::invalid_argument(what) {}
};

/// A computation failed numerically (singular system, non-finite state, no
/// convergence). CLI maps this to exit code 2.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what)
        : std::runtime_error(what) {}
};

/// Input is well-formed but the requested quantity is undefined for it
/// (e.g. cross-ion couplings with unequal trap frequencies). Exit code 1.
class unsupported_configuration : public validation_error {
public:
    explicit unsupported_configuration(const std::string& what)
        : validation_error(what) {}
};

} // namespace ioncoupler
