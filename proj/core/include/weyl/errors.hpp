#pragma once

#include <stdexcept>
#include <string>

namespace weyl {

/// Precondition violated by caller-supplied data (bad grid size, non-normalized state, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Damped Newton in the deformation inverse did not reach tolerance, or converged
/// outside the verified sub-region.
class NoConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Four-vector handed to the deformation inverse is not null.
class OffShellInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Basis change whose Jacobian at the origin is not the identity.
class InvalidMap : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Symbolic input exceeds the truncation degree.
class DegreeOverflow : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace weyl
