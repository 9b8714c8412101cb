#pragma once

#include <stdexcept>
#include <string>

namespace netdyn {

// Base for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mismatched space kinds / word depths / nets from different spaces.
struct ShapeError : Error {
    using Error::Error;
};

// Point outside a system's space, or an exact orbit leaving its net.
struct DomainError : Error {
    using Error::Error;
};

// A declared precondition does not hold (names the offending element).
struct ContractError : Error {
    using Error::Error;
};

// Operation not defined for this system kind (e.g. branch solves on the
// logistic map).
struct UnsupportedSystemError : Error {
    using Error::Error;
};

// A configured cap was exceeded; `stage` names the capped stage.
struct ResourceError : Error {
    std::string stage;
    ResourceError(std::string stage_, const std::string& what_)
        : Error(what_), stage(std::move(stage_)) {}
};

// Bad CLI flags / config files.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace netdyn
