#pragma once

#include <stdexcept>
#include <string>

namespace nbhd {

/// Invalid user-supplied parameter (bad family size, out-of-range vertex, malformed input).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Operation undefined for the given value (zero ideal dual, non-forest input, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A checker's stated hypothesis does not hold for the instance.
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A configured size guard was exceeded. The message names the bound.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace nbhd
