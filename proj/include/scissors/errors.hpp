#pragma once

#include <stdexcept>
#include <string>

namespace scissors {

// Physical or numerical parameter outside its admissible range.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Two objects that must share a Fock-space cutoff do not.
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Time integration lost accuracy (norm drift beyond the sentinel threshold).
class IntegrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace scissors
