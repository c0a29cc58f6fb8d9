#pragma once

#include <stdexcept>
#include <string>

namespace qo {

// Invalid input or internal inconsistency.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A decision needs terms beyond the available precision.
class Indeterminate : public Error {
public:
    explicit Indeterminate(const std::string& what) : Error("indeterminate at current precision: " + what) {}
};

// The input does not satisfy a theorem's hypothesis.
class HypothesisViolated : public Error {
public:
    explicit HypothesisViolated(const std::string& what) : Error("hypothesis violated: " + what) {}
};

// A constant is needed that the configured coefficient field cannot hold.
class Unrepresentable : public Error {
public:
    using Error::Error;
};

}  // namespace qo
