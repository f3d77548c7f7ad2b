#pragma once

#include <stdexcept>
#include <string>

namespace ag {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

struct UnknownVariable : Error {
    UnknownVariable(const std::string& name, std::size_t position)
        : Error("unknown variable '" + name + "' (at position " +
                std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

struct VariableMismatch : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct InfiniteDimensional : Error {
    using Error::Error;
};

struct ImproperIdeal : Error {
    using Error::Error;
};

struct SingularBasis : Error {
    using Error::Error;
};

struct NotLocal : Error {
    using Error::Error;
};

struct NotGorenstein : Error {
    using Error::Error;
};

struct NotHomogeneous : Error {
    using Error::Error;
};

struct ElementNotInMaxIdeal : Error {
    using Error::Error;
};

struct UnitPartNotOne : Error {
    using Error::Error;
};

struct DegreeOutOfRange : Error {
    using Error::Error;
};

struct DegenerateQuadraticForm : Error {
    using Error::Error;
};

struct NotAComplement : Error {
    using Error::Error;
};

struct NotInsideKernel : Error {
    using Error::Error;
};

struct ZeroPolynomial : Error {
    using Error::Error;
};

struct FingerprintMismatch : Error {
    using Error::Error;
};

struct SingularC : Error {
    using Error::Error;
};

struct InputFileError : Error {
    using Error::Error;
};

}  // namespace ag
