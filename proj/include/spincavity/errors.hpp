#pragma once

#include <stdexcept>
#include <string>

namespace spincavity {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Inconsistent cavity geometry or region layout.
class GeometryError : public Error {
public:
    using Error::Error;
};

// Mesh cannot honour the requested resolution.
class RefinementError : public Error {
public:
    using Error::Error;
};

// Malformed input file (spec file, material table, dataset CSV).
class ParseError : public Error {
public:
    using Error::Error;
};

// Eigen-iteration failed to converge.
class SolverError : public Error {
public:
    using Error::Error;
};

// Name not found in a registry (materials, dataset rows, region labels).
class LookupError : public Error {
public:
    using Error::Error;
};

// Filesystem operation failed (open, write, rename).
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace spincavity
