#pragma once

#include <stdexcept>
#include <string>

namespace isophase {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidSubsetError : public Error {
public:
    using Error::Error;
};

class InvalidMapError : public Error {
public:
    using Error::Error;
};

class SizeError : public Error {
public:
    using Error::Error;
};

class ParameterError : public Error {
public:
    using Error::Error;
};

class RegionError : public Error {
public:
    using Error::Error;
};

/// Raised by the correlation bound when the overlap roles must be swapped.
class SymmetryError : public Error {
public:
    using Error::Error;
};

class ScaleError : public Error {
public:
    using Error::Error;
};

class StructuralError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace isophase
