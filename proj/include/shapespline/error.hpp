#pragma once

#include <stdexcept>
#include <string>

namespace shapespline {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidPlane : public Error {
public:
    InvalidPlane() : Error("plane normal must be non-zero") {}
};

class DegenerateInput : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class NoIntersection : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class NonC1Joint : public Error {
public:
    using Error::Error;
};

/// Malformed or schema-invalid input documents.
class InputError : public Error {
public:
    using Error::Error;
};

} // namespace shapespline
