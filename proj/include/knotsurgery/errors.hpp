#pragma once

#include <stdexcept>
#include <string>

namespace knotsurgery {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class VariableMismatch : public Error {
public:
    using Error::Error;
};

class UnknownVariable : public Error {
public:
    using Error::Error;
};

class ExponentOverflow : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class NotDivisible : public Error {
public:
    using Error::Error;
};

class NotSymmetrizable : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class UnsupportedPresentation : public Error {
public:
    using Error::Error;
};

// A computation that must succeed by construction did not; indicates a bug
// in the invariant pipeline rather than bad input.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

class CapExhausted : public Error {
public:
    using Error::Error;
};

} // namespace knotsurgery
