#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

// Every failure raised by the library derives from Error, so callers (the CLI
// in particular) can report a single-line reason and exit nonzero.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class PoleError : public Error {
public:
    using Error::Error;
};

class DivisibilityError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class SizeError : public Error {
public:
    using Error::Error;
};

class DegeneracyError : public Error {
public:
    using Error::Error;
};

// A computed quantity disagreed with its closed form or with a second pipeline.
class IdentityViolation : public Error {
public:
    using Error::Error;
};

}  // namespace hecke
