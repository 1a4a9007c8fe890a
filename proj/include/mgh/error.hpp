#pragma once

#include <stdexcept>
#include <string>

namespace mgh {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Unparseable or ill-formed data: bad file syntax, zero coordinate vectors,
// mixed-mode matrices, composite moduli.  CLI exit code 2.
class MalformedInputError : public Error {
public:
    using Error::Error;
};

// Well-formed input an operation cannot accept: wrong arity, non-artinian
// staircase where a finite complement is needed, resolution of a non-ACM
// set, peeling a single fiber.  CLI exit code 1.
class DomainError : public Error {
public:
    using Error::Error;
};

// A cross-check that is mathematically guaranteed has failed; always a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace mgh
