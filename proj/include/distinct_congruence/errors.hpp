#pragma once

#include <stdexcept>
#include <string>

namespace distinct_congruence {

// Every failure the library reports derives from Error. The category()
// string is what the CLI prints after "error:".
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* category() const noexcept = 0;
};

// Malformed call: empty lists, out-of-range sizes, bad flags.
class UsageError : public Error {
public:
    using Error::Error;
    const char* category() const noexcept override { return "usage"; }
};

// Argument outside the mathematical domain (n <= 0, negative binomial, ...).
class DomainError : public Error {
public:
    using Error::Error;
    const char* category() const noexcept override { return "domain"; }
};

// A theorem's hypothesis does not hold for the given input.
class PreconditionError : public Error {
public:
    using Error::Error;
    const char* category() const noexcept override { return "precondition"; }
};

// Work would exceed a configured cap.
class ResourceError : public Error {
public:
    using Error::Error;
    const char* category() const noexcept override { return "resource"; }
};

}  // namespace distinct_congruence
