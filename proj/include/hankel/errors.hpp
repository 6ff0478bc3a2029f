#pragma once

#include <stdexcept>
#include <string>

namespace hankel {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A polynomial or grid exceeded a configured degree / size bound.
class DegreeOverflow : public Error {
public:
    using Error::Error;
};

/// An input violated an operation's domain (non-analytic input, bad parameters, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A direct summation would exceed its configured cost guard.
class CostGuard : public Error {
public:
    using Error::Error;
};

}  // namespace hankel
