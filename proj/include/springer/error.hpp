#ifndef SPRINGER_ERROR_HPP
#define SPRINGER_ERROR_HPP

#include <stdexcept>
#include <string>

namespace springer {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument outside the documented domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A malformed textual literal (partition, form label).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Two independent computations of the same quantity disagreed.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace springer

#endif  // SPRINGER_ERROR_HPP
