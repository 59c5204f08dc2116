#pragma once

#include <stdexcept>
#include <string>

namespace alo {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands tagged with different scales were combined.
class ScaleMismatch : public Error {
public:
    using Error::Error;
};

/// A value lies outside the open domain of its scale.
class DomainError : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

/// Interval built with lo > hi.
class OrderViolation : public Error {
public:
    using Error::Error;
};

/// Operation requires a (G- or [G]-) reciprocal matrix.
class NotReciprocal : public Error {
public:
    using Error::Error;
};

/// Index computation needs at least three alternatives.
class OrderTooSmall : public Error {
public:
    using Error::Error;
};

/// Exhaustive permutation search refused above the configured cap.
class OrderTooLargeForSearch : public Error {
public:
    using Error::Error;
};

/// Malformed matrix file or JSON document.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace alo
