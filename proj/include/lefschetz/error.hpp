#pragma once

#include <stdexcept>
#include <string>

namespace lefschetz {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition or type invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Level fails the necessary torsion-freeness condition and no override was given.
class TorsionUnverified : public Error {
public:
    using Error::Error;
};

class NotFuchsian : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// A brute-force oracle was asked for more states than its cap allows.
class SearchSpaceExceeded : public Error {
public:
    using Error::Error;
};

/// Operation needs data the field descriptor cannot supply.
class UnsupportedField : public Error {
public:
    using Error::Error;
};

}  // namespace lefschetz
