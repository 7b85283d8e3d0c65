#pragma once

#include <stdexcept>
#include <string>

namespace gpcert {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input outside the range the algorithm supports deterministically.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Mathematically invalid argument (e.g. a ≡ 0 mod p for an order query).
class DomainError : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Operation needs the enumerable regime (discrete-log table) and p is beyond it.
class RegimeError : public Error {
public:
    using Error::Error;
};

/// A precondition on numeric parameters failed; the message names the inequality.
class ParameterError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

/// Two evaluation routes that must agree did not.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace gpcert
