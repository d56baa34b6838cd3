#pragma once

#include <stdexcept>
#include <string>

namespace monocurve {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Exponent vectors of mismatched length, or indices out of range.
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& what) : Error(what) {}
};

/// Two operands live in different rings.
class RingMismatchError : public Error {
public:
    explicit RingMismatchError(const std::string& what) : Error(what) {}
};

/// Leading term of the zero polynomial, or a zero input where nonzero is required.
class ZeroPolynomialError : public Error {
public:
    explicit ZeroPolynomialError(const std::string& what) : Error(what) {}
};

/// A precondition stated by an operation's contract was violated.
class ContractError : public Error {
public:
    explicit ContractError(const std::string& what) : Error(what) {}
};

/// Ideal turned out to be the unit ideal where a proper ideal was required.
class UnitIdealError : public Error {
public:
    explicit UnitIdealError(const std::string& what) : Error(what) {}
};

/// Input exceeds the documented scale guard for an expensive computation.
class ScaleGuardError : public Error {
public:
    explicit ScaleGuardError(const std::string& what) : Error(what) {}
};

/// Integer overflow in exponent or coefficient bookkeeping.
class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& what) : Error(what) {}
};

/// Matrix assembly rules wrote conflicting values to one cell, or out of range.
class AssemblyError : public Error {
public:
    explicit AssemblyError(const std::string& what) : Error(what) {}
};

/// A supplied exactness certificate is unusable (e.g. its minor vanishes).
class CertificateError : public Error {
public:
    explicit CertificateError(const std::string& what) : Error(what) {}
};

/// Malformed text input (polynomial parser, CLI argument payloads).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace monocurve
