#pragma once

#include <stdexcept>
#include <string>

namespace wt {

// Base of every library error. Subclasses exist so callers can catch the
// precise condition; the three verification errors get their own branch
// because the CLI maps them to a distinct exit status.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed files, bundles, or digit strings.
class FormatError : public Error {
public:
    using Error::Error;
};

// Data failed an integrity check that signals a wrong key, wrong table,
// or corrupted frame rather than a malformed input.
class VerificationError : public Error {
public:
    using Error::Error;
};

class NonZeroPadding : public VerificationError {
public:
    using VerificationError::VerificationError;
};

class KeystreamMismatch : public VerificationError {
public:
    using VerificationError::VerificationError;
};

class UnknownCodeword : public VerificationError {
public:
    using VerificationError::VerificationError;
};

class Overflow : public Error {
public:
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

class NotInteger : public Error {
public:
    using Error::Error;
};

class Unrepresentable : public Error {
public:
    using Error::Error;
};

class DigitOutOfRange : public Error {
public:
    using Error::Error;
};

class CapacityExceeded : public Error {
public:
    using Error::Error;
};

class UnknownSymbol : public Error {
public:
    using Error::Error;
};

class UnknownLetter : public Error {
public:
    using Error::Error;
};

class UnalignedLength : public Error {
public:
    using Error::Error;
};

class BadLength : public Error {
public:
    using Error::Error;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

class CorpusTooSmall : public Error {
public:
    using Error::Error;
};

} // namespace wt
