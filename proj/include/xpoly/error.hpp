#pragma once

#include <stdexcept>
#include <string>

namespace xpoly {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid or ineligible input: bad gaps, modulus mismatch, duplicate cycle,
/// unknown vertex, empty complex, ineligible k.  CLI exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

/// A supplied partition failed verification: coverage gap or overlap,
/// certification failure, skeleton violation.  CLI exit code 3.
class VerifyError : public Error {
public:
    using Error::Error;
};

/// The decomposer could not construct a valid partition (closed form and
/// search both failed, or the search space was exhausted).  CLI exit code 4.
class ConstructionError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input (difference cycle notation, JSON documents).
/// CLI exit code 5.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace xpoly
