#pragma once

#include <stdexcept>
#include <string>

namespace ncprob {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// A required marginal moment lies beyond the truncation of its functional.
class DegreeOverflow : public Error {
public:
    using Error::Error;
};

/// An inverse transform was requested for a measure whose first moment vanishes.
class ZeroFirstMoment : public Error {
public:
    using Error::Error;
};

/// Index sequence with two equal neighbours.
class InvalidSequence : public Error {
public:
    using Error::Error;
};

/// Outermost block does not contain both endpoints of the ground set.
class InvalidOutermost : public Error {
public:
    using Error::Error;
};

class IncompleteTable : public Error {
public:
    using Error::Error;
};

class WordTooLong : public Error {
public:
    using Error::Error;
};

}  // namespace ncprob
