#pragma once

#include <stdexcept>
#include <string>

namespace commalg {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), position(position) {}
    std::size_t position;
};

class AlphabetMismatch : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class NotInSubgroup : public Error {
public:
    explicit NotInSubgroup(const std::string& word)
        : Error("word not in subgroup: " + word), word(word) {}
    std::string word;
};

class WrongCount : public Error {
public:
    WrongCount(std::size_t expected, std::size_t got)
        : Error("wrong basis cardinality: expected " + std::to_string(expected) + ", got " +
                std::to_string(got)),
          expected(expected),
          got(got) {}
    std::size_t expected;
    std::size_t got;
};

class GeneratesProperSubgroup : public Error {
public:
    using Error::Error;
};

class NotInDomain : public Error {
public:
    explicit NotInDomain(const std::string& word)
        : Error("word not in commensurator domain: " + word), word(word) {}
    std::string word;
};

class AssignmentCollision : public Error {
public:
    using Error::Error;
};

class NoWitnessFound : public Error {
public:
    using Error::Error;
};

class ResiduallyFiniteCase : public Error {
public:
    using Error::Error;
};

class ZeroParameter : public Error {
public:
    using Error::Error;
};

/// Mixed signs with |m| != |n|: the construction is stated for the
/// sign-normalized regime only, so such inputs are rejected outright.
class MixedSigns : public Error {
public:
    using Error::Error;
};

class QuotientTooLarge : public Error {
public:
    using Error::Error;
};

}  // namespace commalg
