#pragma once

#include <stdexcept>
#include <string>

namespace fockcas {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mode index parity does not match the sector of the target vector.
class SectorError : public Error {
public:
    explicit SectorError(const std::string& msg) : Error(msg) {}
};

// Malformed element/rational/index text.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Whittaker data with vanishing leading entry.
class DegenerateType : public Error {
public:
    explicit DegenerateType(const std::string& msg) : Error(msg) {}
};

// Parameter tuple too short to define a Whittaker vector (s would be < 2).
class NotWhittaker : public Error {
public:
    explicit NotWhittaker(const std::string& msg) : Error(msg) {}
};

// The inverse type map needs a square root that does not exist in Q.
class IrrationalParameter : public Error {
public:
    explicit IrrationalParameter(const std::string& msg) : Error(msg) {}
};

// Input outside an operation's domain, e.g. repeated interpolation points.
class DegenerateInput : public Error {
public:
    explicit DegenerateInput(const std::string& msg) : Error(msg) {}
};

// A structural invariant failed; indicates a bug, not bad input.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

} // namespace fockcas
