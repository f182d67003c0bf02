#ifndef OPSG_ERRORS_HPP
#define OPSG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace opsg {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input has too few points for the requested construction.
class DegenerateInput : public Error {
public:
    explicit DegenerateInput(const std::string& msg) : Error(msg) {}
};

// Angle query with coincident ray endpoints.
class DegenerateAngle : public Error {
public:
    explicit DegenerateAngle(const std::string& msg) : Error(msg) {}
};

// Point set fails the no-duplicate / no-collinear-triple requirements.
class InvalidPointSet : public Error {
public:
    explicit InvalidPointSet(const std::string& msg) : Error(msg) {}
};

class PointNotExterior : public Error {
public:
    explicit PointNotExterior(const std::string& msg) : Error(msg) {}
};

class NotConvexPosition : public Error {
public:
    explicit NotConvexPosition(const std::string& msg) : Error(msg) {}
};

class NotHullVertex : public Error {
public:
    explicit NotHullVertex(const std::string& msg) : Error(msg) {}
};

class NotHullEdge : public Error {
public:
    explicit NotHullEdge(const std::string& msg) : Error(msg) {}
};

// A construction failed to validate its own postcondition. Signals an
// implementation bug in a case analysis, never a property of the input.
class ConstructionInvariantViolated : public Error {
public:
    explicit ConstructionInvariantViolated(const std::string& msg) : Error(msg) {}
};

// Caller passed arguments that violate a documented precondition.
class PreconditionViolated : public Error {
public:
    explicit PreconditionViolated(const std::string& msg) : Error(msg) {}
};

// Exhaustive enumeration refused: instance exceeds the hard size cap.
class OracleTooLarge : public Error {
public:
    explicit OracleTooLarge(const std::string& msg) : Error(msg) {}
};

// Generator parameters do not match the family's shape constraints.
class BadShape : public Error {
public:
    explicit BadShape(const std::string& msg) : Error(msg) {}
};

// Malformed point or graph file.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace opsg

#endif
