#pragma once

#include <stdexcept>
#include <string>

namespace fibdyn {

// Common base so callers can catch everything the engine throws with one handler.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An intermediate value left the representable range of double.
class NumericOverflow : public Error {
public:
    explicit NumericOverflow(const std::string& what) : Error(what) {}
};

// A constant construction could not be completed (e.g. a sampled growth
// inequality failed, so the produced constants would be unsound).
class ConstructionFailed : public Error {
public:
    explicit ConstructionFailed(const std::string& what) : Error(what) {}
};

// Caller violated a documented requirement on the inputs.
class PreconditionViolated : public Error {
public:
    explicit PreconditionViolated(const std::string& what) : Error(what) {}
};

// The requested error tolerance cannot be met within the supplied budget.
class TolUnreachable : public Error {
public:
    explicit TolUnreachable(const std::string& what) : Error(what) {}
};

// The point lies outside the region where the requested quantity is defined.
class OutsideDomain : public Error {
public:
    explicit OutsideDomain(const std::string& what) : Error(what) {}
};

// Input fails a structural hypothesis (not a mere range check), e.g. the
// polynomial handed to the locus classifier has a nonzero constant or linear term.
class HypothesisViolated : public Error {
public:
    explicit HypothesisViolated(const std::string& what) : Error(what) {}
};

// Coordinates are undefined for this input (division by zero and the like).
class DegenerateInput : public Error {
public:
    explicit DegenerateInput(const std::string& what) : Error(what) {}
};

// Operation only implemented for the classical recurrence exponents (1,1).
class UnsupportedExponents : public Error {
public:
    explicit UnsupportedExponents(const std::string& what) : Error(what) {}
};

// Filesystem write/read failed.
class IoFailure : public Error {
public:
    explicit IoFailure(const std::string& what) : Error(what) {}
};

// Contour extraction found no closed curve at this resolution.
class NoContour : public Error {
public:
    explicit NoContour(const std::string& what) : Error(what) {}
};

} // namespace fibdyn
