#pragma once

#include <stdexcept>
#include <string>

namespace spincorr {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NonHermitianInput : public Error {
public:
    explicit NonHermitianInput(const std::string& what) : Error(what) {}
};

class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& what) : Error(what) {}
};

class InvalidDimension : public Error {
public:
    explicit InvalidDimension(const std::string& what) : Error(what) {}
};

class IndexOutOfRange : public Error {
public:
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class SingularDenominator : public Error {
public:
    explicit SingularDenominator(const std::string& what) : Error(what) {}
};

class InconsistentShift : public Error {
public:
    explicit InconsistentShift(const std::string& what) : Error(what) {}
};

class DegenerateCrossings : public Error {
public:
    explicit DegenerateCrossings(const std::string& what) : Error(what) {}
};

class NonpositiveTemperature : public Error {
public:
    explicit NonpositiveTemperature(const std::string& what) : Error(what) {}
};

class InvalidState : public Error {
public:
    explicit InvalidState(const std::string& what) : Error(what) {}
};

class SweepError : public Error {
public:
    explicit SweepError(const std::string& what) : Error(what) {}
};

} // namespace spincorr
