#pragma once

#include <stdexcept>
#include <string>

namespace phasesfs {

// Errors split into two families so that callers (and the CLI) can map them
// to coarse outcomes: bad input versus a numerical failure during evaluation.

/// Raised when an input violates a documented precondition.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a computation cannot be completed at the requested accuracy.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

class InvalidSampleSize : public ValidationError {
public:
    explicit InvalidSampleSize(const std::string& what) : ValidationError(what) {}
};

class SampleSizeTooLarge : public ValidationError {
public:
    explicit SampleSizeTooLarge(const std::string& what) : ValidationError(what) {}
};

class DimensionMismatch : public ValidationError {
public:
    explicit DimensionMismatch(const std::string& what) : ValidationError(what) {}
};

class AllZeroReward : public ValidationError {
public:
    explicit AllZeroReward(const std::string& what) : ValidationError(what) {}
};

class AllZeroMask : public ValidationError {
public:
    explicit AllZeroMask(const std::string& what) : ValidationError(what) {}
};

class NonPositiveCoefficient : public ValidationError {
public:
    explicit NonPositiveCoefficient(const std::string& what) : ValidationError(what) {}
};

class BlockMatrixTooLarge : public ValidationError {
public:
    explicit BlockMatrixTooLarge(const std::string& what) : ValidationError(what) {}
};

class UnknownName : public ValidationError {
public:
    explicit UnknownName(const std::string& what) : ValidationError(what) {}
};

class DomainError : public ValidationError {
public:
    explicit DomainError(const std::string& what) : ValidationError(what) {}
};

class SingularMatrix : public NumericalError {
public:
    explicit SingularMatrix(const std::string& what) : NumericalError(what) {}
};

class GridTooCoarse : public NumericalError {
public:
    explicit GridTooCoarse(const std::string& what) : NumericalError(what) {}
};

}  // namespace phasesfs
