#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hecke {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input outside an operation's domain (bad p, wrong letter, mixed fields, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A broken internal invariant. Never expected on valid input.
class InternalError : public Error {
public:
    using Error::Error;
};

/// Ordering two surds whose discriminants differ would need a second square-root layer.
class NotComparable : public DomainError {
public:
    using DomainError::DomainError;
};

/// A continued fraction expansion did not close into a cycle within the step bound.
class NotPeriodic : public DomainError {
public:
    using DomainError::DomainError;
};

/// The input describes a parabolic class (pure powers of V_1 or V_{p-1}).
class ParabolicError : public DomainError {
public:
    using DomainError::DomainError;
};

/// The matrix is a proper power of a primitive element.
class NonPrimitive : public DomainError {
public:
    NonPrimitive(int p, std::vector<int> root_letters, int exponent)
        : DomainError("matrix is the " + std::to_string(exponent) + "-th power of a primitive element"),
          p_(p), root_(std::move(root_letters)), exponent_(exponent) {}

    int p() const { return p_; }
    const std::vector<int>& root_letters() const { return root_; }
    int exponent() const { return exponent_; }

private:
    int p_;
    std::vector<int> root_;
    int exponent_;
};

/// Evaluation landed exactly on a pole.
class PoleHit : public DomainError {
public:
    explicit PoleHit(std::string pole)
        : DomainError("evaluation at a pole: " + pole), pole_(std::move(pole)) {}
    const std::string& pole() const { return pole_; }

private:
    std::string pole_;
};

}  // namespace hecke
