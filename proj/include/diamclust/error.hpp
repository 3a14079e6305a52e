#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diamclust {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments or inputs (dimension mismatch, bad file, bad flag value).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidInput {
 public:
  DimensionMismatch(std::size_t expected, std::size_t got)
      : InvalidInput("dimension mismatch: expected " + std::to_string(expected) + ", got " +
                     std::to_string(got)) {}
};

/// A mathematical precondition of an algorithm does not hold for the instance.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class NotPositiveDefinite : public PreconditionFailed {
 public:
  NotPositiveDefinite(std::size_t pivot_index, double pivot)
      : PreconditionFailed("matrix is not positive definite (pivot " +
                           std::to_string(pivot_index) + " = " + std::to_string(pivot) + ")"),
        pivot_index_(pivot_index),
        pivot_(pivot) {}

  std::size_t pivot_index() const { return pivot_index_; }
  double pivot() const { return pivot_; }

 private:
  std::size_t pivot_index_;
  double pivot_;
};

class EigenvalueConditionFailed : public PreconditionFailed {
 public:
  explicit EigenvalueConditionFailed(double min_eigenvalue)
      : PreconditionFailed("eigenvalue condition failed: minimum eigenvalue " +
                           std::to_string(min_eigenvalue) + " is not above -2"),
        min_eigenvalue_(min_eigenvalue) {}

  double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

class NotThreeRegular : public PreconditionFailed {
 public:
  using PreconditionFailed::PreconditionFailed;
};

/// Edge/non-edge distance condition on a caller-supplied embedding is violated.
class ConditionViolated : public PreconditionFailed {
 public:
  ConditionViolated(std::size_t u, std::size_t v, double distance, const std::string& what)
      : PreconditionFailed("condition violated for pair (" + std::to_string(u) + ", " +
                           std::to_string(v) + ") at distance " + std::to_string(distance) +
                           ": " + what),
        u_(u),
        v_(v),
        distance_(distance) {}

  std::size_t u() const { return u_; }
  std::size_t v() const { return v_; }
  double distance() const { return distance_; }

 private:
  std::size_t u_, v_;
  double distance_;
};

class OracleCapExceeded : public PreconditionFailed {
 public:
  OracleCapExceeded(std::size_t n, std::size_t cap)
      : PreconditionFailed("exact oracle limited to " + std::to_string(cap) + " points, got " +
                           std::to_string(n)) {}
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

class DistortionNotAchieved : public Error {
 public:
  DistortionNotAchieved(std::size_t u, std::size_t v, double distortion, int attempts)
      : Error("random projection exceeded distortion bound after " + std::to_string(attempts) +
              " attempts; worst pair (" + std::to_string(u) + ", " + std::to_string(v) +
              ") distortion " + std::to_string(distortion)),
        u_(u),
        v_(v),
        distortion_(distortion) {}

  std::size_t u() const { return u_; }
  std::size_t v() const { return v_; }
  double distortion() const { return distortion_; }

 private:
  std::size_t u_, v_;
  double distortion_;
};

/// A solver returned something that fails its own stated guarantee on re-verification.
class GuaranteeViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace diamclust
