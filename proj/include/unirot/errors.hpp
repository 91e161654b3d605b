#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace unirot {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Checked 64-bit arithmetic left the representable range. Surfaced loudly
// instead of wrapping; callers that generate inputs may retry.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Input violates a documented precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A pair (or triple) of vectors that should form a lattice basis does not.
class NotUnimodularError : public ValidationError {
 public:
  NotUnimodularError(const std::string& what, std::int64_t det)
      : ValidationError(what), det_(det) {}
  std::int64_t det() const noexcept { return det_; }

 private:
  std::int64_t det_;
};

// Sequence validation failure: the adjacent pair starting at `index` is not
// a basis. Index is 0-based; for cycles the pair (d-1, 0) reports index d-1.
class NotUnimodularAtError : public NotUnimodularError {
 public:
  NotUnimodularAtError(const std::string& what, std::size_t index, std::int64_t det)
      : NotUnimodularError(what, det), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class TooShortError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ZeroVectorError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// The cycle does not match the local pattern an operation requires.
class PatternMismatchError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class PreconditionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NoRepeatError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class FragmentTooShortError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Curvature data is internally inconsistent (bad first nu, length mismatch,
// or an entry outside {-1,+1}).
class BadCurvatureError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotBasisError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ShapeMismatchError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotClosedError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class OrientationError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class FacetNotUnimodularError : public ValidationError {
 public:
  FacetNotUnimodularError(const std::string& what, std::size_t facet, std::int64_t det)
      : ValidationError(what), facet_(facet), det_(det) {}
  std::size_t facet() const noexcept { return facet_; }
  std::int64_t det() const noexcept { return det_; }

 private:
  std::size_t facet_;
  std::int64_t det_;
};

// A mathematically guaranteed condition failed. Always indicates a bug or a
// corrupted value, never bad user input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

class InternalInconsistencyError : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

// No window with curvature in {-1, 0, +1} was found in a valid cycle.
class LemmaViolatedError : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

// A closed cycle's curvature sum was not divisible by 12.
class NonIntegerRotationError : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

}  // namespace unirot
