#pragma once

#include <stdexcept>
#include <string>

namespace multiquad {

/// Precondition violation on caller-supplied input (malformed radicand, bad prime, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed quantity contradicts an identity it must satisfy
/// (non-integral class number, non-2-power unit index, ...).
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Interval evaluation could not separate the answer at the largest working precision.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A unit dataset failed to parse or to verify.
class DatasetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation needs a unit dataset that is not available.
class DatasetRequired : public std::runtime_error {
 public:
  explicit DatasetRequired(std::string field)
      : std::runtime_error("unit dataset required for field " + field), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace multiquad
