#pragma once

#include <cstdint>
#include <stdexcept>

namespace sobranch {

/// Multiplicities, partition counts and Laurent coefficients.
using Count = std::int64_t;

/// Input outside the mathematical domain of an operation (bad rank,
/// non-dominant weight, n below the family minimum, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A theorem hypothesis required by a closed formula does not hold.
/// Callers are expected to fall back to another method.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A generating function that should be an antisymmetric half-integral
/// series with non-negative coefficients is not.
class MalformedSeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal identity failed (negative residual, negative alternating
/// sum). Always a bug, never a data condition.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Count checked_add(Count a, Count b);
Count checked_mul(Count a, Count b);

}  // namespace sobranch
