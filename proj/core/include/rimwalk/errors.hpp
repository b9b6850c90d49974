#ifndef RIMWALK_ERRORS_HPP
#define RIMWALK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rimwalk {

/// Parts not weakly decreasing, or a non-positive part.
class InvalidPartition : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Shape and cycle type (or class) have different sizes.
class SizeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A skew shape that is disconnected or contains a 2x2 block.
class NotAStrip : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the domain an operation is defined on.
class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Two addable strips share a height, so "the j-th strip" is not well defined.
class AmbiguousOrdering : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// More than one (rho, S) decomposition of a shape.
class UniquenessViolated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An identity that must hold exactly evaluated to something else.
class IdentityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation that is undefined on the zero polynomial.
class ZeroPolynomial : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace rimwalk

#endif  // RIMWALK_ERRORS_HPP
