#ifndef RIMWALK_POLYNOMIAL_HPP
#define RIMWALK_POLYNOMIAL_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "rimwalk/bigint.hpp"

namespace rimwalk {

/// Dense univariate polynomial in t with big-integer coefficients;
/// coefficients()[i] multiplies t^i. Trailing zeros are trimmed.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  /// (t+1)^m
  static IntPolynomial t_plus_one_pow(int m);
  static IntPolynomial monomial(const BigInt& c, int power);

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(int power) const;
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  BigInt operator()(const BigInt& t) const;

  struct Division;
  /// Synthetic division at t = -1.
  Division divide_by_t_plus_one() const;

  /// Divides by t^power; throws IdentityViolation if a dropped coefficient
  /// is nonzero.
  IntPolynomial divide_by_t_power(int power) const;

  std::string to_string() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

struct IntPolynomial::Division {
  IntPolynomial quotient;
  BigInt remainder;
};

struct RootMultiplicity {
  int multiplicity = 0;
  /// p = (t+1)^multiplicity * quotient, quotient(-1) != 0.
  IntPolynomial quotient;
};

/// Largest m with (t+1)^m dividing p; throws ZeroPolynomial.
RootMultiplicity unit_root_multiplicity(const IntPolynomial& p);

/// Every coefficient from t^0 to the degree is > 0.
bool coefficients_positive(const IntPolynomial& p);
/// Coefficients rise weakly, then fall weakly.
bool coefficients_unimodal(const IntPolynomial& p);
bool coefficients_palindromic(const IntPolynomial& p);

}  // namespace rimwalk

#endif  // RIMWALK_POLYNOMIAL_HPP
