#include "rimwalk/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "rimwalk/errors.hpp"

namespace rimwalk {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::t_plus_one_pow(int m) {
  std::vector<BigInt> c;
  for (int i = 0; i <= m; ++i) c.push_back(binomial(m, i));
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, int power) {
  std::vector<BigInt> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

BigInt IntPolynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

BigInt IntPolynomial::operator()(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPolynomial::Division IntPolynomial::divide_by_t_plus_one() const {
  if (coeffs_.empty()) return {};
  // Horner at -1, highest coefficient first.
  std::vector<BigInt> q(coeffs_.size() - 1);
  BigInt carry = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    carry = coeffs_[i] - carry;
    if (i > 0) q[i - 1] = carry;
  }
  return {IntPolynomial(std::move(q)), carry};
}

IntPolynomial IntPolynomial::divide_by_t_power(int power) const {
  for (int i = 0; i < power && i <= degree(); ++i)
    if (coeffs_[static_cast<std::size_t>(i)] != 0)
      throw IdentityViolation("polynomial is not divisible by t^" +
                              std::to_string(power));
  if (power > degree()) return {};
  return IntPolynomial(
      std::vector<BigInt>(coeffs_.begin() + power, coeffs_.end()));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    BigInt c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (c < 0) {
      os << '-';
      c = -c;
    } else if (!first) {
      os << '+';
    }
    if (c != 1 || i == 0) os << c;
    if (i >= 1) os << 't';
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return os.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = a.coefficient(static_cast<int>(i)) + b.coefficient(static_cast<int>(i));
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = a.coefficient(static_cast<int>(i)) - b.coefficient(static_cast<int>(i));
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

RootMultiplicity unit_root_multiplicity(const IntPolynomial& p) {
  if (p.is_zero())
    throw ZeroPolynomial("(t+1)-multiplicity of the zero polynomial");
  RootMultiplicity r{0, p};
  for (;;) {
    auto div = r.quotient.divide_by_t_plus_one();
    if (div.remainder != 0) return r;
    ++r.multiplicity;
    r.quotient = std::move(div.quotient);
  }
}

bool coefficients_positive(const IntPolynomial& p) {
  if (p.is_zero()) return false;
  return std::all_of(p.coefficients().begin(), p.coefficients().end(),
                     [](const BigInt& c) { return c > 0; });
}

bool coefficients_unimodal(const IntPolynomial& p) {
  const auto& c = p.coefficients();
  bool falling = false;
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] > c[i - 1]) {
      if (falling) return false;
    } else if (c[i] < c[i - 1]) {
      falling = true;
    }
  }
  return true;
}

bool coefficients_palindromic(const IntPolynomial& p) {
  const auto& c = p.coefficients();
  return std::equal(c.begin(), c.begin() + static_cast<long>(c.size() / 2),
                    c.rbegin());
}

}  // namespace rimwalk
