#ifndef RIMWALK_BIGINT_HPP
#define RIMWALK_BIGINT_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rimwalk {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);

/// C(n, r); zero when r < 0 or r > n.
BigInt binomial(int n, int r);

BigInt pow2(int e);

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace rimwalk

#endif  // RIMWALK_BIGINT_HPP
