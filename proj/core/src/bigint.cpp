#include "rimwalk/bigint.hpp"

#include <stdexcept>

namespace rimwalk {

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  BigInt c = 1;
  for (int i = 1; i <= r; ++i) {
    c *= n - r + i;
    c /= i;
  }
  return c;
}

BigInt pow2(int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  BigInt r = 1;
  r <<= e;
  return r;
}

}  // namespace rimwalk
