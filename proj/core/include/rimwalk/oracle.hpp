#ifndef RIMWALK_ORACLE_HPP
#define RIMWALK_ORACLE_HPP

#include <map>
#include <vector>

#include "rimwalk/bigint.hpp"
#include "rimwalk/partition.hpp"

namespace rimwalk {

/*
  Character values without the Murnaghan-Nakayama rule.

  In n variables, p_mu = sum_theta chi^theta_mu s_theta. Both p_mu (a product
  of power sums) and every s_theta (a sum over semistandard tableaux) are
  expanded into monomials. s_theta has leading monomial x^theta and all its
  other monomials x^alpha have alpha strictly dominated by theta, so walking
  Par(n) in reverse lexicographic order and peeling the coefficient of
  x^theta recovers chi^theta_mu one shape at a time.

  Exponential in n; limited to n <= 7.
*/
class SymmetricFunctionOracle {
 public:
  static constexpr int kMaxSize = 7;

  using Exponents = std::vector<int>;
  using Polynomial = std::map<Exponents, BigInt>;

  /// Throws OutOfRange past kMaxSize, SizeMismatch if sizes differ.
  BigInt character(const Partition& lambda, const Partition& mu);

  /// chi^theta_mu for every theta of |mu|, canonical order.
  std::vector<BigInt> column(const Partition& mu);

  static Polynomial power_sum_product(const Partition& mu, int variables);
  static Polynomial schur(const Partition& theta, int variables);

 private:
  const Polynomial& cached_schur(const Partition& theta);

  std::map<Partition, Polynomial> schur_cache_;
};

/// Convenience wrapper over a fresh oracle.
BigInt character_oracle(const Partition& lambda, const Partition& mu);

}  // namespace rimwalk

#endif  // RIMWALK_ORACLE_HPP
