#ifndef RIMWALK_IDENTITIES_HPP
#define RIMWALK_IDENTITIES_HPP

#include <string>
#include <vector>

#include "rimwalk/bigint.hpp"
#include "rimwalk/partition.hpp"
#include "rimwalk/polynomial.hpp"

namespace rimwalk {

/*
  Dimension polynomials of going around nu:

    p_{nu,n}(t) = sum_{j=1}^{n-k} f^(nu*S_j) t^j        (poly_p)

  The constant term is always zero. The tabulated form divides out that
  factor of t, i.e. reads f^(nu*S_j) as the coefficient of t^(j-1)
  (poly_p_table). The two differ by exactly one factor of t, so
  (t+1)-multiplicities agree; positivity and the value of the quotient at
  -1 are taken on the tabulated form.
*/
IntPolynomial poly_p(const Partition& nu, int n);
IntPolynomial poly_p_table(const Partition& nu, int n);

/// One row of the (t+1)-divisibility scan for nu = (1).
struct ConjectureRow {
  int n = 0;
  int multiplicity = 0;
  IntPolynomial quotient;
  BigInt q_at_minus1 = 0;
  bool positive = false;
  bool unimodal = false;
  bool palindromic = false;

  int expected_multiplicity() const { return n % 2 == 0 ? 2 : 1; }
  /// Multiplicity as expected, q(-1) = -2 for odd n, positive and unimodal.
  /// Palindromicity is reported only.
  bool consistent() const;
};

ConjectureRow conjecture_row(int n);
std::vector<ConjectureRow> check_conjectures(int n_lo, int n_hi, int jobs = 1);

/// The shapes met when going around (1): (n), (1^n) and (r,2,1^(n-2-r)).
std::vector<Partition> an_shapes(int n);

/// (n-4) 2^(n-2) + 4
BigInt an_sum_closed(int n);

/// Sum of f^lambda over an_shapes(n), by hook lengths. Throws
/// IdentityViolation if it differs from an_sum_closed(n); needs n >= 4.
BigInt an_sum(int n);

/// Sum over 2 <= r <= n-2 of n(n-2)(n-3) / (r(n-r)) * C(n-4, r-2), in exact
/// rationals.
BigRational wz_sum(int n);

/// sum_{j=1}^{n-k} (-1)^j f^(nu*S_j); throws IdentityViolation if nonzero.
BigInt alternating_dim_sum(const Partition& nu, int n);

/// sum_{j=1}^{n} (-1)^j C(n-1, j-1); zero for n >= 2.
BigInt binomial_alternating_sum(int n);

struct IdentityCheck {
  std::string name;
  std::string subject;
  BigInt lhs = 0;
  BigInt rhs = 0;
  bool pass() const { return lhs == rhs; }
};

/// g(n) = an_sum(n) - 2: g(4) = 2 and g(n) = 2 g(n-1) + 2^(n-2) - 2 up to n_hi.
std::vector<IdentityCheck> verify_recurrence(int n_hi);

/// Every dimension identity for n up to n_max: the A_n sum, its rational
/// form, the recurrence, the binomial sum, and alternating dimension sums for
/// nu of size k <= 4 with 2k+2 <= n <= min(2k+10, n_max).
std::vector<IdentityCheck> verify_identities(int n_max);

}  // namespace rimwalk

#endif  // RIMWALK_IDENTITIES_HPP
