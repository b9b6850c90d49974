#include "rimwalk/identities.hpp"

#include "rimwalk/character.hpp"
#include "rimwalk/errors.hpp"
#include "rimwalk/parallel.hpp"
#include "rimwalk/strip.hpp"
#include "rimwalk/virtual_character.hpp"

namespace rimwalk {

IntPolynomial poly_p(const Partition& nu, int n) {
  if (!in_theorem_range(nu.size(), n))
    throw OutOfRange("p_{nu,n} needs n >= 2|nu|+2");
  const auto g = going_around(nu, n);
  g.require_regular();
  std::vector<BigInt> c(1, 0);
  for (const auto& s : g.strips) c.push_back(dimension(s.outer()));
  return IntPolynomial(std::move(c));
}

IntPolynomial poly_p_table(const Partition& nu, int n) {
  return poly_p(nu, n).divide_by_t_power(1);
}

bool ConjectureRow::consistent() const {
  if (multiplicity != expected_multiplicity()) return false;
  if (n % 2 == 1 && q_at_minus1 != -2) return false;
  return positive && unimodal;
}

ConjectureRow conjecture_row(int n) {
  ConjectureRow row;
  row.n = n;
  auto r = unit_root_multiplicity(poly_p_table(Partition{1}, n));
  row.multiplicity = r.multiplicity;
  row.quotient = std::move(r.quotient);
  row.q_at_minus1 = row.quotient(-1);
  row.positive = coefficients_positive(row.quotient);
  row.unimodal = coefficients_unimodal(row.quotient);
  row.palindromic = coefficients_palindromic(row.quotient);
  return row;
}

std::vector<ConjectureRow> check_conjectures(int n_lo, int n_hi, int jobs) {
  if (n_lo < 4) throw OutOfRange("conjecture scan needs n >= 4");
  if (n_hi < n_lo) return {};
  std::vector<ConjectureRow> rows(static_cast<std::size_t>(n_hi - n_lo + 1));
  parallel_for(rows.size(), jobs, [&](std::size_t i) {
    rows[i] = conjecture_row(n_lo + static_cast<int>(i));
  });
  return rows;
}

std::vector<Partition> an_shapes(int n) {
  if (n < 4) throw OutOfRange("A_n needs n >= 4");
  std::vector<Partition> out{Partition{n}};
  for (int r = n - 2; r >= 2; --r) out.push_back(special_shape(n, r));
  out.push_back(Partition::rectangle(1, n));
  return out;
}

BigInt an_sum_closed(int n) { return BigInt(n - 4) * pow2(n - 2) + 4; }

BigInt an_sum(int n) {
  BigInt total = 0;
  for (const auto& lambda : an_shapes(n)) total += dimension(lambda);
  const BigInt closed = an_sum_closed(n);
  if (total != closed)
    throw IdentityViolation("A_" + std::to_string(n) + " dimension sum " +
                            total.str() + " != " + closed.str());
  return total;
}

BigRational wz_sum(int n) {
  if (n < 4) throw OutOfRange("wz_sum needs n >= 4");
  BigRational total = 0;
  const BigInt front = BigInt(n) * (n - 2) * (n - 3);
  for (int r = 2; r <= n - 2; ++r)
    total += BigRational(front * binomial(n - 4, r - 2), BigInt(r) * (n - r));
  return total;
}

BigInt alternating_dim_sum(const Partition& nu, int n) {
  if (!in_theorem_range(nu.size(), n))
    throw OutOfRange("alternating dimension sum needs n >= 2|nu|+2");
  const auto g = going_around(nu, n);
  g.require_regular();
  BigInt total = 0;
  for (std::size_t j = 1; j <= g.strips.size(); ++j) {
    if (j % 2) total -= dimension(g.strips[j - 1].outer());
    else total += dimension(g.strips[j - 1].outer());
  }
  if (total != 0)
    throw IdentityViolation("alternating dimension sum around " +
                            nu.to_string() + " at n=" + std::to_string(n) +
                            " is " + total.str());
  return total;
}

BigInt binomial_alternating_sum(int n) {
  BigInt total = 0;
  for (int j = 1; j <= n; ++j) {
    if (j % 2) total -= binomial(n - 1, j - 1);
    else total += binomial(n - 1, j - 1);
  }
  return total;
}

std::vector<IdentityCheck> verify_recurrence(int n_hi) {
  if (n_hi < 4) throw OutOfRange("recurrence starts at n = 4");
  std::vector<IdentityCheck> out;
  auto g = [](int n) {
    BigInt total = 0;
    for (const auto& lambda : an_shapes(n)) total += dimension(lambda);
    return total - 2;
  };
  BigInt prev = g(4);
  out.push_back({"recurrence", "n=4", prev, 2});
  for (int n = 5; n <= n_hi; ++n) {
    BigInt cur = g(n);
    out.push_back({"recurrence", "n=" + std::to_string(n), cur,
                   2 * prev + pow2(n - 2) - 2});
    prev = cur;
  }
  return out;
}

std::vector<IdentityCheck> verify_identities(int n_max) {
  std::vector<IdentityCheck> out;
  for (int n = 4; n <= n_max; ++n) {
    const std::string subject = "n=" + std::to_string(n);
    BigInt lhs = 0;
    for (const auto& lambda : an_shapes(n)) lhs += dimension(lambda);
    out.push_back({"an_sum", subject, lhs, an_sum_closed(n)});

    // Cross-multiplied: equal iff the reduced sum is exactly the integer.
    const BigRational wz = wz_sum(n);
    const BigInt wz_rhs = BigInt(n - 4) * pow2(n - 2) + 2;
    out.push_back({"wz_sum", subject, numerator(wz), wz_rhs * denominator(wz)});
  }
  if (n_max >= 4)
    for (auto& c : verify_recurrence(n_max)) out.push_back(std::move(c));
  for (int n = 2; n <= n_max; ++n)
    out.push_back({"binomial_alternating", "n=" + std::to_string(n),
                   binomial_alternating_sum(n), 0});
  for (int k = 0; k <= 4; ++k) {
    for (const auto& nu : enumerate_partitions(k)) {
      for (int n = 2 * k + 2; n <= std::min(2 * k + 10, n_max); ++n) {
        BigInt v = poly_p(nu, n)(-1);
        out.push_back({"alternating_dim_sum",
                       "nu=" + format_partition(nu) + " n=" + std::to_string(n),
                       v, 0});
      }
    }
  }
  return out;
}

}  // namespace rimwalk
