#ifndef RIMWALK_VIRTUAL_CHARACTER_HPP
#define RIMWALK_VIRTUAL_CHARACTER_HPP

#include <string>
#include <vector>

#include "rimwalk/character.hpp"
#include "rimwalk/partition.hpp"
#include "rimwalk/strip.hpp"

namespace rimwalk {

/// n >= 2k+2: the range in which going around is regular and decompositions
/// rho*S with |rho| = k are unique.
constexpr bool in_theorem_range(int k, int n) { return n >= 2 * k + 2; }

struct SignedShape {
  int sign = 1;
  Partition shape;
  /// Height of the strip shape/nu.
  int height = 0;
};

/*
  psi_{nu,n} = sum_j (-1)^(j+1) chi^(nu*S_j), where nu*S_1, nu*S_2, ... is
  the result of going around nu to size n. Term j carries sign (-1)^(j+1);
  in the theorem range this coincides with (-1)^(h(S_j)+1).
*/
struct VirtualCharacter {
  int n = 0;
  Partition nu;
  std::vector<SignedShape> terms;
  /// False when the strips were not of heights exactly 1..n-k.
  bool regular = true;

  int k() const { return nu.size(); }
};

/// Throws OutOfRange if n < |nu|+1 and AmbiguousOrdering if the going-around
/// sequence is not regular, unless `allow_irregular` is set, in which case
/// the sorted sequence is used and `regular` is false.
VirtualCharacter build_psi(const Partition& nu, int n,
                           bool allow_irregular = false);

BigInt eval_virtual(const VirtualCharacter& psi, const Partition& mu,
                    CharacterEvaluator& eval = default_evaluator());

/// chi^nu(mu-bar) * (n-k) if mu_1 = n-k, else 0.
BigInt theorem_rhs(const Partition& nu, int n, const Partition& mu,
                   CharacterEvaluator& eval = default_evaluator());

struct Mismatch {
  Partition nu;
  Partition mu;
  BigInt lhs;
  BigInt rhs;
  /// Which part of a multi-part check failed.
  std::string check;
};

struct VerificationReport {
  std::string target;
  int k = 0;
  int n = 0;
  /// n >= 2k+2; outside the range nothing is asserted and checked is 0.
  bool in_range = false;
  std::size_t checked = 0;
  std::vector<Mismatch> mismatches;

  bool pass() const { return in_range && mismatches.empty(); }
};

struct VerifyOptions {
  int jobs = 1;
  CharacterEvaluator* evaluator = nullptr;
};

/// psi_{nu,n}(mu) against theorem_rhs for every nu of k and every mu of n.
VerificationReport verify_theorem(int k, int n, const VerifyOptions& opts = {});

/// For every nu of k and mu of n:
///   "proposition":  sum_lambda chi^lambda_(n-k,nu) chi^lambda_mu
///                   == sum_rho chi^rho_nu psi_{rho,n}(mu)
///   "closed_form":  the same left side == |Z_{S_k}(nu)|(n-k) when
///                   mu_1 = n-k and mu-bar = nu, else 0.
VerificationReport verify_decomposition_identity(int k, int n,
                                                 const VerifyOptions& opts = {});

/// M[rho][j] = psi_{rho,n}((n-k, order_j)) against (n-k) chi^rho_(order_j)
/// ("M=K^T(n-k)") and sum_rho chi^rho_(order_i) M[rho][j] against
/// delta_ij |Z(order_i)| (n-k) ("KM=D(n-k)").
VerificationReport verify_matrix_identity(int k, int n,
                                          const VerifyOptions& opts = {});

/// |Z_{S_n}((n-k, nu))| against |Z_{S_k}(nu)| (n-k) for every nu of k.
VerificationReport verify_centralizer_split_report(int k, int n);
bool verify_centralizer_split(int k, int n);

}  // namespace rimwalk

#endif  // RIMWALK_VIRTUAL_CHARACTER_HPP
