#ifndef RIMWALK_CHARACTER_HPP
#define RIMWALK_CHARACTER_HPP

#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "rimwalk/bigint.hpp"
#include "rimwalk/partition.hpp"

namespace rimwalk {

/*
  Irreducible characters of S_n by the Murnaghan-Nakayama rule:

    chi^lambda(mu) = sum over strips S of length mu_1 removable from lambda
                     of (-1)^(h(S)+1) chi^(lambda \ S)(mu_2, mu_3, ...)

  Parts of mu are consumed largest first. Intermediate values are kept in
  64-bit words; on overflow the evaluation is redone with big integers.

  The memo table is keyed by (shape, remaining cycle parts). It is shared by
  all calls on one evaluator and is safe for concurrent use: inserts are
  idempotent, so two threads computing the same entry is only wasted work.
*/
class CharacterEvaluator {
 public:
  explicit CharacterEvaluator(bool memoize = true) : memoize_(memoize) {}

  CharacterEvaluator(const CharacterEvaluator&) = delete;
  CharacterEvaluator& operator=(const CharacterEvaluator&) = delete;

  /// chi^lambda_mu. Throws SizeMismatch.
  BigInt value(const Partition& lambda, const Partition& mu);

  /// Same, or nullopt when an intermediate value overflows 64 bits.
  std::optional<std::int64_t> value_i64(const Partition& lambda,
                                        const Partition& mu);

  void clear();
  std::size_t cache_size() const;
  bool memoized() const { return memoize_; }

 private:
  struct Key {
    Partition shape;
    std::vector<int> cycles;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  std::optional<std::int64_t> eval_small(const Partition& lambda,
                                         std::span<const int> cycles);
  BigInt eval_big(const Partition& lambda, std::span<const int> cycles);

  bool memoize_;
  mutable std::shared_mutex mutex_;
  // nullopt marks a known overflow.
  std::unordered_map<Key, std::optional<std::int64_t>, KeyHash> cache_;
  std::unordered_map<Key, BigInt, KeyHash> big_cache_;
};

/// Process-wide evaluator used by the free functions below.
CharacterEvaluator& default_evaluator();

/// chi^lambda_mu via the default evaluator.
BigInt mn_character(const Partition& lambda, const Partition& mu);

/// f^lambda = n! / prod(hook lengths).
BigInt dimension(const Partition& lambda);

/// f^lambda for lambda = (r, 2, 1^(n-2-r)) from the closed form
/// n! / ((r-2)! (n-2-r)! r (n-r) (n-1)). Needs n >= 4, 2 <= r <= n-2.
BigInt special_dimension(int n, int r);

/// The shape (r, 2, 1^(n-2-r)).
Partition special_shape(int n, int r);

struct CharacterTable {
  int k = 0;
  /// Canonical order of Par(k); indexes both rows (shapes) and columns (classes).
  std::vector<Partition> order;
  /// entries[row rho][column nu] = chi^rho_nu.
  std::vector<std::vector<BigInt>> entries;
  /// |Z_{S_k}(nu)| per column.
  std::vector<BigInt> centralizers;

  std::size_t dim() const { return order.size(); }
  std::size_t index_of(const Partition& p) const;
};

/// Builds the table; columns are evaluated on `jobs` worker threads.
CharacterTable character_table(int k, CharacterEvaluator& eval, int jobs = 1);
CharacterTable character_table(int k);

struct OrthogonalityReport {
  int k = 0;
  /// max over class pairs |sum_lambda chi^lambda_eta chi^lambda_mu - delta |Z(eta)||
  BigInt max_deviation = 0;
  /// First offending (eta, mu) in canonical order, if any.
  std::optional<std::pair<Partition, Partition>> offending;
  bool pass() const { return max_deviation == 0; }
};

/// Column orthogonality: with rows indexed by shapes, the Gram matrix of the
/// class columns must equal diag(|Z(eta)|).
OrthogonalityReport verify_column_orthogonality(const CharacterTable& table);
OrthogonalityReport verify_column_orthogonality(int k);

}  // namespace rimwalk

#endif  // RIMWALK_CHARACTER_HPP
