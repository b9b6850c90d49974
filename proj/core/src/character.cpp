#include "rimwalk/character.hpp"

#include <algorithm>
#include <mutex>

#include "rimwalk/errors.hpp"
#include "rimwalk/parallel.hpp"
#include "rimwalk/strip.hpp"

namespace rimwalk {

std::size_t CharacterEvaluator::KeyHash::operator()(
    const Key& k) const noexcept {
  std::size_t h = std::hash<Partition>{}(k.shape);
  for (int v : k.cycles)
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  return h;
}

std::optional<std::int64_t> CharacterEvaluator::eval_small(
    const Partition& lambda, std::span<const int> cycles) {
  if (cycles.empty()) return lambda.empty() ? 1 : 0;
  if (cycles.size() == 1) {
    // One cycle: only a single strip covering all of lambda contributes.
    if (lambda.size() != cycles[0] || !is_border_strip(Partition{}, lambda))
      return 0;
    return BorderStrip(Partition{}, lambda).sign();
  }

  Key key;
  if (memoize_) {
    key = Key{lambda, std::vector<int>(cycles.begin(), cycles.end())};
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }

  std::optional<std::int64_t> total = 0;
  for (const auto& strip : remove_strips(lambda, cycles[0])) {
    auto sub = eval_small(strip.inner(), cycles.subspan(1));
    std::int64_t acc = 0;
    if (!sub ||
        (strip.sign() > 0 ? __builtin_add_overflow(*total, *sub, &acc)
                          : __builtin_sub_overflow(*total, *sub, &acc))) {
      total.reset();
      break;
    }
    total = acc;
  }

  if (memoize_) {
    std::unique_lock lock(mutex_);
    cache_.try_emplace(std::move(key), total);
  }
  return total;
}

BigInt CharacterEvaluator::eval_big(const Partition& lambda,
                                    std::span<const int> cycles) {
  // Subproblems that fit in 64 bits come from the small path and its cache.
  if (auto v = eval_small(lambda, cycles)) return *v;

  Key key;
  if (memoize_) {
    key = Key{lambda, std::vector<int>(cycles.begin(), cycles.end())};
    std::shared_lock lock(mutex_);
    if (auto it = big_cache_.find(key); it != big_cache_.end())
      return it->second;
  }
  BigInt total = 0;
  for (const auto& strip : remove_strips(lambda, cycles[0])) {
    if (strip.sign() > 0) total += eval_big(strip.inner(), cycles.subspan(1));
    else total -= eval_big(strip.inner(), cycles.subspan(1));
  }
  if (memoize_) {
    std::unique_lock lock(mutex_);
    big_cache_.try_emplace(std::move(key), total);
  }
  return total;
}

std::optional<std::int64_t> CharacterEvaluator::value_i64(
    const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw SizeMismatch("character of " + lambda.to_string() + " on class " +
                       mu.to_string() + ": sizes differ");
  // Parts of a Partition are weakly decreasing: largest cycle first.
  return eval_small(lambda, mu.parts());
}

BigInt CharacterEvaluator::value(const Partition& lambda, const Partition& mu) {
  if (auto v = value_i64(lambda, mu)) return *v;
  return eval_big(lambda, mu.parts());
}

void CharacterEvaluator::clear() {
  std::unique_lock lock(mutex_);
  cache_.clear();
  big_cache_.clear();
}

std::size_t CharacterEvaluator::cache_size() const {
  std::shared_lock lock(mutex_);
  return cache_.size() + big_cache_.size();
}

CharacterEvaluator& default_evaluator() {
  static CharacterEvaluator eval;
  return eval;
}

BigInt mn_character(const Partition& lambda, const Partition& mu) {
  return default_evaluator().value(lambda, mu);
}

BigInt dimension(const Partition& lambda) {
  const Partition cols = conjugate(lambda);
  BigInt hooks = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda.part(i); ++j)
      hooks *= (lambda.part(i) - j) + (cols.part(j) - i) - 1;
  return factorial(lambda.size()) / hooks;
}

BigInt special_dimension(int n, int r) {
  if (n < 4 || r < 2 || r > n - 2)
    throw OutOfRange("special_dimension needs n >= 4 and 2 <= r <= n-2");
  BigInt den = factorial(r - 2) * factorial(n - 2 - r);
  den *= r;
  den *= n - r;
  den *= n - 1;
  BigInt num = factorial(n);
  if (num % den != 0)
    throw IdentityViolation("closed-form dimension is not an integer");
  return num / den;
}

Partition special_shape(int n, int r) {
  if (n < 4 || r < 2 || r > n - 2)
    throw OutOfRange("special_shape needs n >= 4 and 2 <= r <= n-2");
  std::vector<int> v{r, 2};
  v.resize(static_cast<std::size_t>(n - r), 1);
  return Partition(std::move(v));
}

std::size_t CharacterTable::index_of(const Partition& p) const {
  auto it = std::find(order.begin(), order.end(), p);
  if (it == order.end())
    throw OutOfRange(p.to_string() + " is not a partition of " +
                     std::to_string(k));
  return static_cast<std::size_t>(it - order.begin());
}

CharacterTable character_table(int k, CharacterEvaluator& eval, int jobs) {
  CharacterTable t;
  t.k = k;
  t.order = enumerate_partitions(k);
  const std::size_t d = t.order.size();
  t.entries.assign(d, std::vector<BigInt>(d));
  t.centralizers.reserve(d);
  for (const auto& nu : t.order) t.centralizers.push_back(centralizer_order(nu));
  parallel_for(d, jobs, [&](std::size_t col) {
    for (std::size_t row = 0; row < d; ++row)
      t.entries[row][col] = eval.value(t.order[row], t.order[col]);
  });
  return t;
}

CharacterTable character_table(int k) {
  return character_table(k, default_evaluator());
}

OrthogonalityReport verify_column_orthogonality(const CharacterTable& table) {
  OrthogonalityReport rep;
  rep.k = table.k;
  const std::size_t d = table.dim();
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      BigInt gram = 0;
      for (std::size_t row = 0; row < d; ++row)
        gram += table.entries[row][a] * table.entries[row][b];
      BigInt dev = gram - (a == b ? table.centralizers[a] : BigInt(0));
      if (dev < 0) dev = -dev;
      if (dev != 0 && !rep.offending)
        rep.offending = {table.order[a], table.order[b]};
      if (dev > rep.max_deviation) rep.max_deviation = dev;
    }
  }
  return rep;
}

OrthogonalityReport verify_column_orthogonality(int k) {
  return verify_column_orthogonality(character_table(k));
}

}  // namespace rimwalk
