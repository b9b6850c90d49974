#include "rimwalk/oracle.hpp"

#include "rimwalk/errors.hpp"

namespace rimwalk {

namespace {

using Polynomial = SymmetricFunctionOracle::Polynomial;
using Exponents = SymmetricFunctionOracle::Exponents;

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// Fills the cells of theta row by row with entries in [1, variables],
// rows weakly increasing and columns strictly increasing.
void fill_tableaux(const Partition& theta, int variables,
                   std::vector<std::vector<int>>& tab, int row, int col,
                   Exponents& content, Polynomial& out) {
  if (row == theta.length()) {
    out[content] += 1;
    return;
  }
  if (col == theta.part(row)) {
    fill_tableaux(theta, variables, tab, row + 1, 0, content, out);
    return;
  }
  int lo = 1;
  if (col > 0) lo = std::max(lo, tab[row][col - 1]);
  if (row > 0) lo = std::max(lo, tab[row - 1][col] + 1);
  for (int v = lo; v <= variables; ++v) {
    tab[row][col] = v;
    ++content[static_cast<std::size_t>(v - 1)];
    fill_tableaux(theta, variables, tab, row, col + 1, content, out);
    --content[static_cast<std::size_t>(v - 1)];
  }
}

Exponents padded(const Partition& p, int variables) {
  Exponents e(static_cast<std::size_t>(variables), 0);
  for (int i = 0; i < p.length() && i < variables; ++i)
    e[static_cast<std::size_t>(i)] = p.part(i);
  return e;
}

}  // namespace

Polynomial SymmetricFunctionOracle::power_sum_product(const Partition& mu,
                                                      int variables) {
  Polynomial acc{{Exponents(static_cast<std::size_t>(variables), 0), 1}};
  for (int r : mu.parts()) {
    Polynomial pr;
    for (int v = 0; v < variables; ++v) {
      Exponents e(static_cast<std::size_t>(variables), 0);
      e[static_cast<std::size_t>(v)] = r;
      pr[e] = 1;
    }
    acc = multiply(acc, pr);
  }
  return acc;
}

Polynomial SymmetricFunctionOracle::schur(const Partition& theta,
                                          int variables) {
  Polynomial out;
  if (theta.length() > variables) return out;
  std::vector<std::vector<int>> tab;
  for (int row = 0; row < theta.length(); ++row)
    tab.emplace_back(static_cast<std::size_t>(theta.part(row)), 0);
  Exponents content(static_cast<std::size_t>(variables), 0);
  fill_tableaux(theta, variables, tab, 0, 0, content, out);
  return out;
}

const Polynomial& SymmetricFunctionOracle::cached_schur(
    const Partition& theta) {
  auto it = schur_cache_.find(theta);
  if (it == schur_cache_.end())
    it = schur_cache_.emplace(theta, schur(theta, theta.size())).first;
  return it->second;
}

std::vector<BigInt> SymmetricFunctionOracle::column(const Partition& mu) {
  const int n = mu.size();
  if (n > kMaxSize)
    throw OutOfRange("symmetric-function oracle is limited to n <= " +
                     std::to_string(kMaxSize));
  Polynomial rest = power_sum_product(mu, n);
  std::vector<BigInt> coeffs;
  for (const auto& theta : enumerate_partitions(n)) {
    auto it = rest.find(padded(theta, n));
    BigInt c = it == rest.end() ? BigInt(0) : it->second;
    coeffs.push_back(c);
    if (c == 0) continue;
    for (const auto& [e, v] : cached_schur(theta)) rest[e] -= c * v;
    std::erase_if(rest, [](const auto& kv) { return kv.second == 0; });
  }
  if (!rest.empty())
    throw IdentityViolation("power sum did not peel to zero for " +
                            mu.to_string());
  return coeffs;
}

BigInt SymmetricFunctionOracle::character(const Partition& lambda,
                                          const Partition& mu) {
  if (lambda.size() != mu.size())
    throw SizeMismatch("oracle: sizes of " + lambda.to_string() + " and " +
                       mu.to_string() + " differ");
  auto shapes = enumerate_partitions(mu.size());
  auto col = column(mu);
  for (std::size_t i = 0; i < shapes.size(); ++i)
    if (shapes[i] == lambda) return col[i];
  return 0;
}

BigInt character_oracle(const Partition& lambda, const Partition& mu) {
  SymmetricFunctionOracle oracle;
  return oracle.character(lambda, mu);
}

}  // namespace rimwalk
