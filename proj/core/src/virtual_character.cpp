#include "rimwalk/virtual_character.hpp"

#include <optional>

#include "rimwalk/errors.hpp"
#include "rimwalk/parallel.hpp"

namespace rimwalk {

VirtualCharacter build_psi(const Partition& nu, int n, bool allow_irregular) {
  GoingAround g = going_around(nu, n);
  if (!allow_irregular) g.require_regular();
  VirtualCharacter psi;
  psi.n = n;
  psi.nu = nu;
  psi.regular = g.regular;
  int sign = 1;
  for (const auto& s : g.strips) {
    psi.terms.push_back({sign, s.outer(), s.height()});
    sign = -sign;
  }
  return psi;
}

BigInt eval_virtual(const VirtualCharacter& psi, const Partition& mu,
                    CharacterEvaluator& eval) {
  if (mu.size() != psi.n)
    throw SizeMismatch("class " + mu.to_string() + " is not of size " +
                       std::to_string(psi.n));
  BigInt total = 0;
  for (const auto& t : psi.terms) {
    if (t.sign > 0) total += eval.value(t.shape, mu);
    else total -= eval.value(t.shape, mu);
  }
  return total;
}

BigInt theorem_rhs(const Partition& nu, int n, const Partition& mu,
                   CharacterEvaluator& eval) {
  const int k = nu.size();
  if (mu.size() != n)
    throw SizeMismatch("class " + mu.to_string() + " is not of size " +
                       std::to_string(n));
  if (mu.first() != n - k) return 0;
  return eval.value(nu, mu.tail()) * (n - k);
}

namespace {

CharacterEvaluator& evaluator_of(const VerifyOptions& opts) {
  return opts.evaluator ? *opts.evaluator : default_evaluator();
}

VerificationReport start_report(std::string target, int k, int n) {
  VerificationReport rep;
  rep.target = std::move(target);
  rep.k = k;
  rep.n = n;
  rep.in_range = k >= 0 && in_theorem_range(k, n);
  return rep;
}

// Runs `check(i)` for every i in [0, count) and appends the mismatches in
// index order, so the report does not depend on scheduling.
template <class Check>
void sweep(VerificationReport& rep, std::size_t count, int jobs, Check check) {
  std::vector<std::vector<Mismatch>> found(count);
  parallel_for(count, jobs, [&](std::size_t i) { found[i] = check(i); });
  for (auto& f : found)
    for (auto& m : f) rep.mismatches.push_back(std::move(m));
}

std::vector<VirtualCharacter> psis_for(const std::vector<Partition>& rhos,
                                       int n) {
  std::vector<VirtualCharacter> out;
  out.reserve(rhos.size());
  for (const auto& rho : rhos) out.push_back(build_psi(rho, n));
  return out;
}

}  // namespace

VerificationReport verify_theorem(int k, int n, const VerifyOptions& opts) {
  auto rep = start_report("theorem", k, n);
  if (!rep.in_range) return rep;
  auto& eval = evaluator_of(opts);
  const auto nus = enumerate_partitions(k);
  const auto mus = enumerate_partitions(n);
  const auto psis = psis_for(nus, n);
  const std::size_t count = nus.size() * mus.size();
  sweep(rep, count, opts.jobs, [&](std::size_t i) {
    const auto& nu = nus[i / mus.size()];
    const auto& mu = mus[i % mus.size()];
    std::vector<Mismatch> out;
    BigInt lhs = eval_virtual(psis[i / mus.size()], mu, eval);
    BigInt rhs = theorem_rhs(nu, n, mu, eval);
    if (lhs != rhs) out.push_back({nu, mu, lhs, rhs, "theorem"});
    return out;
  });
  rep.checked = count;
  return rep;
}

VerificationReport verify_decomposition_identity(int k, int n,
                                                 const VerifyOptions& opts) {
  auto rep = start_report("decomposition", k, n);
  if (!rep.in_range) return rep;
  auto& eval = evaluator_of(opts);
  const auto nus = enumerate_partitions(k);
  const auto mus = enumerate_partitions(n);
  const auto psis = psis_for(nus, n);
  const std::size_t count = nus.size() * mus.size();
  sweep(rep, count, opts.jobs, [&](std::size_t i) {
    const auto& nu = nus[i / mus.size()];
    const auto& mu = mus[i % mus.size()];
    const Partition cls = nu.prepend(n - k);
    BigInt lhs = 0;
    for (const auto& lambda : mus)
      lhs += eval.value(lambda, cls) * eval.value(lambda, mu);
    BigInt rhs = 0;
    for (std::size_t r = 0; r < nus.size(); ++r)
      rhs += eval.value(nus[r], nu) * eval_virtual(psis[r], mu, eval);
    BigInt closed = 0;
    if (mu.first() == n - k && mu.tail() == nu)
      closed = centralizer_order(nu) * (n - k);
    std::vector<Mismatch> out;
    if (lhs != rhs) out.push_back({nu, mu, lhs, rhs, "proposition"});
    if (lhs != closed) out.push_back({nu, mu, lhs, closed, "closed_form"});
    return out;
  });
  rep.checked = count;
  return rep;
}

VerificationReport verify_matrix_identity(int k, int n,
                                          const VerifyOptions& opts) {
  auto rep = start_report("matrix", k, n);
  if (!rep.in_range) return rep;
  auto& eval = evaluator_of(opts);
  const CharacterTable table = character_table(k, eval, opts.jobs);
  const std::size_t d = table.dim();
  const auto psis = psis_for(table.order, n);

  std::vector<std::vector<BigInt>> m(d, std::vector<BigInt>(d));
  parallel_for(d * d, opts.jobs, [&](std::size_t i) {
    const std::size_t rho = i / d;
    const std::size_t j = i % d;
    m[rho][j] = eval_virtual(psis[rho], table.order[j].prepend(n - k), eval);
  });

  for (std::size_t rho = 0; rho < d; ++rho) {
    for (std::size_t j = 0; j < d; ++j) {
      BigInt expected = table.entries[rho][j] * (n - k);
      if (m[rho][j] != expected)
        rep.mismatches.push_back({table.order[rho],
                                  table.order[j].prepend(n - k), m[rho][j],
                                  expected, "M=K^T(n-k)"});
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      BigInt km = 0;
      for (std::size_t rho = 0; rho < d; ++rho)
        km += table.entries[rho][i] * m[rho][j];
      BigInt expected = i == j ? table.centralizers[i] * (n - k) : BigInt(0);
      if (km != expected)
        rep.mismatches.push_back({table.order[i],
                                  table.order[j].prepend(n - k), km, expected,
                                  "KM=D(n-k)"});
    }
  }
  rep.checked = 2 * d * d;
  return rep;
}

VerificationReport verify_centralizer_split_report(int k, int n) {
  auto rep = start_report("centralizer", k, n);
  if (!rep.in_range) return rep;
  for (const auto& nu : enumerate_partitions(k)) {
    const Partition cls = nu.prepend(n - k);
    BigInt lhs = centralizer_order(cls);
    BigInt rhs = centralizer_order(nu) * (n - k);
    if (lhs != rhs) rep.mismatches.push_back({nu, cls, lhs, rhs, "centralizer"});
    ++rep.checked;
  }
  return rep;
}

bool verify_centralizer_split(int k, int n) {
  return verify_centralizer_split_report(k, n).pass();
}

}  // namespace rimwalk
