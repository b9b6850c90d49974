#include "rimwalk/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rimwalk/errors.hpp"

namespace rimwalk {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw InvalidPartition("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw InvalidPartition("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::from_unsorted(std::vector<int> parts) {
  if (std::any_of(parts.begin(), parts.end(), [](int v) { return v < 0; }))
    throw InvalidPartition("negative part");
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::rectangle(int part, int count) {
  if (part <= 0 || count <= 0) return {};
  return Partition(std::vector<int>(static_cast<std::size_t>(count), part));
}

Partition Partition::tail() const {
  if (parts_.empty()) return {};
  return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

Partition Partition::prepend(int first) const {
  std::vector<int> v;
  v.reserve(parts_.size() + 1);
  v.push_back(first);
  v.insert(v.end(), parts_.begin(), parts_.end());
  return Partition(std::move(v));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

int CycleType::size() const {
  int s = 0;
  for (auto [part, m] : multiplicities) s += part * m;
  return s;
}

CycleType cycle_type(const Partition& eta) {
  CycleType ct;
  for (int v : eta.parts()) ++ct.multiplicities[v];
  return ct;
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& cur,
              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    generate(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw OutOfRange("cannot enumerate partitions of a negative number");
  std::vector<Partition> out;
  std::vector<int> cur;
  generate(n, n, cur, out);
  return out;
}

BigInt partition_count(int n) {
  if (n < 0) return 0;
  std::vector<BigInt> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    BigInt acc = 0;
    for (int j = 1;; ++j) {
      int g1 = j * (3 * j - 1) / 2;
      if (g1 > m) break;
      int g2 = j * (3 * j + 1) / 2;
      BigInt term = p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) term += p[static_cast<std::size_t>(m - g2)];
      if (j % 2) acc += term;
      else acc -= term;
    }
    p[static_cast<std::size_t>(m)] = acc;
  }
  return p[static_cast<std::size_t>(n)];
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols(static_cast<std::size_t>(lambda.first()), 0);
  for (int row : lambda.parts())
    for (int c = 0; c < row; ++c) ++cols[static_cast<std::size_t>(c)];
  return Partition(std::move(cols));
}

BigInt centralizer_order(const Partition& eta) {
  BigInt z = 1;
  for (auto [part, m] : cycle_type(eta).multiplicities) {
    BigInt pw = 1;
    for (int i = 0; i < m; ++i) pw *= part;
    z *= pw * factorial(m);
  }
  return z;
}

bool contains(const Partition& lambda, const Partition& nu) {
  if (nu.length() > lambda.length()) return false;
  for (int i = 0; i < nu.length(); ++i)
    if (nu.part(i) > lambda.part(i)) return false;
  return true;
}

Partition parse_partition(const std::string& text, bool sort_parts) {
  if (text == "empty" || text.empty() || text == "[]") return {};
  std::string body = text;
  if (body.front() == '[' && body.back() == ']')
    body = body.substr(1, body.size() - 2);
  std::vector<int> parts;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw InvalidPartition("not an integer: '" + tok + "'");
    }
    if (used != tok.size())
      throw InvalidPartition("not an integer: '" + tok + "'");
    if (v <= 0) throw InvalidPartition("parts must be positive: " + tok);
    parts.push_back(v);
  }
  if (sort_parts) std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::string format_partition(const Partition& p) {
  if (p.empty()) return "empty";
  std::ostringstream os;
  for (int i = 0; i < p.length(); ++i) {
    if (i) os << ',';
    os << p.part(i);
  }
  return os.str();
}

}  // namespace rimwalk
