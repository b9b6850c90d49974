#ifndef RIMWALK_PARTITION_HPP
#define RIMWALK_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rimwalk/bigint.hpp"

namespace rimwalk {

/*
  A partition is stored as its weakly decreasing list of positive parts.
  The same type serves as a shape (rows of a Young diagram) and as a cycle
  type. Trailing zeros are never stored, so structural equality is
  equality of partitions.

  The canonical order on Par(n) is reverse lexicographic: (n) first,
  (1^n) last. Since operator<=> is plain lexicographic on the parts, the
  canonical order is simply descending order.
*/
class Partition {
 public:
  Partition() = default;

  /// Throws InvalidPartition unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  /// Sorts the parts descending first; zeros are dropped. Useful for cycle types.
  static Partition from_unsorted(std::vector<int> parts);

  /// (part^count)
  static Partition rectangle(int part, int count);

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }

  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// i-th part, 0-based; zero past the end.
  int part(int i) const {
    return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
  }
  int first() const { return part(0); }

  /// The partition with its first part removed (mu-bar).
  Partition tail() const;

  /// (first, rest...) prepended; throws InvalidPartition if first < rest[0].
  Partition prepend(int first) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Multiplicities m_i of a cycle type, keyed by part size.
struct CycleType {
  std::map<int, int> multiplicities;

  int size() const;
};

CycleType cycle_type(const Partition& eta);

/// All partitions of n in canonical (reverse lexicographic) order.
std::vector<Partition> enumerate_partitions(int n);

/// Number of partitions of n, via Euler's pentagonal recurrence.
BigInt partition_count(int n);

Partition conjugate(const Partition& lambda);

/// prod_i i^{m_i} m_i!
BigInt centralizer_order(const Partition& eta);

/// Diagram containment: nu_i <= lambda_i for every row.
bool contains(const Partition& lambda, const Partition& nu);

/// Parses "3,1" / "empty"; throws InvalidPartition.
Partition parse_partition(const std::string& text, bool sort_parts = false);

/// "3,1" or "empty"; inverse of parse_partition.
std::string format_partition(const Partition& p);

}  // namespace rimwalk

template <>
struct std::hash<rimwalk::Partition> {
  std::size_t operator()(const rimwalk::Partition& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int v : p.parts()) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};

#endif  // RIMWALK_PARTITION_HPP
