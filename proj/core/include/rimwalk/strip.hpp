#ifndef RIMWALK_STRIP_HPP
#define RIMWALK_STRIP_HPP

#include <optional>
#include <vector>

#include "rimwalk/partition.hpp"

namespace rimwalk {

/*
  A border strip (rim hook) is the skew shape outer/inner when it is
  edgewise connected and has no 2x2 block of cells. Only the two
  partitions are stored; the cells are row i, columns inner_i+1..outer_i.

  Invariant: length == height + width - 1.
*/
class BorderStrip {
 public:
  /// Throws NotAStrip if outer/inner is empty, not contained, or not a strip.
  BorderStrip(Partition inner, Partition outer);

  const Partition& inner() const { return inner_; }
  const Partition& outer() const { return outer_; }

  /// Number of rows met.
  int height() const { return height_; }
  /// Number of columns met.
  int width() const { return width_; }
  /// Number of cells.
  int length() const { return outer_.size() - inner_.size(); }

  /// 0-based index of the top row of the strip.
  int top_row() const { return top_row_; }

  /// The strip still has cells in the first row past inner's first row.
  bool has_tail() const { return outer_.first() >= inner_.first() + 1; }

  /// (-1)^(height+1), the Murnaghan-Nakayama sign.
  int sign() const { return height_ % 2 ? 1 : -1; }

  friend bool operator==(const BorderStrip& a, const BorderStrip& b) {
    return a.inner_ == b.inner_ && a.outer_ == b.outer_;
  }

 private:
  Partition inner_;
  Partition outer_;
  int height_ = 0;
  int width_ = 0;
  int top_row_ = 0;
};

/// True iff nu is contained in lambda and lambda/nu is a nonempty border strip.
bool is_border_strip(const Partition& nu, const Partition& lambda);

/// The strip lambda/nu; throws NotAStrip.
BorderStrip strip_between(const Partition& nu, const Partition& lambda);

/// Every strip of `length` cells addable to nu, in canonical order of outer.
std::vector<BorderStrip> add_strips(const Partition& nu, int length);

/// Every strip of `length` cells removable from lambda, in canonical order of inner.
std::vector<BorderStrip> remove_strips(const Partition& lambda, int length);

/// The result of going around nu: strips of n-|nu| cells sorted by height.
struct GoingAround {
  Partition nu;
  int n = 0;
  std::vector<BorderStrip> strips;
  /// Two strips share a height.
  bool ambiguous = false;
  /// Heights are exactly 1, 2, ..., n-|nu|.
  bool regular = false;

  std::vector<Partition> shapes() const;
  std::vector<int> heights() const;

  /// Throws AmbiguousOrdering unless `regular`.
  const GoingAround& require_regular() const;
};

/// Requires n >= |nu|+1 (OutOfRange otherwise). For n >= 2|nu|+2 the result is
/// always regular; below that it is returned sorted by (height, canonical
/// outer) with the flags set, never thrown.
GoingAround going_around(const Partition& nu, int n);

/// A decomposition lambda = rho * S with |rho| = k.
struct Decomposition {
  Partition rho;
  BorderStrip strip;
};

/// All decompositions lambda = rho * S with |rho| = k (0 <= k < |lambda|).
std::vector<Decomposition> decompositions(const Partition& lambda, int k);

/// The unique decomposition, absent when there is none; throws
/// UniquenessViolated if more than one exists (only possible when
/// |lambda| < 2k+2).
std::optional<Decomposition> decompose_unique(const Partition& lambda, int k);

}  // namespace rimwalk

#endif  // RIMWALK_STRIP_HPP
