#include "rimwalk/strip.hpp"

#include <algorithm>
#include <sstream>

#include "rimwalk/errors.hpp"

namespace rimwalk {

namespace {

// Rows [top, bottom] (0-based) occupied by lambda/nu, or {-1,-1} when the
// skew shape is empty or the occupied rows are not contiguous.
std::pair<int, int> occupied_rows(const Partition& nu, const Partition& lambda) {
  int top = -1;
  int bottom = -1;
  for (int i = 0; i < lambda.length(); ++i) {
    if (lambda.part(i) > nu.part(i)) {
      if (top < 0) top = i;
      else if (bottom != i - 1) return {-1, -1};
      bottom = i;
    }
  }
  return {top, bottom};
}

Partition trimmed(std::vector<int> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return Partition(std::move(v));
}

}  // namespace

bool is_border_strip(const Partition& nu, const Partition& lambda) {
  if (!contains(lambda, nu) || lambda.size() == nu.size()) return false;
  auto [top, bottom] = occupied_rows(nu, lambda);
  if (top < 0) return false;
  // Consecutive rows overlap in exactly one column: that is connectivity
  // (>=) together with the absence of a 2x2 block (<=).
  for (int i = top; i < bottom; ++i)
    if (lambda.part(i + 1) != nu.part(i) + 1) return false;
  return true;
}

BorderStrip::BorderStrip(Partition inner, Partition outer)
    : inner_(std::move(inner)), outer_(std::move(outer)) {
  if (!is_border_strip(inner_, outer_))
    throw NotAStrip(outer_.to_string() + "/" + inner_.to_string() +
                    " is not a border strip");
  auto [top, bottom] = occupied_rows(inner_, outer_);
  top_row_ = top;
  height_ = bottom - top + 1;
  width_ = outer_.part(top) - inner_.part(bottom);
}

BorderStrip strip_between(const Partition& nu, const Partition& lambda) {
  return BorderStrip(nu, lambda);
}

std::vector<BorderStrip> add_strips(const Partition& nu, int length) {
  if (length < 1) throw OutOfRange("strip length must be positive");
  std::vector<BorderStrip> out;
  const int rows = nu.length();
  for (int top = 0; top <= rows; ++top) {
    // Cells below the top row are forced: row i ends at nu_{i-1}+1.
    int below = 0;
    for (int bottom = top;; ++bottom) {
      if (bottom > top) below += nu.part(bottom - 1) + 1 - nu.part(bottom);
      const int top_cells = length - below;
      if (top_cells < 1) break;
      const int top_end = nu.part(top) + top_cells;
      if (top > 0 && top_end > nu.part(top - 1)) continue;
      std::vector<int> v(nu.vec());
      v.resize(static_cast<std::size_t>(std::max(rows, bottom + 1)), 0);
      v[static_cast<std::size_t>(top)] = top_end;
      for (int i = top + 1; i <= bottom; ++i)
        v[static_cast<std::size_t>(i)] = nu.part(i - 1) + 1;
      out.emplace_back(nu, trimmed(std::move(v)));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const BorderStrip& a, const BorderStrip& b) {
              return a.outer() > b.outer();
            });
  return out;
}

std::vector<BorderStrip> remove_strips(const Partition& lambda, int length) {
  if (length < 1) throw OutOfRange("strip length must be positive");
  std::vector<BorderStrip> out;
  const int rows = lambda.length();
  for (int top = 0; top < rows; ++top) {
    // Rows above the bottom one keep exactly lambda_{i+1}-1 cells.
    int above = 0;
    for (int bottom = top; bottom < rows; ++bottom) {
      if (bottom > top)
        above += lambda.part(bottom - 1) - lambda.part(bottom) + 1;
      const int bottom_cells = length - above;
      if (bottom_cells < 1) break;
      const int bottom_start = lambda.part(bottom) - bottom_cells;
      if (bottom_start < lambda.part(bottom + 1)) continue;
      std::vector<int> v(lambda.vec());
      for (int i = top; i < bottom; ++i)
        v[static_cast<std::size_t>(i)] = lambda.part(i + 1) - 1;
      v[static_cast<std::size_t>(bottom)] = bottom_start;
      out.emplace_back(trimmed(std::move(v)), lambda);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const BorderStrip& a, const BorderStrip& b) {
              return a.inner() > b.inner();
            });
  return out;
}

std::vector<Partition> GoingAround::shapes() const {
  std::vector<Partition> v;
  v.reserve(strips.size());
  for (const auto& s : strips) v.push_back(s.outer());
  return v;
}

std::vector<int> GoingAround::heights() const {
  std::vector<int> v;
  v.reserve(strips.size());
  for (const auto& s : strips) v.push_back(s.height());
  return v;
}

const GoingAround& GoingAround::require_regular() const {
  if (!regular) {
    std::ostringstream os;
    os << "going around " << nu.to_string() << " to n=" << n
       << " does not give heights 1.." << n - nu.size() << ": got";
    for (int h : heights()) os << ' ' << h;
    throw AmbiguousOrdering(os.str());
  }
  return *this;
}

GoingAround going_around(const Partition& nu, int n) {
  const int k = nu.size();
  if (n < k + 1) throw OutOfRange("going around needs n >= |nu|+1");
  GoingAround g;
  g.nu = nu;
  g.n = n;
  g.strips = add_strips(nu, n - k);
  std::stable_sort(g.strips.begin(), g.strips.end(),
                   [](const BorderStrip& a, const BorderStrip& b) {
                     return a.height() < b.height();
                   });
  for (std::size_t j = 1; j < g.strips.size(); ++j)
    if (g.strips[j].height() == g.strips[j - 1].height()) g.ambiguous = true;
  g.regular = static_cast<int>(g.strips.size()) == n - k;
  for (std::size_t j = 0; g.regular && j < g.strips.size(); ++j)
    g.regular = g.strips[j].height() == static_cast<int>(j) + 1;
  return g;
}

std::vector<Decomposition> decompositions(const Partition& lambda, int k) {
  if (k < 0 || k >= lambda.size())
    throw OutOfRange("decomposition needs 0 <= k < |lambda|");
  std::vector<Decomposition> out;
  for (auto& s : remove_strips(lambda, lambda.size() - k))
    out.push_back({s.inner(), s});
  return out;
}

std::optional<Decomposition> decompose_unique(const Partition& lambda, int k) {
  auto all = decompositions(lambda, k);
  if (all.empty()) return std::nullopt;
  if (all.size() > 1) {
    std::ostringstream os;
    os << lambda.to_string() << " has " << all.size()
       << " decompositions rho*S with |rho|=" << k << ":";
    for (const auto& d : all) os << ' ' << d.rho.to_string();
    throw UniquenessViolated(os.str());
  }
  return std::move(all.front());
}

}  // namespace rimwalk
