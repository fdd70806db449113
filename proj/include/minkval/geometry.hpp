#pragma once

// Exact convex polytopes in ambient dimension 2, 3 or 4, given by their
// vertices. Facet structure and the surface area measure are computed once,
// at construction, and shared between copies.

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "minkval/linalg.hpp"
#include "minkval/rational.hpp"
#include "minkval/vector.hpp"

namespace minkval {

struct Facet {
  Covector normal;  // outward, primitive integer
  Rational offset;  // <normal, x> <= offset on the polytope
  std::vector<std::size_t> vertices;
  Covector weighted_normal;  // vol_{n-1}(F) times the outward unit normal
};

/// Atomic surface area measure: finitely many weighted normals
/// sigma = vol_{n-1}(F) u_F. Weighted normals are rational even when the
/// unit normals are not, which keeps every integral against S exact.
class AreaMeasure {
 public:
  AreaMeasure() = default;
  /// Drops zero atoms and merges atoms pointing in the same direction.
  AreaMeasure(int ambient_dim, std::vector<Covector> atoms);
  /// Skips merging; the caller guarantees nonzero, pairwise non-parallel atoms.
  static AreaMeasure from_distinct(int ambient_dim, std::vector<Covector> atoms);

  int ambient_dim() const { return ambient_dim_; }
  const std::vector<Covector>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }
  std::size_t size() const { return atoms_.size(); }
  /// Sum of all atoms; zero for every polytope (Minkowski's relation).
  Covector total() const;

 private:
  int ambient_dim_ = 0;
  std::vector<Covector> atoms_;
};

class Polytope {
 public:
  /// The empty set in ambient dimension 0. Mostly useful as a placeholder.
  Polytope();

  static Polytope empty(int ambient_dim);

  int ambient_dim() const;
  /// -1 for the empty polytope.
  int affine_dim() const;
  bool is_empty() const { return affine_dim() < 0; }
  bool is_full_dimensional() const { return affine_dim() == ambient_dim(); }

  /// Extreme points, sorted lexicographically.
  const std::vector<Point>& vertices() const;
  /// Only populated for full-dimensional polytopes; sorted by normal.
  const std::vector<Facet>& facets() const;
  const AreaMeasure& area_measure() const;

  /// max over the polytope of <xi, x>. The polytope must be nonempty.
  Rational support(const Covector& xi) const;
  /// Ambient-dimensional volume; zero unless full-dimensional.
  Rational volume() const;

  friend bool operator==(const Polytope& a, const Polytope& b);
  friend bool operator!=(const Polytope& a, const Polytope& b) { return !(a == b); }

 private:
  struct Data;
  explicit Polytope(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  friend Polytope convex_hull(std::span<const Point> points, int ambient_dim);
  friend Polytope affine_transform(const Polytope& p, const Matrix& a, const Point& t);

  std::shared_ptr<const Data> data_;
};

/// Throws DimensionError on inconsistent coordinates or an ambient
/// dimension outside 2..4, and Error on an empty point list.
Polytope convex_hull(std::span<const Point> points, int ambient_dim);
Polytope convex_hull(std::span<const Point> points);
inline Polytope convex_hull(std::initializer_list<Point> points) {
  return convex_hull(std::span<const Point>(points.begin(), points.size()));
}

/// Image {A v + t}. A may change the dimension (e.g. coordinate projections).
/// Invertible square maps carry facets and area measure over directly
/// instead of recomputing the hull.
Polytope affine_transform(const Polytope& p, const Matrix& a, const Point& t);
Polytope linear_image(const Polytope& p, const Matrix& a);
Polytope translate(const Polytope& p, const Point& t);
Polytope scale(const Polytope& p, const Rational& lambda);
Polytope reflect(const Polytope& p);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);

inline Rational support(const Polytope& p, const Covector& xi) { return p.support(xi); }
inline Rational volume(const Polytope& p) { return p.volume(); }
inline const AreaMeasure& area_measure(const Polytope& p) { return p.area_measure(); }

/// The pieces of P cut by the hyperplane <xi, x> = c. `lower` and `upper`
/// are the two closed halves, `slice` is their intersection; pieces the
/// hyperplane does not reach are empty.
struct SplitResult {
  Polytope lower;
  Polytope upper;
  Polytope slice;
};
SplitResult split_by_hyperplane(const Polytope& p, const Covector& xi, const Rational& c);

Polytope segment(const Point& a, const Point& b);
Polytope singleton(const Point& p);
/// Axis-parallel box [lo, hi]^n.
Polytope cube(int dim, const Rational& lo = 0, const Rational& hi = 1);
/// conv{0, e_1, ..., e_n}.
Polytope standard_simplex(int dim);

}  // namespace minkval
