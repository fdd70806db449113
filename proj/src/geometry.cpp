#include "minkval/geometry.hpp"

#include <algorithm>
#include <string>

#include "hull.hpp"

namespace minkval {

struct Polytope::Data {
  int ambient_dim = 0;
  int affine_dim = -1;
  std::vector<Point> vertices;
  std::vector<Facet> facets;
  AreaMeasure measure;
};

namespace {

bool same_direction(const Covector& a, const Covector& b) {
  std::size_t i = 0;
  while (i < b.coords().size() && b[i] == 0) ++i;
  if (i == b.coords().size() || a[i] == 0) return false;
  const Rational lambda = a[i] / b[i];
  return lambda > 0 && a == lambda * b;
}

Integer factorial(int n) {
  Integer f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

Covector to_covector(const detail::IntVec& v, const Rational& divisor) {
  std::vector<Rational> c;
  c.reserve(v.size());
  for (const auto& x : v) c.push_back(Rational(x) / divisor);
  return Covector(std::move(c));
}

Covector primitive(const Covector& v) {
  Integer l = 1;
  for (const auto& x : v.coords()) l = lcm(l, Integer(x.get_den()));
  Integer g = 0;
  for (const auto& x : v.coords()) g = gcd(g, Integer(x.get_num() * (l / x.get_den())));
  return (Rational(l) / Rational(g)) * v;
}

void check_ambient(int n) {
  if (n < 2 || n > 4) throw DimensionError("ambient dimension " + std::to_string(n) + " is not supported (2..4)");
}

}  // namespace

AreaMeasure::AreaMeasure(int ambient_dim, std::vector<Covector> atoms) : ambient_dim_(ambient_dim) {
  for (auto& a : atoms) {
    if (a.dim() != ambient_dim) throw DimensionError("area measure atom of wrong dimension");
    if (a.is_zero()) continue;
    auto it = std::find_if(atoms_.begin(), atoms_.end(), [&](const Covector& b) { return same_direction(a, b); });
    if (it == atoms_.end()) atoms_.push_back(std::move(a));
    else *it += a;
  }
}

AreaMeasure AreaMeasure::from_distinct(int ambient_dim, std::vector<Covector> atoms) {
  AreaMeasure m;
  m.ambient_dim_ = ambient_dim;
  m.atoms_ = std::move(atoms);
  return m;
}

Covector AreaMeasure::total() const {
  auto t = Covector::zero(ambient_dim_);
  for (const auto& a : atoms_) t += a;
  return t;
}

Polytope::Polytope() : data_(std::make_shared<Data>()) {}

Polytope Polytope::empty(int ambient_dim) {
  auto d = std::make_shared<Data>();
  d->ambient_dim = ambient_dim;
  d->measure = AreaMeasure(ambient_dim, {});
  return Polytope(std::move(d));
}

int Polytope::ambient_dim() const { return data_->ambient_dim; }
int Polytope::affine_dim() const { return data_->affine_dim; }
const std::vector<Point>& Polytope::vertices() const { return data_->vertices; }
const std::vector<Facet>& Polytope::facets() const { return data_->facets; }
const AreaMeasure& Polytope::area_measure() const { return data_->measure; }

Rational Polytope::support(const Covector& xi) const {
  if (xi.dim() != ambient_dim()) throw DimensionError("support direction has the wrong dimension");
  if (is_empty()) throw Error("support function of the empty polytope");
  Rational best = pair(xi, data_->vertices.front());
  for (std::size_t i = 1; i < data_->vertices.size(); ++i) {
    Rational v = pair(xi, data_->vertices[i]);
    if (v > best) best = std::move(v);
  }
  return best;
}

Rational Polytope::volume() const {
  if (!is_full_dimensional()) return 0;
  Rational s = 0;
  for (const auto& f : data_->facets) s += pair(f.weighted_normal, data_->vertices[f.vertices.front()]);
  return s / ambient_dim();
}

bool operator==(const Polytope& a, const Polytope& b) {
  return a.ambient_dim() == b.ambient_dim() && a.affine_dim() == b.affine_dim() && a.vertices() == b.vertices();
}

Polytope convex_hull(std::span<const Point> points, int ambient_dim) {
  check_ambient(ambient_dim);
  if (points.empty()) throw Error("convex hull of an empty point list");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].dim() != ambient_dim) {
      throw DimensionError("point " + std::to_string(i) + " has dimension " + std::to_string(points[i].dim()) +
                           ", expected " + std::to_string(ambient_dim));
    }
  }
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  Integer scale = 1;
  for (const auto& p : pts)
    for (const auto& c : p.coords()) scale = lcm(scale, Integer(c.get_den()));
  std::vector<detail::IntVec> ints;
  ints.reserve(pts.size());
  for (const auto& p : pts) {
    detail::IntVec v;
    for (const auto& c : p.coords()) v.push_back(Integer(c.get_num() * (scale / c.get_den())));
    ints.push_back(std::move(v));
  }

  const auto hull = detail::integer_hull(ints, ambient_dim);
  auto data = std::make_shared<Polytope::Data>();
  data->ambient_dim = ambient_dim;
  data->affine_dim = hull.affine_dim;

  std::vector<std::size_t> extreme = hull.extreme;
  std::sort(extreme.begin(), extreme.end());
  std::vector<std::size_t> remap(pts.size(), 0);
  for (std::size_t k = 0; k < extreme.size(); ++k) {
    remap[extreme[k]] = k;
    data->vertices.push_back(pts[extreme[k]]);
  }

  Integer area_scale = factorial(ambient_dim - 1);
  for (int k = 0; k < ambient_dim - 1; ++k) area_scale *= scale;
  const Rational area_divisor(area_scale);

  std::vector<Covector> atoms;
  for (const auto& hf : hull.facets) {
    Facet f;
    f.normal = to_covector(hf.normal, Rational(1));
    f.offset = Rational(hf.offset, scale);
    f.offset.canonicalize();
    for (auto id : hf.vertices) f.vertices.push_back(remap[id]);
    std::sort(f.vertices.begin(), f.vertices.end());
    f.weighted_normal = to_covector(hf.cross_sum, area_divisor);
    data->facets.push_back(std::move(f));
  }
  std::sort(data->facets.begin(), data->facets.end(),
            [](const Facet& a, const Facet& b) { return a.normal < b.normal; });
  for (const auto& f : data->facets) atoms.push_back(f.weighted_normal);

  if (!hull.fan.empty()) {
    detail::IntVec total(static_cast<std::size_t>(ambient_dim));
    detail::IntVec reference;
    for (const auto& simplex : hull.fan) {
      std::vector<detail::IntVec> edges;
      for (std::size_t k = 1; k < simplex.size(); ++k) {
        detail::IntVec e(static_cast<std::size_t>(ambient_dim));
        for (int j = 0; j < ambient_dim; ++j)
          e[static_cast<std::size_t>(j)] = ints[simplex[k]][static_cast<std::size_t>(j)] - ints[simplex[0]][static_cast<std::size_t>(j)];
        edges.push_back(std::move(e));
      }
      auto c = detail::cross(edges, ambient_dim);
      if (reference.empty()) reference = c;
      Integer orient = 0;
      for (int j = 0; j < ambient_dim; ++j) orient += c[static_cast<std::size_t>(j)] * reference[static_cast<std::size_t>(j)];
      for (int j = 0; j < ambient_dim; ++j) {
        if (orient < 0) total[static_cast<std::size_t>(j)] -= c[static_cast<std::size_t>(j)];
        else total[static_cast<std::size_t>(j)] += c[static_cast<std::size_t>(j)];
      }
    }
    const Covector sigma = to_covector(total, area_divisor);
    atoms.push_back(sigma);
    atoms.push_back(-sigma);
  }
  // Facet normals are distinct primitive vectors, and the fan case gives
  // a single opposite pair, so nothing needs merging.
  std::erase_if(atoms, [](const Covector& a) { return a.is_zero(); });
  data->measure = AreaMeasure::from_distinct(ambient_dim, std::move(atoms));
  return Polytope(std::move(data));
}

Polytope convex_hull(std::span<const Point> points) {
  if (points.empty()) throw Error("convex hull of an empty point list");
  return convex_hull(points, points.front().dim());
}

Polytope affine_transform(const Polytope& p, const Matrix& a, const Point& t) {
  if (a.cols() != p.ambient_dim()) {
    throw DimensionError("affine map expects dimension " + std::to_string(a.cols()) + ", polytope has " +
                         std::to_string(p.ambient_dim()));
  }
  if (t.dim() != a.rows()) throw DimensionError("translation vector does not match the image dimension");
  if (p.is_empty()) return Polytope::empty(a.rows());
  std::vector<Point> image;
  image.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) image.push_back(apply<PointTag>(a, v) + t);
  const Rational det = a.rows() == a.cols() ? determinant(a) : Rational(0);
  if (det == 0) return convex_hull(image, a.rows());

  // Extreme points and faces correspond; normals transform by A^{-T} and
  // weighted normals by |det A| A^{-T}.
  const int n = a.rows();
  const Matrix cof = inverse(a).transpose();
  const Rational jac = abs(det);
  auto data = std::make_shared<Polytope::Data>();
  data->ambient_dim = n;
  data->affine_dim = p.affine_dim();
  std::vector<std::size_t> order(image.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return image[x] < image[y]; });
  std::vector<std::size_t> remap(image.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    remap[order[k]] = k;
    data->vertices.push_back(image[order[k]]);
  }
  for (const auto& f : p.facets()) {
    Facet g;
    g.normal = primitive(apply<CovectorTag>(cof, f.normal));
    for (auto id : f.vertices) g.vertices.push_back(remap[id]);
    std::sort(g.vertices.begin(), g.vertices.end());
    g.offset = pair(g.normal, data->vertices[g.vertices.front()]);
    g.weighted_normal = jac * apply<CovectorTag>(cof, f.weighted_normal);
    data->facets.push_back(std::move(g));
  }
  std::sort(data->facets.begin(), data->facets.end(), [](const Facet& x, const Facet& y) { return x.normal < y.normal; });
  std::vector<Covector> atoms;
  if (!data->facets.empty()) {
    for (const auto& f : data->facets) atoms.push_back(f.weighted_normal);
  } else {
    for (const auto& sigma : p.area_measure().atoms()) atoms.push_back(jac * apply<CovectorTag>(cof, sigma));
  }
  data->measure = AreaMeasure::from_distinct(n, std::move(atoms));
  return Polytope(std::move(data));
}

Polytope linear_image(const Polytope& p, const Matrix& a) { return affine_transform(p, a, Point::zero(a.rows())); }

Polytope translate(const Polytope& p, const Point& t) {
  return affine_transform(p, Matrix::identity(p.ambient_dim()), t);
}

Polytope scale(const Polytope& p, const Rational& lambda) {
  return linear_image(p, Matrix::scalar(p.ambient_dim(), lambda));
}

Polytope reflect(const Polytope& p) { return scale(p, Rational(-1)); }

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) {
    throw DimensionError("Minkowski sum of polytopes in dimensions " + std::to_string(p.ambient_dim()) + " and " +
                         std::to_string(q.ambient_dim()));
  }
  if (p.is_empty() || q.is_empty()) return Polytope::empty(p.ambient_dim());
  if (q.affine_dim() == 0) return translate(p, q.vertices().front());
  if (p.affine_dim() == 0) return translate(q, p.vertices().front());
  std::vector<Point> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) sums.push_back(a + b);
  return convex_hull(sums, p.ambient_dim());
}

SplitResult split_by_hyperplane(const Polytope& p, const Covector& xi, const Rational& c) {
  const int n = p.ambient_dim();
  if (xi.dim() != n) throw DimensionError("split normal has the wrong dimension");
  if (p.is_empty()) return {Polytope::empty(n), Polytope::empty(n), Polytope::empty(n)};

  std::vector<Point> below, above, on;
  std::vector<Rational> level;
  for (const auto& v : p.vertices()) {
    level.push_back(pair(xi, v));
    const int s = sign(level.back() - c);
    if (s <= 0) below.push_back(v);
    if (s >= 0) above.push_back(v);
    if (s == 0) on.push_back(v);
  }
  const auto& vs = p.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const Rational a = level[i] - c;
      const Rational b = level[j] - c;
      if ((a < 0 && b > 0) || (a > 0 && b < 0)) {
        const Rational t = a / (a - b);
        Point x = vs[i] + t * (vs[j] - vs[i]);
        below.push_back(x);
        above.push_back(x);
        on.push_back(std::move(x));
      }
    }
  }
  auto hull_or_empty = [n](const std::vector<Point>& pts) {
    return pts.empty() ? Polytope::empty(n) : convex_hull(pts, n);
  };
  return {hull_or_empty(below), hull_or_empty(above), hull_or_empty(on)};
}

Polytope segment(const Point& a, const Point& b) { return convex_hull({a, b}); }

Polytope singleton(const Point& p) { return convex_hull({p}); }

Polytope cube(int dim, const Rational& lo, const Rational& hi) {
  std::vector<Point> pts;
  for (int mask = 0; mask < (1 << dim); ++mask) {
    auto v = Point::zero(dim);
    for (int k = 0; k < dim; ++k) v[static_cast<std::size_t>(k)] = (mask >> k) & 1 ? hi : lo;
    pts.push_back(std::move(v));
  }
  return convex_hull(pts, dim);
}

Polytope standard_simplex(int dim) {
  std::vector<Point> pts{Point::zero(dim)};
  for (int k = 0; k < dim; ++k) pts.push_back(Point::unit(dim, k));
  return convex_hull(pts, dim);
}

}  // namespace minkval
