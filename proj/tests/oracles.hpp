#pragma once

// Brute-force reference computations for tests. Nothing here calls into the
// hull, facet or area-measure code of the library; only Rational and the
// coordinate types are shared.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "minkval/rational.hpp"
#include "minkval/vector.hpp"

namespace oracle {

using minkval::Integer;
using minkval::Rational;
using Vec = std::vector<Rational>;

inline Rational det(const std::vector<Vec>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rational d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<Vec> minor;
    for (std::size_t r = 1; r < n; ++r) {
      Vec row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const Rational t = m[0][c] * det(minor);
    d += (c % 2) ? Rational(-t) : t;
  }
  return d;
}

inline Rational dot(const Vec& a, const Vec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Normal of the hyperplane through k points of R^k (zero if degenerate).
inline Vec hyperplane_normal(const std::vector<Vec>& pts) {
  const std::size_t k = pts.size();
  Vec n(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Vec> minor;
    for (std::size_t r = 1; r < k; ++r) {
      Vec row;
      for (std::size_t c = 0; c < k; ++c)
        if (c != i) row.push_back(pts[r][c] - pts[0][c]);
      minor.push_back(row);
    }
    const Rational d = det(minor);
    n[i] = (i % 2) ? Rational(-d) : d;
  }
  return n;
}

inline Vec primitive(Vec v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, Integer(x.get_den()));
  Integer g = 0;
  for (auto& x : v) {
    x *= l;
    g = gcd(g, Integer(x.get_num()));
  }
  if (g != 0)
    for (auto& x : v) x /= g;
  return v;
}

struct Facet {
  Vec normal;  // primitive integer, outward
  Rational offset;
  std::vector<std::size_t> on;  // indices of the input points on the facet
};

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

/// All facets of the hull of a full-dimensional point set in R^k, found by
/// testing every k-subset for a supporting hyperplane.
inline std::vector<Facet> facets(const std::vector<Vec>& pts) {
  const std::size_t k = pts.front().size();
  std::map<Vec, Facet> found;
  for_each_subset(pts.size(), k, [&](const std::vector<std::size_t>& idx) {
    std::vector<Vec> sub;
    for (auto i : idx) sub.push_back(pts[i]);
    Vec n = hyperplane_normal(sub);
    if (std::all_of(n.begin(), n.end(), [](const Rational& x) { return x == 0; })) return;
    n = primitive(n);
    Rational off = dot(n, pts[idx[0]]);
    bool below = true, above = true;
    for (const auto& p : pts) {
      const Rational v = dot(n, p);
      if (v > off) below = false;
      if (v < off) above = false;
    }
    if (!below && !above) return;
    if (!below) {
      for (auto& x : n) x = -x;
      off = -off;
    }
    if (found.count(n)) return;
    Facet f{n, off, {}};
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (dot(n, pts[i]) == off) f.on.push_back(i);
    found.emplace(n, f);
  });
  std::vector<Facet> out;
  for (auto& [n, f] : found) out.push_back(f);
  return out;
}

inline std::vector<Vec> drop_coordinate(const std::vector<Vec>& pts, std::size_t axis) {
  std::vector<Vec> out;
  for (const auto& p : pts) {
    Vec q;
    for (std::size_t c = 0; c < p.size(); ++c)
      if (c != axis) q.push_back(p[c]);
    out.push_back(q);
  }
  return out;
}

/// Volume of the hull of a full-dimensional point set, by coning from a
/// point over brute-force facets and recursing on coordinate projections.
inline Rational volume(const std::vector<Vec>& pts) {
  const std::size_t k = pts.front().size();
  if (k == 1) {
    Rational lo = pts[0][0], hi = pts[0][0];
    for (const auto& p : pts) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    return hi - lo;
  }
  Rational total = 0;
  for (const auto& f : facets(pts)) {
    const Rational height = f.offset - dot(f.normal, pts[0]);
    if (height == 0) continue;
    std::size_t axis = 0;
    while (f.normal[axis] == 0) ++axis;
    std::vector<Vec> on;
    for (auto i : f.on) on.push_back(pts[i]);
    total += height * volume(drop_coordinate(on, axis)) / minkval::abs(f.normal[axis]);
  }
  return total / static_cast<long>(k);
}

/// vol_{k-1}(F) times the outward unit normal, for a brute-force facet.
inline Vec weighted_normal(const std::vector<Vec>& pts, const Facet& f) {
  std::size_t axis = 0;
  while (f.normal[axis] == 0) ++axis;
  std::vector<Vec> on;
  for (auto i : f.on) on.push_back(pts[i]);
  const std::size_t k = pts.front().size();
  const Rational shadow = k == 1 ? Rational(1) : volume(drop_coordinate(on, axis));
  Vec w = f.normal;
  for (auto& x : w) x = x * shadow / minkval::abs(f.normal[axis]);
  return w;
}

/// Extreme points: those on brute-force facets whose normals span R^k.
inline std::vector<Vec> vertices(const std::vector<Vec>& pts) {
  const std::size_t k = pts.front().size();
  const auto fs = facets(pts);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<Vec> normals;
    for (const auto& f : fs)
      if (std::find(f.on.begin(), f.on.end(), i) != f.on.end()) normals.push_back(f.normal);
    // rank test by trying all k-subsets for a nonzero determinant
    bool spans = false;
    if (normals.size() >= k) {
      for_each_subset(normals.size(), k, [&](const std::vector<std::size_t>& idx) {
        if (spans) return;
        std::vector<Vec> m;
        for (auto j : idx) m.push_back(normals[j]);
        if (det(m) != 0) spans = true;
      });
    }
    if (spans) out.push_back(pts[i]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline Rational support(const std::vector<Vec>& pts, const Vec& xi) {
  Rational best = dot(xi, pts.front());
  for (const auto& p : pts) best = std::max(best, dot(xi, p));
  return best;
}

/// |det(v_1 - v_0, ..., v_k - v_0)| / k!
inline Rational simplex_volume(const std::vector<Vec>& pts) {
  const std::size_t k = pts.front().size();
  std::vector<Vec> m;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    Vec row;
    for (std::size_t c = 0; c < k; ++c) row.push_back(pts[i][c] - pts[0][c]);
    m.push_back(row);
  }
  Rational d = minkval::abs(det(m));
  for (std::size_t i = 2; i <= k; ++i) d /= static_cast<long>(i);
  return d;
}

template <class Tag>
std::vector<Vec> coords(const std::vector<minkval::Coordinates<Tag>>& pts) {
  std::vector<Vec> out;
  for (const auto& p : pts) out.push_back(p.coords());
  return out;
}

}  // namespace oracle
