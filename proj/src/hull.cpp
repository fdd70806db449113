#include "hull.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>

#include "minkval/linalg.hpp"

namespace minkval::detail {

namespace {

Integer dot(const IntVec& a, const IntVec& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Integer small_det(const std::vector<IntVec>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Integer d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<IntVec> minor;
    for (std::size_t r = 1; r < n; ++r) {
      IntVec row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const Integer term = m[0][c] * small_det(minor);
    if (c % 2) d -= term;
    else d += term;
  }
  return d;
}

void make_primitive(IntVec& v, Integer& offset) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1) {
    for (auto& x : v) x /= g;
    offset /= g;
  }
}

std::uint64_t ridge_key(const std::vector<std::size_t>& ids, std::size_t skip) {
  std::uint64_t key = 0;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (k == skip) continue;
    key = (key << 21) | static_cast<std::uint64_t>(ids[k] + 1);
  }
  return key;
}

struct Piece {
  std::vector<std::size_t> ids;  // sorted
  IntVec normal;                 // oriented cross product, outward
  Integer offset;
};

// Incremental placing (beneath-beyond) construction of a simplicial boundary
// complex. Coplanar points count as beneath, so the pieces always tile the
// boundary exactly even when the input is degenerate.
class BeneathBeyond {
 public:
  BeneathBeyond(const std::vector<IntVec>& pts, int dim) : pts_(pts), dim_(dim) {}

  std::vector<Piece> run(const std::vector<std::size_t>& simplex) {
    interior_ = IntVec(static_cast<std::size_t>(dim_));
    for (auto id : simplex)
      for (int k = 0; k < dim_; ++k) interior_[static_cast<std::size_t>(k)] += pts_[id][static_cast<std::size_t>(k)];
    interior_weight_ = static_cast<long>(simplex.size());

    for (std::size_t k = 0; k < simplex.size(); ++k) {
      std::vector<std::size_t> ids;
      for (std::size_t j = 0; j < simplex.size(); ++j)
        if (j != k) ids.push_back(simplex[j]);
      add_piece(std::move(ids));
    }

    std::vector<char> used(pts_.size(), 0);
    for (auto id : simplex) used[id] = 1;
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < pts_.size(); ++i)
      if (!used[i]) order.push_back(i);
    std::mt19937 shuffle_rng(0x5eedu);
    std::shuffle(order.begin(), order.end(), shuffle_rng);
    for (auto id : order) insert(id);
    return std::move(pieces_);
  }

 private:
  void add_piece(std::vector<std::size_t> ids) {
    std::sort(ids.begin(), ids.end());
    std::vector<IntVec> edges;
    for (std::size_t k = 1; k < ids.size(); ++k) edges.push_back(sub(pts_[ids[k]], pts_[ids[0]]));
    IntVec normal = cross(edges, dim_);
    Integer offset = dot(normal, pts_[ids[0]]);
    if (dot(normal, interior_) > offset * interior_weight_) {
      for (auto& x : normal) x = -x;
      offset = -offset;
    }
    pieces_.push_back(Piece{std::move(ids), std::move(normal), std::move(offset)});
  }

  void insert(std::size_t id) {
    const IntVec& p = pts_[id];
    std::vector<std::size_t> visible;
    for (std::size_t f = 0; f < pieces_.size(); ++f) {
      if (dot(pieces_[f].normal, p) > pieces_[f].offset) visible.push_back(f);
    }
    if (visible.empty()) return;

    std::vector<std::pair<std::uint64_t, std::pair<std::size_t, std::size_t>>> ridges;
    for (auto f : visible)
      for (std::size_t k = 0; k < pieces_[f].ids.size(); ++k) ridges.push_back({ridge_key(pieces_[f].ids, k), {f, k}});
    std::sort(ridges.begin(), ridges.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<std::vector<std::size_t>> horizon;
    for (std::size_t i = 0; i < ridges.size();) {
      std::size_t j = i;
      while (j < ridges.size() && ridges[j].first == ridges[i].first) ++j;
      if (j - i == 1) {
        const auto [f, skip] = ridges[i].second;
        std::vector<std::size_t> ids;
        for (std::size_t k = 0; k < pieces_[f].ids.size(); ++k)
          if (k != skip) ids.push_back(pieces_[f].ids[k]);
        ids.push_back(id);
        horizon.push_back(std::move(ids));
      }
      i = j;
    }

    std::vector<char> dead(pieces_.size(), 0);
    for (auto f : visible) dead[f] = 1;
    std::size_t w = 0;
    for (std::size_t f = 0; f < pieces_.size(); ++f) {
      if (!dead[f]) {
        if (w != f) pieces_[w] = std::move(pieces_[f]);
        ++w;
      }
    }
    pieces_.resize(w);
    for (auto& ids : horizon) add_piece(std::move(ids));
  }

  const std::vector<IntVec>& pts_;
  int dim_;
  IntVec interior_;
  long interior_weight_ = 1;
  std::vector<Piece> pieces_;
};

struct AffineFrame {
  std::vector<std::size_t> simplex;  // affinely independent point ids
  std::vector<int> pivots;           // coordinates injective on the span
};

AffineFrame affine_frame(const std::vector<IntVec>& pts, int dim) {
  AffineFrame frame;
  frame.simplex.push_back(0);
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 1; i < pts.size() && static_cast<int>(rows.size()) < dim; ++i) {
    std::vector<Rational> v(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k) v[static_cast<std::size_t>(k)] = Rational(pts[i][static_cast<std::size_t>(k)] - pts[0][static_cast<std::size_t>(k)]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const auto c = static_cast<std::size_t>(frame.pivots[r]);
      if (v[c] == 0) continue;
      const Rational f = v[c] / rows[r][c];
      for (int k = 0; k < dim; ++k) v[static_cast<std::size_t>(k)] -= f * rows[r][static_cast<std::size_t>(k)];
    }
    const auto nz = std::find_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
    if (nz == v.end()) continue;
    frame.pivots.push_back(static_cast<int>(nz - v.begin()));
    rows.push_back(std::move(v));
    frame.simplex.push_back(i);
  }
  return frame;
}

std::pair<std::vector<std::size_t>, std::vector<HullFacet>> merge_pieces(const std::vector<IntVec>& pts, int dim,
                                                                          const std::vector<Piece>& pieces) {
  std::map<IntVec, std::size_t> by_normal;
  std::vector<HullFacet> facets;
  std::vector<char> on_boundary(pts.size(), 0);
  for (const auto& piece : pieces) {
    for (auto id : piece.ids) on_boundary[id] = 1;
    IntVec prim = piece.normal;
    Integer offset = piece.offset;
    make_primitive(prim, offset);
    auto [it, inserted] = by_normal.try_emplace(prim, facets.size());
    if (inserted) facets.push_back(HullFacet{prim, offset, {}, IntVec(static_cast<std::size_t>(dim))});
    auto& cs = facets[it->second].cross_sum;
    for (int k = 0; k < dim; ++k) cs[static_cast<std::size_t>(k)] += piece.normal[static_cast<std::size_t>(k)];
  }

  std::vector<std::size_t> extreme;
  for (std::size_t id = 0; id < pts.size(); ++id) {
    if (!on_boundary[id]) continue;
    std::vector<std::vector<Rational>> rows;
    for (const auto& f : facets) {
      if (dot(f.normal, pts[id]) != f.offset) continue;
      std::vector<Rational> row;
      for (const auto& x : f.normal) row.emplace_back(x);
      rows.push_back(std::move(row));
    }
    Matrix m(static_cast<int>(rows.size()), dim);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (int k = 0; k < dim; ++k) m(static_cast<int>(r), k) = rows[r][static_cast<std::size_t>(k)];
    if (rank(m) == dim) extreme.push_back(id);
  }
  for (auto& f : facets) {
    for (auto id : extreme)
      if (dot(f.normal, pts[id]) == f.offset) f.vertices.push_back(id);
  }
  return {extreme, facets};
}

}  // namespace

IntVec cross(const std::vector<IntVec>& vectors, int dim) {
  IntVec c(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    std::vector<IntVec> minor;
    for (const auto& v : vectors) {
      IntVec row;
      for (int k = 0; k < dim; ++k)
        if (k != i) row.push_back(v[static_cast<std::size_t>(k)]);
      minor.push_back(std::move(row));
    }
    Integer d = small_det(minor);
    c[static_cast<std::size_t>(i)] = (i % 2) ? Integer(-d) : d;
  }
  return c;
}

HullResult integer_hull(const std::vector<IntVec>& points, int dim) {
  HullResult result;
  if (points.empty()) return result;
  const AffineFrame frame = affine_frame(points, dim);
  const int d = static_cast<int>(frame.pivots.size());
  result.affine_dim = d;

  if (d == dim) {
    BeneathBeyond bb(points, dim);
    auto pieces = bb.run(frame.simplex);
    auto [extreme, facets] = merge_pieces(points, dim, pieces);
    result.extreme = std::move(extreme);
    result.facets = std::move(facets);
    return result;
  }
  if (d == 0) {
    result.extreme = {0};
    return result;
  }

  std::vector<IntVec> projected;
  projected.reserve(points.size());
  for (const auto& p : points) {
    IntVec q;
    for (int c : frame.pivots) q.push_back(p[static_cast<std::size_t>(c)]);
    projected.push_back(std::move(q));
  }

  std::vector<std::vector<std::size_t>> simplices;
  if (d == 1) {
    const auto [lo, hi] = std::minmax_element(projected.begin(), projected.end(),
                                              [](const IntVec& a, const IntVec& b) { return a[0] < b[0]; });
    const auto a = static_cast<std::size_t>(lo - projected.begin());
    const auto b = static_cast<std::size_t>(hi - projected.begin());
    result.extreme = {std::min(a, b), std::max(a, b)};
    simplices.push_back({a, b});
  } else {
    BeneathBeyond bb(projected, d);
    auto pieces = bb.run(frame.simplex);
    auto merged = merge_pieces(projected, d, pieces);
    result.extreme = std::move(merged.first);
    const std::size_t apex = result.extreme.front();
    for (const auto& piece : pieces) {
      if (std::find(piece.ids.begin(), piece.ids.end(), apex) != piece.ids.end()) continue;
      if (dot(piece.normal, projected[apex]) == piece.offset) continue;
      std::vector<std::size_t> s{apex};
      s.insert(s.end(), piece.ids.begin(), piece.ids.end());
      simplices.push_back(std::move(s));
    }
  }
  if (d == dim - 1) result.fan = std::move(simplices);
  return result;
}

}  // namespace minkval::detail
