#include "minkval/complex_structure.hpp"

#include <algorithm>

namespace minkval {

namespace {

Matrix block_diagonal(const Matrix& block) {
  Matrix m(4, 4);
  for (int b = 0; b < 2; ++b)
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) m(2 * b + r, 2 * b + c) = block(r, c);
  return m;
}

Complex coordinate(const Point& u, int k) {
  return {u[static_cast<std::size_t>(2 * k)], u[static_cast<std::size_t>(2 * k + 1)]};
}

void require_w(const Point& u) {
  if (u.dim() != 4) throw DimensionError("expected a point of W = C^2 (ambient dimension 4)");
}

}  // namespace

Complex Complex::inverse() const {
  const Rational n = norm2();
  if (n == 0) throw SingularMatrixError("division by the complex number 0");
  return {re / n, -im / n};
}

std::string to_string(const Complex& z) { return to_string(z.re) + (z.im < 0 ? "" : "+") + to_string(z.im) + "i"; }

Matrix multiplication_matrix(const Complex& z) { return Matrix{{z.re, -z.im}, {z.im, z.re}}; }

ComplexMatrix2::ComplexMatrix2(Complex a, Complex b, Complex c, Complex d)
    : entries_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

Complex ComplexMatrix2::det() const { return (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0); }

ComplexMatrix2 ComplexMatrix2::inverse() const {
  const Complex d = det();
  if (d.is_zero()) throw SingularMatrixError("complex matrix is singular");
  const Complex s = d.inverse();
  return {(*this)(1, 1) * s, -(*this)(0, 1) * s, -(*this)(1, 0) * s, (*this)(0, 0) * s};
}

ComplexMatrix2 ComplexMatrix2::adjoint() const {
  return {(*this)(0, 0).conj(), (*this)(1, 0).conj(), (*this)(0, 1).conj(), (*this)(1, 1).conj()};
}

Matrix ComplexMatrix2::real_matrix() const {
  Matrix m(4, 4);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      const Matrix block = multiplication_matrix((*this)(r, c));
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m(2 * r + i, 2 * c + j) = block(i, j);
    }
  return m;
}

ComplexMatrix2 operator*(const ComplexMatrix2& a, const ComplexMatrix2& b) {
  return {a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
          a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)};
}

DualPolytope::DualPolytope(Polytope body) : body_(std::move(body)) {
  if (body_.ambient_dim() != 4) throw DimensionError("bodies in W* live in ambient dimension 4");
}

DualPolytope DualPolytope::zero() { return DualPolytope(singleton(Point::zero(4))); }

DualPolytope DualPolytope::hull(std::span<const Covector> points) {
  std::vector<Point> coords;
  coords.reserve(points.size());
  for (const auto& p : points) coords.push_back(retag<PointTag>(p));
  return DualPolytope(convex_hull(coords, 4));
}

Rational DualPolytope::support(const Point& w) const {
  require_w(w);
  return body_.support(retag<CovectorTag>(w));
}

std::vector<Covector> DualPolytope::vertices() const {
  std::vector<Covector> out;
  for (const auto& v : body_.vertices()) out.push_back(retag<CovectorTag>(v));
  return out;
}

bool DualPolytope::is_zero() const { return body_.affine_dim() == 0 && body_.vertices().front().is_zero(); }

DualPolytope minkowski_sum(const DualPolytope& p, const DualPolytope& q) {
  return DualPolytope(minkowski_sum(p.coordinates(), q.coordinates()));
}

Point complex_scale(const Complex& alpha, const Point& u) {
  const Matrix m = multiplication_matrix(alpha);
  if (u.dim() == 2) return apply<PointTag>(m, u);
  require_w(u);
  return apply<PointTag>(block_diagonal(m), u);
}

Polytope complex_scale(const Complex& alpha, const Polytope& p) {
  const Matrix m = multiplication_matrix(alpha);
  if (p.ambient_dim() == 2) return linear_image(p, m);
  if (p.ambient_dim() != 4) throw DimensionError("complex scaling needs a body in C (2) or C^2 (4)");
  return linear_image(p, block_diagonal(m));
}

Covector dual_scale(const Complex& c, const Covector& xi, DualScalarAction action) {
  if (xi.dim() != 4) throw DimensionError("expected a covector on W");
  const Complex s = action == DualScalarAction::Plain ? c : c.conj();
  return apply<CovectorTag>(block_diagonal(multiplication_matrix(s)).transpose(), xi);
}

DualPolytope dual_scale(const Complex& c, const DualPolytope& q, DualScalarAction action) {
  const Complex s = action == DualScalarAction::Plain ? c : c.conj();
  return DualPolytope(linear_image(q.coordinates(), block_diagonal(multiplication_matrix(s)).transpose()));
}

Complex det_pair(const Point& u, const Point& v) {
  require_w(u);
  require_w(v);
  return coordinate(u, 0) * coordinate(v, 1) - coordinate(u, 1) * coordinate(v, 0);
}

Polytope det_image(const Polytope& k, const Point& w) {
  require_w(w);
  // k -> k1 w2 - k2 w1 as a real 2x4 matrix [M(w2) | -M(w1)].
  const Matrix a = multiplication_matrix(coordinate(w, 1));
  const Matrix b = multiplication_matrix(-coordinate(w, 0));
  Matrix m(2, 4);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      m(r, c) = a(r, c);
      m(r, c + 2) = b(r, c);
    }
  return linear_image(k, m);
}

Matrix phi_matrix() {
  // Column j is Phi(e_j); its k-th dual coordinate is Re det(e_j, e_k).
  Matrix m(4, 4);
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) m(k, j) = det_pair(Point::unit(4, j), Point::unit(4, k)).re;
  return m;
}

Matrix phi_inverse_matrix() { return inverse(phi_matrix()); }

Covector phi(const Point& u) {
  require_w(u);
  return apply<CovectorTag>(phi_matrix(), u);
}

Point phi_inverse(const Covector& xi) {
  if (xi.dim() != 4) throw DimensionError("expected a covector on W");
  return apply<PointTag>(phi_inverse_matrix(), xi);
}

DualPolytope phi_map(const Polytope& p) { return DualPolytope(linear_image(p, phi_matrix())); }

Polytope phi_inverse(const DualPolytope& q) { return linear_image(q.coordinates(), phi_inverse_matrix()); }

Point group_action(const ComplexMatrix2& g, const Point& u) {
  require_w(u);
  return apply<PointTag>(g.real_matrix(), u);
}

Polytope group_action(const ComplexMatrix2& g, const Polytope& p) {
  if (!g.is_invertible()) throw SingularMatrixError("group action by a singular matrix");
  return linear_image(p, g.real_matrix());
}

Covector dual_action(const ComplexMatrix2& g, const Covector& xi) {
  return apply<CovectorTag>(g.inverse().real_matrix().transpose(), xi);
}

DualPolytope dual_action(const ComplexMatrix2& g, const DualPolytope& q) {
  return DualPolytope(linear_image(q.coordinates(), g.inverse().real_matrix().transpose()));
}

Covector adjoint_action(const ComplexMatrix2& g, const Covector& xi) {
  return apply<CovectorTag>(g.real_matrix().transpose(), xi);
}

Rational planar_support(const Polytope& planar, const Complex& a) {
  if (planar.ambient_dim() != 2) throw DimensionError("planar support needs a body in C");
  return planar.support(Covector{a.re, a.im});
}

}  // namespace minkval
