#pragma once

// W = C^2 realized on R^4 through (x1, y1, x2, y2) <-> (x1 + i y1, x2 + i y2),
// and C realized on R^2 as (re, im). Covectors on W use the dual basis.
//
// Conventions:
//   <Phi(u), w>  = Re det(u, w)
//   (c . xi)(w)  = xi(c w)          complex scalars acting on W*
//   <a, b>_C     = Re(conj(a) b)    real pairing on C

#include <string>
#include <vector>

#include "minkval/geometry.hpp"

namespace minkval {

struct Complex {
  Rational re;
  Rational im;

  Complex() = default;
  Complex(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
  Complex(int r) : re(r), im(0) {}

  Complex conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }
  bool is_zero() const { return re == 0 && im == 0; }
  Complex inverse() const;

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) { return a * b.inverse(); }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }
};

std::string to_string(const Complex& z);

/// Real 2x2 matrix of multiplication by z on C = R^2.
Matrix multiplication_matrix(const Complex& z);

/// Row-major complex 2x2 matrix; column j is the image of e_j.
class ComplexMatrix2 {
 public:
  ComplexMatrix2() : ComplexMatrix2(1, 0, 0, 1) {}
  ComplexMatrix2(Complex a, Complex b, Complex c, Complex d);

  static ComplexMatrix2 identity() { return {}; }
  static ComplexMatrix2 scalar(const Complex& t) { return {t, 0, 0, t}; }
  /// g_gamma: e1 -> e1, e2 -> gamma e1 + e2.
  static ComplexMatrix2 shear(const Complex& gamma) { return {1, gamma, 0, 1}; }
  /// e1 -> e1 + gamma e2, e2 -> e2.
  static ComplexMatrix2 lower_shear(const Complex& gamma) { return {1, 0, gamma, 1}; }
  static ComplexMatrix2 diagonal(const Complex& a, const Complex& d) { return {a, 0, 0, d}; }

  const Complex& operator()(int r, int c) const { return entries_[static_cast<std::size_t>(2 * r + c)]; }

  Complex det() const;
  bool is_invertible() const { return !det().is_zero(); }
  bool is_special() const { return det() == Complex(1); }
  /// Throws SingularMatrixError.
  ComplexMatrix2 inverse() const;
  /// Conjugate transpose.
  ComplexMatrix2 adjoint() const;
  /// The real 4x4 matrix of g acting on W = R^4.
  Matrix real_matrix() const;

  friend ComplexMatrix2 operator*(const ComplexMatrix2& a, const ComplexMatrix2& b);
  friend bool operator==(const ComplexMatrix2& a, const ComplexMatrix2& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<Complex> entries_;
};

/// A polytope in W*, the dual of W = C^2. Its support function takes points
/// of W; there is deliberately no overload taking a covector.
class DualPolytope {
 public:
  DualPolytope() = default;
  /// Interprets `body` (ambient 4) as a subset of W*.
  explicit DualPolytope(Polytope body);
  static DualPolytope zero();
  static DualPolytope hull(std::span<const Covector> points);

  Rational support(const Point& w) const;
  std::vector<Covector> vertices() const;
  bool is_empty() const { return body_.is_empty(); }
  bool is_zero() const;
  int affine_dim() const { return body_.affine_dim(); }
  /// The underlying coordinate polytope, for I/O and Minkowski sums.
  const Polytope& coordinates() const { return body_; }

  friend bool operator==(const DualPolytope& a, const DualPolytope& b) { return a.body_ == b.body_; }

 private:
  Polytope body_;
};

DualPolytope minkowski_sum(const DualPolytope& p, const DualPolytope& q);
inline Rational support(const DualPolytope& q, const Point& w) { return q.support(w); }

// Complex scalars.
Point complex_scale(const Complex& alpha, const Point& u);
/// Multiplication by alpha in each complex coordinate; P in W (ambient 4)
/// or in C (ambient 2).
Polytope complex_scale(const Complex& alpha, const Polytope& p);

enum class DualScalarAction {
  Plain,      // (c . xi)(w) = xi(c w)
  Conjugate,  // (c . xi)(w) = xi(conj(c) w)
};
Covector dual_scale(const Complex& c, const Covector& xi, DualScalarAction action = DualScalarAction::Plain);
DualPolytope dual_scale(const Complex& c, const DualPolytope& q, DualScalarAction action = DualScalarAction::Plain);

// Determinant pairing.
Complex det_pair(const Point& u, const Point& v);
/// det(K, w) = {det(k, w) : k in K}, a planar polytope in C.
Polytope det_image(const Polytope& k, const Point& w);

// Identification Phi: W -> W*.
Matrix phi_matrix();
Matrix phi_inverse_matrix();
Covector phi(const Point& u);
Point phi_inverse(const Covector& xi);
DualPolytope phi_map(const Polytope& p);
Polytope phi_inverse(const DualPolytope& q);

// Group actions.
Point group_action(const ComplexMatrix2& g, const Point& u);
Polytope group_action(const ComplexMatrix2& g, const Polytope& p);
/// g^{-*}: <g^{-*} xi, w> = <xi, g^{-1} w>. Throws SingularMatrixError.
Covector dual_action(const ComplexMatrix2& g, const Covector& xi);
DualPolytope dual_action(const ComplexMatrix2& g, const DualPolytope& q);
/// The real adjoint g^*: <g^* xi, w> = <xi, g w>.
Covector adjoint_action(const ComplexMatrix2& g, const Covector& xi);

/// Support function of a planar body at the complex direction a, i.e.
/// max over z of Re(conj(a) z).
Rational planar_support(const Polytope& planar, const Complex& a);

inline Complex to_complex(const Point& planar) { return {planar[0], planar[1]}; }
inline Complex to_complex(const Covector& planar) { return {planar[0], planar[1]}; }
inline Point to_point(const Complex& z) { return Point{z.re, z.im}; }

}  // namespace minkval
