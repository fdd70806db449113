#include "minkval/random.hpp"

namespace minkval {

int Generator::uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

Rational Generator::rational(int max_den, int bound) {
  const int den = uniform_int(1, max_den);
  const int num = uniform_int(-bound * den, bound * den);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational Generator::nonzero_rational(int max_den, int bound) {
  for (;;) {
    Rational q = rational(max_den, bound);
    if (q != 0) return q;
  }
}

Point Generator::point(int dim, int max_den, int bound) {
  std::vector<Rational> c;
  for (int k = 0; k < dim; ++k) c.push_back(rational(max_den, bound));
  return Point(std::move(c));
}

Covector Generator::covector(int dim, int max_den, int bound) {
  return retag<CovectorTag>(point(dim, max_den, bound));
}

Covector Generator::nonzero_covector(int dim, int max_den, int bound) {
  for (;;) {
    Covector c = covector(dim, max_den, bound);
    if (!c.is_zero()) return c;
  }
}

Polytope Generator::full_polytope(int dim, int min_points, int max_points) {
  for (;;) {
    const int count = uniform_int(min_points, max_points);
    std::vector<Point> pts;
    for (int i = 0; i < count; ++i) pts.push_back(point(dim));
    Polytope p = convex_hull(pts, dim);
    if (p.is_full_dimensional()) return p;
  }
}

Polytope Generator::planar_body(int max_points) {
  const int count = uniform_int(1, max_points);
  std::vector<Point> pts;
  for (int i = 0; i < count; ++i) pts.push_back(point(2, 8, 2));
  return convex_hull(pts, 2);
}

Polytope Generator::planar_polygon(int min_points, int max_points) {
  for (;;) {
    const int count = uniform_int(min_points, max_points);
    std::vector<Point> pts;
    for (int i = 0; i < count; ++i) pts.push_back(point(2, 8, 2));
    Polytope p = convex_hull(pts, 2);
    if (p.is_full_dimensional()) return p;
  }
}

Complex Generator::complex(int max_den, int bound) { return {rational(max_den, bound), rational(max_den, bound)}; }

Complex Generator::nonzero_complex(int max_den, int bound) {
  for (;;) {
    Complex z = complex(max_den, bound);
    if (!z.is_zero()) return z;
  }
}

ComplexMatrix2 Generator::special_linear() {
  ComplexMatrix2 g;
  const int factors = uniform_int(1, 3);
  for (int i = 0; i < factors; ++i) {
    switch (uniform_int(0, 2)) {
      case 0:
        g = g * ComplexMatrix2::shear(complex(4, 2));
        break;
      case 1:
        g = g * ComplexMatrix2::lower_shear(complex(4, 2));
        break;
      default: {
        const Complex lambda = nonzero_complex(4, 2);
        g = g * ComplexMatrix2::diagonal(lambda, lambda.inverse());
      }
    }
  }
  return g;
}

ComplexMatrix2 Generator::general_linear() {
  for (;;) {
    ComplexMatrix2 g(complex(4, 2), complex(4, 2), complex(4, 2), complex(4, 2));
    if (g.is_invertible()) return g;
  }
}

Matrix Generator::invertible_matrix(int n) {
  for (;;) {
    Matrix m(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m(r, c) = rational(4, 2);
    if (determinant(m) != 0) return m;
  }
}

}  // namespace minkval
