#pragma once

// Seeded generators for exact random inputs: bounded-denominator rationals,
// points, polytopes, planar parameter bodies and complex matrices.

#include <cstdint>
#include <random>

#include "minkval/complex_structure.hpp"
#include "minkval/geometry.hpp"

namespace minkval {

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : engine_(seed) {}

  int uniform_int(int lo, int hi);
  /// p/q with 1 <= q <= max_den and |p/q| <= bound.
  Rational rational(int max_den = 16, int bound = 2);
  Rational nonzero_rational(int max_den = 16, int bound = 2);
  Point point(int dim, int max_den = 16, int bound = 2);
  Covector covector(int dim, int max_den = 16, int bound = 2);
  Covector nonzero_covector(int dim, int max_den = 16, int bound = 2);

  /// Hull of `min_points..max_points` random points, resampled until it is
  /// full-dimensional.
  Polytope full_polytope(int dim, int min_points = 5, int max_points = 12);
  /// Planar parameter body: a random polygon with 1..max_points points
  /// (points and segments included).
  Polytope planar_body(int max_points = 5);
  /// Planar polygon guaranteed to be two-dimensional.
  Polytope planar_polygon(int min_points = 3, int max_points = 5);

  Complex complex(int max_den = 8, int bound = 2);
  Complex nonzero_complex(int max_den = 8, int bound = 2);
  /// Product of one to three shears g_gamma, lower shears and diagonals
  /// diag(lambda, 1/lambda); det_C = 1 exactly.
  ComplexMatrix2 special_linear();
  /// Random invertible complex 2x2 matrix.
  ComplexMatrix2 general_linear();
  /// Random invertible rational n x n matrix.
  Matrix invertible_matrix(int n);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace minkval
