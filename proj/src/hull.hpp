#pragma once

// Internal: exact beneath-beyond hull over integer coordinates.

#include <cstddef>
#include <vector>

#include "minkval/rational.hpp"

namespace minkval::detail {

using IntVec = std::vector<Integer>;

struct HullFacet {
  IntVec normal;  // primitive, outward
  Integer offset;
  std::vector<std::size_t> vertices;  // extreme points on the facet
  IntVec cross_sum;  // sum of outward cross products of the facet's simplices
};

struct HullResult {
  int affine_dim = -1;
  std::vector<std::size_t> extreme;
  // Populated when the input is full-dimensional.
  std::vector<HullFacet> facets;
  // Populated when affine_dim == ambient - 1: simplices (affine_dim + 1 ids
  // each) tiling the point set's hull inside its affine span.
  std::vector<std::vector<std::size_t>> fan;
};

/// Points must be pairwise distinct and all of dimension `dim` (2..4).
HullResult integer_hull(const std::vector<IntVec>& points, int dim);

/// Generalized cross product of dim-1 vectors in Z^dim: the vector c with
/// <c, x> = det(x, v_1, ..., v_{dim-1}).
IntVec cross(const std::vector<IntVec>& vectors, int dim);

}  // namespace minkval::detail
