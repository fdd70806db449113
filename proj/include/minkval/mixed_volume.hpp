#pragma once

// Mixed volumes of n polytopes in R^n (n = 2..4): polarization as the
// reference, and the facet form V(K,...,K,L) = (1/n) sum_F h(L, sigma_F)
// together with its extension to 1-homogeneous integrands.

#include <functional>
#include <span>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "minkval/geometry.hpp"

namespace minkval {

/// sum over nonempty S of (-1)^{n-|S|} vol(sum_{i in S} K_i), divided by n!.
/// Equal bodies are grouped, so (K,K,K,L) costs four hulls rather than 15.
Rational mixed_volume(std::span<const Polytope> bodies);
Rational mixed_volume(const Polytope& k1, const Polytope& k2, const Polytope& k3, const Polytope& k4);

/// V(K,...,K,L) via the surface area measure of K.
Rational mixed_volume_31(const Polytope& k, const Polytope& l);

/// A function on covectors that the caller promises is positively
/// 1-homogeneous. `label` names it in reports.
struct HomogeneousFunction {
  std::string label;
  std::function<Rational(const Covector&)> evaluate;

  Rational operator()(const Covector& xi) const { return evaluate(xi); }
};

/// V(K,...,K,phi) = (1/n) sum_F phi(sigma_F).
Rational mixed_volume_fn(const Polytope& k, const HomogeneousFunction& phi);

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

/// For integrands with irrational values. The evaluator should return
/// values correctly rounded to HighPrecision.
struct ApproxHomogeneousFunction {
  std::string label;
  std::function<HighPrecision(const Covector&)> evaluate;
};

struct ApproxValue {
  HighPrecision value;
  HighPrecision error_bound;  // absolute
};

ApproxValue mixed_volume_fn(const Polytope& k, const ApproxHomogeneousFunction& phi);

/// h(L, .) as a HomogeneousFunction.
HomogeneousFunction support_function(const Polytope& l, std::string label = "h(L,.)");

}  // namespace minkval
