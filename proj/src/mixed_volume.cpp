#include "minkval/mixed_volume.hpp"

#include <vector>

namespace minkval {

namespace {

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

void require_ambient(const Polytope& p, int n, const char* what) {
  if (p.is_empty()) throw Error(std::string(what) + ": bodies must be nonempty");
  if (p.ambient_dim() != n) throw DimensionError(std::string(what) + ": bodies live in different ambient dimensions");
}

}  // namespace

Rational mixed_volume(std::span<const Polytope> bodies) {
  const int n = static_cast<int>(bodies.size());
  if (n < 2 || n > 4) throw DimensionError("mixed_volume takes 2 to 4 bodies");
  for (const auto& b : bodies) require_ambient(b, n, "mixed_volume");

  std::vector<Polytope> distinct;
  std::vector<int> mult;
  for (const auto& b : bodies) {
    std::size_t i = 0;
    while (i < distinct.size() && distinct[i] != b) ++i;
    if (i == distinct.size()) {
      distinct.push_back(b);
      mult.push_back(0);
    }
    ++mult[i];
  }

  // Enumerate count vectors j with 0 <= j_i <= mult_i.
  Rational total = 0;
  std::vector<int> j(distinct.size(), 0);
  for (;;) {
    std::size_t i = 0;
    while (i < j.size() && j[i] == mult[i]) j[i++] = 0;
    if (i == j.size()) break;
    ++j[i];

    int size = 0;
    Integer ways = 1;
    Polytope sum;
    bool first = true;
    for (std::size_t t = 0; t < j.size(); ++t) {
      if (j[t] == 0) continue;
      size += j[t];
      ways *= binomial(static_cast<unsigned long>(mult[t]), static_cast<unsigned long>(j[t]));
      const Polytope part = j[t] == 1 ? distinct[t] : scale(distinct[t], j[t]);
      sum = first ? part : minkowski_sum(sum, part);
      first = false;
    }
    const Rational term = Rational(ways) * sum.volume();
    if ((n - size) % 2) total -= term;
    else total += term;
  }
  return total / Rational(factorial(static_cast<unsigned long>(n)));
}

Rational mixed_volume(const Polytope& k1, const Polytope& k2, const Polytope& k3, const Polytope& k4) {
  const Polytope bodies[] = {k1, k2, k3, k4};
  return mixed_volume(bodies);
}

Rational mixed_volume_31(const Polytope& k, const Polytope& l) {
  require_ambient(k, k.ambient_dim(), "mixed_volume_31");
  require_ambient(l, k.ambient_dim(), "mixed_volume_31");
  Rational s = 0;
  for (const auto& sigma : k.area_measure().atoms()) s += l.support(sigma);
  return s / k.ambient_dim();
}

Rational mixed_volume_fn(const Polytope& k, const HomogeneousFunction& phi) {
  require_ambient(k, k.ambient_dim(), "mixed_volume_fn");
  Rational s = 0;
  for (const auto& sigma : k.area_measure().atoms()) s += phi(sigma);
  return s / k.ambient_dim();
}

ApproxValue mixed_volume_fn(const Polytope& k, const ApproxHomogeneousFunction& phi) {
  require_ambient(k, k.ambient_dim(), "mixed_volume_fn");
  HighPrecision s = 0, magnitude = 0;
  const auto& atoms = k.area_measure().atoms();
  for (const auto& sigma : atoms) {
    const HighPrecision v = phi.evaluate(sigma);
    s += v;
    magnitude += abs(v);
  }
  // Each evaluation and each addition contributes at most one rounding
  // relative to the running magnitude; the final division is exact in
  // binary for n = 2, 4 and one more rounding for n = 3.
  const HighPrecision eps = std::numeric_limits<HighPrecision>::epsilon();
  const int n = k.ambient_dim();
  ApproxValue out;
  out.value = s / n;
  out.error_bound = (2 * static_cast<int>(atoms.size()) + 2) * eps * magnitude / n;
  return out;
}

HomogeneousFunction support_function(const Polytope& l, std::string label) {
  return {std::move(label), [l](const Covector& xi) { return l.support(xi); }};
}

}  // namespace minkval
