#pragma once

// Minkowski valuations on polytopes in W = C^2. Each operator has two
// independent evaluation paths: an explicit Minkowski-sum reconstruction of
// the output body, and a SupportEvaluator that computes h(ZK, .) straight
// from the mixed-volume / area-measure formula.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "minkval/complex_structure.hpp"
#include "minkval/mixed_volume.hpp"

namespace minkval {

/// A Minkowski sum kept as its list of summands. Support functions add, so
/// evaluation is exact and cheap; materialize() computes the actual hull,
/// which can be large for zonotopes with many generators.
template <class Body, class Direction>
class MinkowskiSum {
 public:
  MinkowskiSum() = default;
  explicit MinkowskiSum(std::vector<Body> summands) : summands_(std::move(summands)) {}

  const std::vector<Body>& summands() const { return summands_; }
  bool is_trivially_zero() const { return summands_.empty(); }
  void add(Body b) { summands_.push_back(std::move(b)); }
  void append(const MinkowskiSum& other) { summands_.insert(summands_.end(), other.summands_.begin(), other.summands_.end()); }

  /// The support of {0} is 0, so an empty sum evaluates to 0.
  Rational support(const Direction& d) const {
    Rational s = 0;
    for (const auto& b : summands_) s += b.support(d);
    return s;
  }

  Body materialize() const;

 private:
  std::vector<Body> summands_;
};

using PrimalSum = MinkowskiSum<Polytope, Covector>;
using DualSum = MinkowskiSum<DualPolytope, Point>;

template <>
Polytope PrimalSum::materialize() const;
template <>
DualPolytope DualSum::materialize() const;

enum class OpKind { Proj, Diff, DM, PiN, DTildeM, ZCombined };

/// Which complex number pairs with det(K, w) in the integral form of
/// dtilde_m: the area-measure atom itself or its conjugate.
enum class PlanarAtomConvention { Atom, Conjugate };

struct ValuationOp {
  OpKind kind = OpKind::Proj;
  /// covariant_of(...): the output is pulled back to W through Phi^{-1}.
  bool covariant_image = false;
  std::optional<Polytope> m;
  std::optional<Polytope> n;

  static ValuationOp proj() { return {OpKind::Proj, false, {}, {}}; }
  static ValuationOp diff() { return {OpKind::Diff, false, {}, {}}; }
  static ValuationOp d_m(Polytope m) { return {OpKind::DM, false, std::move(m), {}}; }
  static ValuationOp pi_n(Polytope n) { return {OpKind::PiN, false, {}, std::move(n)}; }
  static ValuationOp dtilde_m(Polytope m) { return {OpKind::DTildeM, false, std::move(m), {}}; }
  static ValuationOp z_combined(Polytope m, Polytope n) { return {OpKind::ZCombined, false, std::move(m), std::move(n)}; }

  /// Throws Error when parameters are missing, superfluous or not planar.
  /// Empty and singleton parameters are allowed and give the zero operator.
  void validate() const;
  /// Output lives in W* (contravariant) rather than W.
  bool dual_output() const;
  /// "pi_n", "cov_pi_n", ...
  std::string name() const;
  /// Homogeneity degrees in K that may carry nonzero coefficients.
  std::vector<int> degrees() const;
};

bool is_contravariant_kind(OpKind kind);
std::string kind_name(OpKind kind);
/// Accepts "proj", "diff", "d_m", "pi_n", "dtilde_m", "z_combined".
OpKind parse_kind(const std::string& name);

/// The covariant operator K -> Phi^{-1}(op(K)). Throws Error unless op is
/// one of the contravariant kinds.
ValuationOp covariant_of(const ValuationOp& op);

using ValuationOutput = std::variant<PrimalSum, DualSum>;

// Reconstructions.
DualSum projection_body(const Polytope& k);
PrimalSum difference_body(const Polytope& k);
PrimalSum d_m(const Polytope& m, const Polytope& k);
DualSum pi_n(const Polytope& n, const Polytope& k);
DualSum dtilde_m(const Polytope& m, const Polytope& k);
DualSum z_combined(const Polytope& m, const Polytope& n, const Polytope& k);
ValuationOutput apply(const ValuationOp& op, const Polytope& k);

/// h(D~_M K, w) = sum_j h(det(K, w), a_j), a_j = nu_j or conj(nu_j).
Rational dtilde_m_integral(const Polytope& m, const Polytope& k, const Point& w, PlanarAtomConvention convention);
/// The convention under which the integral agrees with Phi(D_M K).
inline constexpr PlanarAtomConvention kDTildeConvention = PlanarAtomConvention::Conjugate;

/// Evaluates h(op(K), .) from the defining formulas without building the
/// output body.
class SupportEvaluator {
 public:
  SupportEvaluator(ValuationOp op, Polytope k);

  const ValuationOp& op() const { return op_; }
  const Polytope& body() const { return k_; }
  /// For operators with output in W*. Throws Error otherwise.
  Rational support(const Point& w) const;
  /// For operators with output in W. Throws Error otherwise.
  Rational support(const Covector& xi) const;

 private:
  Rational dual_support(const ValuationOp& op, const Point& w) const;
  Rational primal_support(const ValuationOp& op, const Covector& xi) const;
  Rational pi_n_support(const Polytope& n, const Point& w) const;

  ValuationOp op_;
  Polytope k_;
};

/// Support at a direction given by raw coordinates, read as a point of W
/// for outputs in W* and as a covector on W otherwise.
Rational support_at(const ValuationOutput& out, const std::vector<Rational>& dir);
Rational support_at(const SupportEvaluator& eval, const std::vector<Rational>& dir);

/// Complex numbers nu_j: the weighted normals of a planar body.
std::vector<Complex> planar_atoms(const Polytope& m);
/// N . w = conv{c w : c in N}.
Polytope complex_orbit(const Polytope& n, const Point& w);

}  // namespace minkval
