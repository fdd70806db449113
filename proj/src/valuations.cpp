#include "minkval/valuations.hpp"

namespace minkval {

namespace {

void require_body(const Polytope& k) {
  if (k.is_empty()) throw Error("valuations take a nonempty body");
  if (k.ambient_dim() != 4) throw DimensionError("valuations act on bodies in W = C^2 (ambient dimension 4)");
}

void require_planar(const std::optional<Polytope>& p, const char* name) {
  if (!p) throw Error(std::string("operator needs the planar parameter ") + name);
  if (p->ambient_dim() != 2) throw DimensionError(std::string("parameter ") + name + " must be planar (ambient dimension 2)");
}

const Polytope& planar(const std::optional<Polytope>& p) { return *p; }

}  // namespace

template <>
Polytope PrimalSum::materialize() const {
  Polytope out = singleton(Point::zero(4));
  for (const auto& b : summands_) out = minkowski_sum(out, b);
  return out;
}

template <>
DualPolytope DualSum::materialize() const {
  DualPolytope out = DualPolytope::zero();
  for (const auto& b : summands_) out = minkowski_sum(out, b);
  return out;
}

bool is_contravariant_kind(OpKind kind) {
  return kind == OpKind::Proj || kind == OpKind::PiN || kind == OpKind::DTildeM || kind == OpKind::ZCombined;
}

std::string kind_name(OpKind kind) {
  switch (kind) {
    case OpKind::Proj: return "proj";
    case OpKind::Diff: return "diff";
    case OpKind::DM: return "d_m";
    case OpKind::PiN: return "pi_n";
    case OpKind::DTildeM: return "dtilde_m";
    case OpKind::ZCombined: return "z_combined";
  }
  return "?";
}

OpKind parse_kind(const std::string& name) {
  for (OpKind k : {OpKind::Proj, OpKind::Diff, OpKind::DM, OpKind::PiN, OpKind::DTildeM, OpKind::ZCombined})
    if (kind_name(k) == name) return k;
  throw ParseError("unknown operator kind '" + name + "'");
}

void ValuationOp::validate() const {
  const bool needs_m = kind == OpKind::DM || kind == OpKind::DTildeM || kind == OpKind::ZCombined;
  const bool needs_n = kind == OpKind::PiN || kind == OpKind::ZCombined;
  if (needs_m) require_planar(m, "M");
  else if (m) throw Error(kind_name(kind) + " takes no parameter M");
  if (needs_n) require_planar(n, "N");
  else if (n) throw Error(kind_name(kind) + " takes no parameter N");
  if (covariant_image && !is_contravariant_kind(kind)) throw Error("cov_ needs a contravariant operator");
}

bool ValuationOp::dual_output() const { return is_contravariant_kind(kind) && !covariant_image; }

std::string ValuationOp::name() const { return (covariant_image ? "cov_" : "") + kind_name(kind); }

std::vector<int> ValuationOp::degrees() const {
  switch (kind) {
    case OpKind::Proj:
    case OpKind::PiN: return {3};
    case OpKind::ZCombined: return {1, 3};
    default: return {1};
  }
}

ValuationOp covariant_of(const ValuationOp& op) {
  if (op.covariant_image || !is_contravariant_kind(op.kind))
    throw Error("covariant_of expects a contravariant operator, got " + op.name());
  ValuationOp out = op;
  out.covariant_image = true;
  return out;
}

std::vector<Complex> planar_atoms(const Polytope& m) {
  if (m.ambient_dim() != 2) throw DimensionError("planar parameter bodies live in C (ambient dimension 2)");
  std::vector<Complex> out;
  if (m.is_empty()) return out;
  for (const auto& a : m.area_measure().atoms()) out.push_back(to_complex(a));
  return out;
}

Polytope complex_orbit(const Polytope& n, const Point& w) {
  std::vector<Point> pts;
  for (const auto& c : n.vertices()) pts.push_back(complex_scale(to_complex(c), w));
  return convex_hull(pts, 4);
}

DualSum projection_body(const Polytope& k) {
  require_body(k);
  DualSum out;
  const Rational half(1, 2);
  for (const auto& sigma : k.area_measure().atoms()) {
    const std::vector<Covector> ends{half * sigma, -(half * sigma)};
    out.add(DualPolytope::hull(ends));
  }
  return out;
}

PrimalSum difference_body(const Polytope& k) {
  require_body(k);
  return PrimalSum({k, reflect(k)});
}

PrimalSum d_m(const Polytope& m, const Polytope& k) {
  require_body(k);
  PrimalSum out;
  for (const auto& nu : planar_atoms(m)) out.add(complex_scale(nu, k));
  return out;
}

DualSum pi_n(const Polytope& n, const Polytope& k) {
  require_body(k);
  if (n.ambient_dim() != 2) throw DimensionError("parameter N must be planar (ambient dimension 2)");
  DualSum out;
  if (n.affine_dim() < 1) return out;
  const Rational quarter(1, 4);
  for (const auto& sigma : k.area_measure().atoms()) {
    std::vector<Covector> pts;
    for (const auto& c : n.vertices()) pts.push_back(quarter * dual_scale(to_complex(c), sigma, DualScalarAction::Plain));
    out.add(DualPolytope::hull(pts));
  }
  return out;
}

DualSum dtilde_m(const Polytope& m, const Polytope& k) {
  const PrimalSum primal = d_m(m, k);
  DualSum out;
  for (const auto& b : primal.summands()) out.add(phi_map(b));
  return out;
}

DualSum z_combined(const Polytope& m, const Polytope& n, const Polytope& k) {
  DualSum out = dtilde_m(m, k);
  out.append(pi_n(n, k));
  return out;
}

namespace {

DualSum apply_dual(const ValuationOp& op, const Polytope& k) {
  switch (op.kind) {
    case OpKind::Proj: return projection_body(k);
    case OpKind::PiN: return pi_n(planar(op.n), k);
    case OpKind::DTildeM: return dtilde_m(planar(op.m), k);
    case OpKind::ZCombined: return z_combined(planar(op.m), planar(op.n), k);
    default: throw Error(op.name() + " has no output in W*");
  }
}

}  // namespace

ValuationOutput apply(const ValuationOp& op, const Polytope& k) {
  op.validate();
  if (op.covariant_image) {
    const DualSum dual = apply_dual(op, k);
    PrimalSum out;
    for (const auto& b : dual.summands()) out.add(phi_inverse(b));
    return out;
  }
  switch (op.kind) {
    case OpKind::Diff: return difference_body(k);
    case OpKind::DM: return d_m(planar(op.m), k);
    default: return apply_dual(op, k);
  }
}

Rational dtilde_m_integral(const Polytope& m, const Polytope& k, const Point& w, PlanarAtomConvention convention) {
  require_body(k);
  const Polytope image = det_image(k, w);
  Rational s = 0;
  for (const auto& nu : planar_atoms(m)) s += planar_support(image, convention == PlanarAtomConvention::Atom ? nu : nu.conj());
  return s;
}

SupportEvaluator::SupportEvaluator(ValuationOp op, Polytope k) : op_(std::move(op)), k_(std::move(k)) {
  op_.validate();
  require_body(k_);
}

Rational SupportEvaluator::support(const Point& w) const {
  if (!op_.dual_output()) throw Error(op_.name() + " takes covector directions");
  if (w.dim() != 4) throw DimensionError("direction must have 4 coordinates");
  return dual_support(op_, w);
}

Rational SupportEvaluator::support(const Covector& xi) const {
  if (op_.dual_output()) throw Error(op_.name() + " takes point directions");
  if (xi.dim() != 4) throw DimensionError("direction must have 4 coordinates");
  return primal_support(op_, xi);
}

Rational SupportEvaluator::dual_support(const ValuationOp& op, const Point& w) const {
  switch (op.kind) {
    case OpKind::Proj: return 2 * mixed_volume_31(k_, segment(-w, w));
    case OpKind::PiN: return pi_n_support(planar(op.n), w);
    case OpKind::DTildeM: return dtilde_m_integral(planar(op.m), k_, w, kDTildeConvention);
    case OpKind::ZCombined:
      return dtilde_m_integral(planar(op.m), k_, w, kDTildeConvention) + pi_n_support(planar(op.n), w);
    default: throw Error(op.name() + " has no output in W*");
  }
}

Rational SupportEvaluator::pi_n_support(const Polytope& n, const Point& w) const {
  // Empty or singleton N: the zero operator.
  if (n.affine_dim() < 1) return 0;
  return mixed_volume_31(k_, complex_orbit(n, w));
}

Rational SupportEvaluator::primal_support(const ValuationOp& op, const Covector& xi) const {
  if (op.covariant_image) {
    // h(Phi^{-1} Y, xi) = h(Y, Phi^{-T} xi).
    return dual_support(op, apply<PointTag>(phi_inverse_matrix().transpose(), xi));
  }
  switch (op.kind) {
    case OpKind::Diff: return k_.support(xi) + k_.support(-xi);
    case OpKind::DM: {
      // h(nu K, xi) = h(K, nu . xi).
      Rational s = 0;
      for (const auto& nu : planar_atoms(planar(op.m))) s += k_.support(dual_scale(nu, xi, DualScalarAction::Plain));
      return s;
    }
    default: throw Error(op.name() + " has no output in W");
  }
}

Rational support_at(const ValuationOutput& out, const std::vector<Rational>& dir) {
  if (const auto* dual = std::get_if<DualSum>(&out)) return dual->support(Point(dir));
  return std::get<PrimalSum>(out).support(Covector(dir));
}

Rational support_at(const SupportEvaluator& eval, const std::vector<Rational>& dir) {
  if (eval.op().dual_output()) return eval.support(Point(dir));
  return eval.support(Covector(dir));
}

}  // namespace minkval
