#include "minkval/harness.hpp"

#include <algorithm>
#include <map>

namespace minkval::harness {

namespace {

Json rational_json(const Rational& q) { return to_string(q); }

template <class Tag>
Json coords_json(const Coordinates<Tag>& v) {
  Json out = Json::array();
  for (const auto& x : v.coords()) out.push_back(rational_json(x));
  return out;
}

Json direction_json(const Direction& d) {
  Json out = Json::array();
  for (const auto& x : d) out.push_back(rational_json(x));
  return out;
}

Json complex_json(const Complex& z) { return Json::array({rational_json(z.re), rational_json(z.im)}); }

Json matrix_json(const ComplexMatrix2& g) {
  return Json::array({Json::array({complex_json(g(0, 0)), complex_json(g(0, 1))}),
                      Json::array({complex_json(g(1, 0)), complex_json(g(1, 1))})});
}

Json op_json(const ValuationOp& op) {
  Json out{{"op", op.name()}};
  if (op.m) out["M"] = body_json(*op.m);
  if (op.n) out["N"] = body_json(*op.n);
  return out;
}

PropertyReport single(const std::string& check, const TrialOutcome& outcome) {
  PropertyReport r;
  r.check = check;
  r.trials = 1;
  if (outcome.ok) r.passed = 1;
  else {
    r.failed_trial = 0;
    r.witness = outcome.witness;
  }
  return r;
}

/// Z(empty) = {0}.
Rational support_or_zero(const ValuationOp& op, const Polytope& body, const Direction& d) {
  if (body.is_empty()) return 0;
  return support_at(apply(op, body), d);
}

bool is_translate(const Polytope& a, const Polytope& b) {
  if (a.vertices().size() != b.vertices().size()) return false;
  const Point shift = b.vertices().front() - a.vertices().front();
  return translate(a, shift) == b;
}

TrialOutcome compare(bool ok, Json witness) { return ok ? TrialOutcome{} : TrialOutcome{false, std::move(witness)}; }

// Per-trial bodies of the randomized checks.

TrialOutcome degenerate_trial(OpKind kind, Generator& gen, int trial) {
  // K in span_R{u, v} with u, v independent over C; every fifth trial uses a
  // complex line span_R{u, iu} instead.
  Point u = gen.point(4), v;
  if (trial % 5 == 4) {
    while (u.is_zero()) u = gen.point(4);
    v = complex_scale(Complex(0, 1), u);
  } else {
    do {
      u = gen.point(4);
      v = gen.point(4);
    } while (det_pair(u, v).is_zero());
  }
  std::vector<Point> pts;
  const int count = gen.uniform_int(1, 6);
  for (int i = 0; i < count; ++i) pts.push_back(gen.rational(8, 2) * u + gen.rational(8, 2) * v);
  const Polytope k = convex_hull(pts, 4);
  const ValuationOp op = kind == OpKind::PiN ? ValuationOp::pi_n(gen.planar_polygon()) : ValuationOp::proj();
  const auto out = std::get<DualSum>(apply(op, k));
  const SupportEvaluator eval(op, k);
  const bool zero = out.materialize().is_zero();
  for (const auto& d : random_directions(gen, 5)) {
    const Rational h = eval.support(Point(d));
    if (!zero || h != 0)
      return {false, {{"op", op_json(op)}, {"K", body_json(k)}, {"direction", direction_json(d)}, {"evaluator", rational_json(h)},
                      {"reconstruction_is_zero", zero}}};
  }
  return {};
}

TrialOutcome e_plane_trial(Generator& gen) {
  // A 3-dimensional K in E = span_R{e1, i e1, e2}.
  const Polytope base = gen.full_polytope(3, 4, 9);
  std::vector<Point> pts;
  for (const auto& p : base.vertices()) pts.push_back(Point{p[0], p[1], p[2], 0});
  const Polytope k = convex_hull(pts, 4);
  const Polytope n = gen.planar_polygon();
  const DualSum body = pi_n(n, k);
  const SupportEvaluator eval(ValuationOp::pi_n(n), k);
  const Complex alpha = gen.complex(), beta = gen.complex();
  const Point full{alpha.re, alpha.im, beta.re, beta.im};
  const Point e2_part{0, 0, beta.re, beta.im};
  const Rational lhs = body.support(full), rhs = body.support(e2_part);
  const Rational lhs_eval = eval.support(full), rhs_eval = eval.support(e2_part);
  return compare(lhs == rhs && lhs_eval == rhs_eval && lhs == lhs_eval,
                 {{"K", body_json(k)}, {"N", body_json(n)}, {"alpha", complex_json(alpha)}, {"beta", complex_json(beta)},
                  {"lhs", rational_json(lhs)}, {"rhs", rational_json(rhs)}, {"lhs_evaluator", rational_json(lhs_eval)},
                  {"rhs_evaluator", rational_json(rhs_eval)}});
}

ValuationOp op_with_parameter(OpKind kind, const Polytope& m) {
  switch (kind) {
    case OpKind::DM: return ValuationOp::d_m(m);
    case OpKind::DTildeM: return ValuationOp::dtilde_m(m);
    case OpKind::PiN: return ValuationOp::pi_n(m);
    default: throw Error("uniqueness probe applies to d_m, dtilde_m and pi_n");
  }
}

}  // namespace

Json PropertyReport::to_json() const {
  Json out{{"check", check}, {"seed", seed}, {"trial", failed_trial ? *failed_trial : std::max(trials - 1, 0)},
           {"trials", trials}, {"passed", passed}, {"status", ok() ? "pass" : "fail"}};
  if (!ok()) out["witness"] = witness;
  if (!notes.is_null()) out["notes"] = notes;
  return out;
}

std::uint64_t trial_seed(std::uint64_t seed, const std::string& check, int trial) {
  // FNV-1a over the check id, then splitmix64 mixing.
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : check) h = (h ^ c) * 1099511628211ull;
  std::uint64_t z = seed ^ h ^ (static_cast<std::uint64_t>(trial) * 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Polytope random_body(Generator& gen) { return gen.full_polytope(4, 5, 12); }

std::vector<Direction> random_directions(Generator& gen, int count) {
  std::vector<Direction> out;
  for (int i = 0; i < count; ++i) out.push_back(gen.point(4).coords());
  return out;
}

Json body_json(const Polytope& p) {
  Json verts = Json::array();
  for (const auto& v : p.vertices()) verts.push_back(coords_json(v));
  return {{"ambient_dim", p.ambient_dim()}, {"vertices", verts}};
}

std::vector<ValuationOp> random_ops(Generator& gen) {
  const Polytope m = gen.planar_body(5), n = gen.planar_body(5);
  return {ValuationOp::proj(),        ValuationOp::diff(),    ValuationOp::d_m(m),
          ValuationOp::pi_n(n),       ValuationOp::dtilde_m(m), ValuationOp::z_combined(m, n)};
}

PropertyReport run_trials(const std::string& check, std::uint64_t seed, int trials,
                          const std::function<TrialOutcome(Generator&, int)>& trial) {
  PropertyReport r;
  r.check = check;
  r.seed = seed;
  for (int t = 0; t < trials; ++t) {
    Generator gen(trial_seed(seed, check, t));
    TrialOutcome outcome;
    try {
      outcome = trial(gen, t);
    } catch (const std::exception& e) {
      outcome = {false, {{"error", e.what()}}};
    }
    ++r.trials;
    if (!outcome.ok) {
      r.failed_trial = t;
      r.witness = std::move(outcome.witness);
      r.witness["replay"] = {{"check", check}, {"seed", seed}, {"trial", t}};
      break;
    }
    ++r.passed;
  }
  return r;
}

DecompositionTable homogeneous_decomposition(const ValuationOp& op, const Polytope& k, const std::vector<Direction>& dirs) {
  std::vector<SupportEvaluator> evals;
  Matrix vandermonde(5, 5);
  for (int l = 1; l <= 5; ++l) {
    evals.emplace_back(op, scale(k, l));
    Rational p = 1;
    for (int c = 0; c < 5; ++c, p *= l) vandermonde(l - 1, c) = p;
  }
  DecompositionTable table;
  table.directions = dirs;
  for (const auto& d : dirs) {
    std::vector<Rational> values;
    for (const auto& e : evals) values.push_back(support_at(e, d));
    const auto c = solve(vandermonde, values);
    table.coefficients.push_back({c[0], c[1], c[2], c[3], c[4]});
  }
  return table;
}

PropertyReport check_valuation_additivity(const ValuationOp& op, const Polytope& p, const Covector& xi, const Rational& c,
                                          const std::vector<Direction>& dirs) {
  const auto parts = split_by_hyperplane(p, xi, c);
  for (const auto& d : dirs) {
    const Rational lhs = support_or_zero(op, p, d) + support_or_zero(op, parts.slice, d);
    const Rational rhs = support_or_zero(op, parts.lower, d) + support_or_zero(op, parts.upper, d);
    if (lhs != rhs)
      return single("valuation_additivity", {false,
                                             {{"op", op_json(op)}, {"P", body_json(p)}, {"xi", coords_json(xi)},
                                              {"c", rational_json(c)}, {"direction", direction_json(d)},
                                              {"lhs", rational_json(lhs)}, {"rhs", rational_json(rhs)}}});
  }
  return single("valuation_additivity", {});
}

PropertyReport check_equivariance(const ValuationOp& op, const Polytope& k, const ComplexMatrix2& g,
                                  const std::vector<Direction>& dirs) {
  const ComplexMatrix2 g_inv = g.inverse();
  const ValuationOutput moved = apply(op, group_action(g, k));
  const ValuationOutput base = apply(op, k);
  for (const auto& d : dirs) {
    const Direction pulled =
        op.dual_output() ? group_action(g_inv, Point(d)).coords() : adjoint_action(g, Covector(d)).coords();
    const Rational lhs = support_at(moved, d), rhs = support_at(base, pulled);
    if (lhs != rhs)
      return single("equivariance", {false,
                                     {{"op", op_json(op)}, {"K", body_json(k)}, {"g", matrix_json(g)},
                                      {"direction", direction_json(d)}, {"lhs", rational_json(lhs)}, {"rhs", rational_json(rhs)}}});
  }
  return single("equivariance", {});
}

PropertyReport check_scaled_pi_n(const Polytope& n, const Polytope& k, const Rational& t, const ComplexMatrix2& g0,
                                 const std::vector<Direction>& dirs, int power) {
  const ComplexMatrix2 g = ComplexMatrix2::scalar(t) * g0;
  const DualSum moved = pi_n(n, group_action(g, k));
  const DualSum base = pi_n(n, k);
  Rational factor = 1;
  for (int i = 0; i < power; ++i) factor *= t;
  for (const auto& d : dirs) {
    const Rational lhs = moved.support(Point(d));
    const Rational rhs = factor * base.support(group_action(g.inverse(), Point(d)));
    if (lhs != rhs)
      return single("scaled_pi_n", {false,
                                    {{"N", body_json(n)}, {"K", body_json(k)}, {"t", rational_json(t)}, {"g0", matrix_json(g0)},
                                     {"power", power}, {"direction", direction_json(d)}, {"lhs", rational_json(lhs)},
                                     {"rhs", rational_json(rhs)}}});
  }
  return single("scaled_pi_n", {});
}

std::vector<Covector> simplex_area_atoms(const Rational& a, const Rational& b, const Complex& gamma) {
  const Rational half(1, 2);
  const Rational sa = sign(a), sb = sign(b);
  const Rational& g1 = gamma.re;
  const Rational& g2 = gamma.im;
  return {
      half * abs(a * b) * Covector{0, 0, -1},
      half * abs(a) * sb * Covector{0, -1, g2},
      half * abs(b) * sa * Covector{-1, 0, g1},
      half * sa * sb * Covector{b, a, -(b * g1 + a * (g2 - b))},
  };
}

PropertyReport verify_simplex_area(const Rational& a, const Rational& b, const Complex& gamma) {
  if (a == 0 || b == 0) throw Error("verify_simplex_area needs a, b != 0");
  const Polytope s = convex_hull({Point{0, 0, 0}, Point{a, 0, 0}, Point{0, b, 0}, Point{gamma.re, gamma.im, 1}});
  auto computed = s.area_measure().atoms();
  auto expected = simplex_area_atoms(a, b, gamma);
  std::sort(computed.begin(), computed.end());
  std::sort(expected.begin(), expected.end());
  Json witness{{"a", rational_json(a)}, {"b", rational_json(b)}, {"gamma", complex_json(gamma)}};
  Json c = Json::array(), e = Json::array();
  for (const auto& x : computed) c.push_back(coords_json(x));
  for (const auto& x : expected) e.push_back(coords_json(x));
  witness["computed"] = c;
  witness["expected"] = e;
  Covector total = Covector::zero(3);
  for (const auto& x : expected) total = total + x;
  return single("simplex_area", compare(computed == expected && total.is_zero(), witness));
}

PropertyReport check_degenerate_vanishing(OpKind kind, int trials, std::uint64_t seed) {
  if (kind != OpKind::PiN && kind != OpKind::Proj) throw Error("degenerate vanishing applies to proj and pi_n");
  const std::string id = "degenerate_vanishing_" + kind_name(kind);
  return run_trials(id, seed, trials, [kind](Generator& gen, int t) { return degenerate_trial(kind, gen, t); });
}

PropertyReport check_e_plane_identity(int trials, std::uint64_t seed) {
  return run_trials("e_plane_identity", seed, trials, [](Generator& gen, int) { return e_plane_trial(gen); });
}

PropertyReport check_uniqueness_translates(OpKind kind, const Polytope& m, const Polytope& m2, int trials, std::uint64_t seed) {
  const ValuationOp op = op_with_parameter(kind, m), op2 = op_with_parameter(kind, m2);
  const bool translate_pair = is_translate(m, m2);
  bool separated = false;
  Json separation;
  PropertyReport r = run_trials("uniqueness_translates_" + kind_name(kind), seed, trials, [&](Generator& gen, int t) {
    const Polytope k = t == 0 ? cube(4) : random_body(gen);
    const ValuationOp shifted = op_with_parameter(kind, translate(m, gen.point(2)));
    const ValuationOutput a = apply(op, k), b = apply(shifted, k), other = apply(op2, k);
    for (const auto& d : random_directions(gen, 5)) {
      const Rational ha = support_at(a, d), hb = support_at(b, d);
      if (ha != hb)
        return TrialOutcome{false, {{"op", op_json(op)}, {"shifted", op_json(shifted)}, {"K", body_json(k)},
                                    {"direction", direction_json(d)}, {"lhs", rational_json(ha)}, {"rhs", rational_json(hb)}}};
      const Rational ho = support_at(other, d);
      if (!separated && ha != ho) {
        separated = true;
        separation = {{"K", body_json(k)}, {"direction", direction_json(d)}, {"h_M", rational_json(ha)}, {"h_M2", rational_json(ho)}};
      }
    }
    return TrialOutcome{};
  });
  r.notes = {{"separation_probe", "heuristic"}, {"m2_is_translate", translate_pair}, {"separated", separated}};
  if (separated) r.notes["separating_witness"] = separation;
  if (r.ok() && trials > 0 && separated == translate_pair) {
    r.failed_trial = r.trials - 1;
    --r.passed;
    r.witness = {{"reason", translate_pair ? "translates gave different operators" : "no separating (K, w) found"},
                 {"M", body_json(m)},
                 {"M2", body_json(m2)}};
  }
  return r;
}

bool SuiteSummary::ok() const {
  return std::all_of(reports.begin(), reports.end(), [](const PropertyReport& r) { return r.ok(); });
}

const std::vector<std::string>& suite_checks() {
  static const std::vector<std::string> ids{
      "mixed_volume_oracle", "mixed_volume_known", "valuation_additivity", "equivariance", "evaluator_agreement",
      "decomposition", "degenerate_vanishing_proj", "degenerate_vanishing_pi_n", "e_plane_identity", "simplex_area",
      "phi_identity", "phi_convention_pinning", "dtilde_convention_pinning", "dtilde_consistency", "scaled_pi_n_relation",
      "uniqueness_translates"};
  return ids;
}

namespace {

std::vector<ValuationOp> ops_with_covariant(Generator& gen) {
  auto ops = random_ops(gen);
  ops.push_back(covariant_of(ops[3]));  // Phi^{-1} o Pi_N
  return ops;
}

TrialOutcome fail_with(const PropertyReport& r) { return r.ok() ? TrialOutcome{} : TrialOutcome{false, r.witness}; }

PropertyReport pinning(const std::string& id, std::uint64_t seed, int trials, const std::string& shipped,
                       const std::string& first, const std::string& second,
                       const std::function<std::pair<bool, bool>(Generator&, Json&)>& probe) {
  // Each trial evaluates both conventions. The pinned one must hold on every
  // trial; the other must fail at least once, or the check cannot tell them
  // apart.
  bool first_always = true, second_always = true;
  Json first_break, second_break;
  PropertyReport r = run_trials(id, seed, trials, [&](Generator& gen, int) {
    Json w;
    const auto [a, b] = probe(gen, w);
    if (!a && first_always) {
      first_always = false;
      first_break = w;
    }
    if (!b && second_always) {
      second_always = false;
      second_break = w;
    }
    return TrialOutcome{};
  });
  if (trials == 0) return r;
  std::string pinned = first_always && !second_always ? first : (second_always && !first_always ? second : "");
  r.notes = {{"pinned", pinned.empty() ? Json(nullptr) : Json(pinned)}, {"shipped", shipped}};
  if (!first_always) r.notes["rejects_" + first] = first_break;
  if (!second_always) r.notes["rejects_" + second] = second_break;
  if (pinned != shipped) {
    r.failed_trial = r.trials - 1;
    r.passed = r.trials - 1;
    r.witness = {{"reason", pinned.empty() ? "conventions not separated" : "shipped convention disagrees with the pinned one"},
                 {"first_counterexample", first_break},
                 {"second_counterexample", second_break}};
  }
  return r;
}

PropertyReport run_check(const std::string& id, const SuiteOptions& o) {
  const int trials = o.trials;
  const std::uint64_t seed = o.seed;
  const PlanarAtomConvention convention =
      o.flip_conjugation ? (kDTildeConvention == PlanarAtomConvention::Conjugate ? PlanarAtomConvention::Atom
                                                                                : PlanarAtomConvention::Conjugate)
                         : kDTildeConvention;

  if (id == "mixed_volume_oracle")
    return run_trials(id, seed, trials, [](Generator& gen, int) {
      const Polytope k = random_body(gen), l = random_body(gen);
      const Rational facet = mixed_volume_31(k, l), polar = mixed_volume(k, k, k, l);
      const Rational diag = mixed_volume(k, k, k, k);
      return compare(facet == polar && diag == k.volume(),
                     {{"K", body_json(k)}, {"L", body_json(l)}, {"facet_form", rational_json(facet)},
                      {"polarization", rational_json(polar)}, {"V(K,K,K,K)", rational_json(diag)},
                      {"volume", rational_json(k.volume())}});
    });

  if (id == "mixed_volume_known")
    return run_trials(id, seed, std::min(trials, 1), [](Generator&, int) {
      const auto seg = [](int i) { return segment(Point::zero(4), Point::unit(4, i)); };
      const Rational simplex = standard_simplex(4).volume();
      const Rational axes = mixed_volume(seg(0), seg(1), seg(2), seg(3));
      const Rational cube_seg = mixed_volume_31(cube(4), seg(3));
      return compare(simplex == Rational(1, 24) && axes == Rational(1, 24) && cube_seg == Rational(1, 4),
                     {{"simplex_volume", rational_json(simplex)}, {"axis_segments", rational_json(axes)},
                      {"cube_segment", rational_json(cube_seg)}});
    });

  if (id == "valuation_additivity")
    return run_trials(id, seed, trials, [](Generator& gen, int) {
      const Polytope p = random_body(gen);
      const Covector xi = gen.nonzero_covector(4);
      // Cut between two random vertices so both sides are usually nonempty.
      const auto& v = p.vertices();
      const auto pick = [&] { return v[static_cast<std::size_t>(gen.uniform_int(0, static_cast<int>(v.size()) - 1))]; };
      const Rational c = (pair(xi, pick()) + pair(xi, pick())) / 2;
      const auto dirs = random_directions(gen, 50);
      for (const auto& op : ops_with_covariant(gen)) {
        const auto r = check_valuation_additivity(op, p, xi, c, dirs);
        if (!r.ok()) return fail_with(r);
      }
      return TrialOutcome{};
    });

  if (id == "equivariance")
    return run_trials(id, seed, trials, [](Generator& gen, int) {
      const Polytope k = random_body(gen);
      const ComplexMatrix2 g = gen.special_linear();
      const auto dirs = random_directions(gen, 10);
      for (const auto& op : ops_with_covariant(gen)) {
        const auto r = check_equivariance(op, k, g, dirs);
        if (!r.ok()) return fail_with(r);
      }
      return TrialOutcome{};
    });

  if (id == "evaluator_agreement")
    return run_trials(id, seed, trials, [](Generator& gen, int) {
      const Polytope k = random_body(gen);
      const auto dirs = random_directions(gen, 10);
      for (const auto& op : ops_with_covariant(gen)) {
        const ValuationOutput out = apply(op, k);
        const SupportEvaluator eval(op, k);
        for (const auto& d : dirs) {
          const Rational a = support_at(out, d), b = support_at(eval, d);
          if (a != b)
            return TrialOutcome{false, {{"op", op_json(op)}, {"K", body_json(k)}, {"direction", direction_json(d)},
                                        {"reconstruction", rational_json(a)}, {"evaluator", rational_json(b)}}};
        }
      }
      return TrialOutcome{};
    });

  if (id == "decomposition")
    return run_trials(id, seed, trials, [](Generator& gen, int) {
      const Polytope k = random_body(gen);
      const auto dirs = random_directions(gen, 3);
      for (const auto& op : random_ops(gen)) {
        const auto table = homogeneous_decomposition(op, k, dirs);
        const auto allowed = op.degrees();
        for (std::size_t i = 0; i < dirs.size(); ++i) {
          const auto& c = table.coefficients[i];
          bool ok = true;
          for (int deg = 0; deg < 5; ++deg)
            if (c[static_cast<std::size_t>(deg)] != 0 && std::find(allowed.begin(), allowed.end(), deg) == allowed.end()) ok = false;
          if (op.kind == OpKind::ZCombined) {
            const Point w(dirs[i]);
            ok = ok && c[1] == dtilde_m(*op.m, k).support(w) && c[3] == pi_n(*op.n, k).support(w);
          }
          if (!ok) {
            Json coeffs = Json::array();
            for (const auto& x : c) coeffs.push_back(rational_json(x));
            return TrialOutcome{false, {{"op", op_json(op)}, {"K", body_json(k)}, {"direction", direction_json(dirs[i])},
                                        {"coefficients", coeffs}}};
          }
        }
      }
      return TrialOutcome{};
    });

  if (id == "degenerate_vanishing_proj") return check_degenerate_vanishing(OpKind::Proj, trials, seed);
  if (id == "degenerate_vanishing_pi_n") return check_degenerate_vanishing(OpKind::PiN, trials, seed);
  if (id == "e_plane_identity") return check_e_plane_identity(trials, seed);

  if (id == "simplex_area")
    return run_trials(id, seed, trials, [](Generator& gen, int t) {
      // The first two trials are the worked special cases.
      if (t == 0) return fail_with(verify_simplex_area(1, 1, Complex(0)));
      if (t == 1) return fail_with(verify_simplex_area(1, 1, Complex(1, 1)));
      return fail_with(verify_simplex_area(gen.nonzero_rational(8, 3), gen.nonzero_rational(8, 3), gen.complex(8, 3)));
    });

  if (id == "phi_identity")
    return run_trials(id, seed, trials, [](Generator& gen, int) {
      const ComplexMatrix2 g = gen.general_linear();
      const Point u = gen.point(4);
      const Covector lhs = phi(group_action(g, u));
      const Covector rhs = dual_scale(g.det(), dual_action(g, phi(u)), DualScalarAction::Plain);
      return compare(lhs == rhs, {{"g", matrix_json(g)}, {"u", coords_json(u)}, {"lhs", coords_json(lhs)}, {"rhs", coords_json(rhs)}});
    });

  if (id == "phi_convention_pinning")
    return pinning(id, seed, trials, "plain", "plain", "conjugate", [](Generator& gen, Json& w) {
      const ComplexMatrix2 g = gen.general_linear();
      const Point u = gen.point(4);
      const Covector lhs = phi(group_action(g, u));
      const Covector plain = dual_scale(g.det(), dual_action(g, phi(u)), DualScalarAction::Plain);
      const Covector conj = dual_scale(g.det(), dual_action(g, phi(u)), DualScalarAction::Conjugate);
      w = {{"g", matrix_json(g)}, {"u", coords_json(u)}, {"lhs", coords_json(lhs)}, {"plain", coords_json(plain)},
           {"conjugate", coords_json(conj)}};
      return std::pair{lhs == plain, lhs == conj};
    });

  const std::string shipped = convention == PlanarAtomConvention::Conjugate ? "conjugate" : "atom";

  if (id == "dtilde_convention_pinning")
    return pinning(id, seed, trials, shipped, "atom", "conjugate", [](Generator& gen, Json& w) {
      const Polytope m = gen.planar_polygon(), k = random_body(gen);
      const Point d = gen.point(4);
      const Rational phi_path = dtilde_m(m, k).support(d);
      const Rational atom = dtilde_m_integral(m, k, d, PlanarAtomConvention::Atom);
      const Rational conj = dtilde_m_integral(m, k, d, PlanarAtomConvention::Conjugate);
      w = {{"M", body_json(m)}, {"K", body_json(k)}, {"w", coords_json(d)}, {"phi_path", rational_json(phi_path)},
           {"atom", rational_json(atom)}, {"conjugate", rational_json(conj)}};
      return std::pair{phi_path == atom, phi_path == conj};
    });

  if (id == "dtilde_consistency")
    return run_trials(id, seed, trials, [convention](Generator& gen, int) {
      const Polytope m = gen.planar_polygon(), k = random_body(gen);
      const DualSum phi_path = dtilde_m(m, k);
      for (const auto& d : random_directions(gen, 5)) {
        const Point w(d);
        const Rational a = phi_path.support(w), b = dtilde_m_integral(m, k, w, convention);
        if (a != b)
          return TrialOutcome{false, {{"M", body_json(m)}, {"K", body_json(k)}, {"w", direction_json(d)},
                                      {"convention", convention == PlanarAtomConvention::Conjugate ? "conjugate" : "atom"},
                                      {"phi_path", rational_json(a)}, {"integral_path", rational_json(b)}}};
      }
      return TrialOutcome{};
    });

  if (id == "scaled_pi_n_relation")
    return run_trials(id, seed, trials, [](Generator& gen, int) {
      // Degree-3 part under g = t g0: t^4 against g^{-1} u, equivalently t^3
      // against g0^{-1} u.
      const Polytope n = gen.planar_polygon(), k = random_body(gen);
      Rational t = gen.nonzero_rational(4, 3);
      if (t < 0) t = -t;
      const ComplexMatrix2 g0 = gen.special_linear();
      const auto dirs = random_directions(gen, 5);
      const auto r = check_scaled_pi_n(n, k, t, g0, dirs, 4);
      if (!r.ok()) return fail_with(r);
      const DualSum moved = pi_n(n, group_action(ComplexMatrix2::scalar(t) * g0, k)), base = pi_n(n, k);
      for (const auto& d : dirs) {
        const Rational lhs = moved.support(Point(d)), rhs = t * t * t * base.support(group_action(g0.inverse(), Point(d)));
        if (lhs != rhs)
          return TrialOutcome{false, {{"form", "t^3 h(Pi_N K, g0^{-1} u)"}, {"direction", direction_json(d)},
                                      {"lhs", rational_json(lhs)}, {"rhs", rational_json(rhs)}}};
      }
      return TrialOutcome{};
    });

  if (id == "uniqueness_translates")
    return run_trials(id, seed, trials, [](Generator& gen, int t) {
      const OpKind kinds[] = {OpKind::DM, OpKind::DTildeM, OpKind::PiN};
      const OpKind kind = kinds[t % 3];
      Polytope m, m2;
      if (t < 3) {
        m = segment(Point{0, 0}, Point{0, 1});
        m2 = cube(2);
      } else {
        m = gen.planar_polygon();
        do m2 = gen.planar_polygon();
        while (is_translate(m, m2));
      }
      const auto r = check_uniqueness_translates(kind, m, m2, 3, gen.engine()());
      return fail_with(r);
    });

  throw Error("unknown check '" + id + "'");
}

}  // namespace

SuiteSummary run_suite(const SuiteOptions& options) {
  const auto& ids = suite_checks();
  if (options.only && std::find(ids.begin(), ids.end(), *options.only) == ids.end())
    throw Error("unknown check '" + *options.only + "'");
  SuiteSummary summary;
  if (options.trials <= 0) return summary;
  for (const auto& id : ids) {
    if (options.only && *options.only != id) continue;
    PropertyReport r = run_check(id, options);
    r.check = id;
    r.seed = options.seed;
    summary.reports.push_back(std::move(r));
  }
  return summary;
}

void write_summary(const SuiteSummary& summary, std::ostream& out) {
  for (const auto& r : summary.reports) out << r.to_json().dump() << '\n';
}

}  // namespace minkval::harness
