#include <gtest/gtest.h>

#include <sstream>

#include "minkval/harness.hpp"

using namespace minkval;
using namespace minkval::harness;

namespace {

const Polytope kSegmentI = segment(Point{0, 0}, Point{0, 1});
const Polytope kSegmentM11 = segment(Point{-1, 0}, Point{1, 0});
const Polytope kTriangle = convex_hull({Point{0, 0}, Point{1, 0}, Point{0, 1}});

std::vector<Direction> dirs(std::uint64_t seed, int count) {
  Generator gen(seed);
  return random_directions(gen, count);
}

}  // namespace

TEST(Decomposition, PiNIsPureDegreeThree) {
  Generator gen(3);
  const Polytope k = random_body(gen);
  const ValuationOp op = ValuationOp::pi_n(kTriangle);
  const auto d = dirs(4, 4);
  const auto table = homogeneous_decomposition(op, k, d);
  ASSERT_EQ(table.coefficients.size(), d.size());
  const DualSum body = pi_n(kTriangle, k);
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto& c = table.coefficients[i];
    EXPECT_EQ(c[0], 0);
    EXPECT_EQ(c[1], 0);
    EXPECT_EQ(c[2], 0);
    EXPECT_EQ(c[3], body.support(Point(d[i])));
    EXPECT_EQ(c[4], 0);
  }
}

TEST(Decomposition, ZCombinedSplitsIntoDegreesOneAndThree) {
  Generator gen(5);
  const Polytope k = random_body(gen);
  const auto d = dirs(6, 3);
  const auto table = homogeneous_decomposition(ValuationOp::z_combined(kTriangle, kSegmentM11), k, d);
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto& c = table.coefficients[i];
    const Point w(d[i]);
    EXPECT_EQ(c[0], 0);
    EXPECT_EQ(c[2], 0);
    EXPECT_EQ(c[4], 0);
    EXPECT_EQ(c[1], dtilde_m(kTriangle, k).support(w));
    EXPECT_EQ(c[3], pi_n(kSegmentM11, k).support(w));
    EXPECT_NE(c[1], 0);
  }
}

TEST(Decomposition, DiffIsDegreeOne) {
  Generator gen(7);
  const Polytope k = random_body(gen);
  const auto d = dirs(8, 3);
  const auto table = homogeneous_decomposition(ValuationOp::diff(), k, d);
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto& c = table.coefficients[i];
    EXPECT_EQ(c[0], 0);
    EXPECT_EQ(c[2], 0);
    EXPECT_EQ(c[3], 0);
    EXPECT_EQ(c[4], 0);
    const Covector xi(d[i]);
    EXPECT_EQ(c[1], k.support(xi) + k.support(-xi));
  }
}

TEST(Additivity, CubeSplitAtHalf) {
  const auto r = check_valuation_additivity(ValuationOp::proj(), cube(4), Covector::unit(4, 0), Rational(1, 2), dirs(9, 20));
  EXPECT_TRUE(r.ok()) << r.to_json().dump();
  EXPECT_EQ(r.passed, 1);
}

TEST(Additivity, RandomBodyZCombined) {
  Generator gen(10);
  const Polytope p = gen.full_polytope(4, 8, 8);
  const ValuationOp op = ValuationOp::z_combined(gen.planar_polygon(), gen.planar_polygon());
  const auto r = check_valuation_additivity(op, p, gen.nonzero_covector(4), 0, dirs(11, 10));
  EXPECT_TRUE(r.ok()) << r.to_json().dump();
}

TEST(Additivity, HyperplaneMissingBody) {
  for (const auto& op : {ValuationOp::proj(), ValuationOp::d_m(kSegmentI), ValuationOp::pi_n(kTriangle)}) {
    const auto r = check_valuation_additivity(op, cube(4), Covector::unit(4, 1), 5, dirs(12, 10));
    EXPECT_TRUE(r.ok()) << op.name();
  }
}

TEST(Equivariance, PiNUnderShear) {
  Generator gen(13);
  const auto r = check_equivariance(ValuationOp::pi_n(kTriangle), random_body(gen), ComplexMatrix2::shear(Complex(1, 1)),
                                    dirs(14, 20));
  EXPECT_TRUE(r.ok()) << r.to_json().dump();
}

TEST(Equivariance, DMCovariantUnderDiagonal) {
  Generator gen(15);
  const ComplexMatrix2 g = ComplexMatrix2::diagonal(3, Rational(1, 3));
  const auto r = check_equivariance(ValuationOp::d_m(kTriangle), random_body(gen), g, dirs(16, 20));
  EXPECT_TRUE(r.ok()) << r.to_json().dump();
}

TEST(Equivariance, SingularMatrixThrows) {
  EXPECT_THROW(check_equivariance(ValuationOp::proj(), cube(4), ComplexMatrix2(1, 1, 1, 1), dirs(17, 2)), SingularMatrixError);
}

TEST(Equivariance, NonSpecialMatrixIsDetected) {
  const auto r = check_equivariance(ValuationOp::pi_n(kSegmentM11), cube(4), ComplexMatrix2::scalar(2), dirs(18, 5));
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.failed_trial, 0);
  EXPECT_TRUE(r.witness.contains("lhs"));
}

TEST(ScaledPiN, DoublingScalesBySixteen) {
  // g = 2I: Pi_N(2K) = 8 Pi_N K and g^{-1}u = u/2, so the factor against
  // h(Pi_N K, g^{-1}u) is 16.
  const auto d = dirs(19, 10);
  const ComplexMatrix2 id = ComplexMatrix2::identity();
  EXPECT_TRUE(check_scaled_pi_n(kSegmentM11, cube(4), 2, id, d, 4).ok());
  EXPECT_FALSE(check_scaled_pi_n(kSegmentM11, cube(4), 2, id, d, 3).ok());
  const Point e1 = Point::unit(4, 0);
  EXPECT_EQ(pi_n(kSegmentM11, scale(cube(4), 2)).support(e1), 16 * pi_n(kSegmentM11, cube(4)).support(Rational(1, 2) * e1));
}

TEST(ScaledPiN, GeneralScaledMatrix) {
  Generator gen(20);
  const Polytope k = random_body(gen);
  const ComplexMatrix2 g0 = gen.special_linear();
  EXPECT_TRUE(check_scaled_pi_n(kTriangle, k, Rational(3, 2), g0, dirs(21, 5), 4).ok());
}

TEST(SimplexArea, FixedCases) {
  const auto r0 = verify_simplex_area(1, 1, Complex(0));
  EXPECT_TRUE(r0.ok()) << r0.to_json().dump();
  const auto r1 = verify_simplex_area(1, 1, Complex(1, 1));
  EXPECT_TRUE(r1.ok()) << r1.to_json().dump();
  const Rational h(1, 2);
  const auto atoms = simplex_area_atoms(1, 1, Complex(1, 1));
  EXPECT_EQ(atoms[3], (Covector{h, h, -h}));
  const auto plain = simplex_area_atoms(1, 1, Complex(0));
  EXPECT_EQ(plain[0], (Covector{0, 0, -h}));
  EXPECT_EQ(plain[1], (Covector{0, -h, 0}));
  EXPECT_EQ(plain[2], (Covector{-h, 0, 0}));
  EXPECT_EQ(plain[3], (Covector{h, h, h}));
}

TEST(SimplexArea, RandomParametersAndClosure) {
  Generator gen(22);
  for (int i = 0; i < 25; ++i) {
    const Rational a = gen.nonzero_rational(8, 3), b = gen.nonzero_rational(8, 3);
    const Complex gamma = gen.complex(8, 3);
    EXPECT_TRUE(verify_simplex_area(a, b, gamma).ok());
    Covector total = Covector::zero(3);
    for (const auto& x : simplex_area_atoms(a, b, gamma)) total = total + x;
    EXPECT_TRUE(total.is_zero());
  }
}

TEST(SimplexArea, DegenerateParametersThrow) {
  EXPECT_THROW(verify_simplex_area(0, 1, Complex(0)), Error);
  EXPECT_THROW(verify_simplex_area(1, 0, Complex(0)), Error);
}

TEST(DegenerateVanishing, PiNAndProj) {
  const auto pi = check_degenerate_vanishing(OpKind::PiN, 20, 1);
  EXPECT_TRUE(pi.ok()) << pi.to_json().dump();
  EXPECT_EQ(pi.passed, 20);
  EXPECT_TRUE(check_degenerate_vanishing(OpKind::Proj, 10, 1).ok());
  EXPECT_THROW(check_degenerate_vanishing(OpKind::DM, 1, 1), Error);
}

TEST(DegenerateVanishing, ComplexLineBody) {
  const Polytope k = convex_hull(std::vector<Point>{Point{0, 0, 0, 0}, Point{1, 0, 0, 0}, Point{0, 1, 0, 0}}, 4);
  EXPECT_TRUE(pi_n(kTriangle, k).materialize().is_zero());
  EXPECT_EQ(SupportEvaluator(ValuationOp::pi_n(kTriangle), k).support(Point{1, 2, 3, 4}), 0);
}

TEST(EPlane, ProjectionIdentity) {
  const auto r = check_e_plane_identity(15, 2);
  EXPECT_TRUE(r.ok()) << r.to_json().dump();
}

TEST(Uniqueness, SegmentAgainstSquareSeparates) {
  for (OpKind kind : {OpKind::DM, OpKind::DTildeM, OpKind::PiN}) {
    const auto r = check_uniqueness_translates(kind, kSegmentI, cube(2), 3, 5);
    EXPECT_TRUE(r.ok()) << r.to_json().dump();
    EXPECT_TRUE(r.notes["separated"].get<bool>());
    EXPECT_EQ(r.notes["separation_probe"], "heuristic");
  }
}

TEST(Uniqueness, TranslatePairIsNotSeparated) {
  const Polytope shifted = translate(kTriangle, Point{Rational(2, 3), -1});
  const auto r = check_uniqueness_translates(OpKind::PiN, kTriangle, shifted, 3, 6);
  EXPECT_TRUE(r.ok()) << r.to_json().dump();
  EXPECT_FALSE(r.notes["separated"].get<bool>());
  EXPECT_THROW(check_uniqueness_translates(OpKind::Proj, kTriangle, shifted, 1, 6), Error);
}

TEST(RunTrials, ReplayableFailure) {
  const auto r = run_trials("probe", 9, 10, [](Generator&, int t) {
    return t == 4 ? TrialOutcome{false, {{"why", "t == 4"}}} : TrialOutcome{};
  });
  EXPECT_EQ(r.failed_trial, 4);
  EXPECT_EQ(r.passed, 4);
  EXPECT_EQ(r.trials, 5);
  EXPECT_EQ(r.witness["replay"]["trial"], 4);
  EXPECT_EQ(r.to_json()["status"], "fail");
}

TEST(RunTrials, ExceptionsFail) {
  const auto r = run_trials("probe", 9, 3, [](Generator&, int) -> TrialOutcome { throw Error("boom"); });
  EXPECT_EQ(r.failed_trial, 0);
  EXPECT_EQ(r.witness["error"], "boom");
}

TEST(RunTrials, TrialSeedsDifferAndRepeat) {
  EXPECT_EQ(trial_seed(42, "a", 3), trial_seed(42, "a", 3));
  EXPECT_NE(trial_seed(42, "a", 3), trial_seed(42, "a", 4));
  EXPECT_NE(trial_seed(42, "a", 3), trial_seed(42, "b", 3));
  EXPECT_NE(trial_seed(42, "a", 3), trial_seed(43, "a", 3));
}

TEST(Suite, ZeroTrialsIsEmptySuccess) {
  SuiteOptions o;
  o.trials = 0;
  const auto s = run_suite(o);
  EXPECT_TRUE(s.reports.empty());
  EXPECT_TRUE(s.ok());
  std::ostringstream out;
  write_summary(s, out);
  EXPECT_EQ(out.str(), "");
}

TEST(Suite, UnknownCheckThrows) {
  SuiteOptions o;
  o.only = "nope";
  EXPECT_THROW(run_suite(o), Error);
}

TEST(Suite, FastChecksPassAndAreDeterministic) {
  for (const auto& id : suite_checks()) {
    if (id == "valuation_additivity") continue;
    SuiteOptions o;
    o.trials = 3;
    o.only = id;
    const auto a = run_suite(o);
    ASSERT_EQ(a.reports.size(), 1u);
    EXPECT_TRUE(a.ok()) << a.reports[0].to_json().dump();
    std::ostringstream sa, sb;
    write_summary(a, sa);
    write_summary(run_suite(o), sb);
    EXPECT_EQ(sa.str(), sb.str()) << id;
  }
}

TEST(Suite, AdditivitySingleTrial) {
  SuiteOptions o;
  o.trials = 1;
  o.only = "valuation_additivity";
  const auto s = run_suite(o);
  EXPECT_TRUE(s.ok()) << s.reports[0].to_json().dump();
}

TEST(Suite, FlippedConjugationIsCaught) {
  for (const std::string id : {"dtilde_consistency", "dtilde_convention_pinning"}) {
    SuiteOptions o;
    o.trials = 10;
    o.only = id;
    o.flip_conjugation = true;
    const auto s = run_suite(o);
    ASSERT_EQ(s.reports.size(), 1u);
    const auto& r = s.reports[0];
    EXPECT_FALSE(r.ok()) << id;
    const Json line = r.to_json();
    EXPECT_EQ(line["status"], "fail");
    EXPECT_TRUE(line.contains("witness"));
  }
  // Recomputing from the witness alone reproduces the disagreement.
  SuiteOptions o;
  o.trials = 10;
  o.only = "dtilde_consistency";
  o.flip_conjugation = true;
  const auto r = run_suite(o).reports[0];
  EXPECT_EQ(r.witness["replay"]["trial"], *r.failed_trial);
  EXPECT_EQ(r.witness["convention"], "atom");
  const auto body = [](const Json& j) {
    std::vector<Point> pts;
    for (const auto& v : j["vertices"]) {
      std::vector<Rational> c;
      for (const auto& x : v) c.push_back(parse_rational(x.get<std::string>()));
      pts.emplace_back(c);
    }
    return convex_hull(pts, j["ambient_dim"].get<int>());
  };
  std::vector<Rational> w;
  for (const auto& x : r.witness["w"]) w.push_back(parse_rational(x.get<std::string>()));
  const Polytope m = body(r.witness["M"]), k = body(r.witness["K"]);
  EXPECT_EQ(to_string(dtilde_m(m, k).support(Point(w))), r.witness["phi_path"].get<std::string>());
  EXPECT_EQ(to_string(dtilde_m_integral(m, k, Point(w), PlanarAtomConvention::Atom)), r.witness["integral_path"].get<std::string>());
  EXPECT_NE(r.witness["phi_path"], r.witness["integral_path"]);
}
