#include <gtest/gtest.h>

#include "minkval/random.hpp"
#include "minkval/valuations.hpp"

using namespace minkval;

namespace {

const Polytope kSegmentI = segment(Point{0, 0}, Point{0, 1});  // [0, i]
const Polytope kUnitSquare = cube(2);
const Polytope kTriangle = convex_hull({Point{0, 0}, Point{1, 0}, Point{0, 1}});  // not conjugation symmetric
const Polytope kSegmentM11 = segment(Point{-1, 0}, Point{1, 0});
const Polytope kPlanarPoint = singleton(Point{Rational(1, 3), 2});

std::vector<ValuationOp> all_ops(Generator& gen) {
  const Polytope m = gen.planar_body(4), n = gen.planar_body(4);
  return {ValuationOp::proj(), ValuationOp::diff(), ValuationOp::d_m(m), ValuationOp::pi_n(n),
          ValuationOp::dtilde_m(m), ValuationOp::z_combined(m, n), covariant_of(ValuationOp::pi_n(n)),
          covariant_of(ValuationOp::z_combined(m, n))};
}

std::vector<Rational> direction(Generator& gen) { return gen.point(4).coords(); }

Rational h(const ValuationOp& op, const Polytope& k, const std::vector<Rational>& dir) { return support_at(apply(op, k), dir); }

}  // namespace

TEST(ValuationOp, ValidationAndNames) {
  EXPECT_THROW(ValuationOp::d_m(cube(4)).validate(), DimensionError);
  ValuationOp missing{OpKind::PiN, false, {}, {}};
  EXPECT_THROW(missing.validate(), Error);
  ValuationOp extra = ValuationOp::proj();
  extra.m = kSegmentI;
  EXPECT_THROW(extra.validate(), Error);
  EXPECT_THROW(covariant_of(ValuationOp::diff()), Error);
  EXPECT_EQ(covariant_of(ValuationOp::pi_n(kSegmentM11)).name(), "cov_pi_n");
  EXPECT_EQ(parse_kind("z_combined"), OpKind::ZCombined);
  EXPECT_THROW(parse_kind("zz"), ParseError);
  EXPECT_THROW(projection_body(cube(3)), DimensionError);
}

TEST(ProjectionBody, CubeIsTheDualCube) {
  const DualSum pb = projection_body(cube(4));
  EXPECT_EQ(pb.materialize(), DualPolytope(cube(4, -1, 1)));
  Generator gen(301);
  for (int i = 0; i < 20; ++i) {
    const Point v = gen.point(4);
    Rational l1 = 0;
    for (const auto& x : v.coords()) l1 += abs(x);
    EXPECT_EQ(pb.support(v), l1);
    EXPECT_EQ(SupportEvaluator(ValuationOp::proj(), cube(4)).support(v), l1);
  }
}

TEST(ProjectionBody, LowDimensionalBodyGivesZero) {
  const Polytope tri = convex_hull({Point::zero(4), Point::unit(4, 0), Point::unit(4, 2)});
  EXPECT_TRUE(projection_body(tri).is_trivially_zero());
  EXPECT_TRUE(projection_body(tri).materialize().is_zero());
}

TEST(DifferenceBody, Examples) {
  EXPECT_EQ(difference_body(singleton(Point{1, 2, 3, 4})).materialize(), singleton(Point::zero(4)));
  EXPECT_EQ(difference_body(cube(4)).materialize(), cube(4, -1, 1));
}

TEST(DifferenceBody, RealLinearCovariance) {
  Generator gen(303);
  for (int trial = 0; trial < 10; ++trial) {
    const Polytope k = gen.full_polytope(4, 5, 7);
    const Matrix g = gen.invertible_matrix(4);
    const PrimalSum lhs = difference_body(linear_image(k, g));
    const PrimalSum rhs = difference_body(k);
    for (int i = 0; i < 10; ++i) {
      const Covector xi = gen.covector(4);
      EXPECT_EQ(lhs.support(xi), rhs.support(apply<CovectorTag>(g.transpose(), xi)));
    }
  }
}

TEST(DM, SegmentGivesDifferenceBody) {
  const Polytope k = cube(4);
  EXPECT_EQ(d_m(kSegmentI, k).materialize(), difference_body(k).materialize());
  Generator gen(307);
  const Polytope r = gen.full_polytope(4, 5, 7);
  EXPECT_EQ(d_m(kSegmentI, r).materialize(), difference_body(r).materialize());
}

TEST(DM, UnitSquareGivesFourRotations) {
  Generator gen(309);
  const Polytope k = gen.full_polytope(4, 5, 6);
  const Complex i(0, 1);
  Polytope expected = k;
  expected = minkowski_sum(expected, complex_scale(i, k));
  expected = minkowski_sum(expected, complex_scale(-1, k));
  expected = minkowski_sum(expected, complex_scale(-i, k));
  EXPECT_EQ(d_m(kUnitSquare, k).materialize(), expected);
}

TEST(DM, PointParameterGivesZero) {
  EXPECT_TRUE(d_m(kPlanarPoint, cube(4)).is_trivially_zero());
  EXPECT_TRUE(dtilde_m(kPlanarPoint, cube(4)).materialize().is_zero());
}

TEST(PiN, PointParameterGivesZero) {
  Generator gen(311);
  const Polytope k = gen.full_polytope(4);
  const SupportEvaluator eval(ValuationOp::pi_n(kPlanarPoint), k);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(eval.support(gen.point(4)), 0);
  EXPECT_TRUE(pi_n(kPlanarPoint, k).materialize().is_zero());
}

TEST(PiN, RealSegmentIsHalfTheProjectionBody) {
  Generator gen(313);
  const Polytope k = gen.full_polytope(4);
  const DualSum p = pi_n(kSegmentM11, k), pb = projection_body(k);
  for (int i = 0; i < 20; ++i) {
    const Point w = gen.point(4);
    EXPECT_EQ(p.support(w), pb.support(w) / 2);
  }
  EXPECT_EQ(pi_n(kSegmentM11, cube(4)).support(Point{1, 0, 0, 0}), Rational(1, 2));
}

TEST(PiN, VanishesOnRealPlaneOfIndependentVectors) {
  Generator gen(317);
  for (int trial = 0; trial < 10; ++trial) {
    const Polytope planar = gen.planar_body(5);
    std::vector<Point> lifted;
    for (const auto& v : planar.vertices()) lifted.push_back(Point{v[0], 0, v[1], 0});  // span_R{e1, e2}
    const Polytope k = convex_hull(lifted, 4);
    EXPECT_TRUE(pi_n(gen.planar_polygon(), k).materialize().is_zero());
  }
}

TEST(DTildeM, PointBodyGivesZero) {
  Generator gen(319);
  const Polytope k = singleton(gen.point(4));
  EXPECT_TRUE(dtilde_m(kTriangle, k).materialize().is_zero());
  EXPECT_EQ(dtilde_m_integral(kTriangle, k, gen.point(4), kDTildeConvention), 0);
}

TEST(DTildeM, SegmentOnCube) {
  const Point e2{0, 0, 1, 0};
  EXPECT_EQ(dtilde_m(kSegmentI, cube(4)).support(e2), 1);
  EXPECT_EQ(dtilde_m_integral(kSegmentI, cube(4), e2, PlanarAtomConvention::Atom), 1);
  EXPECT_EQ(dtilde_m_integral(kSegmentI, cube(4), e2, PlanarAtomConvention::Conjugate), 1);
}

TEST(DTildeM, IntegralNeedsConjugatedAtoms) {
  Generator gen(323);
  bool atom_convention_fails = false;
  for (int trial = 0; trial < 20; ++trial) {
    const Polytope k = gen.full_polytope(4, 5, 7);
    const DualSum phi_path = dtilde_m(kTriangle, k);
    for (int i = 0; i < 5; ++i) {
      const Point w = gen.point(4);
      EXPECT_EQ(phi_path.support(w), dtilde_m_integral(kTriangle, k, w, PlanarAtomConvention::Conjugate));
      if (phi_path.support(w) != dtilde_m_integral(kTriangle, k, w, PlanarAtomConvention::Atom)) atom_convention_fails = true;
    }
  }
  EXPECT_TRUE(atom_convention_fails);
}

TEST(DTildeM, DegreeOne) {
  Generator gen(327);
  const Polytope k = gen.full_polytope(4);
  const Polytope m = gen.planar_polygon();
  const Rational lambda(7, 3);
  for (int i = 0; i < 10; ++i) {
    const Point w = gen.point(4);
    EXPECT_EQ(dtilde_m(m, scale(k, lambda)).support(w), lambda * dtilde_m(m, k).support(w));
  }
}

TEST(ZCombined, PointParametersGiveZero) {
  const DualSum z = z_combined(kPlanarPoint, kPlanarPoint, cube(4));
  EXPECT_TRUE(z.materialize().is_zero());
}

TEST(ZCombined, HomogeneousPartsAndTranslationInvariance) {
  Generator gen(331);
  const Polytope k = gen.full_polytope(4, 5, 8);
  const Polytope m = gen.planar_polygon(), n = gen.planar_polygon();
  const Point t = gen.point(4);
  for (int i = 0; i < 5; ++i) {
    const Point w = gen.point(4);
    const Rational d1 = dtilde_m(m, k).support(w), p3 = pi_n(n, k).support(w);
    for (int lambda = 1; lambda <= 5; ++lambda) {
      const Rational l = lambda;
      EXPECT_EQ(z_combined(m, n, scale(k, l)).support(w), l * d1 + l * l * l * p3);
    }
    EXPECT_EQ(z_combined(m, n, translate(k, t)).support(w), z_combined(m, n, k).support(w));
  }
}

TEST(CovariantOf, DTildeReturnsToDM) {
  Generator gen(337);
  const Polytope k = gen.full_polytope(4, 5, 6);
  const Polytope m = gen.planar_polygon();
  const auto cov = std::get<PrimalSum>(apply(covariant_of(ValuationOp::dtilde_m(m)), k));
  EXPECT_EQ(cov.materialize(), d_m(m, k).materialize());
}

TEST(CovariantOf, PointParameterGivesZeroMap) {
  const auto cov = std::get<PrimalSum>(apply(covariant_of(ValuationOp::pi_n(kPlanarPoint)), cube(4)));
  EXPECT_EQ(cov.materialize(), singleton(Point::zero(4)));
}

TEST(Valuations, EvaluatorAgreesWithReconstruction) {
  Generator gen(341);
  for (int trial = 0; trial < 8; ++trial) {
    const Polytope k = trial % 4 == 3 ? singleton(gen.point(4)) : gen.full_polytope(4, 5, 8);
    for (const auto& op : all_ops(gen)) {
      const ValuationOutput out = apply(op, k);
      const SupportEvaluator eval(op, k);
      for (int i = 0; i < 10; ++i) {
        const auto dir = direction(gen);
        ASSERT_EQ(support_at(out, dir), support_at(eval, dir)) << op.name() << " trial " << trial;
      }
    }
  }
}

TEST(Valuations, AdditiveUnderHyperplaneSplits) {
  Generator gen(347);
  for (int trial = 0; trial < 6; ++trial) {
    const Polytope p = gen.full_polytope(4, 6, 9);
    const auto parts = split_by_hyperplane(p, gen.nonzero_covector(4), Rational(0));
    if (parts.lower.is_empty() || parts.upper.is_empty()) continue;
    for (const auto& op : all_ops(gen)) {
      for (int i = 0; i < 10; ++i) {
        const auto dir = direction(gen);
        ASSERT_EQ(h(op, p, dir) + h(op, parts.slice, dir), h(op, parts.lower, dir) + h(op, parts.upper, dir))
            << op.name() << " trial " << trial;
      }
    }
  }
}

TEST(Valuations, SpecialLinearEquivariance) {
  Generator gen(349);
  for (int trial = 0; trial < 8; ++trial) {
    const Polytope k = gen.full_polytope(4, 5, 7);
    const ComplexMatrix2 g = gen.special_linear();
    const Polytope gk = group_action(g, k);
    for (const auto& op : all_ops(gen)) {
      for (int i = 0; i < 5; ++i) {
        const auto dir = direction(gen);
        if (op.dual_output()) {
          const Point w(dir);
          const Point pulled = group_action(g.inverse(), w);
          ASSERT_EQ(h(op, gk, dir), h(op, k, pulled.coords())) << op.name();
        } else {
          const Covector xi(dir);
          ASSERT_EQ(h(op, gk, dir), h(op, k, adjoint_action(g, xi).coords())) << op.name();
        }
      }
    }
  }
}

TEST(Valuations, ParameterTranslationInvariance) {
  Generator gen(353);
  const Polytope k = gen.full_polytope(4);
  const Polytope m = gen.planar_polygon(), n = gen.planar_polygon();
  const Point t = gen.point(2);
  EXPECT_EQ(d_m(translate(m, t), k).materialize(), d_m(m, k).materialize());
  const DualSum a = pi_n(translate(n, t), k), b = pi_n(n, k);
  for (int i = 0; i < 20; ++i) {
    const Point w = gen.point(4);
    EXPECT_EQ(a.support(w), b.support(w));
  }
}

TEST(ZeroOperator, EmptyAndPointParameters) {
  Generator gen(77);
  const Polytope k = gen.full_polytope(4, 6, 8);
  const Point w = gen.point(4);
  for (const Polytope& p : {Polytope::empty(2), kPlanarPoint}) {
    for (const auto& op : {ValuationOp::d_m(p), ValuationOp::pi_n(p), ValuationOp::dtilde_m(p), ValuationOp::z_combined(p, p)}) {
      EXPECT_NO_THROW(op.validate());
      const SupportEvaluator eval(op, k);
      const auto dir = w.coords();
      EXPECT_EQ(support_at(apply(op, k), dir), 0) << op.name();
      EXPECT_EQ(support_at(eval, dir), 0) << op.name();
    }
  }
}
