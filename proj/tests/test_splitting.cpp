#include <doctest.h>

#include "opsplit/closed_forms.hpp"
#include "opsplit/errors.hpp"
#include "opsplit/harness.hpp"
#include "opsplit/splitting.hpp"
#include "oracles.hpp"

using namespace opsplit;

namespace {

Point pt(double a, double b) {
  Point p(2);
  p << a, b;
  return p;
}

// Oracle pair read off the base operators of a generated instance.
oracle::Pair oracle_pair(const SplitPair& s) {
  const Index n = s.a.dim();
  return {oracle::probe(s.a, n), oracle::probe(s.b, n), s.p.gamma(), s.lam.lambda(), s.p.w()};
}

SplitPair random_split(std::uint64_t seed) {
  Rng rng = make_stream(seed, "split-test");
  InstanceSpec spec;
  spec.dim = random_index(rng, 1, 9);
  spec.seed = seed;
  spec.kind_a = static_cast<OperatorKind>(random_index(rng, 0, 2));
  spec.kind_b = static_cast<OperatorKind>(random_index(rng, 0, 2));
  spec.gamma = random_uniform(rng, 0.05, 0.95);
  spec.lambda = random_uniform(rng, 0.05, 1.0);
  return gen_instance(spec);
}

}  // namespace

TEST_CASE("worked instance values") {
  const Splitting s(model_pair(worked_instance()));
  const Point x = pt(2, 0);
  CHECK((s.aac(Order::kAB, TForm::kDefinition, x) - pt(1.5, -0.5)).norm() < 1e-14);
  CHECK((s.aac(Order::kBA, TForm::kDefinition, x) - pt(1.5, 1.0)).norm() < 1e-14);
  const Point rt = s.side_a().rg(s.aac(Order::kAB, TForm::kDefinition, x));
  const Point tr = s.aac(Order::kBA, TForm::kDefinition, s.side_a().rg(x));
  CHECK((rt - pt(0.25, 1.75)).norm() < 1e-14);
  CHECK((tr - pt(0.25, 1.75)).norm() < 1e-14);
}

TEST_CASE("every T and RR form agrees with the dense oracle") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const SplitPair pair = random_split(seed);
    const Splitting s(pair);
    const oracle::Pair ref = oracle_pair(pair);
    Rng rng = make_stream(seed, "split-points");
    const Point x = random_point(rng, s.dim(), 10.0);
    const double scale = 1 + x.norm();
    const oracle::Affine tab = oracle::t_ab(ref);
    const oracle::Affine tba = oracle::t_ba(ref);
    for (const TForm form : kAllTForms) {
      CAPTURE(to_string(form));
      CHECK((s.aac(Order::kAB, form, x) - tab(x)).norm() < 1e-9 * scale);
      CHECK((s.aac(Order::kBA, form, x) - tba(x)).norm() < 1e-9 * scale);
    }
    const oracle::Affine rr = oracle::compose(oracle::rg(ref.b, ref), oracle::rg(ref.a, ref));
    for (const RbrForm form : kAllRbrForms) {
      CAPTURE(to_string(form));
      CHECK((s.rbr(Order::kAB, form, x) - rr(x)).norm() < 1e-9 * scale);
    }
    const oracle::Affine drs_ab = oracle::drs(ref.a, ref.b);
    const oracle::Affine drs_ba = oracle::drs(ref.b, ref.a);
    for (const DrsForm form : {DrsForm::kAveraged, DrsForm::kResolvent}) {
      CHECK((s.drs(Order::kAB, form, x) - drs_ab(x)).norm() < 1e-9 * scale);
      CHECK((s.drs(Order::kBA, form, x) - drs_ba(x)).norm() < 1e-9 * scale);
    }
    CHECK((s.drs_swapped(x) - drs_ba(x)).norm() < 1e-9 * scale);
    CHECK((drs(pair.a, pair.b, DrsForm::kResolvent, x) - drs_ab(x)).norm() < 1e-9 * scale);
  }
}

TEST_CASE("powers and conjugation") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const SplitPair pair = random_split(seed);
    const Splitting s(pair);
    const oracle::Pair ref = oracle_pair(pair);
    Rng rng = make_stream(seed, "power-points");
    const Point x = random_point(rng, s.dim());
    CHECK(s.power(Order::kAB, 0, x) == x);
    const Point p5 = s.power(Order::kAB, 5, x);
    CHECK((p5 - oracle::power(oracle::t_ab(ref), 5)(x)).norm() < 1e-9 * (1 + x.norm()));
    for (const int n : {1, 3, 16}) CHECK(s.conjugation_residual(n, x) < 1e-8 * (1 + x.norm()));
  }
}

TEST_CASE("commutator triple and its vanishing") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Splitting s(random_split(seed));
    Rng rng = make_stream(seed, "comm-points");
    const Point x = random_point(rng, s.dim(), 10.0);
    const CommutatorTriple c = s.commutator(x);
    const double scale = 1 + x.norm();
    CHECK(c.direct.norm() < 1e-9 * scale);
    CHECK((c.direct - c.via_perturbed).norm() < 1e-9 * scale);
    CHECK((c.direct - c.via_base).norm() < 1e-9 * scale);
    const auto [left, right] = s.dr_commutator(x);
    CHECK((left - right).norm() < 1e-8 * (1 + right.norm()));
  }
}

TEST_CASE("scalar contraction with zero operators") {
  for (const double g : {0.1, 0.5, 0.8}) {
    const Point zero = Point::Zero(3);
    const Splitting s(SplitPair{Operator::constant(zero), Operator::constant(zero),
                                PerturbationParams(g, zero), AacParams(1.0)});
    const Point x = Point::LinSpaced(3, 1.0, 3.0);
    const Point x1 = s.aac(Order::kAB, TForm::kDefinition, x);
    CHECK((x1 - (2 * g - 1) * (2 * g - 1) * x).norm() < 1e-14);
  }
}

TEST_CASE("splitting rejects mismatched pairs") {
  CHECK_THROWS_AS(Splitting(SplitPair{Operator::identity(2), Operator::identity(3),
                                      PerturbationParams(0.5, Point::Zero(2)), AacParams(0.5)}),
                  DimensionMismatch);
  const Operator comp = Operator::compose(Operator::identity(2), Operator::identity(2));
  CHECK_THROWS_AS(Splitting(SplitPair{comp, Operator::identity(2),
                                      PerturbationParams(0.5, Point::Zero(2)), AacParams(0.5)}),
                  NonComputableResolvent);
}
