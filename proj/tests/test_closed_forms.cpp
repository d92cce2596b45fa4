#include <doctest.h>

#include <cmath>

#include "opsplit/closed_forms.hpp"
#include "opsplit/errors.hpp"
#include "opsplit/random.hpp"
#include "oracles.hpp"

using namespace opsplit;

namespace {

Point pt(double a, double b) {
  Point p(2);
  p << a, b;
  return p;
}

ModelInstance random_instance(std::uint64_t seed, bool anchor_in_complement) {
  Rng rng = make_stream(seed, "cf-test");
  const Index n = random_index(rng, 2, 8);
  const Index k = random_index(rng, 0, n - 1);
  std::vector<Point> span;
  for (Index i = 0; i < k; ++i) span.push_back(random_point(rng, n));
  const SubspaceBasis u = k == 0 ? SubspaceBasis(n) : orthonormalize(span);
  ModelInstance m{u, random_point(rng, n), u.project_complement(random_point(rng, n)),
                  random_point(rng, n)};
  if (anchor_in_complement) m.a = u.project_complement(m.a);
  m.gamma = random_uniform(rng, 0.05, 0.95);
  m.lambda = random_uniform(rng, 0.05, 1.0);
  return m;
}

// Independent dense evaluation of the same quantities.
oracle::Pair oracle_model(const ModelInstance& m) {
  const Index n = m.dim();
  const oracle::Affine a{Matrix::Identity(n, n), -m.v};
  const oracle::Affine b = oracle::affine_projector(m.u.projector(), m.a);
  return {a, b, m.gamma, m.lambda, m.w};
}

}  // namespace

TEST_CASE("worked instance constants") {
  const ClosedFormConstants c = constants(worked_instance());
  CHECK((c.k - pt(0.25, -0.5)).norm() < 1e-15);
  CHECK((c.l - pt(0.25, 1.0)).norm() < 1e-15);
  CHECK((c.h - pt(0.875, 1.75)).norm() < 1e-15);
  CHECK((c.m - pt(1.0, -1.0)).norm() < 1e-15);
  CHECK((c.s - pt(0.375, -7.0)).norm() < 1e-15);
  CHECK((c.b - pt(1.375, -0.5)).norm() < 1e-15);
  CHECK((c.c - pt(0.875, -1.0)).norm() < 1e-15);
}

TEST_CASE("building-block closed forms agree with dense evaluation") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const ModelInstance m = random_instance(seed, false);
    const oracle::Pair ref = oracle_model(m);
    Rng rng = make_stream(seed, "cf-points");
    const Point x = random_point(rng, m.dim(), 10.0);
    const double tol = 1e-9 * (1 + x.norm());
    const auto check = [&](ClosedFormId id, const oracle::Affine& f) {
      CAPTURE(to_string(id));
      CHECK((closed_form_eval(m, id, x) - f(x)).norm() < tol);
      CHECK((compositional_eval(m, id, x) - f(x)).norm() < tol);
    };
    const oracle::Affine ja = oracle::resolvent(ref.a), jb = oracle::resolvent(ref.b);
    const oracle::Affine ra = oracle::reflect(ja), rb = oracle::reflect(jb);
    const oracle::Affine jag = oracle::jg(ref.a, ref), jbg = oracle::jg(ref.b, ref);
    const oracle::Affine rag = oracle::reflect(jag), rbg = oracle::reflect(jbg);
    check(ClosedFormId::kJA, ja);
    check(ClosedFormId::kRA, ra);
    check(ClosedFormId::kJAg, jag);
    check(ClosedFormId::kRAg, rag);
    check(ClosedFormId::kJB, jb);
    check(ClosedFormId::kRB, rb);
    check(ClosedFormId::kJBg, jbg);
    check(ClosedFormId::kRBg, rbg);
    check(ClosedFormId::kTAB, oracle::drs(ref.a, ref.b));
    check(ClosedFormId::kTBA, oracle::drs(ref.b, ref.a));
    check(ClosedFormId::kJB_RA, oracle::compose(jb, ra));
    check(ClosedFormId::kJA_RB, oracle::compose(ja, rb));
    check(ClosedFormId::kJB_RAg, oracle::compose(jb, rag));
    check(ClosedFormId::kJA_RBg, oracle::compose(ja, rbg));
    check(ClosedFormId::kT_AgBg, oracle::t_ab(ref));
    check(ClosedFormId::kT_BgAg, oracle::t_ba(ref));
  }
}

TEST_CASE("reflected compositions: which printed forms hold") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const ModelInstance m = random_instance(seed, true);
    const oracle::Pair ref = oracle_model(m);
    Rng rng = make_stream(seed, "rc-points");
    const Point x = random_point(rng, m.dim(), 10.0);
    const double tol = 1e-9 * (1 + x.norm());
    const oracle::Affine rag = oracle::rg(ref.a, ref), rbg = oracle::rg(ref.b, ref);
    const oracle::Affine t = oracle::t_ab(ref), ts = oracle::t_ba(ref);
    CHECK((closed_form_eval(m, ClosedFormId::kRAg_T, x) - oracle::compose(rag, t)(x)).norm() < tol);
    CHECK((closed_form_eval(m, ClosedFormId::kT_AgBg_RBg, x) - oracle::compose(t, rbg)(x)).norm() <
          tol);
    const auto comp = [&](ClosedFormId id) { return compositional_eval(m, id, x); };
    CHECK((comp(ClosedFormId::kRBg_T_AgBg) - oracle::compose(rbg, t)(x)).norm() < tol);
    CHECK((comp(ClosedFormId::kT_BgAg_RBg) - oracle::compose(ts, rbg)(x)).norm() < tol);
    CHECK((comp(ClosedFormId::kRBg_T_BgAg) - oracle::compose(rbg, ts)(x)).norm() < tol);
    // R_{B_g} commutes with T_{B_g,A_g} -> T_{A_g,B_g}: B is affine too
    CHECK(noncommutation_gap(m, NonCommutation::kRBgTs, x) < tol);
  }
}

TEST_CASE("worked instance: printed difference vs actual difference") {
  const ModelInstance m = worked_instance();
  const double expected = 2 * m.lambda * m.gamma * m.w.norm();
  CHECK(expected == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  for (const Point& x : {pt(2, 0), pt(-3, 5), pt(0, 0), pt(10, -7)}) {
    const Point printed = closed_form_eval(m, ClosedFormId::kRBg_T_BgAg, x) -
                          closed_form_eval(m, ClosedFormId::kT_AgBg_RBg, x);
    CHECK(printed.norm() == doctest::Approx(expected).epsilon(1e-12));
    CHECK(noncommutation_gap(m, NonCommutation::kRBgTs, x) < 1e-12);
  }
  CHECK(noncommutation_gap(m, NonCommutation::kRBgT, pt(2, 0)) ==
        doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("plus_v breaks the printed building blocks") {
  ModelInstance m = worked_instance();
  m.a_sign = ASign::kPlusV;
  m.gamma = 0.3;  // at gamma = 1/2 the v term of T_AgBg cancels
  const Point x = pt(2, 0);
  CHECK((closed_form_eval(m, ClosedFormId::kJA, x) - compositional_eval(m, ClosedFormId::kJA, x))
            .norm() > 0.1);
  CHECK((closed_form_eval(m, ClosedFormId::kT_AgBg, x) -
         compositional_eval(m, ClosedFormId::kT_AgBg, x))
            .norm() > 0.1);
  // B-only forms do not involve v
  CHECK((closed_form_eval(m, ClosedFormId::kJB, x) - compositional_eval(m, ClosedFormId::kJB, x))
            .norm() < 1e-14);
}

TEST_CASE("tags and validation") {
  for (int i = 0; i <= static_cast<int>(ClosedFormId::kT_AgBg_RBg); ++i) {
    const auto id = static_cast<ClosedFormId>(i);
    CHECK(closed_form_from_string(to_string(id)) == id);
  }
  CHECK_THROWS_AS(closed_form_from_string("EX99"), UnknownForm);
  CHECK(a_sign_from_string("plus_v") == ASign::kPlusV);
  CHECK_THROWS_AS(a_sign_from_string("minus"), ConfigError);

  ModelInstance m = worked_instance();
  m.v = pt(1, 1);
  CHECK_THROWS_AS(validate(m), InvalidParameter);
  m = worked_instance();
  m.a = m.v;
  CHECK_NOTHROW(validate(m));
  CHECK_THROWS_AS(validate_for_commutation_examples(m), InvalidParameter);
  m = worked_instance();
  m.gamma = 1.0;
  CHECK_THROWS_AS(validate(m), InvalidParameter);
}
