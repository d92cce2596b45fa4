#include <doctest.h>

#include <set>

#include "opsplit/errors.hpp"
#include "opsplit/report_io.hpp"
#include "opsplit/suites.hpp"

using namespace opsplit;

namespace {

SuiteConfig small() {
  SuiteConfig c;
  c.instances = 12;
  c.samples = 4;
  return c;
}

}  // namespace

TEST_CASE("registry tags round-trip") {
  std::set<std::string_view> seen;
  for (const SuiteId id : kSuiteRegistry) {
    CHECK(suite_from_string(to_string(id)) == id);
    seen.insert(to_string(id));
  }
  CHECK(seen.size() == 14);
  CHECK_THROWS_AS(suite_from_string("EQ99"), UnknownSuite);
}

TEST_CASE("identity suites pass") {
  const SuiteConfig c = small();
  for (const SuiteId id : kSuiteRegistry) {
    if (id == SuiteId::kCommutationEqualities || id == SuiteId::kCommutationNonEqualities) continue;
    const SuiteReport r = run_one(id, c);
    CAPTURE(to_string(id));
    CHECK(r.verdict == Verdict::kPass);
    CHECK_FALSE(r.members.empty());
    for (const EqualityReport& m : r.members) {
      CHECK(m.suite == to_string(id));
      CHECK(m.samples == c.instances * c.samples);
    }
  }
}

TEST_CASE("commutation suites: the reliable members pass") {
  const SuiteConfig c = small();
  const SuiteReport eq = run_one(SuiteId::kCommutationEqualities, c);
  std::set<std::string> passing;
  for (const EqualityReport& m : eq.members)
    if (m.verdict == Verdict::kPass) passing.insert(m.member);
  CHECK(passing.count("RAg_T closed form vs R_{A_g} T"));
  CHECK(passing.count("R_{A_g} T vs T' R_{A_g}"));
  CHECK(passing.count("T_AgBg_RBg closed form vs composition"));
  CHECK_FALSE(eq.notes.empty());

  const SuiteReport ne = run_one(SuiteId::kCommutationNonEqualities, c);
  for (const EqualityReport& m : ne.members) {
    CHECK(m.expect == Expectation::kDistinct);
    if (m.member == "RBg_T_vs_Ts_RBg") {
      CHECK(m.verdict == Verdict::kPass);
      CHECK(m.max_gap > c.tol.witness);
    }
  }
}

TEST_CASE("reports are deterministic and independent of scheduling") {
  SuiteConfig c = small();
  const std::vector<SuiteId> ids(kSuiteRegistry.begin(), kSuiteRegistry.end());
  const auto a = run_suite(ids, c);
  c.parallel = false;
  const auto b = run_suite(ids, c);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == ids[i]);
    CHECK(report_json(a[i]) == report_json(b[i]));
  }
  c.seed = 2;
  const auto d = run_suite(ids, c);
  CHECK(report_json(d[0]) != report_json(a[0]));
}

TEST_CASE("config validation") {
  SuiteConfig c = small();
  c.instances = 0;
  CHECK_THROWS_AS(run_one(SuiteId::kDrsForms, c), InvalidParameter);
  c = small();
  c.max_dim = kMaxInstanceDim + 1;
  CHECK_THROWS_AS(run_one(SuiteId::kDrsForms, c), InvalidParameter);
  c = small();
  c.gamma = 1.5;
  CHECK_THROWS_AS(run_one(SuiteId::kDrsForms, c), InvalidParameter);
  c = small();
  c.model.w.setZero();
  CHECK_THROWS_AS(run_one(SuiteId::kCommutationNonEqualities, c), InvalidParameter);
}

TEST_CASE("fixed parameters are honoured") {
  SuiteConfig c = small();
  c.gamma = 0.5;
  c.lambda = 1.0;
  c.min_dim = c.max_dim = 3;
  CHECK(run_one(SuiteId::kAacForms, c).verdict == Verdict::kPass);
  Rng rng = make_stream(1, "model");
  const ModelInstance m = random_model(rng, c, true, ASign::kPlusV);
  CHECK(m.dim() == 3);
  CHECK(m.gamma == 0.5);
  CHECK(m.lambda == 1.0);
  CHECK(m.a_sign == ASign::kPlusV);
  CHECK(m.u.rank() < 3);
  CHECK_NOTHROW(validate_for_commutation_examples(m));
}
