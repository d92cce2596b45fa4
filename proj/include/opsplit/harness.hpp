#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "opsplit/random.hpp"
#include "opsplit/splitting.hpp"

namespace opsplit {

enum class OperatorKind {
  kAffineRandom,        // x -> L x + c with L + L^T PSD
  kTranslatedIdentity,  // Id - v with v in U^perp of a random U
  kProjector,           // P_{a+U} for random U and anchor a
};

std::string_view to_string(OperatorKind kind);

struct InstanceSpec {
  Index dim = 2;
  std::uint64_t seed = 0;
  OperatorKind kind_a = OperatorKind::kAffineRandom;
  OperatorKind kind_b = OperatorKind::kProjector;
  double gamma = 0.5;
  double lambda = 0.5;
  // Anchor of the resolvent average; drawn standard normal when absent.
  std::optional<Point> w;
};

inline constexpr Index kMaxInstanceDim = 64;

// Deterministic in `spec`. Throws InvalidParameter for an invalid spec and
// propagates RankDeficient from orthonormalize().
SplitPair gen_instance(const InstanceSpec& spec);
Operator gen_operator(OperatorKind kind, Index dim, Rng& rng);

enum class Verdict { kPass, kFail };
// kDistinct marks a claimed non-equality: the check passes when a witness is found.
enum class Expectation { kEqual, kDistinct };

std::string_view to_string(Verdict v);
std::string_view to_string(Expectation e);

struct Witness {
  Point x;
  double gap = 0.0;
  std::uint64_t instance = 0;
};

// Outcome of one sampled comparison. For kEqual, max_gap is the largest gap
// seen and the verdict is PASS iff max_gap <= tolerance; a FAIL carries the
// worst sample as witness. For kDistinct, max_gap is the smallest per-instance
// witness gap and the verdict is PASS iff it exceeds the tolerance.
struct EqualityReport {
  std::string suite;
  std::string member;
  Expectation expect = Expectation::kEqual;
  std::int64_t samples = 0;
  double max_gap = 0.0;
  double tolerance = 0.0;
  Verdict verdict = Verdict::kPass;
  std::optional<Witness> witness;
};

// Evaluates gap(x) at `samples` points drawn standard normal scaled by 10.
EqualityReport sampled_check(const std::function<double(const Point&)>& gap, Index dim,
                             std::int64_t samples, std::uint64_t seed, double tol);

// Relative gap |f(x) - g(x)| / (1 + |f(x)|).
EqualityReport operators_equal(const PointMap& f, const PointMap& g, Index dim,
                               std::int64_t samples, std::uint64_t seed, double tol);

struct WitnessSearch {
  std::optional<Witness> witness;
  std::int64_t tried = 0;
  double best_gap = 0.0;  // largest gap seen, witness or not
};

WitnessSearch search_witness(const PointMap& f, const PointMap& g, Index dim, std::int64_t budget,
                             std::uint64_t seed, double threshold);

// First sampled point whose absolute gap |f(x) - g(x)| exceeds `threshold`.
std::optional<Witness> find_witness(const PointMap& f, const PointMap& g, Index dim,
                                    std::int64_t budget, std::uint64_t seed, double threshold);

// Folds a per-instance report into an aggregate for the same member.
void merge_into(EqualityReport& total, const EqualityReport& part, std::uint64_t instance);

}  // namespace opsplit
