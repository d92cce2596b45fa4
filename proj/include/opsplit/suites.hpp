#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "opsplit/closed_forms.hpp"
#include "opsplit/harness.hpp"

namespace opsplit {

// One suite per identity family. The string tags returned by to_string() are
// the names accepted on the command line and written into reports.
enum class SuiteId {
  kDrsForms,                  // EQ9_DRS_FORMS
  kDrsSwap,                   // EQ10_SWAP
  kResolventAverage,          // EQ6_RESOLVENT_AVG
  kReflectedAverage,          // EQ7_REFLECTED_AVG
  kAacForms,                  // LEM22_T_FORMS
  kReflectionProductForms,    // LEM22_RBR_FORMS
  kAffineResolvent,           // PROP21_AFFINE
  kModelClosedForms,          // EX23_ORACLES
  kResolventReflectionCommute,// LEM24_JR_COMMUTE
  kCommutator,                // LEM25_COMMUTATOR
  kConjugation,               // THM26_CONJUGATION
  kAffinePairIdentities,      // LEM27_RR1_RR4
  kCommutationEqualities,     // PROP28_EQUALITIES
  kCommutationNonEqualities,  // PROP28_NONEQUALITIES
};

inline constexpr std::array<SuiteId, 14> kSuiteRegistry{
    SuiteId::kDrsForms,          SuiteId::kDrsSwap,
    SuiteId::kResolventAverage,  SuiteId::kReflectedAverage,
    SuiteId::kAacForms,          SuiteId::kReflectionProductForms,
    SuiteId::kAffineResolvent,   SuiteId::kModelClosedForms,
    SuiteId::kResolventReflectionCommute, SuiteId::kCommutator,
    SuiteId::kConjugation,       SuiteId::kAffinePairIdentities,
    SuiteId::kCommutationEqualities, SuiteId::kCommutationNonEqualities};

std::string_view to_string(SuiteId id);
SuiteId suite_from_string(std::string_view tag);  // UnknownSuite on failure

struct SuiteTolerances {
  double single = 1e-10;   // one composition
  double multi = 1e-9;     // identities between evaluation paths
  double power = 1e-8;     // n-fold powers
  double witness = 1e-6;   // minimum gap certifying a non-equality
};

struct SuiteConfig {
  std::uint64_t seed = 1;
  int instances = 100;
  std::int64_t samples = 8;
  Index min_dim = 1;
  Index max_dim = 16;
  // Drawn per instance when absent.
  std::optional<double> gamma;
  std::optional<double> lambda;
  SuiteTolerances tol;
  std::int64_t witness_budget = 100;
  // Always included in the commutation suites, ahead of the random instances.
  ModelInstance model = worked_instance();
  bool parallel = true;
};

void validate(const SuiteConfig& config);

struct SuiteReport {
  SuiteId id = SuiteId::kDrsForms;
  Verdict verdict = Verdict::kPass;
  std::vector<EqualityReport> members;
  std::vector<std::string> notes;
};

SuiteReport run_one(SuiteId id, const SuiteConfig& config);

// Reports come back in the order of `ids`; results do not depend on whether
// suites ran concurrently.
std::vector<SuiteReport> run_suite(std::span<const SuiteId> ids, const SuiteConfig& config);

// Random instance of the translated-identity / affine-projector model.
// `anchor_in_complement` restricts a to U^perp and keeps U^perp nontrivial.
ModelInstance random_model(Rng& rng, const SuiteConfig& config, bool anchor_in_complement,
                           ASign sign);

}  // namespace opsplit
