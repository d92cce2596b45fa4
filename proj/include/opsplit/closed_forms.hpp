#pragma once

#include <array>
#include <string_view>

#include "opsplit/splitting.hpp"

namespace opsplit {

// Sign of the translated identity: A = Id - v (kMinusV) or A = Id + v (kPlusV).
enum class ASign { kMinusV, kPlusV };

std::string_view to_string(ASign sign);
ASign a_sign_from_string(std::string_view s);  // "minus_v" | "plus_v"; ConfigError otherwise

// Concrete model problem: A = Id -/+ v with v in U^perp, B = P_{a+U}, and the
// perturbation / relaxation parameters.
struct ModelInstance {
  SubspaceBasis u;
  Point a;
  Point v;
  Point w;
  double gamma = 0.5;
  double lambda = 0.5;
  ASign a_sign = ASign::kMinusV;

  Index dim() const { return u.ambient_dim(); }
};

// n = 2, U = span{(1,0)}, a = (0,2), v = (0,1), w = (1,1), gamma = lambda = 1/2.
ModelInstance worked_instance();

// Throws InvalidParameter unless dimensions agree, gamma in (0,1), lambda in
// (0,1], and v lies in U^perp (|P_U v| <= 1e-10 |v|).
void validate(const ModelInstance& inst);
// Additionally requires a in U^perp and |a - v| > 1e-8.
void validate_for_commutation_examples(const ModelInstance& inst);

// A, B and the parameters of `inst` as a SplitPair.
SplitPair model_pair(const ModelInstance& inst);

struct ClosedFormConstants {
  Point k, l, h, m, s, b, c;
};

// Constant terms of the closed-form operators, transcribed term by term.
// Wherever the anchor a appears, P_{U^perp} a is used, so the same constants
// serve instances whose anchor is unrestricted.
ClosedFormConstants constants(const ModelInstance& inst);

enum class ClosedFormId {
  // Translated identity / affine projector building blocks.
  kJA, kRA, kJAg, kRAg, kJB, kRB, kJBg, kRBg,
  kTAB, kTBA, kJB_RA, kJA_RB, kJB_RAg, kJA_RBg,
  kT_AgBg, kT_BgAg,
  // Compositions with a reflected resolvent (a in U^perp).
  kRAg_T, kRBg_T_AgBg, kT_BgAg_RBg, kRBg_T_BgAg, kT_AgBg_RBg,
};

inline constexpr std::array<ClosedFormId, 16> kBuildingBlockForms{
    ClosedFormId::kJA,     ClosedFormId::kRA,     ClosedFormId::kJAg,    ClosedFormId::kRAg,
    ClosedFormId::kJB,     ClosedFormId::kRB,     ClosedFormId::kJBg,    ClosedFormId::kRBg,
    ClosedFormId::kTAB,    ClosedFormId::kTBA,    ClosedFormId::kJB_RA,  ClosedFormId::kJA_RB,
    ClosedFormId::kJB_RAg, ClosedFormId::kJA_RBg, ClosedFormId::kT_AgBg, ClosedFormId::kT_BgAg};

inline constexpr std::array<ClosedFormId, 5> kReflectedCompositionForms{
    ClosedFormId::kRAg_T, ClosedFormId::kRBg_T_AgBg, ClosedFormId::kT_BgAg_RBg,
    ClosedFormId::kRBg_T_BgAg, ClosedFormId::kT_AgBg_RBg};

std::string_view to_string(ClosedFormId id);
ClosedFormId closed_form_from_string(std::string_view tag);  // UnknownForm on failure

// Evaluates the closed form as written for A = Id - v. Under kPlusV the
// formulas are still the Id - v ones, which is what exposes the sign mismatch.
Point closed_form_eval(const ModelInstance& inst, ClosedFormId id, const Point& x);

// Same quantity obtained by composing resolvents of the actual operators.
Point compositional_eval(const Splitting& split, ClosedFormId id, const Point& x);
Point compositional_eval(const ModelInstance& inst, ClosedFormId id, const Point& x);

// Claimed non-commutations of the reflected resolvent of B_g:
//   kRBgT:  R_{B_g} T_{A_g,B_g}  vs  T_{B_g,A_g} R_{B_g}
//   kRBgTs: R_{B_g} T_{B_g,A_g}  vs  T_{A_g,B_g} R_{B_g}
enum class NonCommutation { kRBgT, kRBgTs };

std::string_view to_string(NonCommutation which);

// The two sides of a claimed non-commutation as point maps.
std::pair<PointMap, PointMap> noncommutation_sides(const Splitting& split, NonCommutation which);

// Norm of the difference of the two sides, evaluated compositionally.
double noncommutation_gap(const ModelInstance& inst, NonCommutation which, const Point& x);

}  // namespace opsplit
