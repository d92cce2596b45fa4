#pragma once

#include <array>
#include <string_view>
#include <utility>

#include "opsplit/operator.hpp"

namespace opsplit {

// Ordered pair (A, B) together with the resolvent-average parameters
// (gamma, w) and the AAC relaxation lambda.
struct SplitPair {
  Operator a;
  Operator b;
  PerturbationParams p;
  AacParams lam;
};

// kAB selects T_{A_g,B_g} = (1-l) Id + l R_{B_g} R_{A_g}; kBA selects the
// operator with the roles of A and B exchanged.
enum class Order { kAB, kBA };

// Douglas-Rachford operator T_{A,B} of the unperturbed pair.
enum class DrsForm {
  kAveraged,   // (Id + R_B R_A) / 2
  kResolvent,  // Id - J_A + J_B R_A
};

// Evaluation paths for the AAC operator. Every path is computed
// independently; agreement between them is what the test suites check.
enum class TForm {
  kDefinition,               // (1-l) Id + l R_{B_g} R_{A_g}
  kViaPerturbedResolvents,   // Id + 2l J_{B_g} R_{A_g} - 2l J_{A_g}
  kViaBaseResolvents,        // Id + 2lg J_B R_{A_g} - 2lg J_A
  kFactored,                 // Id + 2lg (J_B R_{A_g} - J_A)
  kFromDrs,                  // T_{A,B} + (1-2lg) J_A - J_B R_A + 2lg J_B R_{A_g}
  kFromSwappedDrs,           // T_{B,A} + J_B - J_A R_B + 2lg J_B R_{A_g} - 2lg J_A
};
inline constexpr std::array<TForm, 6> kAllTForms{
    TForm::kDefinition,      TForm::kViaPerturbedResolvents, TForm::kViaBaseResolvents,
    TForm::kFactored,        TForm::kFromDrs,                TForm::kFromSwappedDrs};

// Evaluation paths for R_{B_g} R_{A_g}.
enum class RbrForm {
  kComposition,              // R_{B_g}(R_{A_g} x)
  kViaPerturbedResolvents,   // Id + 2 J_{B_g} R_{A_g} - 2 J_{A_g}
  kViaBaseResolvents,        // Id + 2g J_B R_{A_g} - 2g J_A
  kFromDrs,                  // T_{A,B} + (1-2g) J_A - J_B R_A + 2g J_B R_{A_g}
};
inline constexpr std::array<RbrForm, 4> kAllRbrForms{
    RbrForm::kComposition, RbrForm::kViaPerturbedResolvents, RbrForm::kViaBaseResolvents,
    RbrForm::kFromDrs};

std::string_view to_string(Order order);
std::string_view to_string(DrsForm form);
std::string_view to_string(TForm form);
std::string_view to_string(RbrForm form);

// R_{A_g} T - T' R_{A_g} evaluated three ways: directly, through the
// perturbed resolvent J_{A_g}, and through the base resolvent J_A.
struct CommutatorTriple {
  Point direct;
  Point via_perturbed;
  Point via_base;
};

// The resolvents J_A, J_B, their reflections, and the perturbed versions for
// one SplitPair, built once and shared by all evaluation paths.
class Splitting {
 public:
  explicit Splitting(SplitPair pair, const LinearTolerances& tol = {});

  const SplitPair& pair() const { return pair_; }
  Index dim() const { return pair_.a.dim(); }
  double gamma() const { return pair_.p.gamma(); }
  double lambda() const { return pair_.lam.lambda(); }

  struct Side {
    Operator j;   // J_X
    Operator r;   // R_X
    Operator jg;  // J_{X_g}
    Operator rg;  // R_{X_g}
  };
  const Side& side_a() const { return a_; }
  const Side& side_b() const { return b_; }

  Point drs(Order order, DrsForm form, const Point& x) const;
  // T_{B,A} = Id + J_A R_B - J_B
  Point drs_swapped(const Point& x) const;

  Point aac(Order order, TForm form, const Point& x) const;
  Point rbr(Order order, RbrForm form, const Point& x) const;

  // T^n x by repeated application of the defining form; n = 0 returns x.
  Point power(Order order, int n, const Point& x) const;

  // |R_{A_g}(T^n x) - T'^n(R_{A_g} x)|, where T' is the swapped operator.
  // Requires A to be an affine variant (NotAffine otherwise) and n >= 1.
  double conjugation_residual(int n, const Point& x) const;

  // Requires A to be an affine variant.
  CommutatorTriple commutator(const Point& x) const;

  // (l^-2 (T T' - T' T) x, (R_{B_g} R_{A_g}^2 R_{B_g} - R_{A_g} R_{B_g}^2 R_{A_g}) x).
  // Requires both A and B to be affine variants.
  std::pair<Point, Point> dr_commutator(const Point& x) const;

 private:
  const Side& first(Order order) const { return order == Order::kAB ? a_ : b_; }
  const Side& second(Order order) const { return order == Order::kAB ? b_ : a_; }

  SplitPair pair_;
  Side a_;
  Side b_;
};

// Stand-alone Douglas-Rachford evaluation for an unperturbed pair.
Point drs(const Operator& a, const Operator& b, DrsForm form, const Point& x);
Point drs_swapped(const Operator& a, const Operator& b, const Point& x);

}  // namespace opsplit
