#include "opsplit/splitting.hpp"

#include <fmt/format.h>

namespace opsplit {

std::string_view to_string(Order order) { return order == Order::kAB ? "AB" : "BA"; }

std::string_view to_string(DrsForm form) {
  return form == DrsForm::kAveraged ? "averaged" : "resolvent";
}

std::string_view to_string(TForm form) {
  switch (form) {
    case TForm::kDefinition: return "definition";
    case TForm::kViaPerturbedResolvents: return "via_perturbed_resolvents";
    case TForm::kViaBaseResolvents: return "via_base_resolvents";
    case TForm::kFactored: return "factored";
    case TForm::kFromDrs: return "from_drs";
    case TForm::kFromSwappedDrs: return "from_swapped_drs";
  }
  return "?";
}

std::string_view to_string(RbrForm form) {
  switch (form) {
    case RbrForm::kComposition: return "composition";
    case RbrForm::kViaPerturbedResolvents: return "via_perturbed_resolvents";
    case RbrForm::kViaBaseResolvents: return "via_base_resolvents";
    case RbrForm::kFromDrs: return "from_drs";
  }
  return "?";
}

namespace {

Splitting::Side make_side(const Operator& op, const PerturbationParams& p,
                          const LinearTolerances& tol) {
  return {resolvent(op, tol), reflected(op, tol), perturbed_resolvent(op, p, tol),
          perturbed_reflected(op, p, tol)};
}

// Douglas-Rachford operator T_{F,S} for the ordered pair (first, second).
Point drs_eval(const Splitting::Side& f, const Splitting::Side& s, DrsForm form, const Point& x) {
  if (form == DrsForm::kAveraged) return 0.5 * (x + s.r(f.r(x)));
  return x - f.j(x) + s.j(f.r(x));
}

}  // namespace

Splitting::Splitting(SplitPair pair, const LinearTolerances& tol)
    : pair_(std::move(pair)),
      a_(make_side(pair_.a, pair_.p, tol)),
      b_(make_side(pair_.b, pair_.p, tol)) {
  if (pair_.a.dim() != pair_.b.dim())
    throw DimensionMismatch(
        fmt::format("split pair: A has dimension {}, B has {}", pair_.a.dim(), pair_.b.dim()));
  if (pair_.p.w().size() != pair_.a.dim())
    throw DimensionMismatch("split pair: w has the wrong dimension");
}

Point Splitting::drs(Order order, DrsForm form, const Point& x) const {
  return drs_eval(first(order), second(order), form, x);
}

Point Splitting::drs_swapped(const Point& x) const { return x + a_.j(b_.r(x)) - b_.j(x); }

Point Splitting::aac(Order order, TForm form, const Point& x) const {
  const Side& f = first(order);
  const Side& s = second(order);
  const double l = lambda();
  const double lg = l * gamma();
  switch (form) {
    case TForm::kDefinition:
      return (1.0 - l) * x + l * s.rg(f.rg(x));
    case TForm::kViaPerturbedResolvents:
      return x + 2.0 * l * s.jg(f.rg(x)) - 2.0 * l * f.jg(x);
    case TForm::kViaBaseResolvents:
      return x + 2.0 * lg * s.j(f.rg(x)) - 2.0 * lg * f.j(x);
    case TForm::kFactored:
      return x + 2.0 * lg * (s.j(f.rg(x)) - f.j(x));
    case TForm::kFromDrs:
      return drs_eval(f, s, DrsForm::kAveraged, x) + (1.0 - 2.0 * lg) * f.j(x) - s.j(f.r(x)) +
             2.0 * lg * s.j(f.rg(x));
    case TForm::kFromSwappedDrs:
      return drs_eval(s, f, DrsForm::kAveraged, x) + s.j(x) - f.j(s.r(x)) +
             2.0 * lg * s.j(f.rg(x)) - 2.0 * lg * f.j(x);
  }
  throw UnknownForm("aac: unknown evaluation form");
}

Point Splitting::rbr(Order order, RbrForm form, const Point& x) const {
  const Side& f = first(order);
  const Side& s = second(order);
  const double g = gamma();
  switch (form) {
    case RbrForm::kComposition:
      return s.rg(f.rg(x));
    case RbrForm::kViaPerturbedResolvents:
      return x + 2.0 * s.jg(f.rg(x)) - 2.0 * f.jg(x);
    case RbrForm::kViaBaseResolvents:
      return x + 2.0 * g * s.j(f.rg(x)) - 2.0 * g * f.j(x);
    case RbrForm::kFromDrs:
      return drs_eval(f, s, DrsForm::kAveraged, x) + (1.0 - 2.0 * g) * f.j(x) - s.j(f.r(x)) +
             2.0 * g * s.j(f.rg(x));
  }
  throw UnknownForm("rbr: unknown evaluation form");
}

Point Splitting::power(Order order, int n, const Point& x) const {
  if (n < 0) throw InvalidParameter("power: n must be non-negative");
  require_dim(x, dim(), "power");
  Point y = x;
  for (int k = 0; k < n; ++k) y = aac(order, TForm::kDefinition, y);
  return y;
}

double Splitting::conjugation_residual(int n, const Point& x) const {
  if (!is_affine_variant(pair_.a)) throw NotAffine("conjugation residual needs an affine A");
  if (n < 1) throw InvalidParameter("conjugation residual: n must be at least 1");
  const Point lhs = a_.rg(power(Order::kAB, n, x));
  const Point rhs = power(Order::kBA, n, a_.rg(x));
  return (lhs - rhs).norm();
}

CommutatorTriple Splitting::commutator(const Point& x) const {
  if (!is_affine_variant(pair_.a)) throw NotAffine("commutator identity needs an affine A");
  const double l = lambda();
  const Point tx = aac(Order::kAB, TForm::kDefinition, x);
  const Point rr = b_.rg(a_.rg(x));
  CommutatorTriple out;
  out.direct = a_.rg(tx) - aac(Order::kBA, TForm::kDefinition, a_.rg(x));
  out.via_perturbed = 2.0 * (a_.jg(tx) - (1.0 - l) * a_.jg(x) - l * a_.jg(rr));
  out.via_base = 2.0 * gamma() * (a_.j(tx) - (1.0 - l) * a_.j(x) - l * a_.j(rr));
  return out;
}

std::pair<Point, Point> Splitting::dr_commutator(const Point& x) const {
  if (!is_affine_variant(pair_.a) || !is_affine_variant(pair_.b))
    throw NotAffine("commutator of T and T' needs affine A and B");
  const double l = lambda();
  const Point tts = aac(Order::kAB, TForm::kDefinition, aac(Order::kBA, TForm::kDefinition, x));
  const Point tst = aac(Order::kBA, TForm::kDefinition, aac(Order::kAB, TForm::kDefinition, x));
  Point left = (tts - tst) / (l * l);
  Point right = b_.rg(a_.rg(a_.rg(b_.rg(x)))) - a_.rg(b_.rg(b_.rg(a_.rg(x))));
  return {std::move(left), std::move(right)};
}

Point drs(const Operator& a, const Operator& b, DrsForm form, const Point& x) {
  if (form == DrsForm::kAveraged) {
    const Operator ra = reflected(a);
    const Operator rb = reflected(b);
    return 0.5 * (x + rb(ra(x)));
  }
  const Operator ja = resolvent(a);
  const Operator jb = resolvent(b);
  const Operator ra = reflected(a);
  return x - ja(x) + jb(ra(x));
}

Point drs_swapped(const Operator& a, const Operator& b, const Point& x) {
  const Operator ja = resolvent(a);
  const Operator jb = resolvent(b);
  const Operator rb = reflected(b);
  return x + ja(rb(x)) - jb(x);
}

}  // namespace opsplit
