#include "opsplit/closed_forms.hpp"

#include <memory>

#include <fmt/format.h>

namespace opsplit {

std::string_view to_string(ASign sign) { return sign == ASign::kMinusV ? "minus_v" : "plus_v"; }

ASign a_sign_from_string(std::string_view s) {
  if (s == "minus_v") return ASign::kMinusV;
  if (s == "plus_v") return ASign::kPlusV;
  throw ConfigError(fmt::format("a_sign must be \"minus_v\" or \"plus_v\", got \"{}\"", s));
}

ModelInstance worked_instance() {
  Matrix q(2, 1);
  q << 1.0, 0.0;
  ModelInstance inst{SubspaceBasis::from_orthonormal(q), Point(2), Point(2), Point(2)};
  inst.a << 0.0, 2.0;
  inst.v << 0.0, 1.0;
  inst.w << 1.0, 1.0;
  inst.gamma = 0.5;
  inst.lambda = 0.5;
  inst.a_sign = ASign::kMinusV;
  return inst;
}

void validate(const ModelInstance& inst) {
  const Index n = inst.dim();
  if (inst.a.size() != n || inst.v.size() != n || inst.w.size() != n)
    throw InvalidParameter(fmt::format("model instance: a, v, w must have dimension {}", n));
  if (!inst.a.allFinite() || !inst.v.allFinite() || !inst.w.allFinite())
    throw InvalidParameter("model instance: a, v, w must be finite");
  if (!(inst.gamma > 0.0 && inst.gamma < 1.0))
    throw InvalidParameter(fmt::format("model instance: gamma must lie in (0, 1), got {}", inst.gamma));
  if (!(inst.lambda > 0.0 && inst.lambda <= 1.0))
    throw InvalidParameter(
        fmt::format("model instance: lambda must lie in (0, 1], got {}", inst.lambda));
  const double leak = inst.u.project(inst.v).norm();
  if (!(leak <= 1e-10 * inst.v.norm()))
    throw InvalidParameter(fmt::format("model instance: v is not in U^perp (|P_U v| = {:.3e})", leak));
}

void validate_for_commutation_examples(const ModelInstance& inst) {
  validate(inst);
  const double leak = inst.u.project(inst.a).norm();
  if (!(leak <= 1e-10 * inst.a.norm()))
    throw InvalidParameter(fmt::format("model instance: a is not in U^perp (|P_U a| = {:.3e})", leak));
  if (!((inst.a - inst.v).norm() > 1e-8))
    throw InvalidParameter("model instance: a and v must differ");
}

SplitPair model_pair(const ModelInstance& inst) {
  validate(inst);
  const Index n = inst.dim();
  const Point shift = inst.a_sign == ASign::kMinusV ? Point(-inst.v) : inst.v;
  return SplitPair{Operator::affine(Matrix::Identity(n, n), shift),
                   Operator::project_affine(inst.a, inst.u), PerturbationParams(inst.gamma, inst.w),
                   AacParams(inst.lambda)};
}

ClosedFormConstants constants(const ModelInstance& inst) {
  validate(inst);
  const double g = inst.gamma;
  const double l = inst.lambda;
  const double lg = l * g;
  const Point& v = inst.v;
  const Point& w = inst.w;
  const Point pw = inst.u.project(w);
  const Point pa = inst.u.project_complement(inst.a);

  ClosedFormConstants c;
  c.k = lg * ((2 * g - 1) * v + 4 * (1 - g) * w - 2 * (1 - g) * pw - 2 * pa);
  c.l = lg * (2 * (1 - g) * pa + v + 2 * (1 - g) * w);
  c.h = g * (lg * (2 * g - 3) + 1 + l) * v +
        2 * (1 - g) * ((1 - 2 * lg * (1 - g)) * w + lg * (1 - g) * pw) + 2 * lg * (1 - g) * pa;
  c.m = (1 - 2 * g) * lg * ((1 - 2 * g) * v + 2 * (1 - g) * pw - 4 * (1 - g) * w) +
        2 * ((1 - g) * w + g * (l - 1 - 2 * lg) * pa);
  c.s = lg * v + 2 * (l * g * g - (2 * l + 1) * g + 1) * w - 2 * g * (l * (3 * g + 4) + 1) * pa +
        2 * lg * (1 - g) * (1 - g) * pw;
  c.b = -2 * g * (lg * (2 * g - 3) + l + 1) * pa - 2 * (g * (lg * (2 * g - 3) + 1) - 1) * w +
        lg * (2 * g - 1) * v - 2 * l * g * g * (1 - g) * pw;
  c.c = -2 * g * (lg * (2 * g - 3) + l + 1) * pa - 2 * (g * (lg * (2 * g - 3) + l + 1) - 1) * w +
        lg * (2 * g - 1) * v - 2 * l * g * g * (1 - g) * pw;
  return c;
}

namespace {

constexpr std::array<std::pair<ClosedFormId, std::string_view>, 21> kNames{{
    {ClosedFormId::kJA, "JA"},
    {ClosedFormId::kRA, "RA"},
    {ClosedFormId::kJAg, "JAg"},
    {ClosedFormId::kRAg, "RAg"},
    {ClosedFormId::kJB, "JB"},
    {ClosedFormId::kRB, "RB"},
    {ClosedFormId::kJBg, "JBg"},
    {ClosedFormId::kRBg, "RBg"},
    {ClosedFormId::kTAB, "TAB"},
    {ClosedFormId::kTBA, "TBA"},
    {ClosedFormId::kJB_RA, "JB_RA"},
    {ClosedFormId::kJA_RB, "JA_RB"},
    {ClosedFormId::kJB_RAg, "JB_RAg"},
    {ClosedFormId::kJA_RBg, "JA_RBg"},
    {ClosedFormId::kT_AgBg, "T_AgBg"},
    {ClosedFormId::kT_BgAg, "T_BgAg"},
    {ClosedFormId::kRAg_T, "RAg_T"},
    {ClosedFormId::kRBg_T_AgBg, "RBg_T_AgBg"},
    {ClosedFormId::kT_BgAg_RBg, "T_BgAg_RBg"},
    {ClosedFormId::kRBg_T_BgAg, "RBg_T_BgAg"},
    {ClosedFormId::kT_AgBg_RBg, "T_AgBg_RBg"},
}};

}  // namespace

std::string_view to_string(ClosedFormId id) {
  for (const auto& [key, name] : kNames)
    if (key == id) return name;
  throw UnknownForm("unenumerated closed form id");
}

ClosedFormId closed_form_from_string(std::string_view tag) {
  for (const auto& [key, name] : kNames)
    if (name == tag) return key;
  throw UnknownForm(fmt::format("unknown closed form \"{}\"", tag));
}

Point closed_form_eval(const ModelInstance& inst, ClosedFormId id, const Point& x) {
  require_dim(x, inst.dim(), "closed_form_eval");
  const ClosedFormConstants k = constants(inst);
  const double g = inst.gamma;
  const double l = inst.lambda;
  const double lg = l * g;
  const Point& v = inst.v;
  const Point& w = inst.w;
  const Point px = inst.u.project(x);
  const Point pw = inst.u.project(w);
  const Point pa = inst.u.project_complement(inst.a);
  // Shared coefficient of x in both AAC operators.
  const double tx = 1 - lg * (3 - 2 * g);

  switch (id) {
    case ClosedFormId::kJA: return 0.5 * (x + v);
    case ClosedFormId::kRA: return v;
    case ClosedFormId::kJAg: return g * 0.5 * (x + v) + (1 - g) * w;
    case ClosedFormId::kRAg: return g * v - (1 - g) * x + 2 * (1 - g) * w;
    case ClosedFormId::kJB: return x - 0.5 * px - pa;
    case ClosedFormId::kRB: return x - px - 2 * pa;
    case ClosedFormId::kJBg: return g * (x - 0.5 * px - pa) + (1 - g) * w;
    case ClosedFormId::kRBg: return (2 * g - 1) * x - g * px - 2 * g * pa + 2 * (1 - g) * w;
    case ClosedFormId::kTAB: return 0.5 * (x + v) - pa;
    case ClosedFormId::kTBA: return 0.5 * (x + v);
    case ClosedFormId::kJB_RA: return v - pa;
    case ClosedFormId::kJA_RB: return 0.5 * (x + v) - 0.5 * px - pa;
    case ClosedFormId::kJB_RAg:
      return g * v + (1 - g) * ((0.5 * px - x) - (pw - 2 * w)) - pa;
    case ClosedFormId::kJA_RBg:
      return 0.5 * ((2 * g - 1) * x - g * px - 2 * g * pa + 2 * (1 - g) * w + v);
    case ClosedFormId::kT_AgBg: return tx * x + lg * (1 - g) * px + k.k;
    case ClosedFormId::kT_BgAg: return tx * x + lg * (1 - g) * px + k.l;
    case ClosedFormId::kRAg_T:
      return (1 - g) * ((lg * (3 - 2 * g) - 1) * x - lg * (1 - g) * px) + k.h;
    case ClosedFormId::kRBg_T_AgBg:
      return (1 - 2 * g) * ((lg * (3 - 2 * g) - 1) * x - lg * (1 - g) * px) + k.m;
    case ClosedFormId::kT_BgAg_RBg:
      // The printed x-coefficient has an unbalanced parenthesis; it is read as
      // (1-2g)(lg(3-2g)-1) x - g(1+l-lg(5-3g)) P_U x, the only closing that
      // yields an expression of the form alpha x + beta P_U x + s.
      return (1 - 2 * g) * (lg * (3 - 2 * g) - 1) * x - g * (1 + l - lg * (5 - 3 * g)) * px + k.s;
    case ClosedFormId::kRBg_T_BgAg:
      return (2 * g - 1) * tx * x + g * (lg * (5 - 3 * g) - l - 1) * px + k.b;
    case ClosedFormId::kT_AgBg_RBg:
      return (2 * g - 1) * tx * x + g * (lg * (5 - 3 * g) - l - 1) * px + k.c;
  }
  throw UnknownForm("closed_form_eval: unenumerated closed form id");
}

Point compositional_eval(const Splitting& split, ClosedFormId id, const Point& x) {
  const auto& a = split.side_a();
  const auto& b = split.side_b();
  const auto t = [&](const Point& y) { return split.aac(Order::kAB, TForm::kDefinition, y); };
  const auto ts = [&](const Point& y) { return split.aac(Order::kBA, TForm::kDefinition, y); };
  switch (id) {
    case ClosedFormId::kJA: return a.j(x);
    case ClosedFormId::kRA: return a.r(x);
    case ClosedFormId::kJAg: return a.jg(x);
    case ClosedFormId::kRAg: return a.rg(x);
    case ClosedFormId::kJB: return b.j(x);
    case ClosedFormId::kRB: return b.r(x);
    case ClosedFormId::kJBg: return b.jg(x);
    case ClosedFormId::kRBg: return b.rg(x);
    case ClosedFormId::kTAB: return split.drs(Order::kAB, DrsForm::kAveraged, x);
    case ClosedFormId::kTBA: return split.drs(Order::kBA, DrsForm::kAveraged, x);
    case ClosedFormId::kJB_RA: return b.j(a.r(x));
    case ClosedFormId::kJA_RB: return a.j(b.r(x));
    case ClosedFormId::kJB_RAg: return b.j(a.rg(x));
    case ClosedFormId::kJA_RBg: return a.j(b.rg(x));
    case ClosedFormId::kT_AgBg: return t(x);
    case ClosedFormId::kT_BgAg: return ts(x);
    case ClosedFormId::kRAg_T: return a.rg(t(x));
    case ClosedFormId::kRBg_T_AgBg: return b.rg(t(x));
    case ClosedFormId::kT_BgAg_RBg: return ts(b.rg(x));
    case ClosedFormId::kRBg_T_BgAg: return b.rg(ts(x));
    case ClosedFormId::kT_AgBg_RBg: return t(b.rg(x));
  }
  throw UnknownForm("compositional_eval: unenumerated closed form id");
}

Point compositional_eval(const ModelInstance& inst, ClosedFormId id, const Point& x) {
  return compositional_eval(Splitting(model_pair(inst)), id, x);
}

std::string_view to_string(NonCommutation which) {
  return which == NonCommutation::kRBgT ? "RBg_T_vs_Ts_RBg" : "RBg_Ts_vs_T_RBg";
}

std::pair<PointMap, PointMap> noncommutation_sides(const Splitting& split, NonCommutation which) {
  // Callers may outlive `split`, so the maps keep their own copy.
  auto s = std::make_shared<const Splitting>(split);
  const Order inner = which == NonCommutation::kRBgT ? Order::kAB : Order::kBA;
  const Order outer = which == NonCommutation::kRBgT ? Order::kBA : Order::kAB;
  PointMap lhs = [s, inner](const Point& x) {
    return s->side_b().rg(s->aac(inner, TForm::kDefinition, x));
  };
  PointMap rhs = [s, outer](const Point& x) {
    return s->aac(outer, TForm::kDefinition, s->side_b().rg(x));
  };
  return {std::move(lhs), std::move(rhs)};
}

double noncommutation_gap(const ModelInstance& inst, NonCommutation which, const Point& x) {
  const auto [lhs, rhs] = noncommutation_sides(Splitting(model_pair(inst)), which);
  return (lhs(x) - rhs(x)).norm();
}

}  // namespace opsplit
