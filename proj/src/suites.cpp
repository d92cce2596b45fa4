#include "opsplit/suites.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <utility>

#include <fmt/format.h>

#include "opsplit/errors.hpp"

namespace opsplit {

namespace {

struct SuiteEntry {
  SuiteId id;
  std::string_view tag;
};

constexpr std::array<SuiteEntry, 14> kTags{{
    {SuiteId::kDrsForms, "EQ9_DRS_FORMS"},
    {SuiteId::kDrsSwap, "EQ10_SWAP"},
    {SuiteId::kResolventAverage, "EQ6_RESOLVENT_AVG"},
    {SuiteId::kReflectedAverage, "EQ7_REFLECTED_AVG"},
    {SuiteId::kAacForms, "LEM22_T_FORMS"},
    {SuiteId::kReflectionProductForms, "LEM22_RBR_FORMS"},
    {SuiteId::kAffineResolvent, "PROP21_AFFINE"},
    {SuiteId::kModelClosedForms, "EX23_ORACLES"},
    {SuiteId::kResolventReflectionCommute, "LEM24_JR_COMMUTE"},
    {SuiteId::kCommutator, "LEM25_COMMUTATOR"},
    {SuiteId::kConjugation, "THM26_CONJUGATION"},
    {SuiteId::kAffinePairIdentities, "LEM27_RR1_RR4"},
    {SuiteId::kCommutationEqualities, "PROP28_EQUALITIES"},
    {SuiteId::kCommutationNonEqualities, "PROP28_NONEQUALITIES"},
}};

constexpr std::array<OperatorKind, 3> kAnyKind{
    OperatorKind::kAffineRandom, OperatorKind::kTranslatedIdentity, OperatorKind::kProjector};
constexpr std::array<OperatorKind, 2> kLinearKind{OperatorKind::kAffineRandom,
                                                  OperatorKind::kTranslatedIdentity};

// Collects per-instance reports under stable member names, in first-seen order.
class Collector {
 public:
  explicit Collector(SuiteId id) { report_.id = id; }

  void add(const std::string& member, const EqualityReport& part, std::uint64_t instance) {
    auto [it, fresh] = index_.try_emplace(member, report_.members.size());
    if (fresh) {
      EqualityReport total;
      total.suite = std::string(to_string(report_.id));
      total.member = member;
      report_.members.push_back(std::move(total));
    }
    merge_into(report_.members[it->second], part, instance);
  }

  void note(std::string text) { report_.notes.push_back(std::move(text)); }

  SuiteReport finish() && {
    report_.verdict = std::all_of(report_.members.begin(), report_.members.end(),
                                  [](const EqualityReport& m) { return m.verdict == Verdict::kPass; })
                          ? Verdict::kPass
                          : Verdict::kFail;
    return std::move(report_);
  }

 private:
  SuiteReport report_;
  std::map<std::string, std::size_t> index_;
};

// Per-instance draws shared by every suite built on random pairs.
struct Draw {
  Rng rng;
  Index dim;
  double gamma;
  double lambda;
};

Draw draw(SuiteId id, const SuiteConfig& config, int instance) {
  Rng rng = make_stream(config.seed, to_string(id), static_cast<std::uint64_t>(instance));
  const Index dim = random_index(rng, config.min_dim, config.max_dim);
  const double gamma = config.gamma ? *config.gamma : random_uniform(rng, 0.05, 0.95);
  const double lambda = config.lambda ? *config.lambda : random_uniform(rng, 0.05, 1.0);
  return Draw{std::move(rng), dim, gamma, lambda};
}

template <std::size_t NA, std::size_t NB>
SplitPair random_pair(Draw& d, const std::array<OperatorKind, NA>& kinds_a,
                      const std::array<OperatorKind, NB>& kinds_b) {
  InstanceSpec spec;
  spec.dim = d.dim;
  spec.seed = d.rng();
  spec.kind_a = kinds_a[static_cast<std::size_t>(random_index(d.rng, 0, NA - 1))];
  spec.kind_b = kinds_b[static_cast<std::size_t>(random_index(d.rng, 0, NB - 1))];
  spec.gamma = d.gamma;
  spec.lambda = d.lambda;
  return gen_instance(spec);
}

SplitPair random_pair(Draw& d) { return random_pair(d, kAnyKind, kAnyKind); }

EqualityReport equal(const PointMap& f, const PointMap& g, Index dim, Draw& d,
                     const SuiteConfig& config, double tol) {
  return operators_equal(f, g, dim, config.samples, d.rng(), tol);
}

// Affinity checked on pairs (x, y) packed into one sample of size 2n, so a
// failing witness reproduces both points.
EqualityReport affine_check(const PointMap& f, Index dim, Draw& d, const SuiteConfig& config) {
  return sampled_check(
      [&](const Point& z) { return affinity_defect(f, z.head(dim), z.tail(dim)); }, 2 * dim,
      config.samples, d.rng(), config.tol.multi);
}

std::string side_name(char which, const char* what) { return fmt::format(fmt::runtime(what), which); }

SuiteReport drs_forms(const SuiteConfig& config) {
  Collector out(SuiteId::kDrsForms);
  for (int i = 0; i < config.instances; ++i) {
    Draw d = draw(SuiteId::kDrsForms, config, i);
    const Splitting s(random_pair(d));
    for (const Order order : {Order::kAB, Order::kBA}) {
      out.add(fmt::format("T_{} averaged vs resolvent form", to_string(order)),
              equal([&](const Point& x) { return s.drs(order, DrsForm::kAveraged, x); },
                    [&](const Point& x) { return s.drs(order, DrsForm::kResolvent, x); }, s.dim(),
                    d, config, config.tol.single),
              static_cast<std::uint64_t>(i));
    }
  }
  return std::move(out).finish();
}

SuiteReport drs_swap(const SuiteConfig& config) {
  Collector out(SuiteId::kDrsSwap);
  for (int i = 0; i < config.instances; ++i) {
    Draw d = draw(SuiteId::kDrsSwap, config, i);
    const Splitting s(random_pair(d));
    const auto swapped = [&](const Point& x) { return s.drs_swapped(x); };
    for (const DrsForm form : {DrsForm::kAveraged, DrsForm::kResolvent}) {
      out.add(fmt::format("Id + J_A R_B - J_B vs T_BA {}", to_string(form)),
              equal(swapped, [&](const Point& x) { return s.drs(Order::kBA, form, x); }, s.dim(), d,
                    config, config.tol.single),
              static_cast<std::uint64_t>(i));
    }
  }
  return std::move(out).finish();
}

SuiteReport resolvent_average(const SuiteConfig& config) {
  Collector out(SuiteId::kResolventAverage);
  for (int i = 0; i < config.instances; ++i) {
    Draw d = draw(SuiteId::kResolventAverage, config, i);
    const SplitPair pair = random_pair(d);
    const Splitting s(pair);
    const double g = pair.p.gamma();
    const Point& w = pair.p.w();
    const auto inst = static_cast<std::uint64_t>(i);
    for (const char which : {'A', 'B'}) {
      const Splitting::Side& side = which == 'A' ? s.side_a() : s.side_b();
      const Operator pert = Operator::perturbed(which == 'A' ? pair.a : pair.b, pair.p);
      out.add(side_name(which, "J_{{{0}_g}} x + {0}_g(J_{{{0}_g}} x) = x"),
              equal(
                  [&](const Point& x) {
                    const Point y = side.jg(x);
                    return Point(y + pert(y));
                  },
                  [](const Point& x) { return x; }, s.dim(), d, config, config.tol.multi),
              inst);
      out.add(side_name(which, "J_{{{0}_g}} vs g J_{0} + (1-g) w"),
              equal([&](const Point& x) { return side.jg(x); },
                    [&](const Point& x) { return Point(g * side.j(x) + (1.0 - g) * w); }, s.dim(),
                    d, config, config.tol.single),
              inst);
    }
  }
  return std::move(out).finish();
}

SuiteReport reflected_average(const SuiteConfig& config) {
  Collector out(SuiteId::kReflectedAverage);
  for (int i = 0; i < config.instances; ++i) {
    Draw d = draw(SuiteId::kReflectedAverage, config, i);
    const SplitPair pair = random_pair(d);
    const Splitting s(pair);
    const double g = pair.p.gamma();
    const Point& w = pair.p.w();
    const auto inst = static_cast<std::uint64_t>(i);
    for (const char which : {'A', 'B'}) {
      const Splitting::Side& side = which == 'A' ? s.side_a() : s.side_b();
      out.add(side_name(which, "R_{{{0}_g}} vs 2g J_{0} + 2(1-g) w - Id"),
              equal([&](const Point& x) { return side.rg(x); },
                    [&](const Point& x) {
                      return Point(2.0 * g * side.j(x) + 2.0 * (1.0 - g) * w - x);
                    },
                    s.dim(), d, config, config.tol.single),
              inst);
      out.add(side_name(which, "R_{{{0}_g}} vs 2 J_{{{0}_g}} - Id"),
              equal([&](const Point& x) { return side.rg(x); },
                    [&](const Point& x) { return Point(2.0 * side.jg(x) - x); }, s.dim(), d,
                    config, config.tol.single),
              inst);
    }
  }
  return std::move(out).finish();
}

SuiteReport aac_forms(const SuiteConfig& config) {
  Collector out(SuiteId::kAacForms);
  for (int i = 0; i < config.instances; ++i) {
    Draw d = draw(SuiteId::kAacForms, config, i);
    const Splitting s(random_pair(d));
    for (const Order order : {Order::kAB, Order::kBA}) {
      const auto def = [&](const Point& x) { return s.aac(order, TForm::kDefinition, x); };
      for (const TForm form : kAllTForms) {
        if (form == TForm::kDefinition) continue;
        out.add(fmt::format("T_{} {} vs definition", to_string(order), to_string(form)),
                equal([&](const Point& x) { return s.aac(order, form, x); }, def, s.dim(), d,
                      config, config.tol.multi),
                static_cast<std::uint64_t>(i));
      }
    }
  }
  return std::move(out).finish();
}

SuiteReport rbr_forms(const SuiteConfig& config) {
  Collector out(SuiteId::kReflectionProductForms);
  for (int i = 0; i < config.instances; ++i) {
    Draw d = draw(SuiteId::kReflectionProductForms, config, i);
    const Splitting s(random_pair(d));
    for (const Order order : {Order::kAB, Order::kBA}) {
      const auto comp = [&](const Point& x) { return s.rbr(order, RbrForm::kComposition, x); };
      for (const RbrForm form : kAllRbrForms) {
        if (form == RbrForm::kComposition) continue;
        out.add(fmt::format("RR_{} {} vs composition", to_string(order), to_string(form)),
                equal([&](const Point& x) { return s.rbr(order, form, x); }, comp, s.dim(), d,
                      config, config.tol.multi),
                static_cast<std::uint64_t>(i));
      }
    }
  }
  return std::move(out).finish();
}

SuiteReport affine_resolvent(const SuiteConfig& config) {
  Collector out(SuiteId::kAffineResolvent);
  for (int i = 0; i < config.instances; ++i) {
    Draw d = draw(SuiteId::kAffineResolvent, config, i);
    const SplitPair pair = random_pair(d);
    const Splitting s(pair);
    const auto inst = static_cast<std::uint64_t>(i);
    for (const char which : {'A', 'B'}) {
      const Splitting::Side& side = which == 'A' ? s.side_a() : s.side_b();
      const Operator pert = Operator::perturbed(which == 'A' ? pair.a : pair.b, pair.p);
      out.add(side_name(which, "{0}_g affine"), affine_check(pert, s.dim(), d, config), inst);
      out.add(side_name(which, "J_{0} affine"), affine_check(side.j, s.dim(), d, config), inst);
      out.add(side_name(which, "J_{{{0}_g}} affine"), affine_check(side.jg, s.dim(), d, config),
              inst);
      out.add(side_name(which, "R_{{{0}_g}} affine"), affine_check(side.rg, s.dim(), d, config),
              inst);
    }
  }
  return std::move(out).finish();
}

ModelInstance model_draw(Draw& d, const SuiteConfig& config, bool anchor_in_complement,
                         ASign sign) {
  SuiteConfig local = config;
  local.min_dim = local.max_dim = d.dim;
  local.gamma = d.gamma;
  local.lambda = d.lambda;
  return random_model(d.rng, local, anchor_in_complement, sign);
}

SuiteReport model_closed_forms(const SuiteConfig& config) {
  Collector out(SuiteId::kModelClosedForms);
  out.note("closed forms are written for A = Id - v; instances use minus_v");
  out.note("the anchor a enters the closed forms through P_{U^perp} a");
  for (int i = 0; i < config.instances; ++i) {
    Draw d = draw(SuiteId::kModelClosedForms, config, i);
    const ModelInstance inst = model_draw(d, config, false, ASign::kMinusV);
    const Splitting s(model_pair(inst));
    for (const ClosedFormId id : kBuildingBlockForms) {
      out.add(std::string(to_string(id)),
              equal([&](const Point& x) { return closed_form_eval(inst, id, x); },
                    [&](const Point& x) { return compositional_eval(s, id, x); }, s.dim(), d,
                    config, config.tol.multi),
              static_cast<std::uint64_t>(i));
    }
  }
  return std::move(out).finish();
}

SuiteReport jr_commute(const SuiteConfig& config) {
  Collector out(SuiteId::kResolventReflectionCommute);
  for (int i = 0; i < config.instances; ++i) {
    Draw d = draw(SuiteId::kResolventReflectionCommute, config, i);
    const Splitting s(random_pair(d));
    for (const char which : {'A', 'B'}) {
      const Splitting::Side& side = which == 'A' ? s.side_a() : s.side_b();
      out.add(side_name(which, "J_{{{0}_g}} R_{{{0}_g}} vs R_{{{0}_g}} J_{{{0}_g}}"),
              equal([&](const Point& x) { return side.jg(side.rg(x)); },
                    [&](const Point& x) { return side.rg(side.jg(x)); }, s.dim(), d, config,
                    config.tol.single),
              static_cast<std::uint64_t>(i));
    }
  }
  return std::move(out).finish();
}

SuiteReport commutator(const SuiteConfig& config) {
  Collector out(SuiteId::kCommutator);
  out.note("the J_A form is evaluated with T_{A_g,B_g} inside J_A");
  for (int i = 0; i < config.instances; ++i) {
    Draw d = draw(SuiteId::kCommutator, config, i);
    const Splitting s(random_pair(d));
    const auto inst = static_cast<std::uint64_t>(i);
    const Operator& rg = s.side_a().rg;
    out.add("direct vs via J_{A_g}",
            equal([&](const Point& x) { return s.commutator(x).direct; },
                  [&](const Point& x) { return s.commutator(x).via_perturbed; }, s.dim(), d,
                  config, config.tol.multi),
            inst);
    out.add("direct vs via J_A",
            equal([&](const Point& x) { return s.commutator(x).direct; },
                  [&](const Point& x) { return s.commutator(x).via_base; }, s.dim(), d, config,
                  config.tol.multi),
            inst);
    out.add("R_{A_g} T vs T' R_{A_g}",
            equal([&](const Point& x) { return rg(s.aac(Order::kAB, TForm::kDefinition, x)); },
                  [&](const Point& x) { return s.aac(Order::kBA, TForm::kDefinition, rg(x)); },
                  s.dim(), d, config, config.tol.multi),
            inst);
  }
  return std::move(out).finish();
}

SuiteReport conjugation(const SuiteConfig& config) {
  Collector out(SuiteId::kConjugation);
  out.note("gap is |R_{A_g} T^n x - T'^n R_{A_g} x| / (1 + |x|)");
  for (int i = 0; i < config.instances; ++i) {
    Draw d = draw(SuiteId::kConjugation, config, i);
    const Splitting s(random_pair(d, kLinearKind, kAnyKind));
    for (const int n : {1, 2, 4, 8, 16, 32}) {
      out.add(fmt::format("n = {}", n),
              sampled_check(
                  [&](const Point& x) { return s.conjugation_residual(n, x) / (1.0 + x.norm()); },
                  s.dim(), config.samples, d.rng(), config.tol.power),
              static_cast<std::uint64_t>(i));
    }
  }
  return std::move(out).finish();
}

SuiteReport affine_pair(const SuiteConfig& config) {
  Collector out(SuiteId::kAffinePairIdentities);
  for (int i = 0; i < config.instances; ++i) {
    Draw d = draw(SuiteId::kAffinePairIdentities, config, i);
    const SplitPair pair = random_pair(d);
    const Splitting s(pair);
    const Index n = s.dim();
    const auto inst = static_cast<std::uint64_t>(i);
    const auto t = [&](const Point& x) { return s.aac(Order::kAB, TForm::kDefinition, x); };
    const auto ts = [&](const Point& x) { return s.aac(Order::kBA, TForm::kDefinition, x); };
    const auto rr = [&](const Point& x) { return s.rbr(Order::kAB, RbrForm::kComposition, x); };
    out.add("T_{A_g,B_g} affine", affine_check(t, n, d, config), inst);
    out.add("T_{B_g,A_g} affine", affine_check(ts, n, d, config), inst);
    out.add("T R_{B_g} R_{A_g} vs R_{B_g} R_{A_g} T",
            equal([&](const Point& x) { return t(rr(x)); },
                  [&](const Point& x) { return rr(t(x)); }, n, d, config, config.tol.multi),
            inst);
    out.add("l^-2 (T T' - T' T) vs reflection commutator",
            equal([&](const Point& x) { return s.dr_commutator(x).first; },
                  [&](const Point& x) { return s.dr_commutator(x).second; }, n, d, config,
                  config.tol.power),
            inst);

    const Splitting same(SplitPair{pair.a, pair.a, pair.p, pair.lam});
    out.add("T T' = T' T when A = B",
            sampled_check([&](const Point& x) { return same.dr_commutator(x).first.norm(); }, n,
                          config.samples, d.rng(), config.tol.multi),
            inst);
  }
  return std::move(out).finish();
}

// Model instances used by both commutation suites: the configured one first,
// then `instances` random ones.
template <class Fn>
void for_commutation_models(SuiteId id, const SuiteConfig& config, Fn fn) {
  validate_for_commutation_examples(config.model);
  {
    Draw d = draw(id, config, 0);
    fn(config.model, d, std::uint64_t{0});
  }
  for (int i = 1; i <= config.instances; ++i) {
    Draw d = draw(id, config, i);
    fn(model_draw(d, config, true, config.model.a_sign), d, static_cast<std::uint64_t>(i));
  }
}

void commutation_notes(Collector& out, const SuiteConfig& config) {
  out.note(fmt::format("sign convention: {}; closed forms are written for A = Id - v",
                       to_string(config.model.a_sign)));
  out.note("instance 0 is the configured model; a and v lie in U^perp on every instance");
}

SuiteReport commutation_equalities(const SuiteConfig& config) {
  Collector out(SuiteId::kCommutationEqualities);
  commutation_notes(out, config);
  out.note(
      "T_BgAg_RBg: identity coefficient read as (1-2g)(lg(3-2g)-1) x - g(1+l-lg(5-3g)) P_U x");
  for_commutation_models(
      SuiteId::kCommutationEqualities, config,
      [&](const ModelInstance& inst, Draw& d, std::uint64_t i) {
        const Splitting s(model_pair(inst));
        const Index n = s.dim();
        const Operator& rg = s.side_a().rg;
        const auto rt = [&](const Point& x) {
          return rg(s.aac(Order::kAB, TForm::kDefinition, x));
        };
        out.add("RAg_T closed form vs R_{A_g} T",
                equal([&](const Point& x) { return closed_form_eval(inst, ClosedFormId::kRAg_T, x); },
                      rt, n, d, config, config.tol.multi),
                i);
        out.add("R_{A_g} T vs T' R_{A_g}",
                equal(rt,
                      [&](const Point& x) { return s.aac(Order::kBA, TForm::kDefinition, rg(x)); },
                      n, d, config, config.tol.multi),
                i);
        for (const ClosedFormId id : kReflectedCompositionForms) {
          if (id == ClosedFormId::kRAg_T) continue;
          out.add(fmt::format("{} closed form vs composition", to_string(id)),
                  equal([&](const Point& x) { return closed_form_eval(inst, id, x); },
                        [&](const Point& x) { return compositional_eval(s, id, x); }, n, d, config,
                        config.tol.multi),
                  i);
        }
      });
  return std::move(out).finish();
}

SuiteReport commutation_nonequalities(const SuiteConfig& config) {
  Collector out(SuiteId::kCommutationNonEqualities);
  commutation_notes(out, config);
  out.note("excluded from generation: w = 0 and a = v");
  out.note("max_gap is the smallest witness gap over instances");
  if (!(config.model.w.norm() > 0.0))
    throw InvalidParameter("non-equality checks need w != 0");
  for_commutation_models(
      SuiteId::kCommutationNonEqualities, config,
      [&](const ModelInstance& inst, Draw& d, std::uint64_t i) {
        const Splitting s(model_pair(inst));
        for (const NonCommutation which : {NonCommutation::kRBgT, NonCommutation::kRBgTs}) {
          const auto [lhs, rhs] = noncommutation_sides(s, which);
          const WitnessSearch found =
              search_witness(lhs, rhs, s.dim(), config.witness_budget, d.rng(), config.tol.witness);
          EqualityReport part;
          part.expect = Expectation::kDistinct;
          part.samples = found.tried;
          part.tolerance = config.tol.witness;
          part.max_gap = found.witness ? found.witness->gap : found.best_gap;
          part.verdict = found.witness ? Verdict::kPass : Verdict::kFail;
          part.witness = found.witness;
          out.add(std::string(to_string(which)), part, i);
        }
      });
  return std::move(out).finish();
}

}  // namespace

std::string_view to_string(SuiteId id) {
  for (const auto& e : kTags)
    if (e.id == id) return e.tag;
  return "?";
}

SuiteId suite_from_string(std::string_view tag) {
  for (const auto& e : kTags)
    if (e.tag == tag) return e.id;
  throw UnknownSuite(fmt::format("unknown suite '{}'", tag));
}

void validate(const SuiteConfig& config) {
  if (config.instances < 1) throw InvalidParameter("instances must be positive");
  if (config.samples < 1) throw InvalidParameter("samples must be positive");
  if (config.witness_budget < 1) throw InvalidParameter("witness budget must be positive");
  if (config.min_dim < 1 || config.max_dim < config.min_dim || config.max_dim > kMaxInstanceDim)
    throw InvalidParameter(fmt::format("dimension range must satisfy 1 <= min <= max <= {}",
                                       kMaxInstanceDim));
  if (config.gamma && !(*config.gamma > 0.0 && *config.gamma < 1.0))
    throw InvalidParameter("gamma must lie in (0, 1)");
  if (config.lambda && !(*config.lambda > 0.0 && *config.lambda <= 1.0))
    throw InvalidParameter("lambda must lie in (0, 1]");
  const auto& t = config.tol;
  for (const double v : {t.single, t.multi, t.power, t.witness})
    if (!(v > 0.0)) throw InvalidParameter("tolerances must be positive");
  validate(config.model);
}

ModelInstance random_model(Rng& rng, const SuiteConfig& config, bool anchor_in_complement,
                           ASign sign) {
  const Index dim = random_index(rng, std::max<Index>(config.min_dim, anchor_in_complement ? 2 : 1),
                                 std::max<Index>(config.max_dim, anchor_in_complement ? 2 : 1));
  const Index rank = random_index(rng, 0, anchor_in_complement ? dim - 1 : dim);
  SubspaceBasis u(dim);
  if (rank > 0) {
    std::vector<Point> span;
    for (Index i = 0; i < rank; ++i) span.push_back(random_point(rng, dim));
    u = orthonormalize(span);
  }
  ModelInstance inst{u, random_point(rng, dim), u.project_complement(random_point(rng, dim)),
                     random_point(rng, dim)};
  if (rank == dim) inst.v.setZero();  // U^perp = {0}; avoid a rounding-level v
  if (anchor_in_complement) inst.a = u.project_complement(inst.a);
  inst.gamma = config.gamma ? *config.gamma : random_uniform(rng, 0.05, 0.95);
  inst.lambda = config.lambda ? *config.lambda : random_uniform(rng, 0.05, 1.0);
  inst.a_sign = sign;
  return inst;
}

SuiteReport run_one(SuiteId id, const SuiteConfig& config) {
  validate(config);
  switch (id) {
    case SuiteId::kDrsForms: return drs_forms(config);
    case SuiteId::kDrsSwap: return drs_swap(config);
    case SuiteId::kResolventAverage: return resolvent_average(config);
    case SuiteId::kReflectedAverage: return reflected_average(config);
    case SuiteId::kAacForms: return aac_forms(config);
    case SuiteId::kReflectionProductForms: return rbr_forms(config);
    case SuiteId::kAffineResolvent: return affine_resolvent(config);
    case SuiteId::kModelClosedForms: return model_closed_forms(config);
    case SuiteId::kResolventReflectionCommute: return jr_commute(config);
    case SuiteId::kCommutator: return commutator(config);
    case SuiteId::kConjugation: return conjugation(config);
    case SuiteId::kAffinePairIdentities: return affine_pair(config);
    case SuiteId::kCommutationEqualities: return commutation_equalities(config);
    case SuiteId::kCommutationNonEqualities: return commutation_nonequalities(config);
  }
  throw UnknownSuite("unknown suite id");
}

std::vector<SuiteReport> run_suite(std::span<const SuiteId> ids, const SuiteConfig& config) {
  validate(config);
  std::vector<SuiteReport> reports;
  reports.reserve(ids.size());
  if (!config.parallel || ids.size() < 2) {
    for (const SuiteId id : ids) reports.push_back(run_one(id, config));
    return reports;
  }
  std::vector<std::future<SuiteReport>> jobs;
  jobs.reserve(ids.size());
  for (const SuiteId id : ids)
    jobs.push_back(std::async(std::launch::async, [id, &config] { return run_one(id, config); }));
  for (auto& job : jobs) reports.push_back(job.get());
  return reports;
}

}  // namespace opsplit
