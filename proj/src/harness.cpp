#include "opsplit/harness.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "opsplit/random.hpp"

namespace opsplit {

std::string_view to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::kAffineRandom: return "affine_random";
    case OperatorKind::kTranslatedIdentity: return "translated_identity";
    case OperatorKind::kProjector: return "projector";
  }
  return "?";
}

std::string_view to_string(Verdict v) { return v == Verdict::kPass ? "PASS" : "FAIL"; }

std::string_view to_string(Expectation e) { return e == Expectation::kEqual ? "equal" : "distinct"; }

namespace {

SubspaceBasis random_subspace(Index dim, Rng& rng) {
  const Index rank = random_index(rng, 0, dim);
  if (rank == 0) return SubspaceBasis(dim);
  std::vector<Point> span;
  span.reserve(static_cast<std::size_t>(rank));
  for (Index i = 0; i < rank; ++i) span.push_back(random_point(rng, dim));
  return orthonormalize(span);
}

}  // namespace

Operator gen_operator(OperatorKind kind, Index dim, Rng& rng) {
  switch (kind) {
    case OperatorKind::kAffineRandom: {
      const Matrix g = random_matrix(rng, dim, dim);
      const Matrix h = random_matrix(rng, dim, dim);
      Matrix l = g * g.transpose() / static_cast<double>(dim) + 0.5 * (h - h.transpose());
      return Operator::affine(std::move(l), random_point(rng, dim));
    }
    case OperatorKind::kTranslatedIdentity: {
      const SubspaceBasis u = random_subspace(dim, rng);
      const Point v = u.project_complement(random_point(rng, dim));
      return Operator::affine(Matrix::Identity(dim, dim), -v);
    }
    case OperatorKind::kProjector: {
      SubspaceBasis u = random_subspace(dim, rng);
      return Operator::project_affine(random_point(rng, dim), std::move(u));
    }
  }
  throw InvalidParameter("unknown operator kind");
}

SplitPair gen_instance(const InstanceSpec& spec) {
  if (spec.dim < 1 || spec.dim > kMaxInstanceDim)
    throw InvalidParameter(fmt::format("instance dimension must lie in [1, {}]", kMaxInstanceDim));
  Rng rng = make_stream(spec.seed, "instance");
  Operator a = gen_operator(spec.kind_a, spec.dim, rng);
  Operator b = gen_operator(spec.kind_b, spec.dim, rng);
  Point w = spec.w ? *spec.w : random_point(rng, spec.dim);
  return SplitPair{std::move(a), std::move(b), PerturbationParams(spec.gamma, std::move(w)),
                   AacParams(spec.lambda)};
}

EqualityReport sampled_check(const std::function<double(const Point&)>& gap, Index dim,
                             std::int64_t samples, std::uint64_t seed, double tol) {
  if (samples < 1) throw InvalidParameter("sampled check needs at least one sample");
  Rng rng = make_stream(seed, "samples");
  EqualityReport report;
  report.tolerance = tol;
  report.samples = samples;
  Witness worst;
  worst.gap = -1.0;
  for (std::int64_t i = 0; i < samples; ++i) {
    Point x = random_point(rng, dim, 10.0);
    double g = gap(x);
    if (std::isnan(g)) g = INFINITY;
    if (g > worst.gap) worst = Witness{std::move(x), g, 0};
  }
  report.max_gap = worst.gap;
  report.verdict = report.max_gap <= tol ? Verdict::kPass : Verdict::kFail;
  if (report.verdict == Verdict::kFail) report.witness = std::move(worst);
  return report;
}

EqualityReport operators_equal(const PointMap& f, const PointMap& g, Index dim,
                               std::int64_t samples, std::uint64_t seed, double tol) {
  return sampled_check(
      [&](const Point& x) {
        Point fx;
        Point gx;
        try {
          fx = f(x);
          gx = g(x);
        } catch (const Error& e) {
          throw NumericalError(fmt::format("{} (while evaluating sample {})", e.what(),
                                           fmt::join(x.begin(), x.end(), ", ")));
        }
        return (fx - gx).norm() / (1.0 + fx.norm());
      },
      dim, samples, seed, tol);
}

WitnessSearch search_witness(const PointMap& f, const PointMap& g, Index dim, std::int64_t budget,
                             std::uint64_t seed, double threshold) {
  if (budget < 1) throw InvalidParameter("witness search needs a positive budget");
  Rng rng = make_stream(seed, "witness");
  WitnessSearch out;
  for (std::int64_t i = 0; i < budget; ++i) {
    Point x = random_point(rng, dim, 10.0);
    const double gap = (f(x) - g(x)).norm();
    ++out.tried;
    out.best_gap = std::max(out.best_gap, gap);
    if (gap > threshold) {
      out.witness = Witness{std::move(x), gap, 0};
      break;
    }
  }
  return out;
}

std::optional<Witness> find_witness(const PointMap& f, const PointMap& g, Index dim,
                                    std::int64_t budget, std::uint64_t seed, double threshold) {
  return search_witness(f, g, dim, budget, seed, threshold).witness;
}

void merge_into(EqualityReport& total, const EqualityReport& part, std::uint64_t instance) {
  const bool first = total.samples == 0;
  total.samples += part.samples;
  total.tolerance = part.tolerance;
  total.expect = part.expect;
  if (total.expect == Expectation::kEqual) {
    if (first || part.max_gap > total.max_gap) {
      total.max_gap = part.max_gap;
      if (part.witness) {
        total.witness = part.witness;
        total.witness->instance = instance;
      }
    }
    if (part.verdict == Verdict::kFail) total.verdict = Verdict::kFail;
  } else {
    if (first || part.max_gap < total.max_gap) total.max_gap = part.max_gap;
    if (part.verdict == Verdict::kFail) {
      total.verdict = Verdict::kFail;
      total.witness.reset();
    } else if (total.verdict == Verdict::kPass && !total.witness && part.witness) {
      total.witness = part.witness;
      total.witness->instance = instance;
    }
  }
}

}  // namespace opsplit
