#include "opsplit/operator.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <fmt/format.h>

#include "opsplit/random.hpp"

namespace opsplit {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_same_dim(Index a, Index b, const char* what) {
  if (a != b) throw DimensionMismatch(fmt::format("{}: dimensions {} and {} differ", what, a, b));
}

}  // namespace

PerturbationParams::PerturbationParams(double gamma, Point w) : gamma_(gamma), w_(std::move(w)) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw InvalidParameter(fmt::format("gamma must lie in (0, 1), got {}", gamma));
  if (w_.size() < 1 || !w_.allFinite()) throw InvalidParameter("w must be a finite, non-empty point");
}

AacParams::AacParams(double lambda) : lambda_(lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0))
    throw InvalidParameter(fmt::format("lambda must lie in (0, 1], got {}", lambda));
}

// Operator's constructor is private; this helper is the single place that wraps nodes.
struct OperatorFactory {
  static Operator wrap(Node n) { return Operator(std::make_shared<const Node>(std::move(n))); }
};

namespace {
template <class T>
Operator make(T value) {
  return OperatorFactory::wrap(Node{std::move(value)});
}
}  // namespace

Operator Operator::identity(Index dim) {
  if (dim < 1) throw DimensionMismatch("identity: dimension must be positive");
  return make(node::Identity{dim});
}

Operator Operator::constant(Point v) {
  if (v.size() < 1 || !v.allFinite()) throw InvalidParameter("constant: value must be finite");
  return make(node::Constant{std::move(v)});
}

Operator Operator::affine(Matrix l, Point c) {
  if (l.rows() != l.cols()) throw DimensionMismatch("affine: linear part must be square");
  require_same_dim(l.rows(), c.size(), "affine");
  if (l.rows() < 1) throw DimensionMismatch("affine: dimension must be positive");
  if (!l.allFinite() || !c.allFinite()) throw InvalidParameter("affine: entries must be finite");
  return make(node::AffineMap{std::move(l), std::move(c)});
}

Operator Operator::project_affine(Point a, SubspaceBasis u) {
  require_same_dim(a.size(), u.ambient_dim(), "project_affine");
  if (!a.allFinite()) throw InvalidParameter("project_affine: anchor must be finite");
  return make(node::ProjectAffine{std::move(a), std::move(u)});
}

Operator Operator::perturbed(Operator child, PerturbationParams p) {
  require_same_dim(child.dim(), p.w().size(), "perturbed");
  return make(node::Perturbed{std::move(child), std::move(p)});
}

Operator Operator::compose(Operator outer, Operator inner) {
  require_same_dim(outer.dim(), inner.dim(), "compose");
  return make(node::Compose{std::move(outer), std::move(inner)});
}

Operator Operator::combine(double alpha, Operator f, double beta, Operator g, Point shift) {
  require_same_dim(f.dim(), g.dim(), "combine");
  require_same_dim(f.dim(), shift.size(), "combine");
  return make(node::Combine{alpha, std::move(f), beta, std::move(g), std::move(shift)});
}

Index Operator::dim() const {
  return std::visit(
      Overloaded{
          [](const node::Identity& n) { return n.dim; },
          [](const node::Constant& n) { return n.value.size(); },
          [](const node::AffineMap& n) { return n.offset.size(); },
          [](const node::ProjectAffine& n) { return n.anchor.size(); },
          [](const node::Resolvent& n) { return n.child.dim(); },
          [](const node::Reflected& n) { return n.child.dim(); },
          [](const node::Perturbed& n) { return n.child.dim(); },
          [](const node::Compose& n) { return n.inner.dim(); },
          [](const node::Combine& n) { return n.shift.size(); },
      },
      node_->value);
}

OpKind Operator::kind() const { return static_cast<OpKind>(node_->value.index()); }

Point Operator::operator()(const Point& x) const { return eval(*this, x); }

namespace {

Point eval_resolvent(const node::Resolvent& r, const Point& x) {
  return std::visit(
      Overloaded{
          [&](const node::Identity&) -> Point { return 0.5 * x; },
          [&](const node::Constant& c) -> Point { return x - c.value; },
          [&](const node::AffineMap& a) -> Point { return r.lu->solve(x - a.offset); },
          [&](const node::ProjectAffine& p) -> Point {
            // (Id - P_U / 2) x - P_{U^perp} a
            return x - 0.5 * p.subspace.project(x) - p.subspace.project_complement(p.anchor);
          },
          [&](const node::Perturbed& p) -> Point {
            const double g = p.params.gamma();
            return g * eval(*r.inner, x) + (1.0 - g) * p.params.w();
          },
          [&](const auto&) -> Point {
            throw NonComputableResolvent("resolvent node holds a non-computable child");
          },
      },
      r.child.node().value);
}

}  // namespace

Point eval(const Operator& op, const Point& x) {
  require_dim(x, op.dim(), "eval");
  return std::visit(
      Overloaded{
          [&](const node::Identity&) -> Point { return x; },
          [&](const node::Constant& n) -> Point { return n.value; },
          [&](const node::AffineMap& n) -> Point { return n.linear * x + n.offset; },
          [&](const node::ProjectAffine& n) -> Point {
            return n.anchor + n.subspace.project(x - n.anchor);
          },
          [&](const node::Resolvent& n) -> Point { return eval_resolvent(n, x); },
          [&](const node::Reflected& n) -> Point { return 2.0 * eval(n.resolvent, x) - x; },
          [&](const node::Perturbed& n) -> Point {
            const double g = n.params.gamma();
            const Point& w = n.params.w();
            return eval(n.child, (x - (1.0 - g) * w) / g) + ((1.0 - g) / g) * (x - w);
          },
          [&](const node::Compose& n) -> Point { return eval(n.outer, eval(n.inner, x)); },
          [&](const node::Combine& n) -> Point {
            return n.alpha * eval(n.f, x) + n.beta * eval(n.g, x) + n.shift;
          },
      },
      op.node().value);
}

bool is_resolvent_computable(const Operator& op) {
  switch (op.kind()) {
    case OpKind::kIdentity:
    case OpKind::kConstant:
    case OpKind::kAffineMap:
    case OpKind::kProjectAffine:
      return true;
    case OpKind::kPerturbed:
      return is_resolvent_computable(std::get<node::Perturbed>(op.node().value).child);
    default:
      return false;
  }
}

bool is_affine_variant(const Operator& op) { return is_resolvent_computable(op); }

Operator resolvent(const Operator& op, const LinearTolerances& tol) {
  node::Resolvent r{op, nullptr, nullptr};
  switch (op.kind()) {
    case OpKind::kIdentity:
    case OpKind::kConstant:
    case OpKind::kProjectAffine:
      break;
    case OpKind::kAffineMap: {
      const auto& a = std::get<node::AffineMap>(op.node().value);
      if (!is_monotone_linear(a.linear, tol))
        throw MonotonicityViolation("resolvent: affine map is not monotone (L + L^T not PSD)");
      const Matrix m = Matrix::Identity(a.linear.rows(), a.linear.cols()) + a.linear;
      auto lu = std::make_shared<const Eigen::PartialPivLU<Matrix>>(m);
      const double rcond = lu->rcond();
      if (!(rcond * tol.max_condition >= 1.0))
        throw SingularResolvent(
            fmt::format("resolvent: Id + L is numerically singular (rcond {:.3e})", rcond));
      r.lu = std::move(lu);
      break;
    }
    case OpKind::kPerturbed: {
      const auto& p = std::get<node::Perturbed>(op.node().value);
      r.inner = std::make_shared<const Operator>(resolvent(p.child, tol));
      break;
    }
    default:
      throw NonComputableResolvent(fmt::format("resolvent: {} is not resolvent-computable",
                                               describe(op)));
  }
  return OperatorFactory::wrap(Node{std::move(r)});
}

Operator reflected(const Operator& op, const LinearTolerances& tol) {
  Operator j = resolvent(op, tol);
  return OperatorFactory::wrap(Node{node::Reflected{op, std::move(j)}});
}

Operator perturbed_resolvent(const Operator& op, const PerturbationParams& p,
                             const LinearTolerances& tol) {
  return resolvent(Operator::perturbed(op, p), tol);
}

Operator perturbed_reflected(const Operator& op, const PerturbationParams& p,
                             const LinearTolerances& tol) {
  return reflected(Operator::perturbed(op, p), tol);
}

double affinity_defect(const PointMap& f, const Point& x, const Point& y) {
  constexpr std::array<double, 3> kAlphas{-1.0, 0.3, 2.0};
  const Point fx = f(x);
  const Point fy = f(y);
  const double scale = 1.0 + fx.norm() + fy.norm();
  double worst = 0.0;
  for (const double a : kAlphas) {
    const double gap = (f(a * x + (1.0 - a) * y) - a * fx - (1.0 - a) * fy).norm() / scale;
    if (!(gap <= worst)) worst = std::isnan(gap) ? INFINITY : gap;
  }
  return worst;
}

double affinity_gap(const PointMap& f, Index dim, int trials, std::uint64_t seed) {
  if (trials < 1) throw InvalidParameter("affinity probe needs at least one trial");
  Rng rng = make_stream(seed, "affinity");
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Point x = random_point(rng, dim, 10.0);
    const Point y = random_point(rng, dim, 10.0);
    worst = std::max(worst, affinity_defect(f, x, y));
  }
  return worst;
}

bool affinity_probe(const PointMap& f, Index dim, int trials, std::uint64_t seed) {
  return affinity_gap(f, dim, trials, seed) <= kAffinityTolerance;
}

bool affinity_probe(const Operator& op, int trials, std::uint64_t seed) {
  return affinity_probe([&op](const Point& x) { return eval(op, x); }, op.dim(), trials, seed);
}

std::string describe(const Operator& op) {
  return std::visit(
      Overloaded{
          [](const node::Identity& n) { return fmt::format("Id[{}]", n.dim); },
          [](const node::Constant& n) { return fmt::format("Const[{}]", n.value.size()); },
          [](const node::AffineMap& n) { return fmt::format("Affine[{}]", n.offset.size()); },
          [](const node::ProjectAffine& n) {
            return fmt::format("P_(a+U)[{}, rank {}]", n.anchor.size(), n.subspace.rank());
          },
          [](const node::Resolvent& n) { return fmt::format("J({})", describe(n.child)); },
          [](const node::Reflected& n) { return fmt::format("R({})", describe(n.child)); },
          [](const node::Perturbed& n) {
            return fmt::format("{}_gamma={}", describe(n.child), n.params.gamma());
          },
          [](const node::Compose& n) {
            return fmt::format("{} o {}", describe(n.outer), describe(n.inner));
          },
          [](const node::Combine& n) {
            return fmt::format("({}*{} + {}*{} + c)", n.alpha, describe(n.f), n.beta, describe(n.g));
          },
      },
      op.node().value);
}

}  // namespace opsplit
