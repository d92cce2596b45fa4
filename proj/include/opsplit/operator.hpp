#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <variant>

#include "opsplit/linear.hpp"

namespace opsplit {

// The (gamma, w) pair that defines the resolvent average A_gamma of an
// operator A. gamma lies strictly inside (0, 1).
class PerturbationParams {
 public:
  PerturbationParams(double gamma, Point w);

  double gamma() const { return gamma_; }
  const Point& w() const { return w_; }

 private:
  double gamma_;
  Point w_;
};

// Relaxation parameter lambda in (0, 1] of the AAC operator.
class AacParams {
 public:
  explicit AacParams(double lambda);

  double lambda() const { return lambda_; }

 private:
  double lambda_;
};

enum class OpKind {
  kIdentity,
  kConstant,
  kAffineMap,
  kProjectAffine,
  kResolvent,
  kReflected,
  kPerturbed,
  kCompose,
  kCombine,
};

struct Node;

// Immutable, shareable operator expression on R^n. Copies share the
// underlying tree; evaluation is pure and safe from many threads.
class Operator {
 public:
  static Operator identity(Index dim);
  // x -> v for every x.
  static Operator constant(Point v);
  // x -> L x + c
  static Operator affine(Matrix l, Point c);
  // x -> P_{a+U} x = a + P_U (x - a)
  static Operator project_affine(Point a, SubspaceBasis u);
  // A_gamma from the resolvent average: x -> A(gamma^-1 (x - (1-gamma) w)) + gamma^-1 (1-gamma)(x - w)
  static Operator perturbed(Operator child, PerturbationParams p);
  // outer(inner(x))
  static Operator compose(Operator outer, Operator inner);
  // alpha f(x) + beta g(x) + shift
  static Operator combine(double alpha, Operator f, double beta, Operator g, Point shift);

  Index dim() const;
  OpKind kind() const;
  const Node& node() const { return *node_; }

  Point operator()(const Point& x) const;

 private:
  friend struct OperatorFactory;
  explicit Operator(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

namespace node {

struct Identity {
  Index dim;
};
struct Constant {
  Point value;
};
struct AffineMap {
  Matrix linear;
  Point offset;
};
struct ProjectAffine {
  Point anchor;
  SubspaceBasis subspace;
};
// J_child. The evaluation plan is fixed when the node is built: a factorized
// Id + L for affine maps, the closed form for projectors, and gamma J + (1-gamma) w
// (with J the child's own resolvent) for perturbed children.
struct Resolvent {
  Operator child;
  std::shared_ptr<const Eigen::PartialPivLU<Matrix>> lu;
  std::shared_ptr<const Operator> inner;
};
// 2 J_child - Id
struct Reflected {
  Operator child;
  Operator resolvent;
};
struct Perturbed {
  Operator child;
  PerturbationParams params;
};
struct Compose {
  Operator outer;
  Operator inner;
};
struct Combine {
  double alpha;
  Operator f;
  double beta;
  Operator g;
  Point shift;
};

}  // namespace node

struct Node {
  std::variant<node::Identity, node::Constant, node::AffineMap, node::ProjectAffine,
               node::Resolvent, node::Reflected, node::Perturbed, node::Compose, node::Combine>
      value;
};

using PointMap = std::function<Point(const Point&)>;

Point eval(const Operator& op, const Point& x);

// Identity, Constant, monotone AffineMap, ProjectAffine, or Perturbed of one
// of these. Monotonicity of affine maps is checked by resolvent(), not here.
bool is_resolvent_computable(const Operator& op);

// Identity, Constant, AffineMap, ProjectAffine, or Perturbed of one of these.
bool is_affine_variant(const Operator& op);

// J_A = (Id + A)^-1. Throws NonComputableResolvent, MonotonicityViolation,
// or SingularResolvent.
Operator resolvent(const Operator& op, const LinearTolerances& tol = {});
// R_A = 2 J_A - Id.
Operator reflected(const Operator& op, const LinearTolerances& tol = {});
// J_{A_gamma} = gamma J_A + (1 - gamma) w
Operator perturbed_resolvent(const Operator& op, const PerturbationParams& p,
                             const LinearTolerances& tol = {});
// R_{A_gamma} = 2 gamma J_A + 2 (1 - gamma) w - Id
Operator perturbed_reflected(const Operator& op, const PerturbationParams& p,
                             const LinearTolerances& tol = {});

// max over a in {-1, 0.3, 2} of
//   |f(a x + (1-a) y) - a f(x) - (1-a) f(y)| / (1 + |f(x)| + |f(y)|)
double affinity_defect(const PointMap& f, const Point& x, const Point& y);

// Largest affinity_defect over `trials` random pairs.
double affinity_gap(const PointMap& f, Index dim, int trials, std::uint64_t seed);
bool affinity_probe(const PointMap& f, Index dim, int trials, std::uint64_t seed);
bool affinity_probe(const Operator& op, int trials, std::uint64_t seed);

inline constexpr double kAffinityTolerance = 1e-9;

std::string describe(const Operator& op);

}  // namespace opsplit
