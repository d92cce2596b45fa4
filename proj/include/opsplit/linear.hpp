#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "opsplit/errors.hpp"

namespace opsplit {

// Elements of the ambient space R^n and dense linear maps on it.
using Point = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

struct LinearTolerances {
  double max_condition = 1e12;
  double residual = 1e-10;
  double monotone_eig = 1e-10;
};

// Orthonormal basis of a linear subspace U of R^n, stored column-wise.
// A basis with zero columns encodes the trivial subspace {0}.
class SubspaceBasis {
 public:
  // Trivial subspace of R^dim.
  explicit SubspaceBasis(Index dim);

  // Takes ownership of an already-orthonormal column set; throws
  // InvalidParameter if the Gram matrix deviates from identity by more than 1e-12.
  static SubspaceBasis from_orthonormal(Matrix columns);

  Index ambient_dim() const { return q_.rows(); }
  Index rank() const { return q_.cols(); }
  const Matrix& columns() const { return q_; }

  // P_U x
  Point project(const Point& x) const;
  // P_{U^perp} x, computed as x - P_U x.
  Point project_complement(const Point& x) const;
  // Dense projector matrix Q Q^T.
  Matrix projector() const;

 private:
  explicit SubspaceBasis(Matrix q) : q_(std::move(q)) {}
  Matrix q_;
};

// Solves M y = rhs. Throws SingularMatrix when the reciprocal condition
// estimate puts cond(M) above tol.max_condition or the residual check fails.
Point solve_linear(const Matrix& m, const Point& rhs, const LinearTolerances& tol = {});

// Modified Gram-Schmidt with one re-orthogonalization pass. Throws
// RankDeficient naming the first vector whose residual norm drops below
// tol.residual.
SubspaceBasis orthonormalize(std::span<const Point> vectors, const LinearTolerances& tol = {});
SubspaceBasis orthonormalize(const std::vector<Point>& vectors, const LinearTolerances& tol = {});

Point project(const SubspaceBasis& u, const Point& x);

// True iff the symmetric part (M + M^T)/2 has smallest eigenvalue >= -tol.monotone_eig.
bool is_monotone_linear(const Matrix& m, const LinearTolerances& tol = {});

bool all_finite(const Point& x);

// Throws DimensionMismatch with `what` in the message unless x.size() == dim.
void require_dim(const Point& x, Index dim, const char* what);

}  // namespace opsplit
