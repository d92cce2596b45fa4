#include "opsplit/linear.hpp"

#include <cmath>

#include <fmt/format.h>

namespace opsplit {

RankDeficient::RankDeficient(std::size_t index, double residual)
    : NumericalError(fmt::format(
          "vector {} is numerically dependent on its predecessors (residual norm {:.3e})", index,
          residual)),
      index_(index),
      residual_(residual) {}

SubspaceBasis::SubspaceBasis(Index dim) : q_(dim, 0) {
  if (dim < 1) throw DimensionMismatch("ambient dimension must be positive");
}

SubspaceBasis SubspaceBasis::from_orthonormal(Matrix columns) {
  if (columns.rows() < 1) throw DimensionMismatch("ambient dimension must be positive");
  if (columns.cols() > columns.rows())
    throw InvalidParameter("more basis vectors than ambient dimensions");
  if (columns.cols() > 0) {
    const Matrix gram = columns.transpose() * columns;
    const double dev = (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
    if (!(dev <= 1e-12))
      throw InvalidParameter(fmt::format("basis is not orthonormal (Gram deviation {:.3e})", dev));
  }
  return SubspaceBasis(std::move(columns));
}

Point SubspaceBasis::project(const Point& x) const {
  require_dim(x, ambient_dim(), "project");
  if (rank() == 0) return Point::Zero(ambient_dim());
  return q_ * (q_.transpose() * x);
}

Point SubspaceBasis::project_complement(const Point& x) const { return x - project(x); }

Matrix SubspaceBasis::projector() const { return q_ * q_.transpose(); }

Point solve_linear(const Matrix& m, const Point& rhs, const LinearTolerances& tol) {
  if (m.rows() != m.cols()) throw DimensionMismatch("solve_linear: matrix is not square");
  require_dim(rhs, m.rows(), "solve_linear");

  const Eigen::PartialPivLU<Matrix> lu(m);
  const double rcond = lu.rcond();
  if (!(rcond * tol.max_condition >= 1.0))
    throw SingularMatrix(fmt::format("solve_linear: condition estimate {:.3e} exceeds {:.1e}",
                                     rcond > 0 ? 1.0 / rcond : INFINITY, tol.max_condition));
  Point y = lu.solve(rhs);
  const double res = (m * y - rhs).norm();
  if (!(res <= tol.residual * (1.0 + rhs.norm())))
    throw SingularMatrix(fmt::format("solve_linear: residual {:.3e} too large", res));
  return y;
}

SubspaceBasis orthonormalize(std::span<const Point> vectors, const LinearTolerances& tol) {
  if (vectors.empty()) throw DimensionMismatch("orthonormalize: need the ambient dimension");
  const Index n = vectors.front().size();
  Matrix q(n, static_cast<Index>(vectors.size()));
  Index k = 0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    require_dim(vectors[i], n, "orthonormalize");
    Point r = vectors[i];
    for (int pass = 0; pass < 2; ++pass)
      for (Index j = 0; j < k; ++j) r -= q.col(j).dot(r) * q.col(j);
    const double norm = r.norm();
    if (!(norm >= tol.residual)) throw RankDeficient(i, norm);
    q.col(k++) = r / norm;
  }
  return SubspaceBasis::from_orthonormal(q.leftCols(k));
}

SubspaceBasis orthonormalize(const std::vector<Point>& vectors, const LinearTolerances& tol) {
  return orthonormalize(std::span<const Point>(vectors), tol);
}

Point project(const SubspaceBasis& u, const Point& x) { return u.project(x); }

bool is_monotone_linear(const Matrix& m, const LinearTolerances& tol) {
  if (m.rows() != m.cols()) throw DimensionMismatch("is_monotone_linear: matrix is not square");
  const Matrix sym = 0.5 * (m + m.transpose());
  const Eigen::SelfAdjointEigenSolver<Matrix> eig(sym, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff() >= -tol.monotone_eig;
}

bool all_finite(const Point& x) { return x.allFinite(); }

void require_dim(const Point& x, Index dim, const char* what) {
  if (x.size() != dim)
    throw DimensionMismatch(fmt::format("{}: expected dimension {}, got {}", what, dim, x.size()));
}

}  // namespace opsplit
