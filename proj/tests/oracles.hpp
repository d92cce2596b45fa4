#pragma once

// Reference implementations that share no code with the library: every
// operator is an explicit affine map x -> M x + t and resolvents come from
// dense inverses.

#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

struct Affine {
  Mat m;
  Vec t;

  Vec operator()(const Vec& x) const { return m * x + t; }
  Eigen::Index dim() const { return m.rows(); }
};

// Matrix and offset of an affine callable, read off the unit vectors.
template <class F>
Affine probe(const F& f, Eigen::Index n) {
  const Vec f0 = f(Vec::Zero(n));
  Mat m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m.col(i) = f(Vec::Unit(n, i)) - f0;
  return {m, f0};
}

inline Affine identity(Eigen::Index n) { return {Mat::Identity(n, n), Vec::Zero(n)}; }

// f after g
inline Affine compose(const Affine& f, const Affine& g) { return {f.m * g.m, f.m * g.t + f.t}; }

inline Affine lin(double a, const Affine& f, double b, const Affine& g) {
  return {a * f.m + b * g.m, a * f.t + b * g.t};
}

inline Affine shift(const Affine& f, const Vec& c) { return {f.m, f.t + c}; }

// (Id + A)^{-1}
inline Affine resolvent(const Affine& a) {
  const Mat inv = (Mat::Identity(a.dim(), a.dim()) + a.m).inverse();
  return {inv, -inv * a.t};
}

inline Affine reflect(const Affine& j) {
  return lin(2.0, j, -1.0, identity(j.dim()));
}

// A_g(x) = A(g^-1 (x - (1-g) w)) + g^-1 (1-g) (x - w), expanded by hand.
inline Affine average(const Affine& a, double g, const Vec& w) {
  const Eigen::Index n = a.dim();
  const Mat lin_part = (a.m + (1.0 - g) * Mat::Identity(n, n)) / g;
  const Vec off = a.t - (1.0 - g) / g * (a.m * w) - (1.0 - g) / g * w;
  return {lin_part, off};
}

// Orthogonal projector onto span(cols) from a Householder QR.
inline Mat projector(const std::vector<Vec>& span, Eigen::Index n) {
  if (span.empty()) return Mat::Zero(n, n);
  Mat a(n, static_cast<Eigen::Index>(span.size()));
  for (std::size_t i = 0; i < span.size(); ++i) a.col(static_cast<Eigen::Index>(i)) = span[i];
  Eigen::HouseholderQR<Mat> qr(a);
  const Mat q = qr.householderQ() * Mat::Identity(n, a.cols());
  return q * q.transpose();
}

// P_{a+U}
inline Affine affine_projector(const Mat& p, const Vec& anchor) {
  const Eigen::Index n = p.rows();
  return {p, (Mat::Identity(n, n) - p) * anchor};
}

struct Pair {
  Affine a;
  Affine b;
  double gamma;
  double lambda;
  Vec w;
};

inline Affine jg(const Affine& x, const Pair& p) { return resolvent(average(x, p.gamma, p.w)); }
inline Affine rg(const Affine& x, const Pair& p) { return reflect(jg(x, p)); }

// (1-l) Id + l R_{Y_g} R_{X_g}
inline Affine aac(const Affine& x, const Affine& y, const Pair& p) {
  return lin(1.0 - p.lambda, identity(x.dim()), p.lambda, compose(rg(y, p), rg(x, p)));
}

inline Affine t_ab(const Pair& p) { return aac(p.a, p.b, p); }
inline Affine t_ba(const Pair& p) { return aac(p.b, p.a, p); }

// (Id + R_B R_A) / 2 of the unperturbed pair
inline Affine drs(const Affine& x, const Affine& y) {
  return lin(0.5, identity(x.dim()), 0.5, compose(reflect(resolvent(y)), reflect(resolvent(x))));
}

inline Affine power(const Affine& f, int n) {
  Affine out = identity(f.dim());
  for (int i = 0; i < n; ++i) out = compose(f, out);
  return out;
}

// Fixed point of x -> M x + t.
inline Vec fixed_point(const Affine& f) {
  return (Mat::Identity(f.dim(), f.dim()) - f.m).inverse() * f.t;
}

}  // namespace oracle
