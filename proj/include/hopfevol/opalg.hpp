#pragma once

#include <vector>

#include <Eigen/Dense>

#include "hopfevol/jet.hpp"

namespace hopfevol {

/// Dense operator on a d-dimensional Hilbert space with Jet entries.
using Operator = Eigen::Matrix<Jet, Eigen::Dynamic, Eigen::Dynamic>;
using JetVector = Eigen::Matrix<Jet, Eigen::Dynamic, 1>;

inline Operator lift(const Eigen::MatrixXcd& m) {
  Operator out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) out(i, j) = Jet(m(i, j));
  return out;
}

inline Operator jet_identity(Eigen::Index d) {
  return lift(Eigen::MatrixXcd::Identity(d, d));
}

/// Order-0 or order-1 part as a plain complex matrix.
inline Eigen::MatrixXcd order_part(const Operator& m, int order) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      out(i, j) = order == 0 ? m(i, j).a0 : m(i, j).a1;
  return out;
}

/// Entrywise a0 + a1*eps at a concrete parameter value.
inline Eigen::MatrixXcd evaluate_at(const Operator& m, Complex eps) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) out(i, j) = m(i, j).at(eps);
  return out;
}

/// Conjugate transpose; the formal parameter is treated as real.
inline Operator dagger(const Operator& m) {
  Operator out(m.cols(), m.rows());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) out(j, i) = conj(m(i, j));
  return out;
}

inline double max_abs(const Operator& m) {
  double v = 0.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      v = std::max(v, max_abs(m(i, j)));
  return v;
}

template <typename A, typename B>
auto kron(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b)
    -> Eigen::Matrix<typename A::Scalar, Eigen::Dynamic, Eigen::Dynamic> {
  Eigen::Matrix<typename A::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(
      a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

/// Column stacking: stack(rho)(i + d*j) = rho(i, j).
inline JetVector stack(const Operator& rho) {
  JetVector v(rho.rows() * rho.cols());
  for (Eigen::Index j = 0; j < rho.cols(); ++j)
    for (Eigen::Index i = 0; i < rho.rows(); ++i) v(i + rho.rows() * j) = rho(i, j);
  return v;
}

inline Operator unstack(const JetVector& v) {
  auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(double(v.size()))));
  if (d * d != v.size()) throw DimensionMismatch("unstack: length is not a square");
  Operator rho(d, d);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index i = 0; i < d; ++i) rho(i, j) = v(i + d * j);
  return rho;
}

inline Eigen::VectorXcd stack(const Eigen::MatrixXcd& rho) {
  return Eigen::Map<const Eigen::VectorXcd>(rho.data(), rho.size());
}

inline Eigen::MatrixXcd unstack(const Eigen::VectorXcd& v) {
  auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(double(v.size()))));
  if (d * d != v.size()) throw DimensionMismatch("unstack: length is not a square");
  return Eigen::Map<const Eigen::MatrixXcd>(v.data(), d, d);
}

/// One Sweedler term: coeff * (left (x) right), acting on rho as left*rho*right.
struct TensorTerm {
  Operator left;
  Operator right;
  Jet coeff;
};

/// Finite Sweedler sum of operator pairs on the tensor square.
struct TensorElement {
  std::vector<TensorTerm> terms;

  Eigen::Index dim() const { return terms.empty() ? 0 : terms.front().left.rows(); }
};

/// (A (x) B) diamond rho = A rho B, extended linearly over the terms.
inline Operator diamond(const TensorElement& t, const Operator& rho) {
  if (t.terms.empty()) throw DimensionMismatch("diamond: empty tensor element");
  const Eigen::Index d = rho.rows();
  if (rho.cols() != d) throw DimensionMismatch("diamond: rho not square");
  Operator out = Operator::Zero(d, d);
  for (const auto& term : t.terms) {
    if (term.left.rows() != d || term.right.rows() != d)
      throw DimensionMismatch("diamond: term dimension mismatch");
    out += term.coeff * (term.left * rho * term.right);
  }
  return out;
}

/// Leg-swapped dagger: (A (x) B) term -> (B^dag (x) A^dag), conjugated coeff.
inline TensorElement tensor_dagger(const TensorElement& t) {
  TensorElement out;
  out.terms.reserve(t.terms.size());
  for (const auto& term : t.terms)
    out.terms.push_back({dagger(term.right), dagger(term.left), conj(term.coeff)});
  return out;
}

/// d^2 x d^2 matrix form of a linear map on operators, column-stacking
/// convention: mat * stack(rho) == stack(sum_i coeff_i A_i rho B_i).
struct SuperOp {
  Eigen::Index dim = 0;
  Operator mat;  // (dim^2) x (dim^2), Jet entries

  Operator apply(const Operator& rho) const { return unstack(JetVector(mat * stack(rho))); }
  Eigen::MatrixXcd at(Complex eps) const { return evaluate_at(mat, eps); }
  Eigen::MatrixXcd order(int k) const { return order_part(mat, k); }

  SuperOp& operator+=(const SuperOp& o) {
    if (dim != o.dim) throw DimensionMismatch("superop sum");
    mat += o.mat;
    return *this;
  }
};

inline SuperOp superop_zero(Eigen::Index d) {
  return SuperOp{d, Operator::Zero(d * d, d * d)};
}

/// vec(A rho B) = (B^T (x) A) vec(rho).
inline SuperOp superop_of(const TensorElement& t) {
  if (t.terms.empty()) throw DimensionMismatch("superop_of: empty tensor element");
  const Eigen::Index d = t.dim();
  SuperOp s = superop_zero(d);
  for (const auto& term : t.terms) {
    if (term.left.rows() != d || term.right.rows() != d)
      throw DimensionMismatch("superop_of: term dimension mismatch");
    s.mat += term.coeff * kron(term.right.transpose().eval(), term.left);
  }
  return s;
}

inline SuperOp superop_of(const std::vector<TensorTerm>& terms) {
  return superop_of(TensorElement{terms});
}

/// Orthonormal Hermitian basis F_0..F_{d^2-1}; F_0 = I/sqrt(d), the rest
/// traceless (generalized Gell-Mann matrices).  Tr(F_i F_j) = delta_ij.
struct HermitianBasis {
  Eigen::Index dim = 0;
  std::vector<Eigen::MatrixXcd> elements;
};

inline HermitianBasis hermitian_basis(Eigen::Index d) {
  if (d < 2) throw UnsupportedDimension("hermitian_basis requires d >= 2");
  HermitianBasis b;
  b.dim = d;
  b.elements.push_back(Eigen::MatrixXcd::Identity(d, d) / std::sqrt(double(d)));
  const double r = 1.0 / std::sqrt(2.0);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index k = j + 1; k < d; ++k) {
      Eigen::MatrixXcd sym = Eigen::MatrixXcd::Zero(d, d);
      sym(j, k) = r;
      sym(k, j) = r;
      b.elements.push_back(sym);
      Eigen::MatrixXcd asym = Eigen::MatrixXcd::Zero(d, d);
      asym(j, k) = Complex(0, -r);
      asym(k, j) = Complex(0, r);
      b.elements.push_back(asym);
    }
  }
  for (Eigen::Index l = 1; l < d; ++l) {
    Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(d, d);
    const double f = 1.0 / std::sqrt(double(l) * double(l + 1));
    for (Eigen::Index j = 0; j < l; ++j) diag(j, j) = f;
    diag(l, l) = -f * double(l);
    b.elements.push_back(diag);
  }
  return b;
}

inline double hermiticity_defect(const Eigen::MatrixXcd& m) {
  return (m - m.adjoint()).norm();
}

/// Smallest eigenvalue of a Hermitian matrix (defect below tol required).
inline double min_eigenvalue(const Eigen::MatrixXcd& h, double herm_tol = 1e-8) {
  if (hermiticity_defect(h) > herm_tol)
    throw NotHermitian("min_eigenvalue: defect " + std::to_string(hermiticity_defect(h)));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

inline double min_eigenvalue(const Operator& h, Complex eps, double herm_tol = 1e-8) {
  return min_eigenvalue(evaluate_at(h, eps), herm_tol);
}

inline Eigen::MatrixXcd traceless(const Eigen::MatrixXcd& m) {
  return m - (m.trace() / double(m.rows())) * Eigen::MatrixXcd::Identity(m.rows(), m.cols());
}

}  // namespace hopfevol
