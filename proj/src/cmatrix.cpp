#include "loccstar/cmatrix.hpp"

#include <algorithm>
#include <cmath>

namespace loccstar {

namespace {

bool all_entries_finite(const Eigen::MatrixXcd& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const Complex& z = m(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  return true;
}

Eigen::MatrixXcd symmetrized(const Eigen::MatrixXcd& m) {
  return 0.5 * (m + m.adjoint().eval());
}

}  // namespace

CMatrix::CMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
  if (m_.rows() < 1 || m_.rows() != m_.cols())
    raise(ErrorKind::InvalidSpec, "matrix must be square with dim >= 1");
  if (!all_entries_finite(m_))
    raise(ErrorKind::InvalidSpec, "matrix entries must be finite");
}

CMatrix CMatrix::identity(int dim) {
  return CMatrix(Eigen::MatrixXcd::Identity(dim, dim));
}

CMatrix CMatrix::zero(int dim) {
  return CMatrix(Eigen::MatrixXcd::Zero(dim, dim));
}

bool CMatrix::is_hermitian(double tol) const {
  Eigen::MatrixXcd asym = m_ - m_.adjoint().eval();
  double drift = asym.norm();  // Frobenius bounds the spectral norm
  return drift <= scaled_tol(tol, mnorm(*this));
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  if (a.dim() != b.dim())
    raise(ErrorKind::InvalidSpec, "matrix dimension mismatch in +");
  return CMatrix(a.m_ + b.m_);
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  if (a.dim() != b.dim())
    raise(ErrorKind::InvalidSpec, "matrix dimension mismatch in -");
  return CMatrix(a.m_ - b.m_);
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.dim() != b.dim())
    raise(ErrorKind::InvalidSpec, "matrix dimension mismatch in *");
  return CMatrix(a.m_ * b.m_);
}

CMatrix operator*(const Complex& s, const CMatrix& a) {
  return CMatrix(s * a.m_);
}

double mnorm(const CMatrix& a) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a.raw());
  return svd.singularValues()(0);
}

std::vector<Complex> mspectrum(const CMatrix& a) {
  std::vector<Complex> eig;
  eig.reserve(a.dim());
  if (a.is_hermitian()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(symmetrized(a.raw()));
    if (es.info() != Eigen::Success)
      raise(ErrorKind::EigenFailure, "self-adjoint eigensolver did not converge");
    for (int i = 0; i < a.dim(); ++i) eig.emplace_back(es.eigenvalues()(i), 0.0);
  } else {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(a.raw(), false);
    if (es.info() != Eigen::Success)
      raise(ErrorKind::EigenFailure, "eigensolver did not converge");
    for (int i = 0; i < a.dim(); ++i) eig.push_back(es.eigenvalues()(i));
  }
  std::sort(eig.begin(), eig.end(), [](const Complex& x, const Complex& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return eig;
}

double min_hermitian_eigenvalue(const CMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(symmetrized(a.raw()));
  if (es.info() != Eigen::Success)
    raise(ErrorKind::EigenFailure, "self-adjoint eigensolver did not converge");
  return es.eigenvalues()(0);
}

bool mis_positive(const CMatrix& a, double tol) {
  double allow = scaled_tol(tol, mnorm(a));
  Eigen::MatrixXcd asym = a.raw() - a.raw().adjoint().eval();
  if (asym.norm() > allow) return false;
  return min_hermitian_eigenvalue(a) >= -allow;
}

CMatrix msqrt(const CMatrix& a, double tol) {
  if (!mis_positive(a, tol))
    raise(ErrorKind::NotPositive, "msqrt requires a positive matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(symmetrized(a.raw()));
  if (es.info() != Eigen::Success)
    raise(ErrorKind::EigenFailure, "self-adjoint eigensolver did not converge");
  Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0);
  Eigen::MatrixXcd h = es.eigenvectors() *
                       lam.cwiseSqrt().asDiagonal() *
                       es.eigenvectors().adjoint();
  return CMatrix(symmetrized(h));
}

CMatrix minverse(const CMatrix& a, double tol) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
      a.raw(), Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double smax = sv(0);
  double smin = sv(a.dim() - 1);
  if (smin <= scaled_tol(tol, smax))
    raise(ErrorKind::Singular, "matrix is singular within tolerance");
  Eigen::MatrixXcd inv = svd.matrixV() *
                         sv.cwiseInverse().asDiagonal() *
                         svd.matrixU().adjoint();
  return CMatrix(std::move(inv));
}

}  // namespace loccstar
