#pragma once

// Dense complex matrix kernel: one fiber of a matrix-model algebra is a full
// matrix algebra M_d(C), and every C*-algebraic primitive on it (norm,
// spectrum, positivity, square root, inverse) reduces to a spectral
// computation on a small dense matrix.

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "loccstar/errors.hpp"

namespace loccstar {

using Complex = std::complex<double>;

// Checks are relative, scaled by 1 + magnitude of the operands.
inline constexpr double kDefaultTol = 1e-9;
inline constexpr int kDefaultHorizon = 64;

inline double scaled_tol(double tol, double magnitude) {
  return tol * (1.0 + magnitude);
}

// Immutable square complex matrix with finite entries and dim >= 1.
class CMatrix {
 public:
  explicit CMatrix(Eigen::MatrixXcd m);

  static CMatrix identity(int dim);
  static CMatrix zero(int dim);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXcd& raw() const { return m_; }

  CMatrix adjoint() const { return CMatrix(m_.adjoint()); }

  bool is_zero() const { return m_.isZero(0.0); }
  bool is_hermitian(double tol = kDefaultTol) const;

  friend CMatrix operator+(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator-(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator*(const Complex& s, const CMatrix& a);
  friend CMatrix operator*(const CMatrix& a, const Complex& s) { return s * a; }
  CMatrix operator-() const { return CMatrix(-m_); }

  friend bool operator==(const CMatrix& a, const CMatrix& b) {
    return a.m_.rows() == b.m_.rows() && a.m_ == b.m_;
  }

 private:
  Eigen::MatrixXcd m_;
};

// Fiber C*-norm: the largest singular value.
double mnorm(const CMatrix& a);

// Eigenvalues with multiplicity, sorted by (real, imag). Hermitian inputs are
// symmetrized and solved with the self-adjoint algorithm, so their spectra
// come out exactly real.
std::vector<Complex> mspectrum(const CMatrix& a);

// Hermitian within tol and min eigenvalue >= -tol, both scaled by 1 + mnorm.
bool mis_positive(const CMatrix& a, double tol = kDefaultTol);

// Unique positive square root of a positive matrix. Eigenvalues are clamped
// to [0, inf) before the square root so roundoff cannot produce NaNs.
CMatrix msqrt(const CMatrix& a, double tol = kDefaultTol);

// Inverse via SVD; Singular when the smallest singular value is below the
// scaled tolerance.
CMatrix minverse(const CMatrix& a, double tol = kDefaultTol);

// Smallest eigenvalue of the symmetrized matrix (test margin helper).
double min_hermitian_eigenvalue(const CMatrix& a);

}  // namespace loccstar
