#pragma once

// Hilbert modules over a matrix-model locally C*-algebra: free modules A^k
// with <x,y> = sum_i x_i* y_i (A-linear in the second argument), and rank-one
// ideal submodules. The induced seminorm family, the bounded part, smoothing
// maps and quotient fibers are all computed through the algebra layer.

#include <optional>
#include <vector>

#include "loccstar/local_algebra.hpp"

namespace loccstar {

class HilbertModule {
 public:
  static HilbertModule free(LocalAlgebra algebra, int rank);
  // Rank-one module on a closed ideal, inner product a* b.
  static HilbertModule ideal_module(Ideal ideal);

  const LocalAlgebra& algebra() const { return algebra_; }
  int rank() const { return rank_; }
  bool is_ideal_module() const { return ideal_.has_value(); }
  const Ideal& ideal() const;

  friend bool operator==(const HilbertModule&, const HilbertModule&) = default;

 private:
  HilbertModule(LocalAlgebra a, int r, std::optional<Ideal> i)
      : algebra_(std::move(a)), rank_(r), ideal_(std::move(i)) {}
  LocalAlgebra algebra_;
  int rank_;
  std::optional<Ideal> ideal_;
};

class ModuleVector {
 public:
  ModuleVector(HilbertModule module, std::vector<LocalElement> entries);

  static ModuleVector zero(const HilbertModule& m);

  const HilbertModule& module() const { return module_; }
  const std::vector<LocalElement>& entries() const { return entries_; }

  bool is_zero() const;

  friend ModuleVector operator+(const ModuleVector& x, const ModuleVector& y);
  friend ModuleVector operator-(const ModuleVector& x, const ModuleVector& y);
  friend ModuleVector operator*(const Complex& s, const ModuleVector& x);
  // Right module action x.a.
  friend ModuleVector operator*(const ModuleVector& x, const LocalElement& a);

  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

 private:
  HilbertModule module_;
  std::vector<LocalElement> entries_;
};

// <x,y> = sum_i x_i* y_i.
LocalElement inner(const ModuleVector& x, const ModuleVector& y);

// Induced seminorm P_alpha(<x,x>)^(1/2).
double module_seminorm(const ModuleVector& x, const FiberIndex& idx);

// P(<x,x>) P(<y,y>) - P(<x,y>)^2 at idx; nonnegative up to roundoff.
double cauchy_schwarz_gap(const ModuleVector& x, const ModuleVector& y,
                          const FiberIndex& idx);

// sup_alpha of the induced seminorms; nullopt when <x,x> is unbounded.
std::optional<double> sup_module_norm(const ModuleVector& x);

// x (e + t sqrt(<x,x>))^{-1}: pushes x into the bounded part; every induced
// seminorm of the t = 1 image is <= 1.
ModuleVector smooth(const ModuleVector& x, double t, double tol = kDefaultTol);

// Entrywise image in the quotient module over the fiber at idx.
std::vector<CMatrix> quotient_vector(const ModuleVector& x,
                                     const FiberIndex& idx);

// Hilbert-module norm of a fiber vector: norm(sum_i m_i* m_i)^(1/2).
double fiber_vector_norm(const std::vector<CMatrix>& entries);

}  // namespace loccstar
