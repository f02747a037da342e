#pragma once

// Adjointable operators on a free module A^k, represented as k x k matrices
// over A acting by (Tx)_i = sum_j t_ij x_j. Substituting fiber components
// into the block pattern flattens T into one element of an algebra whose
// fibers have dimension d*k; the operator seminorm family, spectra and
// positivity are those of the flattened element, which makes T -> T_alpha a
// structural *-homomorphism.

#include <optional>
#include <vector>

#include "loccstar/hilbert_module.hpp"

namespace loccstar {

class ModuleOperator {
 public:
  // entries is row-major, size rank*rank; module must be free.
  ModuleOperator(HilbertModule module, std::vector<LocalElement> entries);

  static ModuleOperator identity(const HilbertModule& m);
  static ModuleOperator zero(const HilbertModule& m);

  const HilbertModule& module() const { return module_; }
  int rank() const { return module_.rank(); }
  const LocalElement& entry(int i, int j) const;

  ModuleOperator adjoint() const;  // (T*)_ij = (t_ji)*

  // The block-substituted element over the d*k fiber algebra.
  LocalElement flattened() const;

  friend ModuleOperator operator+(const ModuleOperator&, const ModuleOperator&);
  friend ModuleOperator operator-(const ModuleOperator&, const ModuleOperator&);
  friend ModuleOperator operator*(const Complex& s, const ModuleOperator& t);
  friend ModuleOperator operator*(const ModuleOperator&, const ModuleOperator&);

  friend bool operator==(const ModuleOperator&, const ModuleOperator&) = default;

 private:
  HilbertModule module_;
  std::vector<LocalElement> entries_;
};

ModuleVector apply(const ModuleOperator& t, const ModuleVector& x);
ModuleOperator adjoint(const ModuleOperator& t);
ModuleOperator compose(const ModuleOperator& t1, const ModuleOperator& t2);

double op_seminorm(const ModuleOperator& t, const FiberIndex& idx);
Spectrum op_spectrum(const ModuleOperator& t, int horizon = kDefaultHorizon);
Verdict op_is_positive(const ModuleOperator& t, int horizon = kDefaultHorizon,
                       double tol = kDefaultTol);
CMatrix quotient_operator(const ModuleOperator& t, const FiberIndex& idx);
std::optional<double> op_sup_norm(const ModuleOperator& t);

}  // namespace loccstar
