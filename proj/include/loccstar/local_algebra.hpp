#pragma once

// A locally C*-algebra realized as a family of matrix fibers indexed either
// by a finite label set or by all of N with a polynomial tail rule. Every
// seminorm of the family is the fiber matrix norm, so the whole seminorm
// calculus (bounded part, spectra, positivity, square roots, inverses,
// approximate identities of ideals) is computed exactly or with an explicit
// horizon flag.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "loccstar/cmatrix.hpp"

namespace loccstar {

// Index into the seminorm family: a label in the finite model, a natural
// number n >= 1 in the countable model.
class FiberIndex {
 public:
  static FiberIndex label(std::string name) {
    return FiberIndex(std::move(name));
  }
  static FiberIndex at(std::uint64_t n) { return FiberIndex(n); }

  bool is_label() const { return key_.index() == 0; }
  const std::string& label_value() const { return std::get<0>(key_); }
  std::uint64_t nat_value() const { return std::get<1>(key_); }

  std::string str() const {
    return is_label() ? label_value() : std::to_string(nat_value());
  }

  friend bool operator==(const FiberIndex&, const FiberIndex&) = default;
  friend bool operator<(const FiberIndex& a, const FiberIndex& b) {
    return a.key_ < b.key_;
  }

 private:
  explicit FiberIndex(std::string s) : key_(std::move(s)) {}
  explicit FiberIndex(std::uint64_t n) : key_(n) {}
  std::variant<std::string, std::uint64_t> key_;
};

// The index set plus fiber dimensions. Finite: distinct labels, one dimension
// each; countable ("tail model"): a single dimension shared by every n, with
// explicit components kept for n <= prefix_len.
class LocalAlgebra {
 public:
  static LocalAlgebra finite(std::vector<std::string> labels,
                             std::vector<int> dims);
  static LocalAlgebra tail(int dim, int prefix_len);

  bool is_tail_model() const { return tail_model_; }

  // Finite model: labels in deterministic (sorted) order.
  const std::vector<std::string>& labels() const;
  // Tail model.
  int tail_dim() const;
  int prefix_len() const;

  int dim_at(const FiberIndex& idx) const;  // UnknownIndex on bad lookup
  // Position in component storage, or -1 for tail-model indices beyond the
  // prefix. UnknownIndex if the index does not belong to this algebra.
  int position(const FiberIndex& idx) const;
  // The finitely many explicitly stored indices, in storage order.
  std::vector<FiberIndex> prefix_indices() const;

  friend bool operator==(const LocalAlgebra&, const LocalAlgebra&) = default;

 private:
  LocalAlgebra() = default;
  bool tail_model_ = false;
  std::vector<std::string> labels_;  // finite model, sorted
  std::vector<int> dims_;            // finite model, aligned with labels_
  int dim_ = 0;                      // tail model
  int prefix_len_ = 0;               // tail model
};

// Polynomial tail a_n = sum_k n^k C_k for n beyond the prefix. Trailing zero
// coefficients are trimmed, so degree() is the effective degree (0 for the
// zero tail, which keeps a single zero coefficient).
class TailRule {
 public:
  explicit TailRule(std::vector<CMatrix> coeffs);

  static TailRule constant(CMatrix c0);
  static TailRule zero(int dim);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  int dim() const { return coeffs_.front().dim(); }
  const std::vector<CMatrix>& coeffs() const { return coeffs_; }
  const CMatrix& leading() const { return coeffs_.back(); }

  CMatrix eval(std::uint64_t n) const;

  bool is_zero() const { return degree() == 0 && coeffs_[0].is_zero(); }
  bool is_hermitian(double tol = kDefaultTol) const;

  TailRule adjoint() const;
  friend TailRule operator+(const TailRule& a, const TailRule& b);
  friend TailRule operator-(const TailRule& a, const TailRule& b);
  friend TailRule operator*(const TailRule& a, const TailRule& b);
  friend TailRule operator*(const Complex& s, const TailRule& a);

  friend bool operator==(const TailRule&, const TailRule&) = default;

 private:
  std::vector<CMatrix> coeffs_;  // C_0 .. C_K, size >= 1, back() nonzero or size 1
};

// One element of the algebra: a matrix per explicitly stored index, plus the
// tail rule in the countable model.
class LocalElement {
 public:
  LocalElement(LocalAlgebra algebra, std::vector<CMatrix> components,
               std::optional<TailRule> tail);

  static LocalElement zero(const LocalAlgebra& a);
  static LocalElement identity(const LocalAlgebra& a);

  const LocalAlgebra& algebra() const { return algebra_; }
  const std::vector<CMatrix>& components() const { return components_; }
  const TailRule& tail() const;
  int tail_degree() const { return tail_ ? tail_->degree() : 0; }

  // The image in the fiber at idx (tail-evaluated beyond the prefix).
  CMatrix component(const FiberIndex& idx) const;

  LocalElement adjoint() const;
  bool is_zero() const;
  bool is_hermitian(double tol = kDefaultTol) const;

  friend LocalElement operator+(const LocalElement& a, const LocalElement& b);
  friend LocalElement operator-(const LocalElement& a, const LocalElement& b);
  friend LocalElement operator*(const LocalElement& a, const LocalElement& b);
  friend LocalElement operator*(const Complex& s, const LocalElement& a);
  friend LocalElement operator*(const LocalElement& a, const Complex& s) {
    return s * a;
  }
  LocalElement operator-() const { return Complex(-1.0, 0.0) * *this; }

  friend bool operator==(const LocalElement&, const LocalElement&) = default;

 private:
  LocalAlgebra algebra_;
  std::vector<CMatrix> components_;
  std::optional<TailRule> tail_;
};

// Kernel-type ideal I_S = {a : a_alpha = 0 for all alpha in S}.
class Ideal {
 public:
  Ideal(LocalAlgebra algebra, std::vector<FiberIndex> kernel);

  const LocalAlgebra& algebra() const { return algebra_; }
  const std::vector<FiberIndex>& kernel() const { return kernel_; }

  bool contains(const LocalElement& a) const;  // exact zero test per site

  friend bool operator==(const Ideal&, const Ideal&) = default;

 private:
  LocalAlgebra algebra_;
  std::vector<FiberIndex> kernel_;  // sorted, deduplicated
};

struct Verdict {
  bool value = false;
  bool exact = true;  // false when the verdict rests on a horizon check
};

struct Spectrum {
  std::vector<Complex> points;  // sorted by (real, imag), exact dups removed
  bool exact = true;
};

// P_alpha(a): the fiber norm at idx.
double seminorm(const LocalElement& a, const FiberIndex& idx);

// sup over the whole family; nullopt means unbounded (possible only for
// growing tails, where it is decided exactly from the effective degree).
std::optional<double> sup_norm(const LocalElement& a);
bool is_in_bounded_part(const LocalElement& a);

// Union of fiber spectra. Constant tails contribute their coefficient's
// spectrum once (exact); growing tails are scanned up to prefix + horizon.
Spectrum spectrum(const LocalElement& a, int horizon = kDefaultHorizon);

// Positivity across every fiber. False verdicts are always exact (they carry
// a witness); true verdicts are exact unless the tail grows, in which case
// the prefix, the horizon window, and the leading coefficient were checked.
Verdict is_positive(const LocalElement& a, int horizon = kDefaultHorizon,
                    double tol = kDefaultTol);

LocalElement sqrt(const LocalElement& a, double tol = kDefaultTol);
LocalElement inverse(const LocalElement& a, double tol = kDefaultTol);

// Quotient *-homomorphism a -> a_alpha.
CMatrix quotient_map(const LocalElement& a, const FiberIndex& idx);

// The unit of a finite-kernel ideal: zero on the kernel, identity elsewhere.
// As a constant net it is an exact approximate identity of I_S.
LocalElement approximate_identity(const Ideal& ideal);

}  // namespace loccstar
