#include "loccstar/local_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

namespace loccstar {

// ---------------------------------------------------------------------------
// LocalAlgebra

LocalAlgebra LocalAlgebra::finite(std::vector<std::string> labels,
                                  std::vector<int> dims) {
  if (labels.empty() || labels.size() != dims.size())
    raise(ErrorKind::InvalidSpec, "finite algebra needs matching labels/dims");
  std::vector<std::pair<std::string, int>> fibers;
  fibers.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (dims[i] < 1)
      raise(ErrorKind::InvalidSpec, "fiber dimension must be >= 1");
    fibers.emplace_back(std::move(labels[i]), dims[i]);
  }
  std::sort(fibers.begin(), fibers.end());
  for (std::size_t i = 1; i < fibers.size(); ++i)
    if (fibers[i].first == fibers[i - 1].first)
      raise(ErrorKind::InvalidSpec, "duplicate fiber label " + fibers[i].first);

  LocalAlgebra a;
  a.tail_model_ = false;
  for (auto& [label, dim] : fibers) {
    a.labels_.push_back(std::move(label));
    a.dims_.push_back(dim);
  }
  return a;
}

LocalAlgebra LocalAlgebra::tail(int dim, int prefix_len) {
  if (dim < 1) raise(ErrorKind::InvalidSpec, "fiber dimension must be >= 1");
  if (prefix_len < 1) raise(ErrorKind::InvalidSpec, "prefix length must be >= 1");
  LocalAlgebra a;
  a.tail_model_ = true;
  a.dim_ = dim;
  a.prefix_len_ = prefix_len;
  return a;
}

const std::vector<std::string>& LocalAlgebra::labels() const {
  if (tail_model_)
    raise(ErrorKind::InvalidSpec, "tail-model algebra has no labels");
  return labels_;
}

int LocalAlgebra::tail_dim() const {
  if (!tail_model_)
    raise(ErrorKind::InvalidSpec, "finite algebra has no tail dimension");
  return dim_;
}

int LocalAlgebra::prefix_len() const {
  if (!tail_model_)
    raise(ErrorKind::InvalidSpec, "finite algebra has no prefix");
  return prefix_len_;
}

int LocalAlgebra::position(const FiberIndex& idx) const {
  if (tail_model_) {
    if (idx.is_label())
      raise(ErrorKind::UnknownIndex,
            "tail-model index must be a natural number, got '" + idx.str() + "'");
    std::uint64_t n = idx.nat_value();
    if (n < 1) raise(ErrorKind::UnknownIndex, "indices start at 1");
    if (n > static_cast<std::uint64_t>(prefix_len_)) return -1;
    return static_cast<int>(n - 1);
  }
  if (!idx.is_label())
    raise(ErrorKind::UnknownIndex, "finite-model index must be a label");
  auto it = std::lower_bound(labels_.begin(), labels_.end(), idx.label_value());
  if (it == labels_.end() || *it != idx.label_value())
    raise(ErrorKind::UnknownIndex, "no fiber labeled '" + idx.label_value() + "'");
  return static_cast<int>(it - labels_.begin());
}

int LocalAlgebra::dim_at(const FiberIndex& idx) const {
  int pos = position(idx);
  return pos < 0 ? dim_ : (tail_model_ ? dim_ : dims_[pos]);
}

std::vector<FiberIndex> LocalAlgebra::prefix_indices() const {
  std::vector<FiberIndex> out;
  if (tail_model_) {
    out.reserve(prefix_len_);
    for (int n = 1; n <= prefix_len_; ++n)
      out.push_back(FiberIndex::at(static_cast<std::uint64_t>(n)));
  } else {
    out.reserve(labels_.size());
    for (const auto& l : labels_) out.push_back(FiberIndex::label(l));
  }
  return out;
}

// ---------------------------------------------------------------------------
// TailRule

TailRule::TailRule(std::vector<CMatrix> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    raise(ErrorKind::InvalidSpec, "tail rule needs at least one coefficient");
  for (const auto& c : coeffs_)
    if (c.dim() != coeffs_.front().dim())
      raise(ErrorKind::InvalidSpec, "tail coefficients must share one dimension");
  while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

TailRule TailRule::constant(CMatrix c0) {
  return TailRule(std::vector<CMatrix>{std::move(c0)});
}

TailRule TailRule::zero(int dim) { return constant(CMatrix::zero(dim)); }

CMatrix TailRule::eval(std::uint64_t n) const {
  const double x = static_cast<double>(n);
  Eigen::MatrixXcd acc = coeffs_.back().raw();
  for (int k = static_cast<int>(coeffs_.size()) - 2; k >= 0; --k)
    acc = acc * x + coeffs_[static_cast<std::size_t>(k)].raw();
  return CMatrix(std::move(acc));
}

bool TailRule::is_hermitian(double tol) const {
  // A matrix polynomial is Hermitian at infinitely many integers iff every
  // coefficient is Hermitian, so this is an exact decision.
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [&](const CMatrix& c) { return c.is_hermitian(tol); });
}

TailRule TailRule::adjoint() const {
  std::vector<CMatrix> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.adjoint());
  return TailRule(std::move(out));
}

TailRule operator+(const TailRule& a, const TailRule& b) {
  if (a.dim() != b.dim())
    raise(ErrorKind::InvalidSpec, "tail dimension mismatch");
  std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  std::vector<CMatrix> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    CMatrix c = CMatrix::zero(a.dim());
    if (k < a.coeffs_.size()) c = c + a.coeffs_[k];
    if (k < b.coeffs_.size()) c = c + b.coeffs_[k];
    out.push_back(std::move(c));
  }
  return TailRule(std::move(out));
}

TailRule operator-(const TailRule& a, const TailRule& b) {
  return a + Complex(-1.0, 0.0) * b;
}

TailRule operator*(const TailRule& a, const TailRule& b) {
  if (a.dim() != b.dim())
    raise(ErrorKind::InvalidSpec, "tail dimension mismatch");
  std::vector<CMatrix> out(a.coeffs_.size() + b.coeffs_.size() - 1,
                           CMatrix::zero(a.dim()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
  return TailRule(std::move(out));
}

TailRule operator*(const Complex& s, const TailRule& a) {
  std::vector<CMatrix> out;
  out.reserve(a.coeffs_.size());
  for (const auto& c : a.coeffs_) out.push_back(s * c);
  return TailRule(std::move(out));
}

// ---------------------------------------------------------------------------
// LocalElement

LocalElement::LocalElement(LocalAlgebra algebra, std::vector<CMatrix> components,
                           std::optional<TailRule> tail)
    : algebra_(std::move(algebra)),
      components_(std::move(components)),
      tail_(std::move(tail)) {
  auto idx = algebra_.prefix_indices();
  if (components_.size() != idx.size())
    raise(ErrorKind::InvalidSpec, "element has wrong number of components");
  for (std::size_t i = 0; i < idx.size(); ++i)
    if (components_[i].dim() != algebra_.dim_at(idx[i]))
      raise(ErrorKind::InvalidSpec,
            "component dimension mismatch at " + idx[i].str());
  if (algebra_.is_tail_model()) {
    if (!tail_) raise(ErrorKind::InvalidSpec, "tail-model element needs a tail");
    if (tail_->dim() != algebra_.tail_dim())
      raise(ErrorKind::InvalidSpec, "tail coefficient dimension mismatch");
  } else if (tail_) {
    raise(ErrorKind::InvalidSpec, "finite-model element cannot carry a tail");
  }
}

LocalElement LocalElement::zero(const LocalAlgebra& a) {
  std::vector<CMatrix> comps;
  for (const auto& idx : a.prefix_indices())
    comps.push_back(CMatrix::zero(a.dim_at(idx)));
  std::optional<TailRule> tail;
  if (a.is_tail_model()) tail = TailRule::zero(a.tail_dim());
  return LocalElement(a, std::move(comps), std::move(tail));
}

LocalElement LocalElement::identity(const LocalAlgebra& a) {
  std::vector<CMatrix> comps;
  for (const auto& idx : a.prefix_indices())
    comps.push_back(CMatrix::identity(a.dim_at(idx)));
  std::optional<TailRule> tail;
  if (a.is_tail_model())
    tail = TailRule::constant(CMatrix::identity(a.tail_dim()));
  return LocalElement(a, std::move(comps), std::move(tail));
}

const TailRule& LocalElement::tail() const {
  if (!tail_) raise(ErrorKind::InvalidSpec, "finite-model element has no tail");
  return *tail_;
}

CMatrix LocalElement::component(const FiberIndex& idx) const {
  int pos = algebra_.position(idx);
  if (pos < 0) return tail_->eval(idx.nat_value());
  return components_[static_cast<std::size_t>(pos)];
}

LocalElement LocalElement::adjoint() const {
  std::vector<CMatrix> comps;
  comps.reserve(components_.size());
  for (const auto& c : components_) comps.push_back(c.adjoint());
  std::optional<TailRule> tail;
  if (tail_) tail = tail_->adjoint();
  return LocalElement(algebra_, std::move(comps), std::move(tail));
}

bool LocalElement::is_zero() const {
  for (const auto& c : components_)
    if (!c.is_zero()) return false;
  return !tail_ || tail_->is_zero();
}

bool LocalElement::is_hermitian(double tol) const {
  for (const auto& c : components_)
    if (!c.is_hermitian(tol)) return false;
  return !tail_ || tail_->is_hermitian(tol);
}

namespace {

void require_same_algebra(const LocalElement& a, const LocalElement& b) {
  if (!(a.algebra() == b.algebra()))
    raise(ErrorKind::ModuleMismatch, "elements belong to different algebras");
}

template <typename Fc, typename Ft>
LocalElement zip(const LocalElement& a, const LocalElement& b, Fc&& fc,
                 Ft&& ft) {
  require_same_algebra(a, b);
  std::vector<CMatrix> comps;
  comps.reserve(a.components().size());
  for (std::size_t i = 0; i < a.components().size(); ++i)
    comps.push_back(fc(a.components()[i], b.components()[i]));
  std::optional<TailRule> tail;
  if (a.algebra().is_tail_model()) tail = ft(a.tail(), b.tail());
  return LocalElement(a.algebra(), std::move(comps), std::move(tail));
}

}  // namespace

LocalElement operator+(const LocalElement& a, const LocalElement& b) {
  return zip(a, b, [](const CMatrix& x, const CMatrix& y) { return x + y; },
             [](const TailRule& x, const TailRule& y) { return x + y; });
}

LocalElement operator-(const LocalElement& a, const LocalElement& b) {
  return zip(a, b, [](const CMatrix& x, const CMatrix& y) { return x - y; },
             [](const TailRule& x, const TailRule& y) { return x - y; });
}

LocalElement operator*(const LocalElement& a, const LocalElement& b) {
  return zip(a, b, [](const CMatrix& x, const CMatrix& y) { return x * y; },
             [](const TailRule& x, const TailRule& y) { return x * y; });
}

LocalElement operator*(const Complex& s, const LocalElement& a) {
  std::vector<CMatrix> comps;
  comps.reserve(a.components().size());
  for (const auto& c : a.components()) comps.push_back(s * c);
  std::optional<TailRule> tail;
  if (a.algebra().is_tail_model()) tail = s * a.tail();
  return LocalElement(a.algebra(), std::move(comps), std::move(tail));
}

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(LocalAlgebra algebra, std::vector<FiberIndex> kernel)
    : algebra_(std::move(algebra)), kernel_(std::move(kernel)) {
  for (const auto& idx : kernel_) algebra_.position(idx);  // validates
  std::sort(kernel_.begin(), kernel_.end());
  kernel_.erase(std::unique(kernel_.begin(), kernel_.end()), kernel_.end());
}

bool Ideal::contains(const LocalElement& a) const {
  if (!(a.algebra() == algebra_)) return false;
  for (const auto& idx : kernel_)
    if (!a.component(idx).is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Operations

double seminorm(const LocalElement& a, const FiberIndex& idx) {
  return mnorm(a.component(idx));
}

std::optional<double> sup_norm(const LocalElement& a) {
  double best = 0.0;
  for (const auto& c : a.components()) best = std::max(best, mnorm(c));
  if (a.algebra().is_tail_model()) {
    if (a.tail().degree() >= 1) return std::nullopt;
    best = std::max(best, mnorm(a.tail().coeffs()[0]));
  }
  return best;
}

bool is_in_bounded_part(const LocalElement& a) {
  return sup_norm(a).has_value();
}

namespace {

void merge_points(std::vector<Complex>& into, std::vector<Complex> pts) {
  into.insert(into.end(), pts.begin(), pts.end());
}

void finalize_points(std::vector<Complex>& pts) {
  std::sort(pts.begin(), pts.end(), [](const Complex& x, const Complex& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

}  // namespace

Spectrum spectrum(const LocalElement& a, int horizon) {
  if (horizon < 1) raise(ErrorKind::InvalidSpec, "horizon must be >= 1");
  Spectrum out;
  for (const auto& c : a.components()) merge_points(out.points, mspectrum(c));
  if (a.algebra().is_tail_model()) {
    const TailRule& t = a.tail();
    if (t.degree() == 0) {
      merge_points(out.points, mspectrum(t.coeffs()[0]));
    } else {
      out.exact = false;
      const int n0 = a.algebra().prefix_len();
      for (int h = 1; h <= horizon; ++h)
        merge_points(out.points,
                     mspectrum(t.eval(static_cast<std::uint64_t>(n0 + h))));
    }
  }
  finalize_points(out.points);
  return out;
}

Verdict is_positive(const LocalElement& a, int horizon, double tol) {
  if (horizon < 1) raise(ErrorKind::InvalidSpec, "horizon must be >= 1");
  // Hermitianness of the tail is decided exactly coefficientwise, so a
  // non-Hermitian element is exactly non-positive regardless of horizon.
  if (!a.is_hermitian(tol)) return {false, true};
  for (const auto& c : a.components())
    if (!mis_positive(c, tol)) return {false, true};
  if (!a.algebra().is_tail_model()) return {true, true};

  const TailRule& t = a.tail();
  if (t.degree() == 0)
    return {mis_positive(t.coeffs()[0], tol), true};
  const int n0 = a.algebra().prefix_len();
  for (int h = 1; h <= horizon; ++h)
    if (!mis_positive(t.eval(static_cast<std::uint64_t>(n0 + h)), tol))
      return {false, true};
  if (!mis_positive(t.leading(), tol)) return {false, true};
  return {true, false};
}

LocalElement sqrt(const LocalElement& a, double tol) {
  if (a.algebra().is_tail_model() && a.tail().degree() >= 1)
    raise(ErrorKind::UnsupportedTail,
          "square root of a growing tail leaves the representable set");
  Verdict v = is_positive(a, kDefaultHorizon, tol);
  if (!v.value) raise(ErrorKind::NotPositive, "sqrt requires a positive element");
  std::vector<CMatrix> comps;
  comps.reserve(a.components().size());
  for (const auto& c : a.components()) comps.push_back(msqrt(c, tol));
  std::optional<TailRule> tail;
  if (a.algebra().is_tail_model())
    tail = TailRule::constant(msqrt(a.tail().coeffs()[0], tol));
  return LocalElement(a.algebra(), std::move(comps), std::move(tail));
}

LocalElement inverse(const LocalElement& a, double tol) {
  if (a.algebra().is_tail_model() && a.tail().degree() >= 1)
    raise(ErrorKind::UnsupportedTail,
          "inverse of a growing tail leaves the representable set");
  auto idx = a.algebra().prefix_indices();
  std::vector<CMatrix> comps;
  comps.reserve(a.components().size());
  for (std::size_t i = 0; i < a.components().size(); ++i) {
    try {
      comps.push_back(minverse(a.components()[i], tol));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Singular)
        raise(ErrorKind::Singular, "component at " + idx[i].str() + " is singular");
      throw;
    }
  }
  std::optional<TailRule> tail;
  if (a.algebra().is_tail_model()) {
    try {
      tail = TailRule::constant(minverse(a.tail().coeffs()[0], tol));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Singular)
        raise(ErrorKind::Singular, "tail coefficient is singular");
      throw;
    }
  }
  return LocalElement(a.algebra(), std::move(comps), std::move(tail));
}

CMatrix quotient_map(const LocalElement& a, const FiberIndex& idx) {
  return a.component(idx);
}

LocalElement approximate_identity(const Ideal& ideal) {
  if (ideal.kernel().empty())
    raise(ErrorKind::EmptyKernel, "ideal has an empty kernel index set");
  const LocalAlgebra& alg = ideal.algebra();
  if (alg.is_tail_model()) {
    for (const auto& idx : ideal.kernel())
      if (alg.position(idx) < 0)
        raise(ErrorKind::UnsupportedTail,
              "kernel index " + idx.str() +
                  " lies beyond the prefix; the ideal's unit is not representable");
  }
  LocalElement u = LocalElement::identity(alg);
  auto prefix = alg.prefix_indices();
  std::vector<CMatrix> comps = u.components();
  for (const auto& idx : ideal.kernel()) {
    int pos = alg.position(idx);
    comps[static_cast<std::size_t>(pos)] = CMatrix::zero(alg.dim_at(idx));
  }
  std::optional<TailRule> tail;
  if (alg.is_tail_model())
    tail = TailRule::constant(CMatrix::identity(alg.tail_dim()));
  return LocalElement(alg, std::move(comps), std::move(tail));
}

}  // namespace loccstar
