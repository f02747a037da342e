#include "loccstar/hilbert_module.hpp"

#include <cmath>
#include <utility>

namespace loccstar {

HilbertModule HilbertModule::free(LocalAlgebra algebra, int rank) {
  if (rank < 1) raise(ErrorKind::InvalidSpec, "module rank must be >= 1");
  return HilbertModule(std::move(algebra), rank, std::nullopt);
}

HilbertModule HilbertModule::ideal_module(Ideal ideal) {
  if (ideal.algebra().is_tail_model()) {
    for (const auto& idx : ideal.kernel())
      if (ideal.algebra().position(idx) < 0)
        raise(ErrorKind::UnsupportedTail,
              "ideal-module kernel must lie within the prefix");
  }
  LocalAlgebra a = ideal.algebra();
  return HilbertModule(std::move(a), 1, std::move(ideal));
}

const Ideal& HilbertModule::ideal() const {
  if (!ideal_) raise(ErrorKind::InvalidSpec, "free module has no ideal");
  return *ideal_;
}

ModuleVector::ModuleVector(HilbertModule module,
                           std::vector<LocalElement> entries)
    : module_(std::move(module)), entries_(std::move(entries)) {
  if (static_cast<int>(entries_.size()) != module_.rank())
    raise(ErrorKind::InvalidSpec, "vector has wrong number of entries");
  for (const auto& e : entries_)
    if (!(e.algebra() == module_.algebra()))
      raise(ErrorKind::InvalidSpec, "entry belongs to a different algebra");
  if (module_.is_ideal_module() && !module_.ideal().contains(entries_[0]))
    raise(ErrorKind::InvalidSpec, "entry does not lie in the module's ideal");
}

ModuleVector ModuleVector::zero(const HilbertModule& m) {
  std::vector<LocalElement> entries(
      static_cast<std::size_t>(m.rank()), LocalElement::zero(m.algebra()));
  return ModuleVector(m, std::move(entries));
}

bool ModuleVector::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

namespace {

void require_same_module(const ModuleVector& x, const ModuleVector& y) {
  if (!(x.module() == y.module()))
    raise(ErrorKind::ModuleMismatch, "vectors belong to different modules");
}

}  // namespace

ModuleVector operator+(const ModuleVector& x, const ModuleVector& y) {
  require_same_module(x, y);
  std::vector<LocalElement> entries;
  entries.reserve(x.entries_.size());
  for (std::size_t i = 0; i < x.entries_.size(); ++i)
    entries.push_back(x.entries_[i] + y.entries_[i]);
  return ModuleVector(x.module_, std::move(entries));
}

ModuleVector operator-(const ModuleVector& x, const ModuleVector& y) {
  require_same_module(x, y);
  std::vector<LocalElement> entries;
  entries.reserve(x.entries_.size());
  for (std::size_t i = 0; i < x.entries_.size(); ++i)
    entries.push_back(x.entries_[i] - y.entries_[i]);
  return ModuleVector(x.module_, std::move(entries));
}

ModuleVector operator*(const Complex& s, const ModuleVector& x) {
  std::vector<LocalElement> entries;
  entries.reserve(x.entries_.size());
  for (const auto& e : x.entries_) entries.push_back(s * e);
  return ModuleVector(x.module_, std::move(entries));
}

ModuleVector operator*(const ModuleVector& x, const LocalElement& a) {
  std::vector<LocalElement> entries;
  entries.reserve(x.entries_.size());
  for (const auto& e : x.entries_) entries.push_back(e * a);
  return ModuleVector(x.module_, std::move(entries));
}

LocalElement inner(const ModuleVector& x, const ModuleVector& y) {
  require_same_module(x, y);
  LocalElement acc = x.entries()[0].adjoint() * y.entries()[0];
  for (std::size_t i = 1; i < x.entries().size(); ++i)
    acc = acc + x.entries()[i].adjoint() * y.entries()[i];
  return acc;
}

double module_seminorm(const ModuleVector& x, const FiberIndex& idx) {
  return std::sqrt(seminorm(inner(x, x), idx));
}

double cauchy_schwarz_gap(const ModuleVector& x, const ModuleVector& y,
                          const FiberIndex& idx) {
  require_same_module(x, y);
  double pxx = seminorm(inner(x, x), idx);
  double pyy = seminorm(inner(y, y), idx);
  double pxy = seminorm(inner(x, y), idx);
  return pxx * pyy - pxy * pxy;
}

std::optional<double> sup_module_norm(const ModuleVector& x) {
  auto s = sup_norm(inner(x, x));
  if (!s) return std::nullopt;
  return std::sqrt(*s);
}

ModuleVector smooth(const ModuleVector& x, double t, double tol) {
  if (!(t > 0.0)) raise(ErrorKind::InvalidSpec, "smoothing parameter must be > 0");
  LocalElement gram = inner(x, x);
  if (gram.algebra().is_tail_model() && gram.tail().degree() >= 1)
    raise(ErrorKind::UnsupportedTail,
          "smoothing needs <x,x> with a constant tail");
  LocalElement root = sqrt(gram, tol);
  LocalElement damp = inverse(
      LocalElement::identity(gram.algebra()) + Complex(t, 0.0) * root, tol);
  return x * damp;
}

std::vector<CMatrix> quotient_vector(const ModuleVector& x,
                                     const FiberIndex& idx) {
  std::vector<CMatrix> out;
  out.reserve(x.entries().size());
  for (const auto& e : x.entries()) out.push_back(e.component(idx));
  return out;
}

double fiber_vector_norm(const std::vector<CMatrix>& entries) {
  if (entries.empty()) raise(ErrorKind::InvalidSpec, "empty fiber vector");
  CMatrix gram = entries[0].adjoint() * entries[0];
  for (std::size_t i = 1; i < entries.size(); ++i)
    gram = gram + entries[i].adjoint() * entries[i];
  return std::sqrt(mnorm(gram));
}

}  // namespace loccstar
