#include "loccstar/operator_algebra.hpp"

#include <utility>

namespace loccstar {

ModuleOperator::ModuleOperator(HilbertModule module,
                               std::vector<LocalElement> entries)
    : module_(std::move(module)), entries_(std::move(entries)) {
  if (module_.is_ideal_module())
    raise(ErrorKind::InvalidSpec, "operators are supported on free modules only");
  const std::size_t k = static_cast<std::size_t>(module_.rank());
  if (entries_.size() != k * k)
    raise(ErrorKind::InvalidSpec, "operator matrix has wrong shape");
  for (const auto& e : entries_)
    if (!(e.algebra() == module_.algebra()))
      raise(ErrorKind::InvalidSpec, "operator entry in a different algebra");
}

ModuleOperator ModuleOperator::identity(const HilbertModule& m) {
  const int k = m.rank();
  std::vector<LocalElement> entries;
  entries.reserve(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      entries.push_back(i == j ? LocalElement::identity(m.algebra())
                               : LocalElement::zero(m.algebra()));
  return ModuleOperator(m, std::move(entries));
}

ModuleOperator ModuleOperator::zero(const HilbertModule& m) {
  const int k = m.rank();
  std::vector<LocalElement> entries(static_cast<std::size_t>(k) * k,
                                    LocalElement::zero(m.algebra()));
  return ModuleOperator(m, std::move(entries));
}

const LocalElement& ModuleOperator::entry(int i, int j) const {
  const int k = rank();
  if (i < 0 || j < 0 || i >= k || j >= k)
    raise(ErrorKind::InvalidSpec, "operator entry out of range");
  return entries_[static_cast<std::size_t>(i) * k + j];
}

ModuleOperator ModuleOperator::adjoint() const {
  const int k = rank();
  std::vector<LocalElement> entries;
  entries.reserve(entries_.size());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) entries.push_back(entry(j, i).adjoint());
  return ModuleOperator(module_, std::move(entries));
}

LocalElement ModuleOperator::flattened() const {
  const int k = rank();
  const LocalAlgebra& alg = module_.algebra();

  auto big_at = [&](const FiberIndex& idx, int dim) {
    Eigen::MatrixXcd big = Eigen::MatrixXcd::Zero(dim * k, dim * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        big.block(i * dim, j * dim, dim, dim) = entry(i, j).component(idx).raw();
    return CMatrix(std::move(big));
  };

  if (!alg.is_tail_model()) {
    std::vector<std::string> labels = alg.labels();
    std::vector<int> dims;
    dims.reserve(labels.size());
    for (const auto& l : labels) dims.push_back(alg.dim_at(FiberIndex::label(l)) * k);
    LocalAlgebra flat = LocalAlgebra::finite(labels, dims);
    std::vector<CMatrix> comps;
    for (const auto& l : alg.labels())
      comps.push_back(big_at(FiberIndex::label(l), alg.dim_at(FiberIndex::label(l))));
    return LocalElement(flat, std::move(comps), std::nullopt);
  }

  const int d = alg.tail_dim();
  LocalAlgebra flat = LocalAlgebra::tail(d * k, alg.prefix_len());
  std::vector<CMatrix> comps;
  for (int n = 1; n <= alg.prefix_len(); ++n)
    comps.push_back(big_at(FiberIndex::at(static_cast<std::uint64_t>(n)), d));

  int maxdeg = 0;
  for (const auto& e : entries_) maxdeg = std::max(maxdeg, e.tail().degree());
  std::vector<CMatrix> coeffs;
  coeffs.reserve(static_cast<std::size_t>(maxdeg) + 1);
  for (int m = 0; m <= maxdeg; ++m) {
    Eigen::MatrixXcd big = Eigen::MatrixXcd::Zero(d * k, d * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        const TailRule& t = entry(i, j).tail();
        if (m <= t.degree())
          big.block(i * d, j * d, d, d) = t.coeffs()[static_cast<std::size_t>(m)].raw();
      }
    coeffs.push_back(CMatrix(std::move(big)));
  }
  return LocalElement(flat, std::move(comps), TailRule(std::move(coeffs)));
}

namespace {

void require_same_module(const ModuleOperator& a, const ModuleOperator& b) {
  if (!(a.module() == b.module()))
    raise(ErrorKind::ModuleMismatch, "operators act on different modules");
}

}  // namespace

ModuleOperator operator+(const ModuleOperator& a, const ModuleOperator& b) {
  require_same_module(a, b);
  const int k = a.rank();
  std::vector<LocalElement> entries;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) entries.push_back(a.entry(i, j) + b.entry(i, j));
  return ModuleOperator(a.module(), std::move(entries));
}

ModuleOperator operator-(const ModuleOperator& a, const ModuleOperator& b) {
  require_same_module(a, b);
  const int k = a.rank();
  std::vector<LocalElement> entries;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) entries.push_back(a.entry(i, j) - b.entry(i, j));
  return ModuleOperator(a.module(), std::move(entries));
}

ModuleOperator operator*(const Complex& s, const ModuleOperator& t) {
  const int k = t.rank();
  std::vector<LocalElement> entries;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) entries.push_back(s * t.entry(i, j));
  return ModuleOperator(t.module(), std::move(entries));
}

ModuleOperator operator*(const ModuleOperator& a, const ModuleOperator& b) {
  return compose(a, b);
}

ModuleOperator compose(const ModuleOperator& t1, const ModuleOperator& t2) {
  require_same_module(t1, t2);
  const int k = t1.rank();
  std::vector<LocalElement> entries;
  entries.reserve(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      LocalElement acc = t1.entry(i, 0) * t2.entry(0, j);
      for (int l = 1; l < k; ++l) acc = acc + t1.entry(i, l) * t2.entry(l, j);
      entries.push_back(std::move(acc));
    }
  return ModuleOperator(t1.module(), std::move(entries));
}

ModuleVector apply(const ModuleOperator& t, const ModuleVector& x) {
  if (!(t.module() == x.module()))
    raise(ErrorKind::ModuleMismatch, "operator and vector modules differ");
  const int k = t.rank();
  std::vector<LocalElement> entries;
  entries.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    LocalElement acc = t.entry(i, 0) * x.entries()[0];
    for (int j = 1; j < k; ++j) acc = acc + t.entry(i, j) * x.entries()[static_cast<std::size_t>(j)];
    entries.push_back(std::move(acc));
  }
  return ModuleVector(t.module(), std::move(entries));
}

ModuleOperator adjoint(const ModuleOperator& t) { return t.adjoint(); }

double op_seminorm(const ModuleOperator& t, const FiberIndex& idx) {
  return seminorm(t.flattened(), idx);
}

Spectrum op_spectrum(const ModuleOperator& t, int horizon) {
  return spectrum(t.flattened(), horizon);
}

Verdict op_is_positive(const ModuleOperator& t, int horizon, double tol) {
  return is_positive(t.flattened(), horizon, tol);
}

CMatrix quotient_operator(const ModuleOperator& t, const FiberIndex& idx) {
  return quotient_map(t.flattened(), idx);
}

std::optional<double> op_sup_norm(const ModuleOperator& t) {
  return sup_norm(t.flattened());
}

}  // namespace loccstar
