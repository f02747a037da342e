#pragma once

// Seeded generators for algebras, elements, vectors and operators, plus the
// registry of property checks. Reports are machine readable and byte-stable:
// per-trial sub-seeds make parallel and serial runs identical.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "loccstar/io.hpp"
#include "loccstar/operator_algebra.hpp"
#include "loccstar/rng.hpp"

namespace loccstar {

struct TrialConfig {
  std::uint64_t seed = 0;
  int trials = 200;
  int max_fiber_dim = 6;
  int max_fibers = 5;
  int max_rank = 4;
  int prefix_len = 8;
  int horizon = 64;
  double tol = 1e-9;
};

struct PropertyReport {
  std::string id;
  long trials = 0;
  long failures = 0;
  long skipped = 0;               // degenerate trials, counted not failed
  std::optional<double> worst_margin;  // min slack over trials; >= 0 passes
  long exact_flags = 0;           // exact verdicts encountered
  long horizon_flags = 0;         // horizon-verified verdicts encountered
  std::vector<long> failing_trials;  // first few failing trial indices
};

// --- generators -----------------------------------------------------------

CMatrix gen_matrix(Rng& rng, int dim);
LocalAlgebra gen_algebra(Rng& rng, const TrialConfig& cfg);
LocalAlgebra gen_finite_algebra(Rng& rng, const TrialConfig& cfg);
LocalAlgebra gen_tail_algebra(Rng& rng, const TrialConfig& cfg);

// max_tail_degree caps the tail degree in the countable model (ignored for
// finite algebras); degrees 0/1/2 are drawn 60/30/10 below the cap.
LocalElement gen_element(Rng& rng, const LocalAlgebra& a, int max_tail_degree);
LocalElement gen_positive_element(Rng& rng, const LocalAlgebra& a,
                                  int max_tail_degree);
LocalElement gen_hermitian_element(Rng& rng, const LocalAlgebra& a,
                                   int max_tail_degree);
ModuleVector gen_vector(Rng& rng, const HilbertModule& m, int max_tail_degree);
ModuleOperator gen_operator(Rng& rng, const HilbertModule& m,
                            int max_tail_degree);
ModuleOperator gen_self_adjoint_operator(Rng& rng, const HilbertModule& m,
                                         int max_tail_degree);
ModuleOperator gen_positive_operator(Rng& rng, const HilbertModule& m,
                                     int max_tail_degree);

enum class GenKind {
  Algebra,
  Element,
  PositiveElement,
  Vector,
  Operator,
  SelfAdjointOperator,
  PositiveOperator,
};

std::optional<GenKind> parse_gen_kind(const std::string& name);

// Deterministic instance for the CLI: the JSON spec of the generated object,
// wrapped together with the algebra when none was supplied.
Json generate_instance(GenKind kind, const TrialConfig& cfg,
                       const std::optional<LocalAlgebra>& algebra);

// --- suite ----------------------------------------------------------------

const std::vector<std::string>& property_registry();

std::vector<PropertyReport> run_suite(const TrialConfig& cfg);

bool suite_passed(const std::vector<PropertyReport>& reports);

Json report_to_json(const PropertyReport& r);
Json reports_to_json(const std::vector<PropertyReport>& reports);
std::string format_reports_text(const std::vector<PropertyReport>& reports);

// Max over both sets of the distance to the other set (0 for two empty sets).
double hausdorff_distance(const std::vector<Complex>& a,
                          const std::vector<Complex>& b);

// LOCCSTAR_THREADS caps suite parallelism; defaults to the hardware count.
int suite_thread_count();

}  // namespace loccstar
