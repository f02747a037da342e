#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "loccstar/suite.hpp"

using namespace loccstar;

TEST_CASE("registry is the fixed property id set") {
  const std::set<std::string> expected = {
      "Def1.1-1", "Def1.1-2", "Def1.1-3", "Eq1.1",  "L1.1a", "L1.1c", "L1.1d",
      "L1.2a",    "L1.2b",    "L1.2c",    "Rem1.1", "ApproxId", "Def2.1",
      "Eq2.1",    "L2.2-1",   "L2.2-2",   "L2.2-3", "Eq2.4", "L2.3a", "L2.3b",
      "L2.4",     "L2.5",     "Thm2.3",   "Def3.1", "Eq3.1", "L3.2",  "Eq3.6",
      "P3.1a",    "P3.1b",    "P3.1c",    "P3.2",   "P3.3"};
  const auto& reg = property_registry();
  CHECK(reg.size() == 32);
  CHECK(std::set<std::string>(reg.begin(), reg.end()) == expected);
}

TEST_CASE("generators are deterministic given the seed") {
  TrialConfig cfg;
  Rng r1(42), r2(42);
  LocalAlgebra a1 = gen_algebra(r1, cfg);
  LocalAlgebra a2 = gen_algebra(r2, cfg);
  CHECK(a1 == a2);
  CHECK(gen_element(r1, a1, 2) == gen_element(r2, a2, 2));
  HilbertModule m1 = HilbertModule::free(a1, 3);
  HilbertModule m2 = HilbertModule::free(a2, 3);
  CHECK(gen_vector(r1, m1, 1) == gen_vector(r2, m2, 1));
  CHECK(gen_operator(r1, m1, 1) == gen_operator(r2, m2, 1));
}

TEST_CASE("constructed instances have the advertised shape") {
  TrialConfig cfg;
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    LocalAlgebra a = gen_algebra(rng, cfg);
    CHECK(is_positive(gen_positive_element(rng, a, 1)).value);
    HilbertModule m = HilbertModule::free(a, rng.range(1, cfg.max_rank));
    ModuleOperator h = gen_self_adjoint_operator(rng, m, 1);
    CHECK(h == h.adjoint());  // exact by construction
    CHECK(op_is_positive(gen_positive_operator(rng, m, 0)).value);
  }
}

TEST_CASE("a small run passes every property") {
  TrialConfig cfg;
  cfg.seed = 42;
  cfg.trials = 12;
  auto reports = run_suite(cfg);
  CHECK(reports.size() == property_registry().size());
  for (const auto& r : reports) {
    INFO(r.id);
    CHECK(r.failures == 0);
    CHECK(r.trials == 12);
  }
  CHECK(suite_passed(reports));
}

TEST_CASE("trials=1 yields one report per id") {
  TrialConfig cfg;
  cfg.seed = 9;
  cfg.trials = 1;
  auto reports = run_suite(cfg);
  std::set<std::string> seen;
  for (const auto& r : reports) {
    CHECK(r.trials == 1);
    seen.insert(r.id);
  }
  CHECK(seen.size() == 32);
}

TEST_CASE("reports are byte-identical across runs") {
  TrialConfig cfg;
  cfg.seed = 42;
  cfg.trials = 6;
  std::string s1 = dump_json(reports_to_json(run_suite(cfg)));
  std::string s2 = dump_json(reports_to_json(run_suite(cfg)));
  CHECK(s1 == s2);
}

TEST_CASE("zero tolerance reports failures instead of crashing") {
  TrialConfig cfg;
  cfg.seed = 1;
  cfg.trials = 4;
  cfg.tol = 0.0;
  auto reports = run_suite(cfg);
  long total_failures = 0;
  for (const auto& r : reports) total_failures += r.failures;
  CHECK(total_failures > 0);
  CHECK_FALSE(suite_passed(reports));
  for (const auto& r : reports)
    if (r.failures > 0) CHECK_FALSE(r.failing_trials.empty());
}

TEST_CASE("exactness flags are tallied") {
  TrialConfig cfg;
  cfg.seed = 5;
  cfg.trials = 20;
  auto reports = run_suite(cfg);
  long exact = 0, horizon = 0;
  for (const auto& r : reports) {
    exact += r.exact_flags;
    horizon += r.horizon_flags;
  }
  CHECK(exact > 0);
  CHECK(horizon > 0);  // growing tails show up somewhere
}

TEST_CASE("hausdorff distance basics") {
  std::vector<Complex> a = {{0, 0}, {1, 0}};
  std::vector<Complex> b = {{0, 0}, {1, 0.5}};
  CHECK(hausdorff_distance(a, a) == 0.0);
  CHECK(hausdorff_distance(a, b) == doctest::Approx(0.5));
  CHECK(hausdorff_distance({}, {}) == 0.0);
}
