// Command-line front end: parse algebra/element/vector/operator specs,
// dispatch one operation, print a JSON result.
//
// Exit codes: 0 success, 1 domain error, 2 parse/usage error, 3 suite failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "loccstar/io.hpp"
#include "loccstar/suite.hpp"

namespace lc = loccstar;

namespace {

struct Options {
  std::string alg, elem, elem2, vec, vec2, op;
  std::string index;
  std::string kind;
  std::string format = "json";
  int horizon = lc::kDefaultHorizon;
  double tol = lc::kDefaultTol;
  double t = 1.0;
  std::uint64_t seed = 0;
  int trials = 200;
};

lc::Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    lc::raise(lc::ErrorKind::InvalidSpec, "cannot open file '" + path + "'");
  lc::Json j;
  in >> j;
  return j;
}

lc::Json spectrum_points(const std::vector<lc::Complex>& pts) {
  lc::Json arr = lc::Json::array();
  for (const auto& z : pts) arr.push_back(lc::Json::array({z.real(), z.imag()}));
  return arr;
}

void emit(const lc::Json& result, bool exact, double tol) {
  lc::Json out;
  out["result"] = result;
  out["exact"] = exact;
  out["tolerance"] = tol;
  std::cout << lc::dump_json(out) << "\n";
}

int run_command(const std::string& name, const Options& o) {
  if (name == "verify") {
    lc::TrialConfig cfg;
    cfg.seed = o.seed;
    cfg.trials = o.trials;
    cfg.horizon = o.horizon;
    cfg.tol = o.tol;
    auto reports = lc::run_suite(cfg);
    if (o.format == "text") {
      std::cout << lc::format_reports_text(reports);
    } else {
      emit(lc::reports_to_json(reports), true, cfg.tol);
    }
    return lc::suite_passed(reports) ? 0 : 3;
  }

  if (name == "gen") {
    auto kind = lc::parse_gen_kind(o.kind);
    if (!kind)
      lc::raise(lc::ErrorKind::InvalidSpec, "unknown generator kind '" + o.kind + "'");
    lc::TrialConfig cfg;
    cfg.seed = o.seed;
    std::optional<lc::LocalAlgebra> alg;
    if (!o.alg.empty()) alg = lc::algebra_from_json(read_json_file(o.alg));
    emit(lc::generate_instance(*kind, cfg, alg), true, o.tol);
    return 0;
  }

  lc::LocalAlgebra alg = lc::algebra_from_json(read_json_file(o.alg));

  if (name == "seminorm") {
    lc::LocalElement a = lc::element_from_json(read_json_file(o.elem), alg);
    lc::FiberIndex idx = lc::index_from_string(o.index, alg);
    emit(lc::seminorm(a, idx), true, o.tol);
    return 0;
  }
  if (name == "sup-norm") {
    lc::LocalElement a = lc::element_from_json(read_json_file(o.elem), alg);
    auto s = lc::sup_norm(a);
    emit(s ? lc::Json(*s) : lc::Json("Unbounded"), true, o.tol);
    return 0;
  }
  if (name == "spectrum") {
    lc::LocalElement a = lc::element_from_json(read_json_file(o.elem), alg);
    lc::Spectrum sp = lc::spectrum(a, o.horizon);
    emit(spectrum_points(sp.points), sp.exact, o.tol);
    return 0;
  }
  if (name == "is-positive") {
    lc::LocalElement a = lc::element_from_json(read_json_file(o.elem), alg);
    lc::Verdict v = lc::is_positive(a, o.horizon, o.tol);
    emit(v.value, v.exact, o.tol);
    return 0;
  }
  if (name == "sqrt") {
    lc::LocalElement a = lc::element_from_json(read_json_file(o.elem), alg);
    emit(lc::element_to_json(lc::sqrt(a, o.tol)), true, o.tol);
    return 0;
  }
  if (name == "inverse") {
    lc::LocalElement a = lc::element_from_json(read_json_file(o.elem), alg);
    emit(lc::element_to_json(lc::inverse(a, o.tol)), true, o.tol);
    return 0;
  }
  if (name == "inner") {
    if (!o.elem.empty() || !o.elem2.empty()) {
      // elements of A are vectors of the rank-one free module, <a,b> = a* b
      if (o.elem.empty() || o.elem2.empty())
        lc::raise(lc::ErrorKind::InvalidSpec,
                  "inner on elements needs both --elem and --elem2");
      lc::LocalElement a = lc::element_from_json(read_json_file(o.elem), alg);
      lc::LocalElement b = lc::element_from_json(read_json_file(o.elem2), alg);
      emit(lc::element_to_json(a.adjoint() * b), true, o.tol);
      return 0;
    }
    lc::ModuleVector x = lc::vector_from_json(read_json_file(o.vec), alg);
    lc::ModuleVector y = lc::vector_from_json(read_json_file(o.vec2), alg);
    emit(lc::element_to_json(lc::inner(x, y)), true, o.tol);
    return 0;
  }
  if (name == "module-seminorm") {
    lc::ModuleVector x = lc::vector_from_json(read_json_file(o.vec), alg);
    lc::FiberIndex idx = lc::index_from_string(o.index, alg);
    emit(lc::module_seminorm(x, idx), true, o.tol);
    return 0;
  }
  if (name == "smooth") {
    lc::ModuleVector x = lc::vector_from_json(read_json_file(o.vec), alg);
    emit(lc::vector_to_json(lc::smooth(x, o.t, o.tol)), true, o.tol);
    return 0;
  }
  if (name == "op-seminorm") {
    lc::ModuleOperator t = lc::operator_from_json(read_json_file(o.op), alg);
    lc::FiberIndex idx = lc::index_from_string(o.index, alg);
    emit(lc::op_seminorm(t, idx), true, o.tol);
    return 0;
  }
  if (name == "adjoint") {
    lc::ModuleOperator t = lc::operator_from_json(read_json_file(o.op), alg);
    emit(lc::operator_to_json(t.adjoint()), true, o.tol);
    return 0;
  }
  if (name == "op-spectrum") {
    lc::ModuleOperator t = lc::operator_from_json(read_json_file(o.op), alg);
    lc::Spectrum sp = lc::op_spectrum(t, o.horizon);
    emit(spectrum_points(sp.points), sp.exact, o.tol);
    return 0;
  }
  lc::raise(lc::ErrorKind::InvalidSpec, "unknown command '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matrix models of locally C*-algebras, Hilbert modules over "
               "them, and their operator algebras"};
  app.require_subcommand(1);
  Options o;

  struct Cmd {
    const char* name;
    const char* help;
  };
  const Cmd cmds[] = {
      {"seminorm", "fiber seminorm of an element at --index"},
      {"sup-norm", "sup of all seminorms (or Unbounded)"},
      {"spectrum", "union of fiber spectra"},
      {"is-positive", "positivity across all fibers"},
      {"sqrt", "positive square root"},
      {"inverse", "componentwise inverse"},
      {"inner", "module inner product (--vec/--vec2 or --elem/--elem2)"},
      {"module-seminorm", "induced seminorm of a vector at --index"},
      {"smooth", "x (e + t sqrt(<x,x>))^-1"},
      {"op-seminorm", "operator seminorm at --index"},
      {"adjoint", "operator adjoint"},
      {"op-spectrum", "union of operator fiber spectra"},
      {"verify", "run the property suite and report"},
      {"gen", "generate a seeded instance (--kind)"},
  };

  for (const auto& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--alg", o.alg, "algebra spec file");
    sub->add_option("--elem", o.elem, "element spec file");
    sub->add_option("--elem2", o.elem2, "second element spec file");
    sub->add_option("--vec", o.vec, "vector spec file");
    sub->add_option("--vec2", o.vec2, "second vector spec file");
    sub->add_option("--op", o.op, "operator spec file");
    sub->add_option("--index", o.index, "fiber index (label or integer)");
    sub->add_option("--horizon", o.horizon, "tail scan horizon");
    sub->add_option("--tol", o.tol, "tolerance");
    sub->add_option("--t", o.t, "smoothing parameter");
    sub->add_option("--seed", o.seed, "generator seed");
    sub->add_option("--trials", o.trials, "trials per property");
    sub->add_option("--kind", o.kind, "generator kind");
    sub->add_option("--format", o.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // unknown flags / bad usage
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    return run_command(name, o);
  } catch (const lc::Error& e) {
    lc::Json err;
    err["error"] = std::string(lc::error_name(e.kind()));
    err["message"] = e.what();
    std::cout << lc::dump_json(err) << "\n";
    return e.kind() == lc::ErrorKind::InvalidSpec ? 2 : 1;
  } catch (const lc::Json::exception& e) {
    lc::Json err;
    err["error"] = "ParseError";
    err["message"] = e.what();
    std::cout << lc::dump_json(err) << "\n";
    return 2;
  } catch (const std::exception& e) {
    lc::Json err;
    err["error"] = "Internal";
    err["message"] = e.what();
    std::cout << lc::dump_json(err) << "\n";
    return 2;
  }
}
