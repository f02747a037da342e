#include "loccstar/io.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

namespace loccstar {

namespace {

[[noreturn]] void bad(const std::string& what) {
  raise(ErrorKind::InvalidSpec, what);
}

double finite_number(const Json& j, const char* where) {
  if (!j.is_number()) bad(std::string(where) + ": expected a number");
  double v = j.get<double>();
  if (!std::isfinite(v)) bad(std::string(where) + ": number must be finite");
  return v;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad("expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

Json matrix_to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.dim(); ++j) {
      const Complex& z = m.raw()(i, j);
      row.push_back(Json::array({z.real(), z.imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("matrix: expected a nonempty array of rows");
  const std::size_t d = j.size();
  Eigen::MatrixXcd m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || row.size() != d) bad("matrix: rows must be square");
    for (std::size_t k = 0; k < d; ++k) {
      const Json& entry = row[k];
      if (!entry.is_array() || entry.size() != 2)
        bad("matrix: entries must be [re, im]");
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          Complex(finite_number(entry[0], "matrix entry"),
                  finite_number(entry[1], "matrix entry"));
    }
  }
  return CMatrix(std::move(m));
}

Json algebra_to_json(const LocalAlgebra& a) {
  Json j;
  if (a.is_tail_model()) {
    j["model"] = "tail";
    j["dim"] = a.tail_dim();
    j["prefix_len"] = a.prefix_len();
  } else {
    j["model"] = "finite";
    Json fibers = Json::array();
    for (const auto& l : a.labels()) {
      Json f;
      f["label"] = l;
      f["dim"] = a.dim_at(FiberIndex::label(l));
      fibers.push_back(std::move(f));
    }
    j["fibers"] = std::move(fibers);
  }
  return j;
}

LocalAlgebra algebra_from_json(const Json& j) {
  const Json& model = field(j, "model");
  if (!model.is_string()) bad("algebra: 'model' must be a string");
  if (model == "finite") {
    const Json& fibers = field(j, "fibers");
    if (!fibers.is_array() || fibers.empty())
      bad("algebra: 'fibers' must be a nonempty array");
    std::vector<std::string> labels;
    std::vector<int> dims;
    for (const Json& f : fibers) {
      const Json& label = field(f, "label");
      if (!label.is_string()) bad("algebra: fiber 'label' must be a string");
      labels.push_back(label.get<std::string>());
      const Json& dim = field(f, "dim");
      if (!dim.is_number_integer()) bad("algebra: fiber 'dim' must be an integer");
      dims.push_back(dim.get<int>());
    }
    return LocalAlgebra::finite(std::move(labels), std::move(dims));
  }
  if (model == "tail") {
    const Json& dim = field(j, "dim");
    const Json& plen = field(j, "prefix_len");
    if (!dim.is_number_integer() || !plen.is_number_integer())
      bad("algebra: 'dim' and 'prefix_len' must be integers");
    return LocalAlgebra::tail(dim.get<int>(), plen.get<int>());
  }
  bad("algebra: model must be 'finite' or 'tail'");
}

Json element_to_json(const LocalElement& e) {
  Json j;
  Json comps = Json::object();
  auto idx = e.algebra().prefix_indices();
  for (std::size_t i = 0; i < idx.size(); ++i)
    comps[idx[i].str()] = matrix_to_json(e.components()[i]);
  j["components"] = std::move(comps);
  if (e.algebra().is_tail_model()) {
    Json coeffs = Json::array();
    for (const auto& c : e.tail().coeffs()) coeffs.push_back(matrix_to_json(c));
    j["tail"] = Json{{"coeffs", std::move(coeffs)}};
  }
  return j;
}

LocalElement element_from_json(const Json& j, const LocalAlgebra& a) {
  const Json& comps = field(j, "components");
  if (!comps.is_object()) bad("element: 'components' must be an object");
  auto idx = a.prefix_indices();
  if (comps.size() != idx.size())
    bad("element: expected one component per stored index");
  std::vector<CMatrix> components;
  components.reserve(idx.size());
  for (const auto& i : idx) {
    auto it = comps.find(i.str());
    if (it == comps.end()) bad("element: missing component '" + i.str() + "'");
    components.push_back(matrix_from_json(*it));
  }
  std::optional<TailRule> tail;
  if (a.is_tail_model()) {
    const Json& t = field(j, "tail");
    const Json& coeffs = field(t, "coeffs");
    if (!coeffs.is_array() || coeffs.empty())
      bad("element: 'tail.coeffs' must be a nonempty array");
    std::vector<CMatrix> cs;
    cs.reserve(coeffs.size());
    for (const Json& c : coeffs) cs.push_back(matrix_from_json(c));
    tail = TailRule(std::move(cs));
  } else if (j.contains("tail")) {
    bad("element: finite-model element cannot carry a tail");
  }
  return LocalElement(a, std::move(components), std::move(tail));
}

Json module_to_json(const HilbertModule& m) {
  Json j;
  j["rank"] = m.rank();
  if (m.is_ideal_module()) {
    j["flavor"] = "ideal";
    Json kernel = Json::array();
    for (const auto& idx : m.ideal().kernel()) kernel.push_back(idx.str());
    j["kernel"] = std::move(kernel);
  } else {
    j["flavor"] = "free";
  }
  return j;
}

HilbertModule module_from_json(const Json& j, const LocalAlgebra& a) {
  const Json& rank = field(j, "rank");
  if (!rank.is_number_integer()) bad("module: 'rank' must be an integer");
  const Json& flavor = field(j, "flavor");
  if (flavor == "free") return HilbertModule::free(a, rank.get<int>());
  if (flavor == "ideal") {
    if (rank.get<int>() != 1) bad("module: ideal modules have rank 1");
    const Json& kernel = field(j, "kernel");
    if (!kernel.is_array() || kernel.empty())
      bad("module: 'kernel' must be a nonempty array");
    std::vector<FiberIndex> ks;
    for (const Json& k : kernel) {
      if (!k.is_string()) bad("module: kernel entries must be strings");
      ks.push_back(index_from_string(k.get<std::string>(), a));
    }
    return HilbertModule::ideal_module(Ideal(a, std::move(ks)));
  }
  bad("module: flavor must be 'free' or 'ideal'");
}

Json vector_to_json(const ModuleVector& x) {
  Json j;
  j["module"] = module_to_json(x.module());
  Json entries = Json::array();
  for (const auto& e : x.entries()) entries.push_back(element_to_json(e));
  j["entries"] = std::move(entries);
  return j;
}

ModuleVector vector_from_json(const Json& j, const LocalAlgebra& a) {
  HilbertModule m = module_from_json(field(j, "module"), a);
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) bad("vector: 'entries' must be an array");
  std::vector<LocalElement> es;
  es.reserve(entries.size());
  for (const Json& e : entries) es.push_back(element_from_json(e, a));
  return ModuleVector(std::move(m), std::move(es));
}

Json operator_to_json(const ModuleOperator& t) {
  Json j;
  j["rank"] = t.rank();
  Json rows = Json::array();
  for (int i = 0; i < t.rank(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < t.rank(); ++k) row.push_back(element_to_json(t.entry(i, k)));
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j;
}

ModuleOperator operator_from_json(const Json& j, const LocalAlgebra& a) {
  const Json& rank = field(j, "rank");
  if (!rank.is_number_integer()) bad("operator: 'rank' must be an integer");
  const int k = rank.get<int>();
  if (k < 1) bad("operator: rank must be >= 1");
  const Json& rows = field(j, "matrix");
  if (!rows.is_array() || static_cast<int>(rows.size()) != k)
    bad("operator: 'matrix' must have rank rows");
  std::vector<LocalElement> entries;
  entries.reserve(static_cast<std::size_t>(k) * k);
  for (const Json& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != k)
      bad("operator: rows must have rank entries");
    for (const Json& e : row) entries.push_back(element_from_json(e, a));
  }
  return ModuleOperator(HilbertModule::free(a, k), std::move(entries));
}

FiberIndex index_from_string(const std::string& s, const LocalAlgebra& a) {
  if (!a.is_tail_model()) return FiberIndex::label(s);
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    raise(ErrorKind::UnknownIndex,
          "tail-model index must be a positive integer, got '" + s + "'");
  std::uint64_t n = 0;
  try {
    n = std::stoull(s);
  } catch (const std::exception&) {
    raise(ErrorKind::UnknownIndex, "index '" + s + "' out of range");
  }
  if (n < 1) raise(ErrorKind::UnknownIndex, "indices start at 1");
  return FiberIndex::at(n);
}

namespace {

void dump_rec(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::number_float: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
      out += buf;
      break;
    }
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (const Json& v : j) {
        if (!first) out += ',';
        first = false;
        dump_rec(v, out);
      }
      out += ']';
      break;
    }
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += Json(it.key()).dump();
        out += ':';
        dump_rec(it.value(), out);
      }
      out += '}';
      break;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump_json(const Json& j) {
  std::string out;
  dump_rec(j, out);
  return out;
}

}  // namespace loccstar
