#include "kac/io.hpp"

namespace kac {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(std::string("JSON: missing key '") + key + "'");
  }
  return j.at(key);
}

template <typename T>
T get(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw Error(std::string("JSON: bad ") + what + ": " + e.what());
  }
}

}  // namespace

json to_json(const Scalar& s) { return s.to_string(); }

json to_json(std::span<const Scalar> v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

json to_json(const Matrix& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.row(r)));
  return a;
}

json to_json(const SuperAlgebra& a) {
  json j;
  j["domain"] = a.domain().descriptor();
  if (a.domain().is_quadratic()) j["d"] = a.domain().d().to_string();
  j["dim"] = a.dim();
  j["parity"] = a.parities();
  j["labels"] = a.labels();
  j["unity"] = a.unity() ? to_json(*a.unity()) : json(nullptr);
  json c = json::array();
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (const auto& t : a.product_terms(i, k)) {
        c.push_back({i, k, t.index, t.coeff.to_string()});
      }
    }
  }
  j["constants"] = std::move(c);
  return j;
}

json to_json(const LinearMap& m) {
  return {{"matrix", to_json(m.matrix())},
          {"parity", m.parity() == MapParity::Even ? "even" : "odd"}};
}

json to_json(const AbelianGroup& g) {
  return {{"rank", g.free_rank()}, {"torsion", g.torsion()}};
}

json to_json(const GroupElement& g) { return g.coords(); }

json to_json(const Grading& g) {
  json comps = json::array();
  for (const auto& [d, c] : g.components()) {
    json vs = json::array();
    for (const auto& v : c.basis()) vs.push_back(to_json(v));
    comps.push_back({{"degree", to_json(d)}, {"vectors", std::move(vs)}});
  }
  return {{"group", to_json(g.group())},
          {"components", std::move(comps)},
          {"domain", g.algebra().domain().descriptor()}};
}

json to_json(const GradingLabel& l) {
  json p = json::array();
  for (const auto& x : l.params) p.push_back(to_json(x));
  return {{"family", l.family}, {"params", std::move(p)}, {"text", l.to_string()}};
}

json to_json(const Check& c) {
  json j{{"ok", c.ok}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

ScalarDomain domain_from_json(const json& j) {
  return ScalarDomain::parse(get<std::string>(field(j, "domain"), "domain"));
}

Scalar scalar_from_json(const ScalarDomain& dom, const json& j) {
  if (j.is_number_integer()) return Scalar(dom, j.get<long>());
  return Scalar::parse(dom, get<std::string>(j, "scalar"));
}

Vector vector_from_json(const ScalarDomain& dom, const json& j) {
  if (!j.is_array()) throw Error("JSON: vector must be an array");
  Vector v;
  for (const auto& x : j) v.push_back(scalar_from_json(dom, x));
  return v;
}

Matrix matrix_from_json(const ScalarDomain& dom, const json& j) {
  if (!j.is_array() || j.empty()) throw Error("JSON: matrix must be a nonempty list of rows");
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(dom, r));
  const std::size_t cols = rows[0].size();
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error("JSON: ragged matrix");
  }
  return Matrix::from_rows(dom, cols, rows);
}

SuperAlgebra algebra_from_json(const json& j) {
  const ScalarDomain dom = domain_from_json(j);
  const auto n = get<std::size_t>(field(j, "dim"), "dim");
  auto parity = get<std::vector<int>>(field(j, "parity"), "parity");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = get<std::vector<std::string>>(j.at("labels"), "labels");
  StructureBuilder sb(dom, n);
  for (const auto& t : field(j, "constants")) {
    if (!t.is_array() || t.size() != 4) throw Error("JSON: constants entries are [i, j, k, c]");
    auto i = get<std::size_t>(t[0], "index"), k = get<std::size_t>(t[1], "index"),
         l = get<std::size_t>(t[2], "index");
    if (i >= n || k >= n || l >= n) throw Error("JSON: structure constant index out of range");
    sb.add(i, k, l, scalar_from_json(dom, t[3]));
  }
  std::optional<Vector> unity;
  if (j.contains("unity") && !j.at("unity").is_null()) unity = vector_from_json(dom, j.at("unity"));
  return sb.build(std::move(parity), std::move(unity), std::move(labels));
}

LinearMap map_from_json(const json& j, const SuperAlgebra& source, const SuperAlgebra& target) {
  const json& rows = j.is_array() ? j : field(j, "matrix");
  MapParity parity = MapParity::Even;
  if (j.is_object() && j.contains("parity")) {
    auto p = get<std::string>(j.at("parity"), "parity");
    if (p == "odd") {
      parity = MapParity::Odd;
    } else if (p != "even") {
      throw Error("JSON: parity must be 'even' or 'odd'");
    }
  }
  return LinearMap(source, target, matrix_from_json(source.domain(), rows), parity);
}

AbelianGroup group_from_json(const json& j) {
  std::vector<std::int64_t> torsion;
  if (j.contains("torsion")) torsion = get<std::vector<std::int64_t>>(j.at("torsion"), "torsion");
  return AbelianGroup(get<std::size_t>(field(j, "rank"), "rank"), std::move(torsion));
}

GroupElement element_from_json(const AbelianGroup& g, const json& j) {
  return g.element(get<std::vector<std::int64_t>>(j, "degree"));
}

Grading grading_from_json(const json& j, const SuperAlgebra& a) {
  AbelianGroup g = group_from_json(field(j, "group"));
  Grading gr(a, g);
  for (const auto& c : field(j, "components")) {
    GroupElement d = element_from_json(g, field(c, "degree"));
    for (const auto& v : field(c, "vectors")) {
      Vector x = vector_from_json(a.domain(), v);
      if (x.size() != a.dim()) throw Error("JSON: grading vector has the wrong length");
      gr.add(d, x);
    }
  }
  return gr;
}

}  // namespace kac
