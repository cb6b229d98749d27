#include "centext/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "centext/error.hpp"

namespace centext {

namespace {

template <class T>
T get(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidInput(std::string("malformed ") + what);
  }
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

// rows x cols table with entries in [0, bound)
std::vector<std::vector<Elem>> table_from(const Json& j, std::size_t rows, std::size_t cols, std::size_t bound,
                                          const char* what) {
  auto t = get<std::vector<std::vector<std::int64_t>>>(j, what);
  if (t.size() != rows) throw InvalidInput(std::string(what) + " has the wrong number of rows");
  std::vector<std::vector<Elem>> out(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    if (t[i].size() != cols) throw InvalidInput(std::string(what) + " has a row of the wrong length");
    for (auto v : t[i]) {
      if (v < 0 || std::size_t(v) >= bound)
        throw InvalidInput(std::string(what) + " entry out of range");
      out[i].push_back(Elem(v));
    }
  }
  return out;
}

}  // namespace

Json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput("JSON syntax error in " + (path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

GroupPtr group_from_json(const Json& spec, const Limits& limits) {
  if (!spec.is_object()) throw InvalidInput("group specification must be an object");
  if (spec.contains("cayley")) {
    auto t = get<std::vector<std::vector<std::int64_t>>>(spec["cayley"], "cayley table");
    const std::size_t n = t.size();
    if (n == 0) throw InvalidInput("empty cayley table");
    if (n > limits.max_group_order) throw CapExceeded("cayley table exceeds the group order cap");
    std::vector<std::vector<Elem>> table(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (t[i].size() != n) throw InvalidInput("cayley table is not square");
      for (auto v : t[i]) {
        if (v < 0 || std::size_t(v) >= n) throw InvalidInput("cayley entry out of range");
        table[i].push_back(Elem(v));
      }
    }
    return FiniteGroup::from_table(std::move(table), {}, limits);
  }
  if (spec.contains("permutations")) {
    const auto points = get<std::int64_t>(field(spec, "points"), "points");
    if (points < 1 || points > 64) throw InvalidInput("points must be in 1..64");
    std::vector<Permutation> gens;
    for (const auto& s : field(spec, "permutations"))
      gens.push_back(parse_permutation(get<std::string>(s, "permutation"), std::size_t(points)));
    return from_permutations(gens, std::size_t(points), limits);
  }
  if (spec.contains("catalog")) {
    const auto name = get<std::string>(spec["catalog"], "catalog name");
    std::vector<std::size_t> params;
    if (spec.contains("params"))
      for (auto v : get<std::vector<std::int64_t>>(spec["params"], "catalog params")) {
        if (v < 0) throw InvalidInput("catalog parameters must be non-negative");
        params.push_back(std::size_t(v));
      }
    return catalog(name, params, limits);
  }
  if (spec.contains("product")) {
    const auto& parts = spec["product"];
    if (!parts.is_array() || parts.empty()) throw InvalidInput("product needs a non-empty list");
    GroupPtr g = group_from_json(parts[0], limits);
    for (std::size_t i = 1; i < parts.size(); ++i) g = direct_product(g, group_from_json(parts[i], limits), limits);
    return g;
  }
  throw InvalidInput("group specification needs one of cayley, permutations, catalog, product");
}

Json group_to_json(const FiniteGroup& g) { return Json{{"cayley", g.table()}}; }

FiniteAbelian abelian_from_json(const Json& orders) {
  auto v = get<std::vector<std::int64_t>>(orders, "coefficient orders");
  for (auto d : v)
    if (d < 1 || d > (1 << 20)) throw InvalidInput("coefficient orders must be in 1..2^20");
  return FiniteAbelian::from_cyclic_orders(v);
}

Json abelian_to_json(const FiniteAbelian& a) { return Json(a.invariant_factors()); }

Cocycle2 cocycle_from_json(const Json& doc, const Limits& limits) {
  auto g = group_from_json(field(doc, "group"), limits);
  auto coeffs = get<std::vector<std::int64_t>>(field(doc, "coefficients"), "coefficients");
  FiniteAbelian a(coeffs);
  const auto& vals = field(doc, "values");
  const std::size_t n = g->order();
  if (!vals.is_array() || vals.size() != n) throw InvalidInput("cocycle values must be an n x n table");
  std::vector<Coeff> values;
  values.reserve(n * n);
  for (const auto& row : vals) {
    if (!row.is_array() || row.size() != n) throw InvalidInput("cocycle values must be an n x n table");
    for (const auto& t : row) values.push_back(get<Coeff>(t, "cocycle value"));
  }
  return Cocycle2(g, a, std::move(values));
}

Json cocycle_to_json(const Cocycle2& f, const Json& group_spec) {
  const std::size_t n = f.group()->order();
  Json values = Json::array();
  for (std::size_t g = 0; g < n; ++g) {
    Json row = Json::array();
    for (std::size_t h = 0; h < n; ++h) row.push_back(f(Elem(g), Elem(h)));
    values.push_back(row);
  }
  return Json{{"group", group_spec}, {"coefficients", f.coefficients().invariant_factors()}, {"values", values}};
}

CrossedModuleDocument crossed_module_from_json(const Json& doc, const Limits& limits) {
  auto h = group_from_json(field(doc, "H"), limits);
  auto g = group_from_json(field(doc, "G"), limits);
  auto d = get<std::vector<std::int64_t>>(field(doc, "delta"), "delta");
  if (d.size() != h->order()) throw InvalidInput("delta must list one image per element of H");
  std::vector<Elem> image;
  for (auto v : d) {
    if (v < 0 || std::size_t(v) >= g->order()) throw InvalidInput("delta image out of range");
    image.push_back(Elem(v));
  }
  GroupHom delta(h, g, std::move(image));
  auto action = table_from(field(doc, "action"), g->order(), h->order(), h->order(), "action");
  CrossedModuleDocument out{CrossedModule(std::move(delta), std::move(action)), std::nullopt};
  if (doc.contains("bracket")) {
    auto b = table_from(doc["bracket"], g->order(), g->order(), h->order(), "bracket");
    out.bracket = std::move(b);
  }
  return out;
}

Json crossed_module_to_json(const CrossedModule& xm, const Json& h_spec, const Json& g_spec,
                            const std::optional<StableBracket>& bracket) {
  Json j{{"H", h_spec}, {"G", g_spec}, {"delta", xm.delta().images()}, {"action", xm.action_table()}};
  if (bracket) j["bracket"] = bracket->table();
  return j;
}

}  // namespace centext
