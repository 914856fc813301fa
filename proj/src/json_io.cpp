#include "matroidal/json_io.hpp"

#include <stdexcept>

namespace matroidal {

namespace {

int get_int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw std::invalid_argument(std::string("missing or non-integer field '") + key +
                                "'");
  return j[key].get<int>();
}

const Json& get_field(const Json& j, const char* key) {
  if (!j.contains(key))
    throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j[key];
}

std::string type_of(const Json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    throw std::invalid_argument("matroid JSON must be an object with a 'type'");
  return j["type"].get<std::string>();
}

}  // namespace

VectorConfig parse_vector_config(const Json& j) {
  const Json* arr = nullptr;
  if (j.is_array()) {
    arr = &j;
  } else {
    if (type_of(j) != "vectors")
      throw std::invalid_argument("expected a 'vectors' configuration");
    arr = &get_field(j, "vectors");
  }
  if (!arr->is_array() || arr->empty())
    throw std::invalid_argument("'vectors' must be a non-empty array");
  std::vector<std::vector<Rat>> vectors;
  vectors.reserve(arr->size());
  for (const auto& row : *arr) {
    if (!row.is_array())
      throw std::invalid_argument("each vector must be an array of strings");
    std::vector<Rat> v;
    v.reserve(row.size());
    for (const auto& entry : row) {
      if (entry.is_string())
        v.push_back(parse_rat(entry.get<std::string>()));
      else if (entry.is_number_integer())
        v.push_back(Rat(entry.get<long>()));
      else
        throw std::invalid_argument("vector entries must be decimal strings");
    }
    vectors.push_back(std::move(v));
  }
  return VectorConfig(std::move(vectors));
}

MultiGraph parse_graph(const Json& j) {
  if (type_of(j) != "graph") throw std::invalid_argument("expected a 'graph' object");
  const int vertices = get_int_field(j, "vertices");
  const Json& edges = get_field(j, "edges");
  if (!edges.is_array()) throw std::invalid_argument("'edges' must be an array");
  std::vector<std::pair<int, int>> e;
  e.reserve(edges.size());
  for (const auto& pair : edges) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer())
      throw std::invalid_argument("each edge must be a pair of vertex indices");
    e.emplace_back(pair[0].get<int>(), pair[1].get<int>());
  }
  return MultiGraph(vertices, std::move(e));
}

Matroid parse_matroid(const Json& j) {
  const std::string type = type_of(j);
  if (type == "uniform") {
    return uniform_matroid(get_int_field(j, "r"), get_int_field(j, "n"));
  }
  if (type == "vectors") {
    return vector_matroid(parse_vector_config(j));
  }
  if (type == "graph") {
    return graphic_matroid(parse_graph(j));
  }
  if (type == "bases") {
    const int n = get_int_field(j, "n");
    const int r = get_int_field(j, "r");
    const Json& bases = get_field(j, "bases");
    if (!bases.is_array() || bases.empty())
      throw std::invalid_argument("'bases' must be a non-empty array");
    std::vector<Subset> masks;
    masks.reserve(bases.size());
    for (const auto& basis : bases) {
      if (!basis.is_array())
        throw std::invalid_argument("each basis must be an array of elements");
      if (static_cast<int>(basis.size()) != r)
        throw std::invalid_argument("basis size disagrees with 'r'");
      Subset mask = 0;
      for (const auto& el : basis) {
        if (!el.is_number_integer())
          throw std::invalid_argument("basis elements must be integers");
        const int e = el.get<int>();
        if (e < 0 || e >= n)
          throw std::invalid_argument("basis element out of range");
        mask |= Subset(1) << e;
      }
      masks.push_back(mask);
    }
    return bases_matroid(n, masks);
  }
  if (type == "dual") return dual(parse_matroid(get_field(j, "of")));
  if (type == "extension") return free_extension(parse_matroid(get_field(j, "of")));
  if (type == "coextension")
    return free_coextension(parse_matroid(get_field(j, "of")));
  if (type == "thicken")
    return thicken(parse_matroid(get_field(j, "of")), get_int_field(j, "k"));
  throw std::invalid_argument("unknown matroid type '" + type + "'");
}

Json vector_config_json(const VectorConfig& x) {
  Json arr = Json::array();
  for (int i = 0; i < x.size(); ++i) {
    Json row = Json::array();
    for (const auto& entry : x.vec(i)) row.push_back(to_string(entry));
    arr.push_back(std::move(row));
  }
  return Json{{"type", "vectors"}, {"vectors", std::move(arr)}};
}

Json graph_json(const MultiGraph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  return Json{{"type", "graph"}, {"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
}

Json univar_json(const UnivarPoly& p) {
  Json arr = Json::array();
  for (const auto& s : p.coeff_strings()) arr.push_back(s);
  return arr;
}

Json bivar_json(const BivarPoly& p) {
  Json arr = Json::array();
  for (const auto& row : p.coeff_strings()) {
    Json r = Json::array();
    for (const auto& s : row) r.push_back(s);
    arr.push_back(std::move(r));
  }
  return arr;
}

}  // namespace matroidal
