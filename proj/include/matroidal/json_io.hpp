#ifndef MATROIDAL_JSON_IO_HPP
#define MATROIDAL_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "matroidal/matroid.hpp"
#include "matroidal/polynomial.hpp"

namespace matroidal {

// Stable key order keeps command output reproducible byte-for-byte.
using Json = nlohmann::ordered_json;

// Matroid descriptions:
//   {"type":"uniform","r":2,"n":6}
//   {"type":"vectors","vectors":[["1","0"],["0","1"],["1","1"]]}   ("p/q" allowed)
//   {"type":"graph","vertices":3,"edges":[[0,1],[1,2],[0,2]]}
//   {"type":"bases","n":3,"r":2,"bases":[[0,1],[0,2],[1,2]]}
// and nestable derived forms:
//   {"type":"dual","of":...} {"type":"extension","of":...}
//   {"type":"coextension","of":...} {"type":"thicken","k":3,"of":...}
Matroid parse_matroid(const Json& j);

// Accepts {"type":"vectors",...} or a bare array of vectors.
VectorConfig parse_vector_config(const Json& j);

// Accepts {"type":"graph",...} only.
MultiGraph parse_graph(const Json& j);

Json vector_config_json(const VectorConfig& x);
Json graph_json(const MultiGraph& g);

// All coefficients as decimal strings to keep big integers bit-exact.
Json univar_json(const UnivarPoly& p);
Json bivar_json(const BivarPoly& p);  // array of arrays, row index = x-degree

}  // namespace matroidal

#endif
