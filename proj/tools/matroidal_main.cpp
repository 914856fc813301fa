// matroidal: exact matroid/graph polynomial computations on the command line.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "matroidal/corpus.hpp"
#include "matroidal/errors.hpp"
#include "matroidal/invariants.hpp"
#include "matroidal/json_io.hpp"
#include "matroidal/logconcavity.hpp"
#include "matroidal/tutte.hpp"
#include "matroidal/zonotopal.hpp"

namespace {

using namespace matroidal;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitBudget = 2;
constexpr int kExitVerify = 3;

struct CommonInput {
  std::string path;     // positional file ("-" for stdin)
  std::string uniform;  // "r,n"
  std::string format = "json";
  int threads = 1;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' || c == '[';
  }
  return false;
}

Json parse_uniform_spec(const std::string& spec) {
  const auto comma = spec.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("--uniform expects 'r,n'");
  int r = 0, n = 0;
  try {
    r = std::stoi(spec.substr(0, comma));
    n = std::stoi(spec.substr(comma + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("--uniform expects integers 'r,n'");
  }
  return Json{{"type", "uniform"}, {"r", r}, {"n", n}};
}

// The JSON recipe for the requested input (inline uniform, matroid/graph
// JSON, or an edge list converted to a graph object).
Json input_recipe(const CommonInput& in) {
  if (!in.uniform.empty()) return parse_uniform_spec(in.uniform);
  if (in.path.empty())
    throw std::invalid_argument("missing input: give a file or --uniform r,n");
  const std::string text = read_input(in.path);
  if (looks_like_json(text)) {
    try {
      return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
  }
  return graph_json(parse_edge_list(text));
}

MultiGraph graph_from_recipe(const Json& recipe) {
  if (recipe.is_object() && recipe.contains("type") && recipe["type"] == "graph")
    return parse_graph(recipe);
  throw std::invalid_argument("this command needs a graph (JSON 'graph' object or edge list)");
}

void emit(const Json& j, const std::string& format) {
  if (format == "pretty" && j.contains("pretty"))
    std::cout << j["pretty"].get<std::string>() << "\n";
  else
    std::cout << j.dump() << "\n";
}

Json concavity_json(const ConcavityReport& rep) {
  Json violations = Json::array();
  for (const auto& [i, lhs, rhs] : rep.violations)
    violations.push_back(Json{{"index", i}, {"lhs", lhs.get_str()}, {"rhs", rhs.get_str()}});
  return Json{{"unimodal", rep.unimodal},
              {"log_concave", rep.log_concave},
              {"strictly_log_concave", rep.strictly_log_concave},
              {"ultra_log_concave", rep.ultra_log_concave},
              {"modes", Json::array({rep.mode_lo, rep.mode_hi})},
              {"has_interior_zero", rep.has_interior_zero},
              {"violations", violations},
              {"ultra_skipped", rep.ultra_skipped}};
}

Json poly_report_json(const std::string& name, const UnivarPoly& poly,
                      const std::string& var, const Json& extra = Json::object()) {
  Json out{{"name", name},
           {"coeffs_ascending", univar_json(poly)},
           {"pretty", poly.pretty(var)}};
  for (const auto& [k, v] : extra.items()) out[k] = v;
  return out;
}

TutteOptions options_with_env(int threads) {
  TutteOptions opts;
  opts.threads = threads;
  if (const char* env = std::getenv("MATROIDAL_NODE_BUDGET")) {
    try {
      opts.node_budget = std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("MATROIDAL_NODE_BUDGET must be an integer");
    }
  }
  return opts;
}

int run_verify(const std::string& corpus_name, const std::string& format) {
  if (corpus_name != "builtin")
    throw std::invalid_argument("unknown corpus: " + corpus_name);

  Json checks = Json::array();
  bool ok = true;

  {
    int instances = 0, failures = 0;
    for (const auto& entry : builtin_corpus()) {
      if (entry.matroid.size() > 11) continue;
      ++instances;
      if (!verify_coextension_identity(entry.matroid).holds) ++failures;
    }
    checks.push_back(Json{{"name", "coextension_characteristic_identity"},
                          {"instances", instances},
                          {"failures", failures}});
    ok = ok && failures == 0;
  }

  {
    int instances = 0, failures = 0;
    for (const VectorConfig& c : random_vector_configs(25, 7, 3, 20110917u)) {
      ++instances;
      if (!verify_zonotopal_identities(c).all()) ++failures;
    }
    checks.push_back(Json{{"name", "hilbert_tutte_identities"},
                          {"instances", instances},
                          {"failures", failures}});
    ok = ok && failures == 0;
  }

  {
    int instances = 0, failures = 0;
    for (const VectorConfig& c : random_vector_configs(10, 6, 3, 19481225u)) {
      ++instances;
      const auto rep = internal_equals_central_after_generic(c);
      if (!rep.spaces_equal) ++failures;
    }
    checks.push_back(Json{{"name", "generic_extension_space_equality"},
                          {"instances", instances},
                          {"failures", failures}});
    ok = ok && failures == 0;
  }

  emit(Json{{"checks", checks}, {"ok", ok}}, format);
  return ok ? kExitOk : kExitVerify;
}

int dispatch(const std::string& command, const CommonInput& in,
             const std::string& algorithm, int thicken_k, long kmax,
             const std::string& seq_text, const std::string& space_kind,
             const std::string& corpus_name) {
  const TutteOptions opts = options_with_env(in.threads);

  if (command == "verify") return run_verify(corpus_name, in.format);

  if (command == "logcheck") {
    if (seq_text.empty()) throw std::invalid_argument("logcheck needs --seq");
    IntSeq s;
    std::istringstream ss(seq_text);
    std::string tok;
    while (std::getline(ss, tok, ',')) s.push_back(parse_int(tok));
    emit(concavity_json(analyze(s)), in.format);
    return kExitOk;
  }

  const Json recipe = input_recipe(in);

  if (command == "tutte") {
    const Matroid m = parse_matroid(recipe);
    TutteResult res;
    if (algorithm == "subset")
      res = tutte_subset_sum(m, opts);
    else if (algorithm == "delcon")
      res = tutte_del_con(m, opts);
    else if (algorithm == "activities")
      res = tutte_activities(m, opts);
    else
      res = tutte(m, opts);
    emit(Json{{"name", "tutte"},
              {"coeffs_xy", bivar_json(res.polynomial)},
              {"pretty", res.polynomial.pretty()},
              {"algorithm", res.algorithm},
              {"stats",
               Json{{"subproblems", res.stats.subproblems},
                    {"memo_hits", res.stats.memo_hits}}}},
         in.format);
    return kExitOk;
  }

  if (command == "charpoly" || command == "fvec" || command == "hvec") {
    const Matroid m = parse_matroid(recipe);
    const char* internal_name = command == "charpoly" ? "charpoly" : command.c_str();
    const InvariantReport rep = matroid_invariant_report(internal_name, m);
    emit(poly_report_json(rep.name, rep.poly, "q",
                          Json{{"n", rep.ground_size}, {"r", rep.rank}}),
         in.format);
    return kExitOk;
  }

  if (command == "chromatic" || command == "flow" || command == "critical" ||
      command == "reliability") {
    const MultiGraph g = graph_from_recipe(recipe);
    const InvariantReport rep = graph_invariant_report(command, g);
    Json extra{{"n", rep.ground_size}, {"r", rep.rank}, {"components", rep.components}};
    if (rep.h_part) extra["h_part"] = univar_json(*rep.h_part);
    const std::string var = command == "reliability" ? "p" : "q";
    emit(poly_report_json(command, rep.poly, var, extra), in.format);
    return kExitOk;
  }

  if (command == "dual" || command == "extend" || command == "coextend" ||
      command == "thicken") {
    Json wrapped;
    if (command == "dual")
      wrapped = Json{{"type", "dual"}, {"of", recipe}};
    else if (command == "extend")
      wrapped = Json{{"type", "extension"}, {"of", recipe}};
    else if (command == "coextend")
      wrapped = Json{{"type", "coextension"}, {"of", recipe}};
    else
      wrapped = Json{{"type", "thicken"}, {"k", thicken_k}, {"of", recipe}};
    const Matroid m = parse_matroid(wrapped);  // validates the construction
    wrapped["n"] = m.size();
    wrapped["rank"] = m.rank();
    std::cout << wrapped.dump() << "\n";
    return kExitOk;
  }

  if (command == "thicken-search") {
    const Matroid m = parse_matroid(recipe);
    const ThickenSearchResult res = thicken_h_search(m, kmax);
    Json trace = Json::array();
    for (const auto& [k, rep] : res.trace)
      trace.push_back(Json{{"k", k}, {"log_concave", rep.log_concave}});
    Json h = Json::array();
    for (const auto& v : res.h_at_result) h.push_back(v.get_str());
    emit(Json{{"name", "thicken-search"},
              {"k0", res.k0 ? Json(*res.k0) : Json(nullptr)},
              {"theorem_bound", res.theorem_bound.get_str()},
              {"h_vector", h},
              {"trace", trace}},
         in.format);
    return kExitOk;
  }

  if (command == "zonotopal") {
    const VectorConfig x = parse_vector_config(recipe);
    const GradedSpace space =
        space_kind == "internal" ? internal_space(x) : central_space(x);
    const Matroid m = vector_matroid(x);
    const BivarPoly t = cached_tutte(m);
    const UnivarPoly spec = space_kind == "internal"
                                ? t.substituted(UnivarPoly(), UnivarPoly::variable())
                                : t.substituted(UnivarPoly::constant(Int(1)),
                                                UnivarPoly::variable());
    const bool matches =
        hilbert_series(space) == spec.reversed(x.size() - m.rank());
    emit(Json{{"name", "zonotopal"},
              {"space", space_kind},
              {"dims", space.dims},
              {"hilbert", univar_json(hilbert_series(space))},
              {"total", space.total},
              {"tutte_check", matches ? "pass" : "fail"}},
         in.format);
    return matches ? kExitOk : kExitVerify;
  }

  throw std::invalid_argument("unknown command: " + command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact matroid and graph polynomial toolkit"};
  app.require_subcommand(1);

  CommonInput in;
  std::string algorithm = "auto";
  std::string seq_text;
  std::string space_kind = "central";
  std::string corpus_name = "builtin";
  int thicken_k = 2;
  long kmax = 1000000;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"tutte", "Tutte polynomial of a matroid"},
      {"charpoly", "characteristic polynomial"},
      {"fvec", "f-polynomial / f-vector"},
      {"hvec", "h-polynomial / h-vector"},
      {"chromatic", "chromatic polynomial of a graph"},
      {"flow", "flow polynomial of a graph"},
      {"critical", "critical configuration polynomial of a connected graph"},
      {"reliability", "all-terminal reliability polynomial"},
      {"dual", "emit the dual construction"},
      {"extend", "emit the free extension construction"},
      {"coextend", "emit the free coextension construction"},
      {"thicken", "emit the k-fold thickening construction"},
      {"logcheck", "analyze a comma-separated sequence"},
      {"thicken-search", "smallest k with log-concave thickened h-vector"},
      {"zonotopal", "graded dimensions of a polynomial space"},
      {"verify", "run the built-in identity suites"},
  };

  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, desc] : commands) {
    CLI::App* sub = app.add_subcommand(name, desc);
    subs[name] = sub;
    sub->add_option("--format", in.format, "json or pretty");
    sub->add_option("--threads", in.threads, "worker threads for subset sums");
    if (name != "logcheck" && name != "verify") {
      sub->add_option("input", in.path, "input file (JSON or edge list), '-' for stdin");
      sub->add_option("--uniform", in.uniform, "inline uniform matroid 'r,n'");
    }
  }
  subs["tutte"]->add_option("--algorithm", algorithm,
                            "auto | subset | delcon | activities");
  subs["thicken"]->add_option("--k", thicken_k, "number of parallel copies");
  subs["thicken-search"]->add_option("--kmax", kmax, "search limit");
  subs["logcheck"]->add_option("--seq", seq_text, "comma-separated integers");
  subs["zonotopal"]->add_option("--space", space_kind, "central | internal");
  subs["verify"]->add_option("--corpus", corpus_name, "corpus name (builtin)");

  CLI11_PARSE(app, argc, argv);

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return dispatch(command, in, algorithm, thicken_k, kmax, seq_text, space_kind,
                    corpus_name);
  } catch (const BudgetError& e) {
    std::cerr << "resource budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitVerify;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
}
