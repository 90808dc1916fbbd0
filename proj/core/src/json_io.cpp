#include "clusterlab/json_io.hpp"

#include <fstream>
#include <sstream>

namespace clusterlab {

namespace {

std::string locate(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::size_t index_from_json(const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer index");
  const auto v = j.get<long long>();
  if (v < 1 || static_cast<std::size_t>(v) > n)
    throw ParseError(where + ": index " + std::to_string(v) + " out of range 1.." + std::to_string(n));
  return static_cast<std::size_t>(v - 1);
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON at " + locate(text, e.byte));
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_json(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Int int_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    Int v;
    if (v.set_str(j.get<std::string>(), 10) == 0) return v;
  }
  throw ParseError(where + ": expected an integer");
}

IntMatrix matrix_from_json(const Json& j) {
  const Json& rows = j.is_array() ? j : field(j, "rows");
  if (!rows.is_array()) throw ParseError("rows: expected an array");
  const std::size_t n = rows.size();
  if (j.is_object() && j.contains("n")) {
    const Json& jn = j.at("n");
    if (!jn.is_number_integer() || jn.get<long long>() != static_cast<long long>(n))
      throw ParseError("n: does not match the number of rows");
  }
  std::size_t cols = n;
  if (n > 0) {
    if (!rows[0].is_array()) throw ParseError("rows[1]: expected an array");
    cols = rows[0].size();
  }
  IntMatrix m(n, cols);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string where = "rows[" + std::to_string(i + 1) + "]";
    if (!rows[i].is_array() || rows[i].size() != cols) throw ParseError(where + ": ragged row");
    for (std::size_t c = 0; c < cols; ++c)
      m(i, c) = int_from_json(rows[i][c], where + "[" + std::to_string(c + 1) + "]");
  }
  return m;
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(int_to_json(m(i, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"n", m.rows()}, {"rows", std::move(rows)}};
}

Json path_to_json(const Path& p) {
  Json out = Json::array();
  for (auto k : p) out.push_back(k + 1);
  return out;
}

Json laurent_to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"exp", e}, {"coef", int_to_json(c)}});
  return Json{{"vars", p.nvars() ? Json(p.vars()) : Json::array()}, {"terms", std::move(terms)}};
}

ActedQuiver quiver_from_json(const Json& j) {
  IntMatrix b = matrix_from_json(field(j, "matrix"));
  const std::size_t n = b.rows();
  if (j.contains("n")) {
    const Json& jn = j.at("n");
    if (!jn.is_number_integer() || jn.get<long long>() != static_cast<long long>(n))
      throw ParseError("n: does not match the matrix size");
  }
  std::vector<bool> frozen(n, false);
  if (j.contains("frozen")) {
    const Json& f = j.at("frozen");
    if (!f.is_array()) throw ParseError("frozen: expected an array");
    for (std::size_t i = 0; i < f.size(); ++i)
      frozen[index_from_json(f[i], n, "frozen[" + std::to_string(i + 1) + "]")] = true;
  }
  std::vector<Permutation> gens;
  if (j.contains("action_generators")) {
    const Json& a = j.at("action_generators");
    if (!a.is_array()) throw ParseError("action_generators: expected an array");
    for (std::size_t g = 0; g < a.size(); ++g) {
      const std::string where = "action_generators[" + std::to_string(g + 1) + "]";
      if (!a[g].is_array() || a[g].size() != n) throw ParseError(where + ": expected a permutation of length n");
      Permutation p(n);
      for (std::size_t i = 0; i < n; ++i)
        p[i] = index_from_json(a[g][i], n, where + "[" + std::to_string(i + 1) + "]");
      gens.push_back(std::move(p));
    }
  }
  try {
    return ActedQuiver(std::move(b), std::move(frozen), std::move(gens));
  } catch (const Error& e) {
    throw ParseError(std::string("quiver: ") + e.what());
  }
}

Json quiver_to_json(const ActedQuiver& q) {
  Json frozen = Json::array();
  for (std::size_t i = 0; i < q.size(); ++i)
    if (q.is_frozen(i)) frozen.push_back(i + 1);
  Json gens = Json::array();
  for (const auto& g : q.generators()) {
    Json p = Json::array();
    for (auto v : g) p.push_back(v + 1);
    gens.push_back(std::move(p));
  }
  return Json{{"n", q.size()},
              {"matrix", matrix_to_json(q.matrix())["rows"]},
              {"frozen", std::move(frozen)},
              {"action_generators", std::move(gens)}};
}

Json check_to_json(const CheckResult& r) {
  Json out{{"name", r.name},
           {"status", std::string(to_string(r.status))},
           {"explored", r.explored},
           {"verified_depth", r.verified_depth}};
  out["witness"] = r.witness ? path_to_json(*r.witness) : Json(nullptr);
  if (r.root) out["root"] = path_to_json(*r.root);
  if (!r.detail.empty()) out["detail"] = r.detail;
  return out;
}

Json graph_to_json(const ExchangeGraph& g) {
  Json nodes = Json::array();
  for (std::size_t id = 0; id < g.nodes().size(); ++id) {
    const auto& node = g.nodes()[id];
    Json cluster = Json::array();
    for (const auto& x : node.seed.cluster()) cluster.push_back(x.to_string());
    nodes.push_back(Json{{"id", id + 1},
                         {"path", path_to_json(node.rep.path)},
                         {"cluster", std::move(cluster)},
                         {"b", matrix_to_json(node.rep.pattern.b.matrix())["rows"]},
                         {"c", matrix_to_json(node.rep.pattern.c)["rows"]},
                         {"g", matrix_to_json(node.rep.pattern.g)["rows"]},
                         {"expanded", node.expanded}});
  }
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json{{"a", e.a + 1}, {"b", e.b + 1}, {"k", e.k + 1}});
  return Json{{"matrix", matrix_to_json(g.initial_matrix().matrix())},
              {"max_nodes", g.limits().max_nodes},
              {"max_depth", g.limits().max_depth},
              {"truncated", g.truncated()},
              {"node_count", g.nodes().size()},
              {"edge_count", g.edges().size()},
              {"nodes", std::move(nodes)},
              {"edges", std::move(edges)}};
}

std::string dot_from_graph_json(const Json& j) {
  const Json& nodes = field(j, "nodes");
  const Json& edges = field(j, "edges");
  std::ostringstream os;
  os << "graph exchange {\n";
  for (const auto& node : nodes) {
    const Json& path = field(node, "path");
    std::string label = "t0";
    if (!path.empty()) {
      label = "(";
      for (std::size_t i = 0; i < path.size(); ++i) label += (i ? "," : "") + std::to_string(path[i].get<long long>());
      label += ")";
    }
    os << "  n" << field(node, "id").get<long long>() << " [label=\"" << label << "\"];\n";
  }
  for (const auto& e : edges)
    os << "  n" << field(e, "a").get<long long>() << " -- n" << field(e, "b").get<long long>() << " [label=\""
       << field(e, "k").get<long long>() << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace clusterlab
