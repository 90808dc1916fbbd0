// clusterlab command-line tool.
//
// Exit codes: 0 every requested check passed, 1 a check failed, 2 usage or
// parse error, 3 partial result (limits reached before a conclusion).

#include "clusterlab/exchange_graph.hpp"
#include "clusterlab/folding.hpp"
#include "clusterlab/gfan.hpp"
#include "clusterlab/json_io.hpp"
#include "clusterlab/pattern.hpp"
#include "clusterlab/seed.hpp"
#include "clusterlab/seed_walk.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

using namespace clusterlab;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kPartial = 3 };

struct Options {
  std::string matrix;
  std::string quiver;
  std::string path;
  std::string out;
  std::string graph;
  std::string checks = "cluster,adjacency,cmatrix,oddrank";
  std::string format = "json";
  std::size_t depth = 6;
  std::size_t max_nodes = 100000;
  std::size_t max_depth = 12;
  std::size_t samples = 10000;
  std::size_t vertex = 1;
  std::uint64_t seed = 20240601;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  bool assumption = false;
  std::optional<std::size_t> dual_mutation;
  bool check = false;
};

// A CLI matrix argument is a file path or inline JSON.
Json load_json_arg(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return parse_json(arg);
  return read_json_file(arg);
}

ExchangeMatrix load_matrix(const std::string& arg) {
  IntMatrix m = matrix_from_json(load_json_arg(arg));
  auto b = ExchangeMatrix::try_make(m);
  if (!b) throw PreconditionError("input matrix is not square and sign-skew-symmetric");
  return *b;
}

Path parse_path(const std::string& text, std::size_t n) {
  Path p;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    long v = -1;
    try {
      v = std::stol(token, &used);
    } catch (const std::exception&) {
    }
    if (used != token.size() || v < 1 || static_cast<std::size_t>(v) > n)
      throw ParseError("path entry \"" + token + "\" is not an index in 1.." + std::to_string(n));
    p.push_back(static_cast<std::size_t>(v - 1));
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '(' || ch == ')' || ch == '[' || ch == ']')
      flush();
    else
      token += ch;
  }
  flush();
  return p;
}

void emit(const Json& j, const Options& o) {
  if (o.out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw ParseError("cannot write " + o.out);
  f << j.dump(2) << "\n";
}

int status_exit(Status s) {
  switch (s) {
    case Status::pass: return kPass;
    case Status::fail: return kFail;
    case Status::partial: return kPartial;
  }
  return kFail;
}

// Aggregates several checks: any failure wins, then any partial.
int report(const std::vector<CheckResult>& checks, const Options& o, std::size_t verified_depth,
           double seconds) {
  Status overall = Status::pass;
  std::optional<CheckResult> first_failure;
  for (const auto& c : checks) {
    if (c.status == Status::fail) {
      overall = Status::fail;
      if (!first_failure) first_failure = c;
    } else if (c.status == Status::partial && overall == Status::pass) {
      overall = Status::partial;
    }
  }
  if (o.format == "text") {
    for (const auto& c : checks) {
      std::cout << c.name << ": " << to_string(c.status);
      if (c.witness) std::cout << " at " << format_path(*c.witness);
      if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
      std::cout << "\n";
    }
    return status_exit(overall);
  }
  Json j{{"status", std::string(to_string(overall))}, {"verified_depth", verified_depth}};
  Json checks_json = Json::object();
  for (const auto& c : checks) checks_json[c.name] = check_to_json(c);
  j["checks"] = std::move(checks_json);
  j["failure"] = first_failure ? path_to_json(*first_failure->witness) : Json(nullptr);
  j["seconds"] = seconds;
  emit(j, o);
  return status_exit(overall);
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Json seed_json(const Seed& s) {
  Json cluster = Json::array();
  for (const auto& x : s.cluster()) cluster.push_back(laurent_to_json(x));
  return Json{{"cluster", std::move(cluster)},
              {"c", matrix_to_json(s.coefficient_matrix())["rows"]},
              {"b", matrix_to_json(s.exchange_matrix().matrix())["rows"]}};
}

int run_matrix(const std::string& sub, const Options& o) {
  if (sub == "check") {
    const IntMatrix m = matrix_from_json(load_json_arg(o.matrix));
    const bool square = m.is_square();
    const bool sss = square && is_sign_skew_symmetric(m);
    Json j{{"square", square}, {"sign_skew_symmetric", sss}};
    if (sss) {
      const ExchangeMatrix b(m);
      j["acyclic"] = is_acyclic(b);
      j["indecomposable"] = is_indecomposable(b);
      const auto d = skew_symmetrizer(m);
      if (d) {
        Json dj = Json::array();
        for (const auto& v : *d) dj.push_back(int_to_json(v));
        j["skew_symmetrizer"] = std::move(dj);
      } else {
        j["skew_symmetrizer"] = nullptr;
      }
    }
    emit(j, o);
    return sss ? kPass : kFail;
  }
  const ExchangeMatrix b = load_matrix(o.matrix);
  if (sub == "mutate") {
    IntMatrix m = b.matrix();
    for (auto k : parse_path(o.path, b.rank())) m = mutate_matrix(m, k);
    emit(matrix_to_json(m), o);
    return is_sign_skew_symmetric(m) ? kPass : kFail;
  }
  // verify-total
  const auto rep = verify_totally_sss(b.matrix(), o.depth);
  Json j{{"verified_depth", rep.verified_depth}, {"nodes_checked", rep.nodes_checked}};
  j["failure"] = rep.failure_path ? path_to_json(*rep.failure_path) : Json(nullptr);
  if (rep.failing_matrix) j["failing_matrix"] = matrix_to_json(*rep.failing_matrix);
  emit(j, o);
  return rep.ok() ? kPass : kFail;
}

int run_seed(const std::string& sub, const Options& o) {
  const ExchangeMatrix b = load_matrix(o.matrix);
  const Path path = parse_path(o.path, b.rank());
  const Seed s = mutate_along(make_principal_seed(b), path);
  if (sub == "mutate") {
    emit(seed_json(s), o);
    return kPass;
  }
  if (sub == "fpoly") {
    Json fs = Json::array();
    bool ok = true;
    for (std::size_t i = 0; i < s.rank(); ++i) {
      const auto f = f_polynomial(s, i);
      ok = ok && check_constant_term_one(f);
      fs.push_back(laurent_to_json(f));
    }
    emit(Json{{"path", path_to_json(path)}, {"f", std::move(fs)}, {"constant_term_one", ok}}, o);
    return ok ? kPass : kFail;
  }
  // gvec: grading against the recurrence along the same path.
  const IntMatrix g = g_matrix_from_grading(s);
  RecurrenceState st = initial_recurrence_state(b);
  for (auto k : path) st = recurrence_step(st, b.matrix(), k);
  const bool agree = st.g == g && st.c == s.coefficient_matrix();
  emit(Json{{"path", path_to_json(path)}, {"g", matrix_to_json(g)["rows"]}, {"recurrence_agrees", agree}}, o);
  return agree ? kPass : kFail;
}

int run_verify(const std::string& sub, const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const ExchangeMatrix b = load_matrix(o.matrix);
  std::vector<CheckResult> checks;
  if (sub == "dualities") {
    checks.push_back(check_pattern_invariants(b, o.depth));
    checks.push_back(check_second_duality_walk(b, o.depth));
    if (o.assumption) checks.push_back(check_assumption(b, o.depth));
    if (o.dual_mutation) {
      if (*o.dual_mutation < 1 || *o.dual_mutation > b.rank())
        throw ParseError("--dual-mutation must lie in 1.." + std::to_string(b.rank()));
      checks.push_back(check_dual_mutation(b, *o.dual_mutation - 1, o.depth));
    }
  } else if (sub == "assumption") {
    checks.push_back(check_assumption(b, o.depth));
  } else {
    checks.push_back(check_yhat_walk(b, o.depth));
  }
  return report(checks, o, o.depth, since(t0));
}

int run_fan(const Options& o) {
  const ExchangeMatrix b = load_matrix(o.matrix);
  const GFan fan = enumerate_gfan(b, o.depth);
  Json cones = Json::array();
  for (const auto& c : fan.cones) {
    Json gens = Json::array();
    for (std::size_t i = 0; i < c.dim(); ++i) {
      Json v = Json::array();
      for (const auto& x : c.generator(i)) v.push_back(int_to_json(x));
      gens.push_back(std::move(v));
    }
    cones.push_back(Json{{"path", path_to_json(c.origin())}, {"generators", std::move(gens)}});
  }
  Json j{{"depth", fan.depth}, {"closed", fan.closed}, {"cone_count", fan.cones.size()}, {"cones", std::move(cones)}};
  int code = fan.closed ? kPass : kPartial;
  if (o.check) {
    FanReport rep = check_fan(fan.cones, o.threads);
    Json fails = Json::array();
    for (auto [a, c] : rep.face_check_failures) fails.push_back({a + 1, c + 1});
    Json chk{{"is_fan", rep.is_fan()}, {"face_check_failures", std::move(fails)}};
    if (fan.closed) {
      check_coverage(fan.cones, o.samples, o.seed, rep);
      chk["complete"] = rep.complete;
      chk["points_sampled"] = rep.points_sampled;
      chk["points_uncovered"] = rep.points_uncovered;
      chk["points_multiply_covered"] = rep.points_multiply_covered;
      chk["seed"] = o.seed;
    }
    j["check"] = std::move(chk);
    if (!rep.is_fan() || (fan.closed && !rep.complete)) code = kFail;
  }
  emit(j, o);
  return code;
}

int run_fold(const std::string& sub, const Options& o) {
  const ActedQuiver q = quiver_from_json(load_json_arg(o.quiver));
  if (sub == "check") {
    const auto a = check_admissible(q);
    Json j{{"admissible", a.admissible}};
    if (!a.admissible) {
      Json verts = Json::array(), word = Json::array();
      for (auto v : a.witness_vertices) verts.push_back(v + 1);
      for (auto w : a.witness_word) word.push_back(w + 1);
      j["violated_condition"] = a.violated_condition;
      j["witness"] = Json{{"vertices", std::move(verts)}, {"generator_word", std::move(word)}};
    }
    emit(j, o);
    return a.admissible ? kPass : kFail;
  }
  if (sub == "mutate") {
    if (o.vertex < 1 || o.vertex > q.size()) throw ParseError("--vertex out of range");
    emit(quiver_to_json(orbit_mutate(q, o.vertex - 1)), o);
    return kPass;
  }
  if (sub == "fold-matrix") {
    emit(matrix_to_json(fold_matrix(q)), o);
    return kPass;
  }
  if (sub == "frame") {
    emit(quiver_to_json(frame(q)), o);
    return kPass;
  }
  const auto t0 = std::chrono::steady_clock::now();
  return report({verify_globally_foldable(q, o.depth)}, o, o.depth, since(t0));
}

int run_graph(const std::string& sub, const Options& o) {
  if (sub == "explore") {
    const ExchangeMatrix b = load_matrix(o.matrix);
    const auto g = explore(b, {o.max_nodes, o.max_depth});
    emit(graph_to_json(g), o);
    return g.truncated() ? kPartial : kPass;
  }
  const Json j = read_json_file(o.graph);
  if (sub == "export-dot") {
    const std::string dot = dot_from_graph_json(j);
    if (o.out.empty()) {
      std::cout << dot;
    } else {
      std::ofstream f(o.out);
      f << dot;
    }
    return kPass;
  }
  // verify: the graph is re-explored from its recorded matrix and limits.
  const auto t0 = std::chrono::steady_clock::now();
  if (!j.contains("matrix") || !j.contains("max_nodes") || !j.contains("max_depth"))
    throw ParseError(o.graph + ": not a graph file (needs matrix, max_nodes, max_depth)");
  const ExchangeMatrix b = [&] {
    auto m = ExchangeMatrix::try_make(matrix_from_json(j.at("matrix")));
    if (!m) throw PreconditionError("recorded matrix is not sign-skew-symmetric");
    return *m;
  }();
  const auto g = explore(b, {j.at("max_nodes").get<std::size_t>(), j.at("max_depth").get<std::size_t>()});
  if (j.contains("node_count") && j.at("node_count").get<std::size_t>() != g.nodes().size())
    throw ParseError(o.graph + ": node_count does not match re-exploration");
  std::vector<CheckResult> checks;
  std::string list = o.checks + ",";
  std::size_t pos = 0;
  while ((pos = list.find(',')) != std::string::npos) {
    const std::string name = list.substr(0, pos);
    list.erase(0, pos + 1);
    if (name.empty()) continue;
    if (name == "cluster") checks.push_back(verify_cluster_determines_seed(g));
    else if (name == "adjacency") checks.push_back(verify_adjacency_common_variables(g));
    else if (name == "cmatrix") checks.push_back(verify_cmatrix_determines_seed(g));
    else if (name == "oddrank") {
      if (b.rank() % 2 == 1 && is_indecomposable(b)) {
        checks.push_back(verify_odd_rank_theorem(g));
      } else {
        CheckResult skipped;
        skipped.name = "oddrank";
        skipped.detail = "not applicable: needs odd rank and an indecomposable matrix";
        checks.push_back(skipped);
      }
    } else {
      throw ParseError("unknown check \"" + name + "\"");
    }
  }
  for (auto& c : checks)
    if (g.truncated() && c.status == Status::pass) c.status = Status::partial;
  return report(checks, o, g.limits().max_depth, since(t0));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clusterlab: exact cluster-pattern computations and verification"};
  app.require_subcommand(1);
  Options o;
  std::string cmd, sub;

  auto add_matrix = [&](CLI::App* c) { c->add_option("--matrix", o.matrix, "Matrix JSON file or inline JSON")->required(); };
  auto add_out = [&](CLI::App* c) { c->add_option("--out", o.out, "Write output here instead of stdout"); };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  };

  auto* matrix = app.add_subcommand("matrix", "Exchange matrix operations");
  matrix->require_subcommand(1);
  for (const char* name : {"check", "mutate", "verify-total"}) {
    auto* c = matrix->add_subcommand(name);
    add_matrix(c);
    add_out(c);
    if (std::string(name) == "mutate") c->add_option("--path", o.path, "Mutation sequence, e.g. 1,2,1");
    if (std::string(name) == "verify-total") c->add_option("--depth", o.depth, "Depth bound")->check(CLI::PositiveNumber);
  }

  auto* seed = app.add_subcommand("seed", "Principal-coefficient seeds");
  seed->require_subcommand(1);
  for (const char* name : {"mutate", "fpoly", "gvec"}) {
    auto* c = seed->add_subcommand(name);
    add_matrix(c);
    add_out(c);
    c->add_option("--path", o.path, "Mutation sequence, e.g. 1,2,1");
  }

  auto* verify = app.add_subcommand("verify", "Pattern verification suites");
  verify->require_subcommand(1);
  for (const char* name : {"dualities", "assumption", "yhat"}) {
    auto* c = verify->add_subcommand(name);
    add_matrix(c);
    add_out(c);
    add_format(c);
    c->add_option("--depth", o.depth, "Depth bound")->check(CLI::NonNegativeNumber);
    if (std::string(name) == "dualities") {
      c->add_flag("--assumption", o.assumption, "Also run the lockstep sign comparison");
      c->add_option("--dual-mutation", o.dual_mutation, "Check the dual mutation rules at this index");
    }
  }

  auto* fan = app.add_subcommand("fan", "Enumerate G-cones");
  add_matrix(fan);
  add_out(fan);
  fan->add_option("--depth", o.depth, "Depth bound")->check(CLI::NonNegativeNumber);
  fan->add_flag("--check", o.check, "Run the pairwise face test and the coverage sample");
  fan->add_option("--samples", o.samples, "Coverage sample size");
  fan->add_option("--seed", o.seed, "Random seed for coverage sampling");
  fan->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* fold = app.add_subcommand("fold", "Quivers with group actions");
  fold->require_subcommand(1);
  for (const char* name : {"check", "mutate", "fold-matrix", "frame", "verify"}) {
    auto* c = fold->add_subcommand(name);
    c->add_option("--quiver", o.quiver, "Quiver JSON file or inline JSON")->required();
    add_out(c);
    if (std::string(name) == "mutate") c->add_option("--vertex", o.vertex, "Vertex whose orbit is mutated (1-based)")->required();
    if (std::string(name) == "verify") {
      c->add_option("--depth", o.depth, "Depth bound")->check(CLI::NonNegativeNumber);
      add_format(c);
    }
  }

  auto* graph = app.add_subcommand("graph", "Exchange graphs");
  graph->require_subcommand(1);
  {
    auto* c = graph->add_subcommand("explore");
    add_matrix(c);
    add_out(c);
    c->add_option("--max-nodes", o.max_nodes)->check(CLI::PositiveNumber);
    c->add_option("--max-depth", o.max_depth)->check(CLI::NonNegativeNumber);
    auto* d = graph->add_subcommand("export-dot");
    d->add_option("graph", o.graph, "Graph JSON from graph explore")->required();
    add_out(d);
    auto* v = graph->add_subcommand("verify");
    v->add_option("graph", o.graph, "Graph JSON from graph explore")->required();
    v->add_option("--checks", o.checks, "Comma-separated: cluster,adjacency,cmatrix,oddrank");
    add_out(v);
    add_format(v);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    auto* top = app.get_subcommands().front();
    const std::string sub_name = top->get_subcommands().empty() ? "" : top->get_subcommands().front()->get_name();
    const std::string& name = top->get_name();
    if (name == "matrix") return run_matrix(sub_name, o);
    if (name == "seed") return run_seed(sub_name, o);
    if (name == "verify") return run_verify(sub_name, o);
    if (name == "fan") return run_fan(o);
    if (name == "fold") return run_fold(sub_name, o);
    return run_graph(sub_name, o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return kUsage;
  } catch (const GroupTooLargeError& e) {
    std::cerr << "group too large: " << e.what() << "\n";
    return kPartial;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
}
