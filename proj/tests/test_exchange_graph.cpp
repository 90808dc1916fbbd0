#include "oracle.hpp"

#include "clusterlab/exchange_graph.hpp"
#include "clusterlab/json_io.hpp"

#include <doctest.h>

using namespace clusterlab;

namespace {

const ExchangeMatrix kA2(IntMatrix{{0, 1}, {-1, 0}});
const ExchangeMatrix kA3(IntMatrix{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});

oracle::Mat to_ll(const IntMatrix& m) {
  oracle::Mat out(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_si();
  return out;
}

}  // namespace

TEST_CASE("canonical keys") {
  const Seed s0 = make_principal_seed(kA2);
  const auto k0 = canonical_key(s0);
  CHECK(k0.variables.size() == 2);
  CHECK(std::is_sorted(k0.variables.begin(), k0.variables.end()));
  CHECK_FALSE(k0.tie);
  const Seed a = mutate_along(s0, {0, 1, 0, 1, 0});
  const Seed b = mutate_along(s0, {1, 0, 1, 0, 1});
  CHECK(canonical_key(a).variables == canonical_key(b).variables);
  // The pentagon closes with the two labels exchanged.
  CHECK(canonical_key(a).variables == k0.variables);
  CHECK(canonical_key(a).order != k0.order);
  CHECK(s0.cluster()[k0.order[0]] == a.cluster()[canonical_key(a).order[0]]);
}

TEST_CASE("exchange graph sizes match the numeric oracle") {
  for (const auto& b : {kA2, kA3, ExchangeMatrix(IntMatrix{{0, 1}, {-2, 0}}), ExchangeMatrix(IntMatrix{{0, 1}, {-3, 0}}),
                        ExchangeMatrix(IntMatrix{{0, 1, 0}, {-2, 0, 1}, {0, -1, 0}})}) {
    const auto g = explore(b);
    CHECK_FALSE(g.truncated());
    const auto [nodes, edges] = oracle::count_exchange_graph(to_ll(b.matrix()));
    CHECK(g.nodes().size() == nodes);
    CHECK(g.edges().size() == edges);
    for (std::size_t i = 0; i < g.nodes().size(); ++i) CHECK(g.degree(i) == b.rank());
  }
}

TEST_CASE("A2, A3 and rank 1") {
  const auto g2 = explore(kA2);
  CHECK(g2.nodes().size() == 5);
  CHECK(g2.edges().size() == 5);
  const auto g3 = explore(kA3);
  CHECK(g3.nodes().size() == 14);
  CHECK(g3.edges().size() == 21);
  const auto g1 = explore(ExchangeMatrix(IntMatrix{{0}}));
  CHECK(g1.nodes().size() == 2);
  CHECK(g1.edges().size() == 1);
  CHECK(verify_adjacency_common_variables(g1).passed());
  CHECK(verify_odd_rank_theorem(g1).passed());
}

TEST_CASE("theorem checks on closed graphs") {
  for (const auto& b : {kA2, kA3}) {
    const auto g = explore(b);
    CHECK(verify_cluster_determines_seed(g).passed());
    CHECK(verify_adjacency_common_variables(g).passed());
    const auto cm = verify_cmatrix_determines_seed(g);
    CHECK(cm.passed());
  }
  CHECK(verify_odd_rank_theorem(explore(kA3)).passed());
  CHECK_THROWS_AS(verify_odd_rank_theorem(explore(kA2)), PreconditionError);
  CHECK_THROWS_AS(verify_odd_rank_theorem(explore(ExchangeMatrix(IntMatrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}))),
                  PreconditionError);
}

TEST_CASE("A2 common-variable counts") {
  const auto g = explore(kA2);
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = a + 1; b < 5; ++b) {
      const auto& va = g.nodes()[a].rep.key.variables;
      const auto& vb = g.nodes()[b].rep.key.variables;
      std::size_t common = 0;
      for (const auto& v : va) common += std::count(vb.begin(), vb.end(), v);
      CHECK(common == (g.adjacent(a, b) ? 1u : 0u));
    }
}

TEST_CASE("truncated exploration") {
  const ExchangeMatrix b(IntMatrix{{0, 1, 1}, {-1, 0, 1}, {-2, -1, 0}});
  const auto g = explore(b, {100000, 3});
  CHECK(g.truncated());
  CHECK(verify_cluster_determines_seed(g).passed());
  CHECK(verify_cmatrix_determines_seed(g).passed());
  CHECK(verify_adjacency_common_variables(g).status == Status::partial);
  CHECK(verify_odd_rank_theorem(g).passed());
  const auto small = explore(kA3, {4, 12});
  CHECK(small.truncated());
  CHECK(small.nodes().size() == 4);
}

TEST_CASE("DOT and JSON export") {
  const auto g = explore(kA2);
  const std::string dot = to_dot(g);
  CHECK(dot.find("graph exchange") == 0);
  CHECK(dot.find("n1 [label=\"t0\"]") != std::string::npos);
  CHECK(dot_from_graph_json(graph_to_json(g)) == dot);
  const Json j = graph_to_json(g);
  CHECK(j["node_count"] == 5);
  CHECK(j["edges"].size() == 5);
}
