#include "oracle.hpp"

#include "clusterlab/exchange_matrix.hpp"

#include <doctest.h>

using namespace clusterlab;

namespace {

oracle::Mat to_ll(const IntMatrix& m) {
  oracle::Mat out(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_si();
  return out;
}

}  // namespace

TEST_CASE("sign-skew-symmetry") {
  CHECK(is_sign_skew_symmetric({{0, 1}, {-1, 0}}));
  CHECK_FALSE(is_sign_skew_symmetric({{0, 1}, {1, 0}}));
  CHECK(is_sign_skew_symmetric({{0, 2}, {-1, 0}}));
  CHECK_FALSE(is_sign_skew_symmetric({{0, 1}, {0, 0}}));
  CHECK_FALSE(is_sign_skew_symmetric({{1, 0}, {0, 0}}));
  CHECK_THROWS_AS(ExchangeMatrix(IntMatrix{{0, 1}, {1, 0}}), PreconditionError);
  CHECK_THROWS_AS(ExchangeMatrix(IntMatrix{{0, 1, 0}, {-1, 0, 0}}), DimensionError);
  CHECK_FALSE(ExchangeMatrix::try_make(IntMatrix{{0, 1}, {1, 0}}).has_value());
}

TEST_CASE("acyclicity") {
  CHECK(is_acyclic(ExchangeMatrix(IntMatrix{{0, 1}, {-1, 0}})));
  CHECK_FALSE(is_acyclic(ExchangeMatrix(IntMatrix{{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}})));
  CHECK(is_acyclic(ExchangeMatrix(IntMatrix{{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}})));
}

TEST_CASE("indecomposability") {
  CHECK(is_indecomposable(ExchangeMatrix(IntMatrix{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}})));
  CHECK_FALSE(is_indecomposable(ExchangeMatrix(IntMatrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}})));
  CHECK(is_indecomposable(ExchangeMatrix(IntMatrix{{0}})));
}

TEST_CASE("matrix mutation examples") {
  CHECK(mutate_matrix(IntMatrix{{0, 1}, {-1, 0}}, 0) == IntMatrix{{0, -1}, {1, 0}});
  const IntMatrix b{{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}};
  const IntMatrix expected{{0, -1, 2}, {1, 0, -1}, {-2, 1, 0}};
  CHECK(mutate_matrix(b, 1) == expected);
  CHECK(to_ll(expected) == oracle::mutate(to_ll(b), 1));
  CHECK_THROWS_AS(ExchangeMatrix(b).mutate(3), IndexError);
}

TEST_CASE("matrix mutation agrees with the oracle and is involutive") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3);
  int tested = 0;
  while (tested < 200) {
    const std::size_t n = 2 + rng() % 3;
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const int v = entry(rng);
        const int w = v == 0 ? 0 : -(v > 0 ? 1 : -1) * (1 + static_cast<int>(rng() % 3));
        m(i, j) = v;
        m(j, i) = w;
      }
    REQUIRE(is_sign_skew_symmetric(m));
    for (std::size_t k = 0; k < n; ++k) {
      const IntMatrix mu = mutate_matrix(m, k);
      CHECK(to_ll(mu) == oracle::mutate(to_ll(m), k));
      CHECK(mutate_matrix(mu, k) == m);
    }
    ++tested;
  }
}

TEST_CASE("mutation of rectangular extended matrices") {
  const IntMatrix ext = principal_extension(IntMatrix{{0, 1}, {-1, 0}});
  CHECK(ext == IntMatrix{{0, 1, -1, 0}, {-1, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  IntMatrix tall(4, 2);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 2; ++j) tall(i, j) = ext(i, j);
  CHECK(to_ll(mutate_matrix(tall, 0)) == oracle::mutate(to_ll(tall), 0));
}

TEST_CASE("total sign-skew-symmetry") {
  auto rep = verify_totally_sss(IntMatrix{{0, 1}, {-1, 0}}, 10);
  CHECK(rep.ok());
  CHECK(rep.verified_depth == 10);
  CHECK(verify_totally_sss(IntMatrix{{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}}, 6).ok());
  CHECK(verify_totally_sss(IntMatrix{{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}}, 6).ok());
  // Cyclic and not skew-symmetrizable: loses the property after one step.
  auto bad = verify_totally_sss(IntMatrix{{0, 1, -1}, {-1, 0, 1}, {2, -1, 0}}, 4);
  REQUIRE_FALSE(bad.ok());
  CHECK(*bad.failure_path == Path{0});
  CHECK(bad.verified_depth == 0);
  CHECK_FALSE(is_sign_skew_symmetric(*bad.failing_matrix));
}

TEST_CASE("skew-symmetrizer") {
  auto d = skew_symmetrizer(IntMatrix{{0, 1}, {-2, 0}});
  REQUIRE(d.has_value());
  CHECK(*d == IntVector{2, 1});
  CHECK_FALSE(skew_symmetrizer(IntMatrix{{0, 1, 1}, {-1, 0, 1}, {-2, -1, 0}}).has_value());
}

TEST_CASE("truncations and J") {
  CHECK(bracket_plus(IntMatrix{{0, -3}, {2, 0}}) == IntMatrix{{0, 0}, {2, 0}});
  CHECK(row_trunc(IntMatrix{{1, 2}, {3, 4}}, 0) == IntMatrix{{1, 2}, {0, 0}});
  CHECK(col_trunc(IntMatrix{{1, 2}, {3, 4}}, 0) == IntMatrix{{1, 0}, {3, 0}});
  CHECK(j_matrix(2, 0) * j_matrix(2, 0) == IntMatrix::identity(2));
  CHECK(j_matrix(3, 1) == IntMatrix{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}});
}

TEST_CASE("determinant and helpers") {
  CHECK(IntMatrix{{2, 1}, {1, 1}}.determinant() == 1);
  CHECK(IntMatrix{{0, 1, 2}, {1, 0, 3}, {4, -3, 8}}.determinant() == -2);
  CHECK(IntMatrix{{1, 2}, {2, 4}}.determinant() == 0);
  CHECK(coherent_sign({1, 0, 2}) == 1);
  CHECK(coherent_sign({-1, 0}) == -1);
  CHECK(coherent_sign({1, -1}) == 0);
  CHECK(coherent_sign({0, 0}) == 0);
  CHECK(is_permutation_matrix(IntMatrix{{0, 1}, {1, 0}}));
  CHECK_FALSE(is_permutation_matrix(IntMatrix{{0, -1}, {1, 0}}));
}

TEST_CASE("paths") {
  CHECK(format_path({0, 1, 0}) == "(1,2,1)");
  CHECK(reduce_path({0, 1, 1, 2, 2, 0}) == Path{});
  CHECK(reduce_path({0, 1, 1, 2}) == Path{0, 2});
  CHECK(reduce_path({0, 0}) == Path{});
  const auto paths = reduced_paths(2, 3);
  CHECK(paths.size() == 7);
  CHECK(paths[0] == Path{});
  CHECK(paths[1] == Path{0});
  CHECK(paths[2] == Path{0, 1});
  CHECK(std::is_sorted(paths.begin(), paths.end()));
}
