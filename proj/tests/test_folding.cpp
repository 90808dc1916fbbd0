#include "oracle.hpp"

#include "clusterlab/exchange_matrix.hpp"
#include "clusterlab/folding.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace clusterlab;

namespace {

// 1 -> 2 <- 3 with the swap (1 3).
ActedQuiver a3_swap() { return ActedQuiver(IntMatrix{{0, 1, 0}, {-1, 0, -1}, {0, 1, 0}}, {}, {{2, 1, 0}}); }

}  // namespace

TEST_CASE("admissibility") {
  CHECK(check_admissible(a3_swap()).admissible);
  const auto edge = check_admissible(ActedQuiver(IntMatrix{{0, 1}, {-1, 0}}, {}, {{1, 0}}));
  CHECK_FALSE(edge.admissible);
  CHECK(edge.violated_condition == "iii");
  CHECK(edge.witness_vertices == std::vector<std::size_t>{0, 1});
  CHECK(edge.witness_word == std::vector<std::size_t>{0});
  CHECK(check_admissible(ActedQuiver(IntMatrix{{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}, {}, {})).admissible);
  // Generator mixing a frozen and a mutable vertex.
  const auto mixed = check_admissible(ActedQuiver(IntMatrix::zero(2, 2), {false, true}, {{1, 0}}));
  CHECK(mixed.violated_condition == "i");
  // b_ij != b_g(i)g(j).
  const auto ii = check_admissible(ActedQuiver(IntMatrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}, {}, {{2, 1, 0}}));
  CHECK(ii.violated_condition == "ii");
  // 1 -> 2 -> 3 -> 4 with swap (1 3)(2 4): b_12 b_32 < 0.
  const IntMatrix path4{{0, 1, 0, -1}, {-1, 0, 1, 0}, {0, -1, 0, 1}, {1, 0, -1, 0}};
  const auto iv = check_admissible(ActedQuiver(path4, {}, {{2, 3, 0, 1}}));
  CHECK(iv.violated_condition == "iv");
}

TEST_CASE("non-skew-symmetric quivers are rejected") {
  CHECK_THROWS_AS(ActedQuiver(IntMatrix{{0, 2}, {-1, 0}}, {}, {}), PreconditionError);
  CHECK_THROWS_AS(ActedQuiver(IntMatrix{{0, 1}, {-1, 0}}, {}, {{0, 0}}), PreconditionError);
}

TEST_CASE("group closure") {
  const auto s3 = close_group(3, {{1, 0, 2}, {1, 2, 0}});
  CHECK(s3.size() == 6);
  CHECK(s3.front().word.empty());
  for (const auto& e : s3) {
    Permutation p{0, 1, 2};
    const std::vector<Permutation> gens{{1, 0, 2}, {1, 2, 0}};
    for (auto g : e.word) {
      Permutation q(3);
      for (std::size_t i = 0; i < 3; ++i) q[i] = gens[g][p[i]];
      p = q;
    }
    CHECK(p == e.perm);
  }
  CHECK_THROWS_AS(close_group(3, {{1, 2, 0}}, 2), GroupTooLargeError);
}

TEST_CASE("group bound from the environment") {
  setenv("CLUSTERLAB_MAX_GROUP", "5", 1);
  CHECK(max_group_size() == 5);
  CHECK_THROWS_AS(close_group(3, {{1, 0, 2}, {1, 2, 0}}), GroupTooLargeError);
  unsetenv("CLUSTERLAB_MAX_GROUP");
  CHECK(max_group_size() == 10000);
}

TEST_CASE("orbit mutation") {
  const ActedQuiver q = a3_swap();
  const ActedQuiver m = orbit_mutate(q, 0);
  CHECK(m.matrix() == IntMatrix{{0, -1, 0}, {1, 0, 1}, {0, -1, 0}});
  CHECK(m.matrix() == composed_orbit_mutation(q.matrix(), {0, 2}));
  CHECK(m.matrix() == composed_orbit_mutation(q.matrix(), {2, 0}));
  CHECK(orbit_mutate(m, 2) == q);
  const ActedQuiver trivial(IntMatrix{{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}}, {}, {});
  CHECK(orbit_mutate(trivial, 1).matrix() == mutate_matrix(trivial.matrix(), 1));
  CHECK_THROWS_AS(orbit_mutate(ActedQuiver(IntMatrix{{0, 1}, {-1, 0}}, {}, {{1, 0}}), 0), PreconditionError);
}

TEST_CASE("orbit mutation matches the oracle composition on larger orbits") {
  // Two copies of 1 -> 2 -> 3 exchanged by the action.
  IntMatrix b(6, 6);
  for (std::size_t c : {0u, 3u}) {
    b(c, c + 1) = 1;
    b(c + 1, c) = -1;
    b(c + 1, c + 2) = 1;
    b(c + 2, c + 1) = -1;
  }
  const ActedQuiver q(b, {}, {{3, 4, 5, 0, 1, 2}});
  REQUIRE(check_admissible(q).admissible);
  for (std::size_t k = 0; k < 3; ++k) {
    oracle::Mat m(6, std::vector<long long>(6));
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) m[i][j] = b(i, j).get_si();
    m = oracle::mutate(oracle::mutate(m, k), k + 3);
    const IntMatrix got = orbit_mutate(q, k).matrix();
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) CHECK(got(i, j).get_si() == m[i][j]);
  }
}

TEST_CASE("folded matrix") {
  CHECK(fold_matrix(a3_swap()) == IntMatrix{{0, 2}, {-1, 0}});
  const IntMatrix b{{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}};
  CHECK(fold_matrix(ActedQuiver(b, {}, {})) == b);
  const ActedQuiver q = a3_swap();
  CHECK(fold_matrix(orbit_mutate(q, 0)) == mutate_matrix(fold_matrix(q), 0));
  CHECK(fold_matrix(orbit_mutate(q, 1)) == mutate_matrix(fold_matrix(q), 1));
  CHECK(is_sign_skew_symmetric(fold_matrix(q)));
}

TEST_CASE("framing") {
  const ActedQuiver one = frame(ActedQuiver(IntMatrix{{0}}, {}, {}));
  CHECK(one.size() == 2);
  CHECK(one.matrix() == IntMatrix{{0, -1}, {1, 0}});
  CHECK(one.frozen() == std::vector<bool>{false, true});
  const ActedQuiver f = frame(a3_swap());
  CHECK(f.generators() == std::vector<Permutation>{{2, 1, 0, 5, 4, 3}});
  CHECK(f.matrix() == principal_extension(a3_swap().matrix()));
  CHECK(check_admissible(f).admissible);
  CHECK_THROWS_AS(frame(f), UnsupportedError);
}

TEST_CASE("global foldability") {
  CHECK(verify_globally_foldable(a3_swap(), 6).passed());
  CHECK(verify_globally_foldable(frame(a3_swap()), 5).passed());
  const ActedQuiver trivial(IntMatrix{{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}}, {}, {});
  CHECK(verify_globally_foldable(trivial, 5).passed());
  // Frozen-path exclusion: i' -> k -> j'.
  const ActedQuiver bad(IntMatrix{{0, -1, 1}, {1, 0, 0}, {-1, 0, 0}}, {false, true, true}, {});
  CHECK_FALSE(check_no_frozen_paths(bad));
  const auto r = verify_globally_foldable(bad, 2);
  CHECK_FALSE(r.passed());
  CHECK(r.witness->empty());
}

TEST_CASE("actions agreeing on mutable vertices give the same orbit mutations") {
  // Mutable 1 -> 2 <- 3, frozen 4, 5 each attached to 2; two actions that
  // agree on {1,2,3} but treat the frozen pair differently.
  const IntMatrix b{{0, 1, 0, 0, 0}, {-1, 0, -1, 1, 1}, {0, 1, 0, 0, 0}, {0, -1, 0, 0, 0}, {0, -1, 0, 0, 0}};
  const std::vector<bool> frozen{false, false, false, true, true};
  const ActedQuiver q1(b, frozen, {{2, 1, 0, 3, 4}});
  const ActedQuiver q2(b, frozen, {{2, 1, 0, 4, 3}});
  REQUIRE(check_admissible(q1).admissible);
  REQUIRE(check_admissible(q2).admissible);
  for (std::size_t k : {0u, 1u}) CHECK(orbit_mutate(q1, k).matrix() == orbit_mutate(q2, k).matrix());
}
