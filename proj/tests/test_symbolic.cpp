#include <algorithm>
#include <random>
#include <set>

#include <doctest.h>

#include "symedge/errors.hpp"
#include "symedge/symbolic.hpp"
#include "test_util.hpp"

using namespace symedge;
using symedge::testing::ideal_of;
using symedge::testing::mono;

TEST_CASE("symbolic powers of K2 are ordinary powers") {
  for (int s = 1; s <= 6; ++s) {
    const std::string gen = "x1^" + std::to_string(s) + "*x2^" + std::to_string(s);
    CHECK(symbolic_power(SimpleGraph::complete(2), s) == ideal_of(2, gen));
  }
}

TEST_CASE("symbolic powers of K3 from the cover intersection") {
  CHECK(symbolic_power(SimpleGraph::complete(3), 1) ==
        ideal_of(3, "x1*x2, x1*x3, x2*x3"));
  CHECK(symbolic_power(SimpleGraph::complete(3), 2) == symedge::testing::k3_squared());
  CHECK(symbolic_power(SimpleGraph::complete(3), 3) == symedge::testing::k3_cubed());
}

TEST_CASE("symbolic power edge cases") {
  CHECK(symbolic_power(SimpleGraph(3, {}), 4) == MonomialIdeal::zero(3));
  CHECK_THROWS_AS(symbolic_power(SimpleGraph::complete(3), 0), DomainError);
  // isolated vertex: the third variable never appears
  const SimpleGraph G(3, {{0, 1}});
  CHECK(symbolic_power(G, 2) == ideal_of(3, "x1^2*x2^2"));
}

TEST_CASE("ordinary powers sit inside symbolic powers") {
  const std::vector<SimpleGraph> graphs = {SimpleGraph::complete(3),
                                           SimpleGraph::complete(4),
                                           SimpleGraph::cycle(5), SimpleGraph::path(4)};
  for (const SimpleGraph& G : graphs) {
    for (int s = 2; s <= 3; ++s) {
      const MonomialIdeal ordinary = power(edge_ideal(G), s);
      const MonomialIdeal symbolic = symbolic_power(G, s);
      for (const Monomial& g : ordinary.generators()) {
        CHECK(membership(g, symbolic));
      }
    }
  }
}

TEST_CASE("membership via the cover criterion") {
  CHECK(symbolic_membership(mono(3, "x1*x2*x3"), SimpleGraph::complete(3), 2));
  CHECK_FALSE(symbolic_membership(mono(3, "x1*x2*x3"), SimpleGraph::complete(3), 3));
  for (int s = 1; s <= 5; ++s) {
    const Monomial w = mono(2, "x1^" + std::to_string(s) + "*x2^" + std::to_string(s));
    CHECK(symbolic_membership(w, SimpleGraph::complete(2), s));
  }
  CHECK_THROWS_AS(symbolic_membership(mono(2, "x1"), SimpleGraph::complete(3), 2),
                  AmbientMismatchError);
}

TEST_CASE("membership criterion agrees with the computed generators") {
  std::mt19937_64 rng(1618);
  const std::vector<SimpleGraph> graphs = {SimpleGraph::complete(3), SimpleGraph::path(4),
                                           SimpleGraph::cycle(4),
                                           SimpleGraph::complete(4)};
  for (const SimpleGraph& G : graphs) {
    for (int s = 1; s <= 3; ++s) {
      const MonomialIdeal I = symbolic_power(G, s);
      for (int trial = 0; trial < 60; ++trial) {
        const Monomial w =
            symedge::testing::random_monomial(rng, G.vertex_count(), 12);
        CHECK(symbolic_membership(w, G, s) == membership(w, I));
      }
    }
  }
}

TEST_CASE("fast-path generators for complete graphs") {
  const MonomialIdeal fast = complete_symbolic_gens(3, 3);
  CHECK(fast == symedge::testing::k3_cubed());
  std::multiset<int> degrees;
  for (const Monomial& g : fast.generators()) degrees.insert(g.degree());
  CHECK(degrees == std::multiset<int>{5, 5, 5, 6, 6, 6});

  for (int s = 2; s <= 5; ++s) {
    CHECK(complete_symbolic_gens(2, s) ==
          ideal_of(2, "x1^" + std::to_string(s) + "*x2^" + std::to_string(s)));
  }
  CHECK(complete_symbolic_gens(4, 2) == symbolic_power(SimpleGraph::complete(4), 2));
  CHECK_THROWS_AS(complete_symbolic_gens(1, 2), DomainError);
  CHECK_THROWS_AS(complete_symbolic_gens(3, 1), DomainError);
}

TEST_CASE("fast path equals the intersection path on a small grid") {
  for (int m = 2; m <= 4; ++m) {
    for (int s = 2; s <= 4; ++s) {
      CHECK(complete_symbolic_gens(m, s) == symbolic_power(SimpleGraph::complete(m), s));
    }
  }
}

TEST_CASE("generator degrees lie in the window [s+1, 2s]") {
  for (int m = 2; m <= 5; ++m) {
    for (int s = 2; s <= 5; ++s) {
      const MonomialIdeal I = complete_symbolic_gens(m, s);
      for (const Monomial& g : I.generators()) {
        CHECK(g.degree() >= s + 1);
        CHECK(g.degree() <= 2 * s);
      }
    }
  }
}

TEST_CASE("restricted ideals") {
  for (int s = 2; s <= 4; ++s) {
    const std::string gen = "x1^" + std::to_string(s) + "*x2^" + std::to_string(s);
    CHECK(restricted_ideal(3, 2, s, RestrictedKind::Inside) == ideal_of(3, gen));
  }
  // r = m: both kinds are the full symbolic power
  CHECK(restricted_ideal(3, 3, 3, RestrictedKind::Inside) == symedge::testing::k3_cubed());
  CHECK(restricted_ideal(3, 3, 3, RestrictedKind::Outside) == symedge::testing::k3_cubed());
  // r = 0, s = m: product identity with the edge ideal
  MonomialIdeal expected = ideal_of(3, "x1*x2, x1*x3, x2*x3");
  for (int v = 0; v < 3; ++v) expected = scale(v, expected);
  CHECK(restricted_ideal(3, 0, 3, RestrictedKind::Outside) == expected);
  // r = 0 on the inside keeps no generator at all
  CHECK(restricted_ideal(3, 0, 3, RestrictedKind::Inside) == MonomialIdeal::zero(3));
  CHECK_THROWS_AS(restricted_ideal(3, 4, 2, RestrictedKind::Inside), DomainError);
  CHECK_THROWS_AS(restricted_ideal(3, -1, 2, RestrictedKind::Inside), DomainError);
  CHECK_THROWS_AS(restricted_ideal(3, 2, 1, RestrictedKind::Inside), DomainError);
}

TEST_CASE("product identity for r = 0 whenever s >= m") {
  for (int m = 2; m <= 4; ++m) {
    for (int s = m; s <= m + 2; ++s) {
      MonomialIdeal expected = symbolic_power(SimpleGraph::complete(m), s - m + 1);
      for (int v = 0; v < m; ++v) expected = scale(v, expected);
      CHECK(restricted_ideal(m, 0, s, RestrictedKind::Outside) == expected);
    }
  }
}

TEST_CASE("inside and outside restrictions meet in x_m times the inside") {
  for (int m = 3; m <= 5; ++m) {
    for (int s = 2; s <= 4; ++s) {
      const MonomialIdeal inside = restricted_ideal(m, m - 1, s, RestrictedKind::Inside);
      const MonomialIdeal outside = restricted_ideal(m, m - 1, s, RestrictedKind::Outside);
      CHECK(intersect(inside, outside) == scale(m - 1, inside));
    }
  }
}

TEST_CASE("parallel symbolic generators") {
  // splitting a_1 = 2 of x1^2*x2^2 over a block of size 2
  CHECK(parallel_symbolic_gens(SimpleGraph::complete(2), {2, 1}, 2) ==
        ideal_of(3, "x1^2*x3^2, x1*x2*x3^2, x2^2*x3^2"));
  // identity alpha
  for (int s = 1; s <= 3; ++s) {
    CHECK(parallel_symbolic_gens(SimpleGraph::complete(3), {1, 1, 1}, s) ==
          symbolic_power(SimpleGraph::complete(3), s));
  }
  // both copies of the square-free generator x1*x2*x3 appear
  const MonomialIdeal par = parallel_symbolic_gens(SimpleGraph::complete(3), {2, 1, 1}, 2);
  CHECK(membership(mono(4, "x1*x3*x4"), par));
  CHECK(par.contains(mono(4, "x2*x3*x4")));
  const auto& gens = par.generators();
  CHECK(std::find(gens.begin(), gens.end(), mono(4, "x1*x3*x4")) != gens.end());
  CHECK(std::find(gens.begin(), gens.end(), mono(4, "x2*x3*x4")) != gens.end());
}

TEST_CASE("parallel generators equal the cover computation on the parallelized graph") {
  const std::vector<std::pair<SimpleGraph, std::vector<int>>> cases = {
      {SimpleGraph::complete(3), {2, 1, 1}},
      {SimpleGraph::complete(2), {2, 2}},
      {SimpleGraph::path(3), {1, 2, 1}},
      {SimpleGraph::cycle(4), {2, 1, 1, 1}},
  };
  for (const auto& [G, alpha] : cases) {
    for (int s = 2; s <= 3; ++s) {
      auto [H, par] = parallelize(G, alpha);
      CHECK(parallel_symbolic_gens(G, alpha, s) == symbolic_power(H, s));
    }
  }
}
