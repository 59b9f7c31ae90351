#include <algorithm>
#include <random>

#include <doctest.h>

#include "symedge/errors.hpp"
#include "symedge/ideal.hpp"
#include "test_util.hpp"

using namespace symedge;
using symedge::testing::ideal_of;
using symedge::testing::mono;

TEST_CASE("minimize drops multiples and keeps antichains") {
  CHECK(minimize(2, {mono(2, "x1*x2"), mono(2, "x1^2*x2^2")}) == ideal_of(2, "x1*x2"));
  CHECK(minimize(2, {mono(2, "x1^2"), mono(2, "x2^2"), mono(2, "x1*x2")}) ==
        ideal_of(2, "x1^2, x2^2, x1*x2"));
  // an already-minimal generating set comes back unchanged
  const MonomialIdeal k33 = symedge::testing::k3_cubed();
  CHECK(minimize(3, std::vector<Monomial>(k33.generators().begin(), k33.generators().end())) ==
        k33);
  CHECK(k33.generator_count() == 6);
}

TEST_CASE("minimize is idempotent and order independent") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> m_dist(1, 5);
    const int m = m_dist(rng);
    std::vector<Monomial> gens;
    std::uniform_int_distribution<int> count_dist(0, 8);
    const int count = count_dist(rng);
    for (int k = 0; k < count; ++k) {
      gens.push_back(symedge::testing::random_monomial(rng, m, 6));
    }
    const MonomialIdeal once = minimize(m, gens);
    std::shuffle(gens.begin(), gens.end(), rng);
    const MonomialIdeal shuffled = minimize(m, gens);
    CHECK(once == shuffled);
    CHECK(minimize(m, std::vector<Monomial>(once.generators().begin(),
                                            once.generators().end())) == once);
    // invariant: stored generators are pairwise incomparable
    for (std::size_t a = 0; a < once.generator_count(); ++a) {
      for (std::size_t b = 0; b < once.generator_count(); ++b) {
        if (a == b) continue;
        CHECK_FALSE(divides(once.generators()[a], once.generators()[b]));
      }
    }
  }
}

TEST_CASE("intersect basic identities") {
  CHECK(intersect(ideal_of(2, "x1"), ideal_of(2, "x2")) == ideal_of(2, "x1*x2"));
  const MonomialIdeal I = ideal_of(3, "x1^2, x2*x3");
  CHECK(intersect(I, MonomialIdeal::unit(3)) == I);
  CHECK(intersect(I, MonomialIdeal::zero(3)) == MonomialIdeal::zero(3));
  CHECK_THROWS_AS(intersect(ideal_of(2, "x1"), ideal_of(3, "x1")), AmbientMismatchError);
}

TEST_CASE("intersecting I(K3)^(3) with <x1x2x3>") {
  const MonomialIdeal meet =
      intersect(symedge::testing::k3_cubed(), ideal_of(3, "x1*x2*x3"));
  CHECK(meet == ideal_of(3, "x1^2*x2^2*x3, x1^2*x2*x3^2, x1*x2^2*x3^2"));
  // the same ideal is x1*x2*x3 * I(K3)
  MonomialIdeal shifted = ideal_of(3, "x1*x2, x1*x3, x2*x3");
  for (int v = 0; v < 3; ++v) shifted = scale(v, shifted);
  CHECK(meet == shifted);
}

TEST_CASE("intersection satisfies the membership law on random input") {
  std::mt19937_64 rng(987654321);
  for (int trial = 0; trial < 400; ++trial) {
    std::uniform_int_distribution<int> m_dist(1, 5);
    const int m = m_dist(rng);
    const MonomialIdeal I = symedge::testing::random_ideal(rng, m, 5, 8);
    const MonomialIdeal J = symedge::testing::random_ideal(rng, m, 5, 8);
    const MonomialIdeal meet = intersect(I, J);
    const Monomial w = symedge::testing::random_monomial(rng, m, 12);
    CHECK(membership(w, meet) == (membership(w, I) && membership(w, J)));
  }
}

TEST_CASE("scale multiplies every generator by one variable") {
  CHECK(scale(2, ideal_of(3, "x1*x2")) == ideal_of(3, "x1*x2*x3"));
  CHECK(scale(0, MonomialIdeal::zero(2)) == MonomialIdeal::zero(2));
  const MonomialIdeal I = ideal_of(3, "x1^2, x2*x3, x3^4");
  const MonomialIdeal xI = scale(1, I);
  REQUIRE(xI.generator_count() == I.generator_count());
  for (std::size_t k = 0; k < I.generator_count(); ++k) {
    CHECK(xI.generators()[k].degree() == I.generators()[k].degree() + 1);
  }
  CHECK_THROWS_AS(scale(3, I), DomainError);
}

TEST_CASE("product and power") {
  CHECK(power(ideal_of(2, "x1, x2"), 2) == ideal_of(2, "x1^2, x1*x2, x2^2"));
  for (int s = 1; s <= 5; ++s) {
    CHECK(power(ideal_of(2, "x1*x2"), s) ==
          ideal_of(2, "x1^" + std::to_string(s) + "*x2^" + std::to_string(s)));
  }
  const MonomialIdeal I = ideal_of(3, "x1^2, x2*x3");
  CHECK(product(I, MonomialIdeal::unit(3)) == I);
  CHECK(product(I, MonomialIdeal::zero(3)) == MonomialIdeal::zero(3));
  CHECK_THROWS_AS(power(I, 0), DomainError);
}

TEST_CASE("power and product are consistent on random ideals") {
  std::mt19937_64 rng(13579);
  for (int trial = 0; trial < 120; ++trial) {
    std::uniform_int_distribution<int> m_dist(1, 4);
    const int m = m_dist(rng);
    const MonomialIdeal I = symedge::testing::random_ideal(rng, m, 4, 4);
    std::uniform_int_distribution<int> s_dist(1, 3);
    const int s = s_dist(rng);
    CHECK(power(I, s + 1) == product(power(I, s), I));
  }
}

TEST_CASE("membership") {
  CHECK(membership(mono(2, "x1^2*x2^2"), ideal_of(2, "x1*x2")));
  CHECK_FALSE(membership(mono(3, "x1^5"), ideal_of(3, "x1*x2, x2*x3")));
  CHECK(membership(mono(3, "x1*x2*x3"), symedge::testing::k3_squared()));
  CHECK_FALSE(membership(mono(2, "x1"), MonomialIdeal::zero(2)));
  CHECK(membership(mono(2, "1"), MonomialIdeal::unit(2)));
}

TEST_CASE("graded dimension counts monomials by degree") {
  CHECK(graded_dimension(ideal_of(2, "x1*x2"), 2, GradedMode::Ideal) == 1);
  for (int j = 0; j <= 6; ++j) {
    CHECK(graded_dimension(MonomialIdeal::zero(4), j, GradedMode::Quotient) ==
          binomial(j + 3, 3));
  }
  // degree-2 monomials in 3 variables avoiding the edge monomials of K3
  CHECK(graded_dimension(ideal_of(3, "x1*x2, x1*x3, x2*x3"), 2, GradedMode::Quotient) == 3);
  CHECK_THROWS_AS(graded_dimension(ideal_of(2, "x1"), 65, GradedMode::Ideal),
                  CapExceededError);
}

TEST_CASE("graded dimension modes partition all monomials") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 150; ++trial) {
    std::uniform_int_distribution<int> m_dist(1, 4);
    const int m = m_dist(rng);
    const MonomialIdeal I = symedge::testing::random_ideal(rng, m, 5, 6);
    std::uniform_int_distribution<int> j_dist(0, 10);
    const int j = j_dist(rng);
    CHECK(graded_dimension(I, j, GradedMode::Ideal) +
              graded_dimension(I, j, GradedMode::Quotient) ==
          binomial(j + m - 1, m - 1));
  }
}

TEST_CASE("ideal text forms") {
  CHECK(to_string(MonomialIdeal::zero(3)) == "0");
  CHECK(to_string(ideal_of(2, "x2^2, x1")) == "x2^2, x1");  // canonical lex order
  CHECK(parse_ideal("0", 2) == MonomialIdeal::zero(2));
  CHECK(parse_ideal("  ", 2) == MonomialIdeal::zero(2));
  const MonomialIdeal I = ideal_of(3, "x1*x2, x3^4");
  CHECK(parse_ideal(to_string(I), 3) == I);
}

TEST_CASE("zero and unit ideals") {
  CHECK(MonomialIdeal::zero(3).is_zero());
  CHECK(MonomialIdeal::unit(3).is_unit());
  // the unit absorbs everything under minimization
  CHECK(minimize(2, {mono(2, "1"), mono(2, "x1^4")}) == MonomialIdeal::unit(2));
}
