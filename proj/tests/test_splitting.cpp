#include <algorithm>

#include <doctest.h>

#include "symedge/errors.hpp"
#include "symedge/serialize.hpp"
#include "symedge/splitting.hpp"
#include "symedge/symbolic.hpp"
#include "test_util.hpp"

using namespace symedge;
using symedge::testing::ideal_of;
using symedge::testing::mono;

TEST_CASE("splitting I(K3)^(s) at r = 3 recovers the inside/outside pieces") {
  for (int s = 2; s <= 4; ++s) {
    const SplitCertificate cert = theorem_split(3, s, 3);
    CHECK(cert.ideal == complete_symbolic_gens(3, s));
    CHECK(cert.left == restricted_ideal(3, 2, s, RestrictedKind::Outside));
    CHECK(cert.right == restricted_ideal(3, 2, s, RestrictedKind::Inside));
    const VerifyReport report = verify_ek(cert);
    CHECK(report.valid);
    CHECK(report.exhaustive);
  }
}

TEST_CASE("the intersection of the two sides is x_r times the right side") {
  for (const auto& [m, s, r] : std::vector<std::tuple<int, int, int>>{
           {3, 2, 3}, {3, 3, 2}, {4, 2, 4}, {4, 3, 3}, {4, 3, 1}}) {
    const SplitCertificate cert = theorem_split(m, s, r);
    CHECK(intersect(cert.left, cert.right) == scale(r - 1, cert.right));
    // every map row divides out x_r
    for (const auto& entry : cert.map) {
      CHECK(entry.phi_hat == divide_by_variable(entry.w, r - 1));
      CHECK(lcm(entry.phi, entry.phi_hat) == entry.w);
      CHECK(entry.phi.degree() >= s + 1);
      CHECK(cert.left.generators().end() !=
            std::find(cert.left.generators().begin(), cert.left.generators().end(),
                      entry.phi));
    }
  }
}

TEST_CASE("the excluded parameter r = m - s - 1 is rejected") {
  CHECK_THROWS_AS(theorem_split(5, 2, 2), ExcludedParameterError);
  CHECK_THROWS_AS(theorem_split(6, 2, 3), ExcludedParameterError);
  CHECK_THROWS_AS(theorem_split(6, 3, 2), ExcludedParameterError);
  // neighbouring parameters stay legal
  CHECK(verify_ek(theorem_split(5, 2, 3)).valid);
  CHECK(verify_ek(theorem_split(5, 2, 4)).valid);
}

TEST_CASE("forcing the construction through the excluded case fails as predicted") {
  const SplitCertificate cert = theorem_split_unchecked(5, 2, 2);
  // w = x2*x3*x4*x5 receives phi(w) = x2*x4*x5, which lacks the x3 factor
  const Monomial w = mono(5, "x2*x3*x4*x5");
  const auto row = std::find_if(cert.map.begin(), cert.map.end(),
                                [&](const SplitMapEntry& e) { return e.w == w; });
  REQUIRE(row != cert.map.end());
  CHECK(row->phi == mono(5, "x2*x4*x5"));
  CHECK_FALSE(std::binary_search(cert.left.generators().begin(),
                                 cert.left.generators().end(), row->phi));

  const VerifyReport report = verify_ek(cert);
  CHECK_FALSE(report.valid);
  const bool has_codomain_violation = std::any_of(
      report.violations.begin(), report.violations.end(), [&](const Violation& v) {
        return v.kind == ViolationKind::MapCodomain && !v.witness.empty() &&
               v.witness.front() == w;
      });
  CHECK(has_codomain_violation);
}

TEST_CASE("a splitting function fixing w breaks condition (2) on {w}") {
  // start from a correct certificate and corrupt one row
  SplitCertificate cert = theorem_split(3, 3, 3);
  REQUIRE_FALSE(cert.map.empty());
  cert.map.front().phi = cert.map.front().w;
  const VerifyReport report = verify_ek(cert);
  CHECK_FALSE(report.valid);
  const Monomial& w = cert.map.front().w;
  const bool subset_violation_on_w = std::any_of(
      report.violations.begin(), report.violations.end(), [&](const Violation& v) {
        return v.kind == ViolationKind::SubsetDivision && v.witness.size() == 1 &&
               v.witness.front() == w;
      });
  CHECK(subset_violation_on_w);
  // the corrupted image also fails the codomain test
  const bool codomain_violation = std::any_of(
      report.violations.begin(), report.violations.end(),
      [&](const Violation& v) { return v.kind == ViolationKind::MapCodomain; });
  CHECK(codomain_violation);
}

TEST_CASE("partition violations are reported") {
  SplitCertificate cert = theorem_split(3, 2, 3);
  // drop a generator from the left side
  std::vector<Monomial> gens(cert.left.generators().begin(),
                             cert.left.generators().end() - 1);
  cert.left = MonomialIdeal::from_generators(3, std::move(gens));
  const VerifyReport report = verify_ek(cert);
  CHECK_FALSE(report.valid);
  CHECK(std::any_of(report.violations.begin(), report.violations.end(),
                    [](const Violation& v) { return v.kind == ViolationKind::Partition; }));
}

TEST_CASE("condition (1) violations are reported") {
  SplitCertificate cert = theorem_split(3, 3, 3);
  REQUIRE_FALSE(cert.map.empty());
  cert.map.front().phi = Monomial::one(3);
  const VerifyReport report = verify_ek(cert);
  CHECK_FALSE(report.valid);
  CHECK(std::any_of(
      report.violations.begin(), report.violations.end(),
      [](const Violation& v) { return v.kind == ViolationKind::LcmOfImages; }));
}

TEST_CASE("subset cap and sampling") {
  const SplitCertificate cert = theorem_split(4, 3, 4);
  REQUIRE(cert.map.size() == 6);
  VerifyOptions strict;
  strict.subset_cap = 2;
  CHECK_THROWS_AS(verify_ek(cert, strict), CapExceededError);

  VerifyOptions sampled;
  sampled.subset_cap = 2;
  sampled.samples = 64;
  sampled.seed = 7;
  const VerifyReport report = verify_ek(cert, sampled);
  CHECK(report.valid);
  CHECK_FALSE(report.exhaustive);
  CHECK(report.subsets_checked == 64);
}

TEST_CASE("split chains") {
  for (int s = 2; s <= 4; ++s) {
    const auto chain = split_chain(3, s);
    REQUIRE(chain.size() == 3);
    CHECK(chain[0].ideal == complete_symbolic_gens(3, s));
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      CHECK(chain[k].left == chain[k + 1].ideal);
    }
    CHECK(chain.back().left == restricted_ideal(3, 0, s, RestrictedKind::Outside));
    for (const auto& cert : chain) {
      CHECK(verify_ek(cert).valid);
    }
  }
}

TEST_CASE("split chain of K4 at s = 4") {
  const auto chain = split_chain(4, 4);
  REQUIRE(chain.size() == 4);
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    CHECK(chain[k].left == chain[k + 1].ideal);
  }
  for (const auto& cert : chain) {
    CHECK(verify_ek(cert).valid);
  }
}

TEST_CASE("the chain breaks at r = m - s - 1 when s < m") {
  CHECK_THROWS_AS(split_chain(5, 2), ChainBrokenError);
  try {
    split_chain(5, 2);
  } catch (const ChainBrokenError& e) {
    CHECK(e.blocking_r() == 2);
  }
}

TEST_CASE("certificates serialize to JSON and back") {
  const SplitCertificate cert = theorem_split(3, 3, 2);
  const std::string text = certificate_to_json(cert);
  const SplitCertificate back = certificate_from_json(text);
  CHECK(back.ideal == cert.ideal);
  CHECK(back.left == cert.left);
  CHECK(back.right == cert.right);
  CHECK(back.m == cert.m);
  CHECK(back.r == cert.r);
  CHECK(back.s == cert.s);
  REQUIRE(back.map.size() == cert.map.size());
  for (std::size_t k = 0; k < cert.map.size(); ++k) {
    CHECK(back.map[k].w == cert.map[k].w);
    CHECK(back.map[k].phi == cert.map[k].phi);
    CHECK(back.map[k].phi_hat == cert.map[k].phi_hat);
  }
  CHECK(verify_ek(back).valid == verify_ek(cert).valid);
  CHECK_THROWS_AS(certificate_from_json("{"), ParseError);
  CHECK_THROWS_AS(certificate_from_json("{}"), ParseError);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(theorem_split(2, 2, 1), DomainError);
  CHECK_THROWS_AS(theorem_split(3, 1, 3), DomainError);
  CHECK_THROWS_AS(theorem_split(3, 2, 0), DomainError);
  CHECK_THROWS_AS(theorem_split(3, 2, 4), DomainError);
  CHECK_THROWS_AS(split_chain(2, 3), DomainError);
}
