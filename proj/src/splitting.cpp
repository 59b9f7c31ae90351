#include "symedge/splitting.hpp"

#include <algorithm>
#include <random>

#include "symedge/errors.hpp"
#include "symedge/symbolic.hpp"

namespace symedge {

namespace {

/// phi(w) by the selection rule of the splitting construction, with r and
/// all indices 0-based.  Picks the smallest j != r with
/// deg(w) - a_r - a_j = s and a_j = max over the other indices, then the
/// smallest t outside {j, r} attaining that max; divides by x_j, and also
/// by x_t when no third index attains the max.
Monomial phi_image(const Monomial& w, int r, int s) {
  const auto& a = w.exponents();
  const int m = w.ambient();
  const int total = w.degree();

  int j = -1;
  int a_max = -1;
  for (int cand = 0; cand < m; ++cand) {
    if (cand == r) continue;
    if (total - a[r] - a[cand] != s) continue;
    int mx = 0;
    for (int i = 0; i < m; ++i) {
      if (i != r && i != cand) mx = std::max(mx, a[i]);
    }
    if (a[cand] == mx) {
      j = cand;
      a_max = mx;
      break;
    }
  }
  if (j < 0) {
    throw DomainError("splitting: no witness index for " + to_string(w) +
                      " (not a generator of the expected symbolic power)");
  }

  int t = -1;
  for (int cand = 0; cand < m; ++cand) {
    if (cand == r || cand == j) continue;
    if (a[cand] == a_max) {
      t = cand;
      break;
    }
  }
  // t exists since a_max is attained away from j and r.

  bool third = false;
  for (int l = 0; l < m; ++l) {
    if (l == j || l == t || l == r) continue;
    if (a[l] == a_max) {
      third = true;
      break;
    }
  }
  return third ? divide_by_variable(w, j)
               : divide_by_variable(divide_by_variable(w, j), t);
}

SplitCertificate build_split(int m, int s, int r_one_based) {
  if (m < 3) throw DomainError("theorem_split: m must be >= 3");
  if (s < 2) throw DomainError("theorem_split: s must be >= 2");
  if (r_one_based < 1 || r_one_based > m) {
    throw DomainError("theorem_split: r must satisfy 1 <= r <= m");
  }
  const int r = r_one_based - 1;

  const MonomialIdeal ideal = restricted_ideal(m, r_one_based, s, RestrictedKind::Outside);
  std::vector<Monomial> left_gens, right_gens;
  for (const Monomial& g : ideal.generators()) {
    if (g.exponents()[r] > 0) {
      left_gens.push_back(g);
    } else {
      right_gens.push_back(g);
    }
  }
  MonomialIdeal left = MonomialIdeal::from_generators(m, std::move(left_gens));
  MonomialIdeal right = MonomialIdeal::from_generators(m, std::move(right_gens));

  // L1 cap L2 = x_r L2, so the splitting function is parametrized by G(L2);
  // verify_ek re-checks this domain against the direct intersection.
  std::vector<SplitMapEntry> map;
  map.reserve(right.generator_count());
  for (const Monomial& v : right.generators()) {
    const Monomial w = multiply_by_variable(v, r);
    map.push_back(SplitMapEntry{w, phi_image(w, r, s), v});
  }
  std::sort(map.begin(), map.end(),
            [](const SplitMapEntry& a, const SplitMapEntry& b) { return a.w < b.w; });

  return SplitCertificate{std::move(ideal), std::move(left), std::move(right),
                          std::move(map), m, r_one_based, s};
}

}  // namespace

SplitCertificate theorem_split(int m, int s, int r) {
  if (r == m - s - 1) {
    throw ExcludedParameterError("theorem_split: r = m - s - 1 = " + std::to_string(r) +
                                 " is the excluded parameter for m = " + std::to_string(m) +
                                 ", s = " + std::to_string(s));
  }
  return build_split(m, s, r);
}

SplitCertificate theorem_split_unchecked(int m, int s, int r) {
  return build_split(m, s, r);
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Partition: return "partition";
    case ViolationKind::MapDomain: return "map-domain";
    case ViolationKind::MapCodomain: return "map-codomain";
    case ViolationKind::LcmOfImages: return "lcm-of-images";
    case ViolationKind::SubsetDivision: return "subset-division";
  }
  return "unknown";
}

namespace {

void record(VerifyReport& report, Violation v) {
  ++report.violation_count;
  if (report.violations.size() < VerifyReport::kMaxRecorded) {
    report.violations.push_back(std::move(v));
  }
}

bool strictly_divides(const Monomial& a, const Monomial& b) {
  return divides(a, b) && a != b;
}

/// Condition (2) for one subset, encoded by the bitmask over `map`.
void check_subset(const SplitCertificate& cert, std::uint64_t mask, VerifyReport& report) {
  const int ambient = cert.ideal.ambient();
  Monomial lcm_s = Monomial::one(ambient);
  Monomial lcm_phi = Monomial::one(ambient);
  Monomial lcm_phi_hat = Monomial::one(ambient);
  for (std::size_t idx = 0; idx < cert.map.size(); ++idx) {
    if ((mask >> idx) & 1ull) {
      const SplitMapEntry& entry = cert.map[idx];
      lcm_s = lcm(lcm_s, entry.w);
      lcm_phi = lcm(lcm_phi, entry.phi);
      lcm_phi_hat = lcm(lcm_phi_hat, entry.phi_hat);
    }
  }
  const bool phi_ok = strictly_divides(lcm_phi, lcm_s);
  const bool phi_hat_ok = strictly_divides(lcm_phi_hat, lcm_s);
  if (phi_ok && phi_hat_ok) return;

  std::vector<Monomial> subset;
  for (std::size_t idx = 0; idx < cert.map.size(); ++idx) {
    if ((mask >> idx) & 1ull) subset.push_back(cert.map[idx].w);
  }
  if (!phi_ok) {
    record(report, Violation{ViolationKind::SubsetDivision,
                             "lcm(phi(S)) = " + to_string(lcm_phi) +
                                 " does not strictly divide lcm(S) = " + to_string(lcm_s),
                             subset});
  }
  if (!phi_hat_ok) {
    record(report, Violation{ViolationKind::SubsetDivision,
                             "lcm(phi_hat(S)) = " + to_string(lcm_phi_hat) +
                                 " does not strictly divide lcm(S) = " + to_string(lcm_s),
                             std::move(subset)});
  }
}

}  // namespace

VerifyReport verify_ek(const SplitCertificate& cert, const VerifyOptions& options) {
  VerifyReport report;

  // Structure: G(I) must be the disjoint union of G(J) and G(K).
  {
    std::vector<Monomial> merged;
    merged.reserve(cert.left.generator_count() + cert.right.generator_count());
    merged.insert(merged.end(), cert.left.generators().begin(), cert.left.generators().end());
    merged.insert(merged.end(), cert.right.generators().begin(), cert.right.generators().end());
    std::sort(merged.begin(), merged.end());
    const bool duplicates = std::adjacent_find(merged.begin(), merged.end()) != merged.end();
    if (duplicates || merged != cert.ideal.generators()) {
      record(report, Violation{ViolationKind::Partition,
                               "G(I) is not the disjoint union of G(J) and G(K)",
                               {}});
    }
  }

  // Map domain: exactly G(J cap K), in canonical order.
  const MonomialIdeal meet = intersect(cert.left, cert.right);
  {
    std::vector<Monomial> domain;
    domain.reserve(cert.map.size());
    for (const auto& entry : cert.map) domain.push_back(entry.w);
    std::vector<Monomial> sorted_domain = domain;
    std::sort(sorted_domain.begin(), sorted_domain.end());
    if (sorted_domain != meet.generators()) {
      record(report, Violation{ViolationKind::MapDomain,
                               "map domain differs from G(J cap K)",
                               {}});
    }
  }

  const auto& left_gens = cert.left.generators();
  const auto& right_gens = cert.right.generators();
  for (const auto& entry : cert.map) {
    if (!std::binary_search(left_gens.begin(), left_gens.end(), entry.phi)) {
      record(report, Violation{ViolationKind::MapCodomain,
                               "phi(" + to_string(entry.w) + ") = " + to_string(entry.phi) +
                                   " is not in G(J)",
                               {entry.w}});
    }
    if (!std::binary_search(right_gens.begin(), right_gens.end(), entry.phi_hat)) {
      record(report, Violation{ViolationKind::MapCodomain,
                               "phi_hat(" + to_string(entry.w) + ") = " +
                                   to_string(entry.phi_hat) + " is not in G(K)",
                               {entry.w}});
    }
    // Condition (1).
    if (lcm(entry.phi, entry.phi_hat) != entry.w) {
      record(report, Violation{ViolationKind::LcmOfImages,
                               "lcm(phi, phi_hat) = " +
                                   to_string(lcm(entry.phi, entry.phi_hat)) +
                                   " differs from w = " + to_string(entry.w),
                               {entry.w}});
    }
  }

  // Condition (2), over every nonempty subset (or a random sample past the cap).
  const std::size_t n = cert.map.size();
  if (n <= options.subset_cap) {
    if (n > 0) {
      const std::uint64_t limit = 1ull << n;
      for (std::uint64_t mask = 1; mask < limit; ++mask) {
        check_subset(cert, mask, report);
      }
      report.subsets_checked = limit - 1;
    }
    report.exhaustive = true;
  } else {
    if (options.samples == 0) {
      throw CapExceededError(
          "verify_ek: |G(J cap K)| = " + std::to_string(n) + " exceeds subset cap " +
          std::to_string(options.subset_cap) +
          "; rerun with sampling (samples > 0 and an explicit seed) for a "
          "non-exhaustive check");
    }
    std::mt19937_64 rng(options.seed);
    const std::uint64_t full = (n >= 64) ? ~0ull : ((1ull << n) - 1);
    for (std::size_t draw = 0; draw < options.samples; ++draw) {
      std::uint64_t mask = rng() & full;
      if (mask == 0) mask = 1;
      check_subset(cert, mask, report);
    }
    report.subsets_checked = options.samples;
    report.exhaustive = false;
  }

  report.valid = (report.violation_count == 0);
  return report;
}

std::vector<SplitCertificate> split_chain(int m, int s) {
  if (m < 3) throw DomainError("split_chain: m must be >= 3");
  if (s < 2) throw DomainError("split_chain: s must be >= 2");
  std::vector<SplitCertificate> chain;
  chain.reserve(m);
  for (int r = m; r >= 1; --r) {
    if (r == m - s - 1) {
      throw ChainBrokenError("split_chain: blocked at r = " + std::to_string(r) +
                                 " = m - s - 1 for m = " + std::to_string(m) +
                                 ", s = " + std::to_string(s),
                             r);
    }
    chain.push_back(theorem_split(m, s, r));
  }
  return chain;
}

}  // namespace symedge
