#ifndef SYMEDGE_SPLITTING_HPP
#define SYMEDGE_SPLITTING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symedge/ideal.hpp"

namespace symedge {

inline constexpr std::size_t kDefaultSubsetCap = 20;

/// One row of a splitting function: w in G(J cap K) with its images
/// phi(w) in G(J) and phi_hat(w) in G(K).
struct SplitMapEntry {
  Monomial w;
  Monomial phi;
  Monomial phi_hat;
};

/// A candidate Eliahou-Kervaire splitting I = J + K together with the
/// splitting function, stored extensionally so it can be serialized,
/// inspected and re-verified.  G(I) must be the disjoint union of G(J) and
/// G(K); the map domain must be exactly G(J cap K).
struct SplitCertificate {
  MonomialIdeal ideal;
  MonomialIdeal left;   // J
  MonomialIdeal right;  // K
  std::vector<SplitMapEntry> map;  // sorted by w

  // Construction parameters, for reporting; m = r = s = 0 for hand-built
  // certificates.
  int m = 0;
  int r = 0;
  int s = 0;
};

/// The splitting of the restricted ideal attached to (K_m, K_r, s):
/// J = generators divisible by x_r, K = the rest, phi_hat(w) = w / x_r,
/// and phi(w) given by the smallest-index selection rule.  Requires m >= 3,
/// s >= 2, 1 <= r <= m and r != m-s-1 (the excluded parameter).
SplitCertificate theorem_split(int m, int s, int r);

/// Same construction with the excluded-parameter guard removed, so the
/// failure mode at r = m-s-1 can be observed by verify_ek.
SplitCertificate theorem_split_unchecked(int m, int s, int r);

enum class ViolationKind {
  Partition,      // G(I) != G(J) disjoint-union G(K)
  MapDomain,      // map domain differs from G(J cap K)
  MapCodomain,    // phi(w) not in G(J) or phi_hat(w) not in G(K)
  LcmOfImages,    // lcm(phi(w), phi_hat(w)) != w
  SubsetDivision, // lcm(phi(S)) or lcm(phi_hat(S)) fails to strictly divide lcm(S)
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;
  std::vector<Monomial> witness;  // the w or the subset S
};

struct VerifyOptions {
  std::size_t subset_cap = kDefaultSubsetCap;
  /// Number of random subsets when |G(J cap K)| exceeds the cap; 0 means
  /// refuse (CapExceededError) instead of sampling.
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

struct VerifyReport {
  bool valid = false;
  bool exhaustive = true;  // false when subset sampling was used
  std::size_t subsets_checked = 0;
  std::size_t violation_count = 0;      // total found
  std::vector<Violation> violations;    // first few, in deterministic order

  static constexpr std::size_t kMaxRecorded = 8;
};

/// Checks a candidate certificate: the structural invariants, condition (1)
/// lcm(phi(w), phi_hat(w)) = w for every w, and condition (2) that for every
/// nonempty subset S of G(J cap K) both lcm(phi(S)) and lcm(phi_hat(S))
/// strictly divide lcm(S).
VerifyReport verify_ek(const SplitCertificate& cert, const VerifyOptions& options = {});

/// Iterated splitting of I(K_m)^(s): certificates for r = m, m-1, ..., 1,
/// where each step's J equals the next step's ideal and the last remainder
/// is the ideal of generators divisible by every variable.  Throws
/// ChainBrokenError naming r when s < m forces r = m-s-1 into the range.
std::vector<SplitCertificate> split_chain(int m, int s);

}  // namespace symedge

#endif  // SYMEDGE_SPLITTING_HPP
