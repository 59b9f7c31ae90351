#ifndef SYMEDGE_BETTI_HPP
#define SYMEDGE_BETTI_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symedge/graph.hpp"
#include "symedge/ideal.hpp"

namespace symedge {

/// Indexing convention of a graded Betti table.
///
/// Ideal convention resolves the ideal I itself: row 0 holds the minimal
/// generators.  Quotient convention resolves R/I: row 0 is the single entry
/// (0,0) = 1 and row i >= 1 equals ideal row i-1.  The splitting recursion
/// is additive only in ideal convention, while the closed-form tables for
/// complete graphs are traditionally quoted in quotient convention; keeping
/// the tag explicit removes that silent index shift as a bug source.
enum class Convention { Ideal, Quotient };

std::string to_string(Convention c);

/// Coefficient field for exact rank computations: the rationals
/// (characteristic 0) or GF(p) for a prime p.  Default prime: 32003.
struct FieldSpec {
  long long characteristic = 32003;

  static FieldSpec rationals() { return FieldSpec{0}; }
  static FieldSpec gf(long long p);

  bool is_rational() const { return characteristic == 0; }
  std::string to_string() const;     // "rational" or "gf:<p>"
  static FieldSpec parse(const std::string& text);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// A graded Betti table: finitely many positive entries (i, j) -> beta.
class BettiTable {
public:
  BettiTable(Convention convention, int ambient, FieldSpec field);

  Convention convention() const { return convention_; }
  int ambient() const { return ambient_; }
  const FieldSpec& field() const { return field_; }

  /// Adds c to entry (i, j); zero entries are never stored.
  void add(int i, int j, long long c);

  long long at(int i, int j) const;

  /// Entries keyed by (i, j), ascending; values are positive.
  const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }

  bool empty() const { return entries_.empty(); }

  /// Largest homological index with a nonzero entry; -1 when empty.
  int max_homological_index() const;

  /// Largest internal degree with a nonzero entry; -1 when empty.
  int max_internal_degree() const;

  /// Lossless conversions between the two conventions (proper ideals only).
  BettiTable to_quotient() const;
  BettiTable to_ideal() const;
  BettiTable converted_to(Convention c) const;

  /// The table of x*I: every internal degree shifted by delta.
  BettiTable shifted_j(int delta) const;

  /// Entry-level equality; compares convention, ambient and entries but not
  /// the field tag (tables from different fields may legitimately agree).
  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.convention_ == b.convention_ && a.ambient_ == b.ambient_ &&
           a.entries_ == b.entries_;
  }

private:
  Convention convention_;
  int ambient_;
  FieldSpec field_;
  std::map<std::pair<int, int>, long long> entries_;
};

/// Degree cap that covers the full support of any Betti table of I:
/// the degree of lcm(G(I)) (no Tor lives above it), raised to the
/// max-generator-degree + m floor the oracle requires.
int support_degree_cap(const MonomialIdeal& I);

/// Default cap policy for symbolic powers of edge ideals: 2s + m + 2.
int symbolic_degree_cap(int ambient, int s);

/// Graded Betti numbers of R/I by brute force, in quotient convention:
/// entry (i, j) is the k-dimension of the i-th homology of the degree-j
/// strand of the Koszul complex on x_1..x_m tensored with R/I, obtained by
/// exact rank computation over the given field.  The Koszul differential
/// preserves multidegrees, so each strand is processed as a direct sum of
/// blocks indexed by the exponent vectors of total degree j.
///
/// Requires degree_cap >= max generator degree + m.  Entries with j above
/// the cap are not computed; the cap must cover the support when the whole
/// table is wanted (see support_degree_cap).
BettiTable betti_oracle(const MonomialIdeal& I, const FieldSpec& field, int degree_cap,
                        int threads = 1);

/// Betti numbers of I = J + K from a splitting:
/// beta_{i,j}(I) = beta_{i,j}(J) + beta_{i,j}(K) + beta_{i-1,j}(J cap K).
/// All three inputs must be in ideal convention over the same ambient.
BettiTable ek_combine(const BettiTable& J, const BettiTable& K, const BettiTable& JK);

/// Betti table of I(K_m)^(s) (ideal convention) via the iterated splitting
/// recursion over the restricted ideals, memoized per process run.  Base
/// cases (m = 2, s = 1, and the states the splitting cannot reach) fall
/// back to the oracle over `fallback`.
BettiTable recursive_betti_complete(int m, int s, const FieldSpec& fallback);

/// Closed-form Betti table of I(K_3)^(s) in quotient convention, s >= 1.
/// Entries at fractional indices exist only when the index is integral.
BettiTable closed_form_K3(int s);

/// Minimum socle degree read off a quotient-convention table whose last
/// nonzero row is i = m-1 (Cohen-Macaulay of dimension 1): the minimum back
/// twist minus (m-1).
int min_socle_degree(const BettiTable& table, int m);

/// Exact check of the Euler-characteristic identity
///   sum_{i,j} (-1)^i beta^{R/I}_{i,j} t^j  ==  (1-t)^m * sum_j dim(R/I)_j t^j
/// with both sides truncated at degree_cap.
bool hilbert_series_matches(const MonomialIdeal& I, const BettiTable& quotient_table,
                            int degree_cap);

/// Comparison data for the parallelization bound: the proven inequality
/// beta(I(G^alpha)^(s)) >= beta(I(G)^(s)) entrywise, and the conjectured
/// factor prod(alpha_i), reported but never asserted.
struct ParallelBoundReport {
  std::vector<int> alpha;
  long long alpha_product = 1;
  BettiTable base;          // I(G)^(s), quotient convention
  BettiTable parallelized;  // I(G^alpha)^(s), quotient convention

  struct Entry {
    int i = 0;
    int j = 0;
    long long base_beta = 0;
    long long parallel_beta = 0;
    bool proven_holds = true;       // parallel_beta >= base_beta
    bool conjecture_holds = true;   // parallel_beta >= alpha_product * base_beta
  };
  std::vector<Entry> entries;  // rows i >= 1, union of both supports

  bool proven_all = true;
  bool conjecture_all = true;
};

ParallelBoundReport parallel_bound_report(const SimpleGraph& G, const std::vector<int>& alpha,
                                          int s, const FieldSpec& field, int threads = 1);

}  // namespace symedge

#endif  // SYMEDGE_BETTI_HPP
