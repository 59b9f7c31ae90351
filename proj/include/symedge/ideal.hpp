#ifndef SYMEDGE_IDEAL_HPP
#define SYMEDGE_IDEAL_HPP

#include <string>
#include <vector>

#include "symedge/monomial.hpp"

namespace symedge {

/// A monomial ideal, stored through its unique minimal monomial generating
/// set G(I).  Generators are kept in lexicographic order on exponent vectors,
/// so two ideals are equal iff their stored generator vectors are equal.
///
/// The zero ideal has an empty generator set; the unit ideal is generated
/// by the monomial 1.
class MonomialIdeal {
public:
  /// The zero ideal in m variables.
  static MonomialIdeal zero(int ambient);

  /// The unit ideal <1> in m variables.
  static MonomialIdeal unit(int ambient);

  /// Builds the ideal generated by `gens`, minimizing and sorting them.
  /// All monomials must share the given ambient.
  static MonomialIdeal from_generators(int ambient, std::vector<Monomial> gens);

  int ambient() const { return ambient_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t generator_count() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

  /// Largest total degree among the generators (0 for the zero/unit ideal).
  int max_generator_degree() const;

  /// True iff some generator divides w.
  bool contains(const Monomial& w) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) = default;

private:
  MonomialIdeal(int ambient, std::vector<Monomial> sorted_minimal_gens);

  int ambient_;
  std::vector<Monomial> gens_;
};

/// Divisibility-minimal subset of `gens` as a canonical ideal.
MonomialIdeal minimize(int ambient, std::vector<Monomial> gens);

/// Intersection I cap J, computed as the minimized set of pairwise lcms.
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

/// The ideal x_index * I (0-based variable index); generator count is preserved.
MonomialIdeal scale(int var_index, const MonomialIdeal& I);

/// Product ideal I*J (minimized pairwise products).
MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);

/// Ordinary power I^s, s >= 1.
MonomialIdeal power(const MonomialIdeal& I, int s);

/// Membership w in I.
bool membership(const Monomial& w, const MonomialIdeal& I);

enum class GradedMode { Ideal, Quotient };

inline constexpr int kDefaultGradedDegreeCap = 64;

/// Number of monomials of total degree j lying inside I (Ideal mode) or in
/// the quotient R/I (Quotient mode).  The two modes sum to C(j+m-1, m-1).
long long graded_dimension(const MonomialIdeal& I, int j, GradedMode mode,
                           int degree_cap = kDefaultGradedDegreeCap);

/// Text form: comma-separated monomials in canonical order; "0" for the zero ideal.
std::string to_string(const MonomialIdeal& I);

/// Parse a comma-separated monomial list ("0" or empty = zero ideal).
MonomialIdeal parse_ideal(const std::string& text, int ambient);

/// Binomial coefficient as long long; throws on overflow.
long long binomial(int n, int k);

}  // namespace symedge

#endif  // SYMEDGE_IDEAL_HPP
