#ifndef SYMEDGE_MONOMIAL_HPP
#define SYMEDGE_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace symedge {

/// A monomial x_1^{a_1} ... x_m^{a_m}, stored as its exponent vector.
///
/// The ambient variable count m is the length of the vector and is fixed for
/// the lifetime of the value.  Variable indices in the C++ API are 0-based;
/// the text form ("x1^2*x3") is 1-based.
class Monomial {
public:
  /// The monomial with the given exponents; ambient = exponents.size().
  explicit Monomial(std::vector<int> exponents);

  /// The unit monomial 1 in m variables.
  static Monomial one(int ambient);

  /// The variable x_index (0-based) in m variables.
  static Monomial variable(int ambient, int index);

  int ambient() const { return static_cast<int>(exps_.size()); }
  int exponent(int index) const;
  const std::vector<int>& exponents() const { return exps_; }

  /// Total degree, the sum of all exponents.
  int degree() const;

  bool is_one() const;

  /// Componentwise ordering helpers.
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  /// Canonical total order: lexicographic on exponent vectors.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }

private:
  std::vector<int> exps_;
};

/// True iff a | b, i.e. every exponent of a is <= the matching exponent of b.
bool divides(const Monomial& a, const Monomial& b);

/// Componentwise maximum of exponents.
Monomial lcm(const Monomial& a, const Monomial& b);

/// Componentwise sum of exponents.
Monomial operator*(const Monomial& a, const Monomial& b);

/// Exact quotient a / b; requires divides(b, a).
Monomial exact_quotient(const Monomial& a, const Monomial& b);

/// Multiply by the single variable x_index (0-based).
Monomial multiply_by_variable(const Monomial& a, int index);

/// Divide by x_index once; requires a positive exponent there.
Monomial divide_by_variable(const Monomial& a, int index);

/// Text form "x1^2*x2*x3^4"; exponent 1 is omitted and the unit prints as "1".
std::string to_string(const Monomial& m);

/// Parse the text form back into a monomial over `ambient` variables.
Monomial parse_monomial(const std::string& text, int ambient);

/// Hash over the exponent vector, for unordered containers.
struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
  std::size_t operator()(const std::vector<int>& exps) const;
};

namespace detail {

/// Calls fn(exponents) for every vector of `parts` nonnegative integers
/// summing to `total`, in lexicographically increasing order.
void for_each_composition(int total, int parts,
                          const std::function<void(const std::vector<int>&)>& fn);

}  // namespace detail

}  // namespace symedge

#endif  // SYMEDGE_MONOMIAL_HPP
