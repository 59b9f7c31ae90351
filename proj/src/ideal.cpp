#include "symedge/ideal.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "symedge/errors.hpp"

namespace symedge {

namespace {

void check_same_ambient(const MonomialIdeal& a, const MonomialIdeal& b, const char* op) {
  if (a.ambient() != b.ambient()) {
    throw AmbientMismatchError(std::string(op) + ": ambient mismatch (" +
                               std::to_string(a.ambient()) + " vs " +
                               std::to_string(b.ambient()) + ")");
  }
}

}  // namespace

MonomialIdeal::MonomialIdeal(int ambient, std::vector<Monomial> sorted_minimal_gens)
    : ambient_(ambient), gens_(std::move(sorted_minimal_gens)) {}

MonomialIdeal MonomialIdeal::zero(int ambient) {
  if (ambient <= 0) throw DomainError("ideal: ambient must be positive");
  return MonomialIdeal(ambient, {});
}

MonomialIdeal MonomialIdeal::unit(int ambient) {
  return MonomialIdeal(ambient, {Monomial::one(ambient)});
}

MonomialIdeal MonomialIdeal::from_generators(int ambient, std::vector<Monomial> gens) {
  if (ambient <= 0) throw DomainError("ideal: ambient must be positive");
  for (const Monomial& g : gens) {
    if (g.ambient() != ambient) {
      throw AmbientMismatchError("ideal: generator ambient " +
                                 std::to_string(g.ambient()) + " differs from " +
                                 std::to_string(ambient));
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // Scan in degree order: only a lower-degree monomial can strictly divide.
  std::vector<Monomial> by_degree = gens;
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> kept;
  kept.reserve(by_degree.size());
  for (const Monomial& g : by_degree) {
    bool redundant = false;
    for (const Monomial& k : kept) {
      if (k.degree() >= g.degree()) break;
      if (divides(k, g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end());
  return MonomialIdeal(ambient, std::move(kept));
}

int MonomialIdeal::max_generator_degree() const {
  int d = 0;
  for (const Monomial& g : gens_) d = std::max(d, g.degree());
  return d;
}

bool MonomialIdeal::contains(const Monomial& w) const {
  if (w.ambient() != ambient_) {
    throw AmbientMismatchError("membership: ambient mismatch");
  }
  for (const Monomial& g : gens_) {
    if (divides(g, w)) return true;
  }
  return false;
}

MonomialIdeal minimize(int ambient, std::vector<Monomial> gens) {
  return MonomialIdeal::from_generators(ambient, std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_ambient(I, J, "intersect");
  std::vector<Monomial> gens;
  gens.reserve(I.generator_count() * J.generator_count());
  for (const Monomial& g : I.generators()) {
    for (const Monomial& h : J.generators()) {
      gens.push_back(lcm(g, h));
    }
  }
  return minimize(I.ambient(), std::move(gens));
}

MonomialIdeal scale(int var_index, const MonomialIdeal& I) {
  if (var_index < 0 || var_index >= I.ambient()) {
    throw DomainError("scale: variable index out of range");
  }
  // Multiplying every generator by the same variable preserves both
  // minimality and the lexicographic order.
  std::vector<Monomial> gens;
  gens.reserve(I.generator_count());
  for (const Monomial& g : I.generators()) {
    gens.push_back(multiply_by_variable(g, var_index));
  }
  return minimize(I.ambient(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_ambient(I, J, "product");
  std::vector<Monomial> gens;
  gens.reserve(I.generator_count() * J.generator_count());
  for (const Monomial& g : I.generators()) {
    for (const Monomial& h : J.generators()) {
      gens.push_back(g * h);
    }
  }
  return minimize(I.ambient(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& I, int s) {
  if (s < 1) throw DomainError("power: exponent must be >= 1");
  MonomialIdeal result = I;
  for (int k = 1; k < s; ++k) result = product(result, I);
  return result;
}

bool membership(const Monomial& w, const MonomialIdeal& I) {
  return I.contains(w);
}

long long graded_dimension(const MonomialIdeal& I, int j, GradedMode mode, int degree_cap) {
  if (j < 0) throw DomainError("graded_dimension: degree must be nonnegative");
  if (j > degree_cap) {
    throw CapExceededError("graded_dimension: degree " + std::to_string(j) +
                           " exceeds cap " + std::to_string(degree_cap));
  }
  long long count = 0;
  const bool want_inside = (mode == GradedMode::Ideal);
  detail::for_each_composition(j, I.ambient(), [&](const std::vector<int>& exps) {
    Monomial w{exps};
    if (I.contains(w) == want_inside) ++count;
  });
  return count;
}

std::string to_string(const MonomialIdeal& I) {
  if (I.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const Monomial& g : I.generators()) {
    if (!first) out << ", ";
    out << to_string(g);
    first = false;
  }
  return out.str();
}

MonomialIdeal parse_ideal(const std::string& text, int ambient) {
  std::string trimmed;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
  }
  if (trimmed.empty() || trimmed == "0") return MonomialIdeal::zero(ambient);

  std::vector<Monomial> gens;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    gens.push_back(parse_monomial(item, ambient));
  }
  return MonomialIdeal::from_generators(ambient, std::move(gens));
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long result = 1;
  for (int i = 1; i <= k; ++i) {
    long long next = result * (n - k + i);
    if (next / (n - k + i) != result) throw DomainError("binomial: overflow");
    result = next / i;
  }
  return result;
}

}  // namespace symedge
