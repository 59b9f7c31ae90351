#include "symedge/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "symedge/errors.hpp"

namespace symedge {

namespace {

void check_same_ambient(const Monomial& a, const Monomial& b, const char* op) {
  if (a.ambient() != b.ambient()) {
    throw AmbientMismatchError(std::string(op) + ": ambient mismatch (" +
                               std::to_string(a.ambient()) + " vs " +
                               std::to_string(b.ambient()) + ")");
  }
}

}  // namespace

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  if (exps_.empty()) throw DomainError("monomial: ambient must be positive");
  for (int e : exps_) {
    if (e < 0) throw DomainError("monomial: negative exponent");
  }
}

Monomial Monomial::one(int ambient) {
  if (ambient <= 0) throw DomainError("monomial: ambient must be positive");
  return Monomial(std::vector<int>(ambient, 0));
}

Monomial Monomial::variable(int ambient, int index) {
  if (index < 0 || index >= ambient) {
    throw DomainError("monomial: variable index out of range");
  }
  std::vector<int> e(ambient, 0);
  e[index] = 1;
  return Monomial(std::move(e));
}

int Monomial::exponent(int index) const {
  if (index < 0 || index >= ambient()) {
    throw DomainError("monomial: variable index out of range");
  }
  return exps_[index];
}

int Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0);
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool divides(const Monomial& a, const Monomial& b) {
  check_same_ambient(a, b, "divides");
  for (int i = 0; i < a.ambient(); ++i) {
    if (a.exponents()[i] > b.exponents()[i]) return false;
  }
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_same_ambient(a, b, "lcm");
  std::vector<int> e(a.ambient());
  for (int i = 0; i < a.ambient(); ++i) {
    e[i] = std::max(a.exponents()[i], b.exponents()[i]);
  }
  return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  check_same_ambient(a, b, "product");
  std::vector<int> e(a.ambient());
  for (int i = 0; i < a.ambient(); ++i) {
    e[i] = a.exponents()[i] + b.exponents()[i];
  }
  return Monomial(std::move(e));
}

Monomial exact_quotient(const Monomial& a, const Monomial& b) {
  check_same_ambient(a, b, "quotient");
  std::vector<int> e(a.ambient());
  for (int i = 0; i < a.ambient(); ++i) {
    e[i] = a.exponents()[i] - b.exponents()[i];
    if (e[i] < 0) throw DomainError("quotient: " + to_string(b) + " does not divide " + to_string(a));
  }
  return Monomial(std::move(e));
}

Monomial multiply_by_variable(const Monomial& a, int index) {
  if (index < 0 || index >= a.ambient()) {
    throw DomainError("multiply_by_variable: index out of range");
  }
  std::vector<int> e = a.exponents();
  ++e[index];
  return Monomial(std::move(e));
}

Monomial divide_by_variable(const Monomial& a, int index) {
  if (index < 0 || index >= a.ambient()) {
    throw DomainError("divide_by_variable: index out of range");
  }
  std::vector<int> e = a.exponents();
  if (e[index] == 0) {
    throw DomainError("divide_by_variable: x" + std::to_string(index + 1) +
                      " does not divide " + to_string(a));
  }
  --e[index];
  return Monomial(std::move(e));
}

std::string to_string(const Monomial& m) {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < m.ambient(); ++i) {
    int e = m.exponents()[i];
    if (e == 0) continue;
    if (!first) out << '*';
    out << 'x' << (i + 1);
    if (e > 1) out << '^' << e;
    first = false;
  }
  if (first) return "1";
  return out.str();
}

Monomial parse_monomial(const std::string& text, int ambient) {
  if (ambient <= 0) throw DomainError("parse_monomial: ambient must be positive");
  std::string s;
  s.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("parse_monomial: empty input");
  if (s == "1") return Monomial::one(ambient);

  std::vector<int> exps(ambient, 0);
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != 'x') {
      throw ParseError("parse_monomial: expected 'x' at position " + std::to_string(pos) +
                       " in '" + text + "'");
    }
    ++pos;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw ParseError("parse_monomial: missing variable index in '" + text + "'");
    int index = std::stoi(s.substr(start, pos - start));
    if (index < 1 || index > ambient) {
      throw ParseError("parse_monomial: variable x" + std::to_string(index) +
                       " outside ambient " + std::to_string(ambient));
    }
    int exp = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) throw ParseError("parse_monomial: missing exponent in '" + text + "'");
      exp = std::stoi(s.substr(start, pos - start));
      if (exp < 1) throw ParseError("parse_monomial: exponent must be positive in '" + text + "'");
    }
    exps[index - 1] += exp;
    if (pos < s.size()) {
      if (s[pos] != '*') {
        throw ParseError("parse_monomial: expected '*' at position " + std::to_string(pos) +
                         " in '" + text + "'");
      }
      ++pos;
      if (pos == s.size()) throw ParseError("parse_monomial: trailing '*' in '" + text + "'");
    }
  }
  return Monomial(std::move(exps));
}

std::size_t MonomialHash::operator()(const std::vector<int>& exps) const {
  // FNV-1a over the exponent words.
  std::size_t h = 1469598103934665603ull;
  for (int e : exps) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  return (*this)(m.exponents());
}

namespace detail {

void for_each_composition(int total, int parts,
                          const std::function<void(const std::vector<int>&)>& fn) {
  if (parts <= 0) throw DomainError("for_each_composition: parts must be positive");
  std::vector<int> current(parts, 0);
  // Recursive descent assigning slot k, remaining degree in lex order.
  std::function<void(int, int)> rec = [&](int slot, int remaining) {
    if (slot == parts - 1) {
      current[slot] = remaining;
      fn(current);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      current[slot] = v;
      rec(slot + 1, remaining - v);
    }
  };
  rec(0, total);
}

}  // namespace detail

}  // namespace symedge
