#include "symedge/betti.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <exception>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>

#include "symedge/errors.hpp"
#include "symedge/symbolic.hpp"

namespace symedge {

namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void ensure_valid_field(const FieldSpec& field) {
  if (field.characteristic == 0) return;
  if (field.characteristic > (1ll << 31) || !is_prime(field.characteristic)) {
    throw DomainError("field: characteristic " + std::to_string(field.characteristic) +
                      " is not 0 or a small prime");
  }
}

long long mod_pow(long long base, long long exp, long long p) {
  long long result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

/// Row-echelon rank over GF(p).
int rank_gfp(std::vector<std::vector<long long>>& M, long long p) {
  const int rows = static_cast<int>(M.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(M[0].size());
  for (auto& row : M) {
    for (auto& x : row) x = ((x % p) + p) % p;
  }
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (M[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(M[rank], M[pivot]);
    const long long inv = mod_pow(M[rank][c], p - 2, p);
    for (int cc = c; cc < cols; ++cc) M[rank][cc] = M[rank][cc] * inv % p;
    for (int r = rank + 1; r < rows; ++r) {
      if (M[r][c] == 0) continue;
      const long long f = M[r][c];
      for (int cc = c; cc < cols; ++cc) {
        M[r][cc] = (M[r][cc] - f * M[rank][cc]) % p;
        if (M[r][cc] < 0) M[r][cc] += p;
      }
    }
    ++rank;
  }
  return rank;
}

/// Fraction-free (Bareiss) rank over the rationals for an integer matrix.
int rank_exact(std::vector<std::vector<long long>>& M) {
  const int rows = static_cast<int>(M.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(M[0].size());
  long long prev = 1;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (M[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(M[rank], M[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int cc = c + 1; cc < cols; ++cc) {
        __int128 t = static_cast<__int128>(M[rank][c]) * M[r][cc] -
                     static_cast<__int128>(M[r][c]) * M[rank][cc];
        t /= prev;  // exact by the Bareiss identity
        if (t > INT64_MAX || t < INT64_MIN) {
          throw Error("exact rank: intermediate overflow; use a finite field");
        }
        M[r][cc] = static_cast<long long>(t);
      }
      M[r][c] = 0;
    }
    prev = M[rank][c];
    ++rank;
  }
  return rank;
}

int matrix_rank(std::vector<std::vector<long long>>& M, const FieldSpec& field) {
  return field.is_rational() ? rank_exact(M) : rank_gfp(M, field.characteristic);
}

using OutSet = std::unordered_set<std::vector<int>, MonomialHash>;

/// Homology dimensions of one multidegree block of the Koszul strand.
/// The block at exponent vector b has basis {e_S (x) x^(b-1_S)} over the
/// subsets S of supp(b) with x^(b-1_S) outside I; `beta[i][j]` receives
/// dim C_i - rank d_i - rank d_{i+1} at j = |b|.
void process_block(const std::vector<int>& b, int degree, const OutSet& out,
                   const FieldSpec& field, std::vector<std::vector<long long>>& beta) {
  const int m = static_cast<int>(b.size());
  std::vector<int> supp;
  for (int i = 0; i < m; ++i) {
    if (b[i] >= 1) supp.push_back(i);
  }
  const int k = static_cast<int>(supp.size());
  const unsigned nmasks = 1u << k;

  std::vector<char> present(nmasks, 0);
  std::vector<int> e(m);
  bool any = false;
  for (unsigned mask = 0; mask < nmasks; ++mask) {
    e = b;
    for (int t = 0; t < k; ++t) {
      if ((mask >> t) & 1u) --e[supp[t]];
    }
    if (out.contains(e)) {
      present[mask] = 1;
      any = true;
    }
  }
  if (!any) return;

  std::vector<std::vector<unsigned>> faces(k + 1);
  std::vector<int> index_of(nmasks, -1);
  for (unsigned mask = 0; mask < nmasks; ++mask) {
    if (!present[mask]) continue;
    const int card = std::popcount(mask);
    index_of[mask] = static_cast<int>(faces[card].size());
    faces[card].push_back(mask);
  }

  std::vector<int> rank(k + 2, 0);
  for (int i = 1; i <= k; ++i) {
    const int rows = static_cast<int>(faces[i - 1].size());
    const int cols = static_cast<int>(faces[i].size());
    if (rows == 0 || cols == 0) continue;
    std::vector<std::vector<long long>> M(rows, std::vector<long long>(cols, 0));
    for (int c = 0; c < cols; ++c) {
      const unsigned S = faces[i][c];
      int pos = 0;
      for (int t = 0; t < k; ++t) {
        if (!((S >> t) & 1u)) continue;
        const unsigned Sp = S & ~(1u << t);
        if (present[Sp]) {
          M[index_of[Sp]][c] = (pos % 2 == 0) ? 1 : -1;
        }
        ++pos;
      }
    }
    rank[i] = matrix_rank(M, field);
  }

  for (int i = 0; i <= k; ++i) {
    const long long h = static_cast<long long>(faces[i].size()) - rank[i] - rank[i + 1];
    if (h != 0) beta[i][degree] += h;
  }
}

}  // namespace

std::string to_string(Convention c) {
  return c == Convention::Ideal ? "ideal" : "quotient";
}

FieldSpec FieldSpec::gf(long long p) {
  FieldSpec f{p};
  ensure_valid_field(f);
  if (p == 0) throw DomainError("field: gf needs a prime, use rationals() for char 0");
  return f;
}

std::string FieldSpec::to_string() const {
  return is_rational() ? "rational" : "gf:" + std::to_string(characteristic);
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "rational" || text == "qq" || text == "0") return rationals();
  if (text.rfind("gf:", 0) == 0) {
    long long p = 0;
    try {
      p = std::stoll(text.substr(3));
    } catch (const std::exception&) {
      throw ParseError("field: bad characteristic in '" + text + "'");
    }
    return gf(p);
  }
  throw ParseError("field: expected 'rational' or 'gf:<prime>', got '" + text + "'");
}

BettiTable::BettiTable(Convention convention, int ambient, FieldSpec field)
    : convention_(convention), ambient_(ambient), field_(field) {
  if (ambient <= 0) throw DomainError("betti table: ambient must be positive");
}

void BettiTable::add(int i, int j, long long c) {
  if (i < 0 || j < 0) throw DomainError("betti table: negative index");
  if (c == 0) return;
  auto key = std::make_pair(i, j);
  auto it = entries_.find(key);
  const long long next = (it == entries_.end() ? 0 : it->second) + c;
  if (next < 0) throw DomainError("betti table: entry would become negative");
  if (next == 0) {
    if (it != entries_.end()) entries_.erase(it);
  } else if (it == entries_.end()) {
    entries_.emplace(key, next);
  } else {
    it->second = next;
  }
}

long long BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

int BettiTable::max_homological_index() const {
  int mx = -1;
  for (const auto& [key, value] : entries_) mx = std::max(mx, key.first);
  return mx;
}

int BettiTable::max_internal_degree() const {
  int mx = -1;
  for (const auto& [key, value] : entries_) mx = std::max(mx, key.second);
  return mx;
}

BettiTable BettiTable::to_quotient() const {
  if (convention_ != Convention::Ideal) {
    throw ConventionError("to_quotient: table is not in ideal convention");
  }
  BettiTable q(Convention::Quotient, ambient_, field_);
  q.add(0, 0, 1);
  for (const auto& [key, value] : entries_) q.add(key.first + 1, key.second, value);
  return q;
}

BettiTable BettiTable::to_ideal() const {
  if (convention_ != Convention::Quotient) {
    throw ConventionError("to_ideal: table is not in quotient convention");
  }
  BettiTable t(Convention::Ideal, ambient_, field_);
  for (const auto& [key, value] : entries_) {
    if (key.first == 0) {
      if (key.second != 0 || value != 1) {
        throw ConventionError("to_ideal: row 0 is not the single entry (0,0) = 1");
      }
      continue;
    }
    t.add(key.first - 1, key.second, value);
  }
  if (at(0, 0) != 1) {
    throw ConventionError("to_ideal: quotient table lacks the (0,0) = 1 entry");
  }
  return t;
}

BettiTable BettiTable::converted_to(Convention c) const {
  if (c == convention_) return *this;
  return c == Convention::Quotient ? to_quotient() : to_ideal();
}

BettiTable BettiTable::shifted_j(int delta) const {
  BettiTable t(convention_, ambient_, field_);
  for (const auto& [key, value] : entries_) t.add(key.first, key.second + delta, value);
  return t;
}

int support_degree_cap(const MonomialIdeal& I) {
  const int m = I.ambient();
  std::vector<int> top(m, 0);
  for (const Monomial& g : I.generators()) {
    for (int i = 0; i < m; ++i) top[i] = std::max(top[i], g.exponents()[i]);
  }
  int lcm_degree = 0;
  for (int v : top) lcm_degree += v;
  return std::max(lcm_degree, I.max_generator_degree() + m);
}

int symbolic_degree_cap(int ambient, int s) { return 2 * s + ambient + 2; }

BettiTable betti_oracle(const MonomialIdeal& I, const FieldSpec& field, int degree_cap,
                        int threads) {
  ensure_valid_field(field);
  const int m = I.ambient();
  if (degree_cap < I.max_generator_degree() + m) {
    throw CapExceededError("betti_oracle: degree cap " + std::to_string(degree_cap) +
                           " is below max generator degree + ambient = " +
                           std::to_string(I.max_generator_degree() + m));
  }

  long long total_monomials = 0;
  for (int j = 0; j <= degree_cap; ++j) total_monomials += binomial(j + m - 1, m - 1);
  if (total_monomials > 20'000'000) {
    throw CapExceededError("betti_oracle: graded enumeration of " +
                           std::to_string(total_monomials) + " monomials is too large");
  }

  // Quotient basis: all monomials of degree <= cap outside I.
  OutSet out;
  out.reserve(static_cast<std::size_t>(total_monomials) / 2 + 16);
  for (int j = 0; j <= degree_cap; ++j) {
    detail::for_each_composition(j, m, [&](const std::vector<int>& e) {
      if (!I.contains(Monomial{e})) out.insert(e);
    });
  }

  std::vector<std::vector<long long>> beta(m + 1,
                                           std::vector<long long>(degree_cap + 1, 0));
  for (int j = 0; j <= degree_cap; ++j) {
    std::vector<std::vector<int>> degrees;
    detail::for_each_composition(j, m, [&](const std::vector<int>& b) { degrees.push_back(b); });

    if (threads <= 1 || degrees.size() < 64) {
      for (const auto& b : degrees) process_block(b, j, out, field, beta);
      continue;
    }
    const int nthreads = std::min<int>(threads, static_cast<int>(degrees.size()));
    std::vector<std::vector<std::vector<long long>>> partial(
        nthreads, std::vector<std::vector<long long>>(
                      m + 1, std::vector<long long>(degree_cap + 1, 0)));
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(nthreads);
    for (int t = 0; t < nthreads; ++t) {
      pool.emplace_back([&, t]() {
        try {
          for (std::size_t idx = t; idx < degrees.size(); idx += nthreads) {
            process_block(degrees[idx], j, out, field, partial[t]);
          }
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& err : errors) {
      if (err) std::rethrow_exception(err);
    }
    for (int t = 0; t < nthreads; ++t) {
      for (int i = 0; i <= m; ++i) {
        for (int d = 0; d <= degree_cap; ++d) beta[i][d] += partial[t][i][d];
      }
    }
  }

  BettiTable table(Convention::Quotient, m, field);
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= degree_cap; ++j) {
      if (beta[i][j] != 0) table.add(i, j, beta[i][j]);
    }
  }
  return table;
}

BettiTable ek_combine(const BettiTable& J, const BettiTable& K, const BettiTable& JK) {
  for (const BettiTable* t : {&J, &K, &JK}) {
    if (t->convention() != Convention::Ideal) {
      throw ConventionError("ek_combine: all inputs must be in ideal convention");
    }
  }
  if (J.ambient() != K.ambient() || J.ambient() != JK.ambient()) {
    throw DomainError("ek_combine: ambient mismatch");
  }
  BettiTable result(Convention::Ideal, J.ambient(), J.field());
  for (const auto& [key, value] : J.entries()) result.add(key.first, key.second, value);
  for (const auto& [key, value] : K.entries()) result.add(key.first, key.second, value);
  // The intersection enters one homological step later; i = 0 gets nothing.
  for (const auto& [key, value] : JK.entries()) result.add(key.first + 1, key.second, value);
  return result;
}

namespace {

struct RecKey {
  int m;
  int r;
  int s;
  long long characteristic;
  friend auto operator<=>(const RecKey&, const RecKey&) = default;
};

std::map<RecKey, BettiTable>& recursion_memo() {
  static std::map<RecKey, BettiTable> memo;
  return memo;
}

std::mutex& recursion_mutex() {
  static std::mutex mu;
  return mu;
}

/// I(K_m)^(s) cap < prod_{i>r} x_i >, with s = 1 meaning the edge ideal.
MonomialIdeal restricted_outside(int m, int r, int s) {
  if (s >= 2) return restricted_ideal(m, r, s, RestrictedKind::Outside);
  const MonomialIdeal full = edge_ideal(SimpleGraph::complete(m));
  if (r == m) return full;
  std::vector<int> e(m, 0);
  for (int i = r; i < m; ++i) e[i] = 1;
  return intersect(full, MonomialIdeal::from_generators(m, {Monomial(std::move(e))}));
}

BettiTable oracle_ideal_table(const MonomialIdeal& I, const FieldSpec& field) {
  return betti_oracle(I, field, support_degree_cap(I)).to_ideal();
}

BettiTable table_with_ambient(const BettiTable& t, int ambient) {
  BettiTable u(t.convention(), ambient, t.field());
  for (const auto& [key, value] : t.entries()) u.add(key.first, key.second, value);
  return u;
}

/// Ideal-convention Betti table of the restricted ideal attached to
/// (K_m, K_r, s), via the splitting recursion
///   B(m, r, s) = B(m, r-1, s) + B(m-1, r-1, s) + B(m-1, r-1, s) shifted,
/// with bases: m = 2 (single generator in degree 2s), s = 1 (oracle),
/// r = 0 resolved by the product identity when s >= m and by the oracle
/// otherwise, and the excluded parameter r = m-s-1 resolved by the oracle.
BettiTable restricted_betti(int m, int r, int s, const FieldSpec& field) {
  const RecKey key{m, r, s, field.characteristic};
  {
    std::lock_guard<std::mutex> lock(recursion_mutex());
    auto it = recursion_memo().find(key);
    if (it != recursion_memo().end()) return it->second;
  }

  BettiTable result(Convention::Ideal, m, field);
  if (m == 2) {
    // Every restricted ideal of K_2 is < x1^s x2^s >.
    result.add(0, 2 * s, 1);
  } else if (s == 1) {
    result = oracle_ideal_table(restricted_outside(m, r, 1), field);
  } else if (r == 0) {
    if (s >= m) {
      // I(K_m)^(s) cap <x1...xm> = x1...xm * I(K_m)^(s-m+1).
      result = restricted_betti(m, m, s - m + 1, field).shifted_j(m);
    } else {
      result = oracle_ideal_table(restricted_outside(m, 0, s), field);
    }
  } else if (r == m - s - 1) {
    // The splitting excludes this parameter; fall back to the oracle.
    result = oracle_ideal_table(restricted_outside(m, r, s), field);
  } else {
    const BettiTable left = restricted_betti(m, r - 1, s, field);
    const BettiTable right =
        table_with_ambient(restricted_betti(m - 1, r - 1, s, field), m);
    // left cap right = x_r * right, so its table is right shifted by one.
    result = ek_combine(left, right, right.shifted_j(1));
  }

  std::lock_guard<std::mutex> lock(recursion_mutex());
  recursion_memo().emplace(key, result);
  return result;
}

}  // namespace

BettiTable recursive_betti_complete(int m, int s, const FieldSpec& fallback) {
  ensure_valid_field(fallback);
  if (m < 2) throw DomainError("recursive_betti_complete: m must be >= 2");
  if (s < 1) throw DomainError("recursive_betti_complete: s must be >= 1");
  return restricted_betti(m, m, s, fallback);
}

BettiTable closed_form_K3(int s) {
  if (s < 1) throw DomainError("closed_form_K3: s must be >= 1");
  BettiTable t(Convention::Quotient, 3, FieldSpec::rationals());
  t.add(0, 0, 1);
  if ((3 * s) % 2 == 0) t.add(1, 3 * s / 2, 1);
  if ((3 * s + 3) % 2 == 0) t.add(2, (3 * s + 3) / 2, 2);
  for (int j = (3 * s + 2) / 2; j <= 2 * s; ++j) t.add(1, j, 3);
  for (int j = (3 * s + 5) / 2; j <= 2 * s + 1; ++j) t.add(2, j, 3);
  return t;
}

int min_socle_degree(const BettiTable& table, int m) {
  if (table.convention() != Convention::Quotient) {
    throw ConventionError("min_socle_degree: table must be in quotient convention");
  }
  const int last_row = table.max_homological_index();
  if (last_row != m - 1) {
    throw ProjectiveDimensionError(
        "min_socle_degree: last nonzero row is " + std::to_string(last_row) +
        ", expected " + std::to_string(m - 1) +
        " (quotient not Cohen-Macaulay of dimension 1)");
  }
  int min_twist = -1;
  for (const auto& [key, value] : table.entries()) {
    if (key.first == last_row) {
      min_twist = (min_twist < 0) ? key.second : std::min(min_twist, key.second);
    }
  }
  return min_twist - (m - 1);
}

bool hilbert_series_matches(const MonomialIdeal& I, const BettiTable& quotient_table,
                            int degree_cap) {
  if (quotient_table.convention() != Convention::Quotient) {
    throw ConventionError("hilbert_series_matches: table must be in quotient convention");
  }
  if (quotient_table.ambient() != I.ambient()) {
    throw DomainError("hilbert_series_matches: ambient mismatch");
  }
  const int m = I.ambient();
  std::vector<long long> lhs(degree_cap + 1, 0);
  for (const auto& [key, value] : quotient_table.entries()) {
    const auto [i, j] = key;
    if (j > degree_cap) continue;
    lhs[j] += (i % 2 == 0) ? value : -value;
  }
  std::vector<long long> h(degree_cap + 1, 0);
  for (int d = 0; d <= degree_cap; ++d) {
    h[d] = graded_dimension(I, d, GradedMode::Quotient, degree_cap);
  }
  for (int j = 0; j <= degree_cap; ++j) {
    long long rhs = 0;
    for (int k = 0; k <= std::min(j, m); ++k) {
      const long long sign = (k % 2 == 0) ? 1 : -1;
      rhs += sign * binomial(m, k) * h[j - k];
    }
    if (rhs != lhs[j]) return false;
  }
  return true;
}

ParallelBoundReport parallel_bound_report(const SimpleGraph& G, const std::vector<int>& alpha,
                                          int s, const FieldSpec& field, int threads) {
  auto [parallelized_graph, par] = parallelize(G, alpha);

  const MonomialIdeal base_ideal = symbolic_power(G, s);
  const MonomialIdeal par_ideal = symbolic_power(parallelized_graph, s);

  ParallelBoundReport report{
      alpha,
      1,
      betti_oracle(base_ideal, field, symbolic_degree_cap(G.vertex_count(), s), threads),
      betti_oracle(par_ideal, field,
                   symbolic_degree_cap(parallelized_graph.vertex_count(), s), threads),
      {},
      true,
      true};
  for (int a : alpha) report.alpha_product *= a;

  std::set<std::pair<int, int>> support;
  for (const auto& [key, value] : report.base.entries()) {
    if (key.first >= 1) support.insert(key);
  }
  for (const auto& [key, value] : report.parallelized.entries()) {
    if (key.first >= 1) support.insert(key);
  }
  for (const auto& [i, j] : support) {
    ParallelBoundReport::Entry entry;
    entry.i = i;
    entry.j = j;
    entry.base_beta = report.base.at(i, j);
    entry.parallel_beta = report.parallelized.at(i, j);
    entry.proven_holds = entry.parallel_beta >= entry.base_beta;
    entry.conjecture_holds = entry.parallel_beta >= report.alpha_product * entry.base_beta;
    report.proven_all = report.proven_all && entry.proven_holds;
    report.conjecture_all = report.conjecture_all && entry.conjecture_holds;
    report.entries.push_back(entry);
  }
  return report;
}

}  // namespace symedge
