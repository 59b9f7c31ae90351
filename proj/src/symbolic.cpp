#include "symedge/symbolic.hpp"

#include <algorithm>

#include "symedge/errors.hpp"

namespace symedge {

namespace {

/// <W>^s for a prime <W> generated by variables: all monomials of total
/// degree s supported on W.
MonomialIdeal cover_prime_power(int ambient, const std::vector<int>& cover, int s) {
  if (cover.empty()) return MonomialIdeal::zero(ambient);
  std::vector<Monomial> gens;
  detail::for_each_composition(s, static_cast<int>(cover.size()),
                               [&](const std::vector<int>& parts) {
                                 std::vector<int> e(ambient, 0);
                                 for (std::size_t k = 0; k < cover.size(); ++k) {
                                   e[cover[k]] = parts[k];
                                 }
                                 gens.emplace_back(std::move(e));
                               });
  return MonomialIdeal::from_generators(ambient, std::move(gens));
}

}  // namespace

MonomialIdeal symbolic_power(const SimpleGraph& G, int s, const SymbolicCaps& caps) {
  if (s < 1) throw DomainError("symbolic_power: s must be >= 1");
  if (G.edges().empty()) return MonomialIdeal::zero(G.vertex_count());
  if (s == 1) return edge_ideal(G);

  const auto covers = minimal_vertex_covers(G, caps.vertex_cap);
  MonomialIdeal result = MonomialIdeal::unit(G.vertex_count());
  for (const auto& W : covers) {
    result = intersect(result, cover_prime_power(G.vertex_count(), W, s));
    if (result.generator_count() > caps.generator_cap) {
      throw CapExceededError("symbolic_power: intermediate generator count " +
                             std::to_string(result.generator_count()) + " exceeds cap " +
                             std::to_string(caps.generator_cap));
    }
  }
  return result;
}

bool symbolic_membership(const Monomial& w, const SimpleGraph& G, int s,
                         const SymbolicCaps& caps) {
  if (w.ambient() != G.vertex_count()) {
    throw AmbientMismatchError("symbolic_membership: monomial ambient " +
                               std::to_string(w.ambient()) + " differs from vertex count " +
                               std::to_string(G.vertex_count()));
  }
  if (s < 1) throw DomainError("symbolic_membership: s must be >= 1");
  const auto covers = minimal_vertex_covers(G, caps.vertex_cap);
  for (const auto& W : covers) {
    long long sum = 0;
    for (int v : W) sum += w.exponents()[v];
    if (sum < s) return false;
  }
  return true;
}

MonomialIdeal complete_symbolic_gens(int m, int s) {
  if (m < 2) throw DomainError("complete_symbolic_gens: m must be >= 2");
  if (s < 2) throw DomainError("complete_symbolic_gens: s must be >= 2");
  std::vector<Monomial> gens;
  // For each witness index i, run over the exponents of the other m-1
  // variables summing to s and set a_i to their maximum.
  for (int i = 0; i < m; ++i) {
    detail::for_each_composition(s, m - 1, [&](const std::vector<int>& others) {
      int mx = 0;
      for (int v : others) mx = std::max(mx, v);
      std::vector<int> e(m);
      int k = 0;
      for (int j = 0; j < m; ++j) {
        e[j] = (j == i) ? mx : others[k++];
      }
      gens.emplace_back(std::move(e));
    });
  }
  // Distinct witnesses can produce the same monomial; from_generators dedupes.
  // The set is an antichain already, so minimization only sorts.
  return MonomialIdeal::from_generators(m, std::move(gens));
}

MonomialIdeal restricted_ideal(int m, int r, int s, RestrictedKind kind) {
  if (m < 2) throw DomainError("restricted_ideal: m must be >= 2");
  if (r < 0 || r > m) throw DomainError("restricted_ideal: r must satisfy 0 <= r <= m");
  if (s < 2) throw DomainError("restricted_ideal: s must be >= 2");

  const MonomialIdeal full = complete_symbolic_gens(m, s);
  if (r == m) return full;  // both kinds coincide with I(K_m)^(s) by convention

  if (kind == RestrictedKind::Inside) {
    std::vector<Monomial> kept;
    for (const Monomial& g : full.generators()) {
      bool supported = true;
      for (int i = r; i < m && supported; ++i) {
        if (g.exponents()[i] != 0) supported = false;
      }
      if (supported) kept.push_back(g);
    }
    return MonomialIdeal::from_generators(m, std::move(kept));
  }

  std::vector<int> e(m, 0);
  for (int i = r; i < m; ++i) e[i] = 1;
  const MonomialIdeal principal =
      MonomialIdeal::from_generators(m, {Monomial(std::move(e))});
  return intersect(full, principal);
}

MonomialIdeal parallel_symbolic_gens(const SimpleGraph& G, const std::vector<int>& alpha,
                                     int s, const SymbolicCaps& caps) {
  if (static_cast<int>(alpha.size()) != G.vertex_count()) {
    throw DomainError("parallel_symbolic_gens: alpha length differs from vertex count");
  }
  Parallelization par;
  par.alpha = alpha;
  par.offsets.assign(1, 0);
  for (int a : alpha) {
    if (a < 1) throw DomainError("parallel_symbolic_gens: alpha entries must be >= 1");
    par.offsets.push_back(par.offsets.back() + a);
  }
  const int big_m = par.total_vertices();

  const MonomialIdeal base = symbolic_power(G, s, caps);
  std::vector<Monomial> gens;
  for (const Monomial& g : base.generators()) {
    // Distribute each exponent over its duplication block, one block at a time.
    std::vector<std::vector<int>> partial = {std::vector<int>(big_m, 0)};
    for (int i = 0; i < G.vertex_count(); ++i) {
      const int a_i = g.exponents()[i];
      std::vector<std::vector<int>> splits;
      detail::for_each_composition(a_i, par.block_size(i),
                                   [&](const std::vector<int>& parts) { splits.push_back(parts); });
      std::vector<std::vector<int>> next;
      next.reserve(partial.size() * splits.size());
      for (const auto& p : partial) {
        for (const auto& split : splits) {
          std::vector<int> q = p;
          for (int t = 0; t < par.block_size(i); ++t) q[par.vertex_of(i, t)] = split[t];
          next.push_back(std::move(q));
        }
      }
      partial = std::move(next);
      if (partial.size() + gens.size() > caps.generator_cap) {
        throw CapExceededError("parallel_symbolic_gens: composition count exceeds cap " +
                               std::to_string(caps.generator_cap));
      }
    }
    for (auto& e : partial) gens.emplace_back(std::move(e));
  }
  // The proposition already describes this set as minimal; re-minimize anyway.
  return MonomialIdeal::from_generators(big_m, std::move(gens));
}

}  // namespace symedge
