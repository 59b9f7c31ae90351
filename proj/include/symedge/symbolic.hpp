#ifndef SYMEDGE_SYMBOLIC_HPP
#define SYMEDGE_SYMBOLIC_HPP

#include <cstddef>

#include "symedge/graph.hpp"
#include "symedge/ideal.hpp"

namespace symedge {

/// Resource limits for the cover-intersection computation.
struct SymbolicCaps {
  int vertex_cap = kDefaultVertexCap;
  std::size_t generator_cap = 500000;  // intermediate generator-set size
};

/// The s-th symbolic power I(G)^(s), computed as the intersection over all
/// minimal vertex covers W of the powers <W>^s.  For a square-free edge
/// ideal every primary component comes from a minimal prime, so this
/// intersection is the whole symbolic power.  s = 1 returns the edge ideal;
/// an edgeless graph gives the zero ideal.
MonomialIdeal symbolic_power(const SimpleGraph& G, int s, const SymbolicCaps& caps = {});

/// Membership by the exponent-sum criterion: w lies in I(G)^(s) iff for
/// every minimal vertex cover W the exponents of w over W sum to >= s.
bool symbolic_membership(const Monomial& w, const SimpleGraph& G, int s,
                         const SymbolicCaps& caps = {});

/// Minimal generators of I(K_m)^(s) for m >= 2, s >= 2, by direct
/// enumeration: exponent vectors a admitting an index i with
/// sum_{j != i} a_j = s and a_i = max_{j != i} a_j.
MonomialIdeal complete_symbolic_gens(int m, int s);

enum class RestrictedKind {
  Inside,   // generators of I(K_m)^(s) supported on x_1..x_r
  Outside,  // I(K_m)^(s) intersected with < x_{r+1} ... x_m >
};

/// The restricted ideals attached to the subgraph K_r of K_m (0 <= r <= m,
/// s >= 2).  When r = m both kinds equal I(K_m)^(s).
MonomialIdeal restricted_ideal(int m, int r, int s, RestrictedKind kind);

/// Minimal generators of I(G^alpha)^(s) from the generators of I(G)^(s):
/// each exponent a_i is distributed over the duplication block of vertex i
/// in every possible way (ordered compositions), then the set is minimized.
MonomialIdeal parallel_symbolic_gens(const SimpleGraph& G, const std::vector<int>& alpha,
                                     int s, const SymbolicCaps& caps = {});

}  // namespace symedge

#endif  // SYMEDGE_SYMBOLIC_HPP
