#ifndef SYMEDGE_GRAPH_HPP
#define SYMEDGE_GRAPH_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "symedge/ideal.hpp"

namespace symedge {

inline constexpr int kDefaultVertexCap = 24;

/// An undirected finite simple graph on vertices 0..n-1 (no loops, no
/// multi-edges).  Edges are stored as ordered pairs (u, v) with u < v,
/// sorted; isolated vertices are allowed.
class SimpleGraph {
public:
  SimpleGraph(int vertex_count, std::vector<std::pair<int, int>> edges,
              std::vector<std::string> labels = {});

  /// K_m, the complete graph on m vertices.
  static SimpleGraph complete(int m);

  /// Path on n vertices (n-1 edges).
  static SimpleGraph path(int n);

  /// Cycle on n >= 3 vertices.
  static SimpleGraph cycle(int n);

  int vertex_count() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// Optional display names; empty when the default x1..xn naming applies.
  const std::vector<std::string>& labels() const { return labels_; }

  /// Display name of a vertex (label if present, else "x<i+1>").
  std::string vertex_name(int v) const;

  bool has_edge(int u, int v) const;
  bool is_complete() const;

  /// Bitmask of neighbours per vertex; valid while vertex_count <= 63.
  std::vector<unsigned long long> adjacency_masks() const;

private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::string> labels_;
};

/// The edge ideal I(G) = < x_i x_j : {i,j} in E(G) >.
MonomialIdeal edge_ideal(const SimpleGraph& G);

/// All inclusion-minimal vertex covers, each sorted ascending, the list in
/// lexicographic order.  Found by exhaustive subset search (minimal covers
/// are the complements of maximal independent sets); the edgeless graph has
/// the single cover {}.
std::vector<std::vector<int>> minimal_vertex_covers(const SimpleGraph& G,
                                                    int vertex_cap = kDefaultVertexCap);

/// The duplication data of a parallelization G^alpha: vertex i of G becomes
/// the block of consecutive vertices [offset(i), offset(i) + alpha_i) of
/// G^alpha, blocks laid out in vertex order.
struct Parallelization {
  std::vector<int> alpha;
  std::vector<int> offsets;  // offsets.size() == alpha.size() + 1

  int block_count() const { return static_cast<int>(alpha.size()); }
  int total_vertices() const { return offsets.back(); }
  int block_start(int i) const { return offsets[i]; }
  int block_size(int i) const { return alpha[i]; }
  int vertex_of(int i, int t) const { return offsets[i] + t; }

  /// Index i of the block containing flattened vertex v.
  int block_of(int v) const;
};

/// The parallelization G^alpha: vertex i duplicated into alpha_i pairwise
/// non-adjacent copies, copies joined exactly when the originals were.
std::pair<SimpleGraph, Parallelization> parallelize(const SimpleGraph& G,
                                                    const std::vector<int>& alpha);

/// Minimal vertex covers of G^alpha, obtained from the covers of G by
/// replacing each vertex with its whole duplication block.
std::vector<std::vector<int>> lifted_minimal_covers(const SimpleGraph& G,
                                                    const Parallelization& par,
                                                    int vertex_cap = kDefaultVertexCap);

/// Reads the edge-list format: first line the vertex count m, then one
/// "u v" pair per line, 1-indexed.
SimpleGraph read_graph(std::istream& in);

/// Parses a CLI graph source: "complete:m", "path:n", "cycle:n", or a file path.
SimpleGraph graph_from_spec(const std::string& spec);

}  // namespace symedge

#endif  // SYMEDGE_GRAPH_HPP
