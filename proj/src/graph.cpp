#include "symedge/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "symedge/errors.hpp"

namespace symedge {

SimpleGraph::SimpleGraph(int vertex_count, std::vector<std::pair<int, int>> edges,
                         std::vector<std::string> labels)
    : n_(vertex_count), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (n_ <= 0) throw DomainError("graph: vertex count must be positive");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n_) {
    throw DomainError("graph: label count differs from vertex count");
  }
  for (auto& [u, v] : edges_) {
    if (u == v) throw DomainError("graph: loop at vertex " + std::to_string(u + 1));
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_) {
      throw DomainError("graph: edge endpoint out of range");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

SimpleGraph SimpleGraph::complete(int m) {
  if (m < 1) throw DomainError("complete graph: m must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < m; ++v) edges.emplace_back(u, v);
  }
  return SimpleGraph(m, std::move(edges));
}

SimpleGraph SimpleGraph::path(int n) {
  if (n < 1) throw DomainError("path graph: n must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph SimpleGraph::cycle(int n) {
  if (n < 3) throw DomainError("cycle graph: n must be >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  edges.emplace_back(0, n - 1);
  return SimpleGraph(n, std::move(edges));
}

std::string SimpleGraph::vertex_name(int v) const {
  if (v < 0 || v >= n_) throw DomainError("graph: vertex index out of range");
  if (!labels_.empty()) return labels_[v];
  return "x" + std::to_string(v + 1);
}

bool SimpleGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

bool SimpleGraph::is_complete() const {
  return static_cast<long long>(edges_.size()) ==
         static_cast<long long>(n_) * (n_ - 1) / 2;
}

std::vector<unsigned long long> SimpleGraph::adjacency_masks() const {
  if (n_ > 63) throw CapExceededError("graph: adjacency masks need <= 63 vertices");
  std::vector<unsigned long long> adj(n_, 0);
  for (const auto& [u, v] : edges_) {
    adj[u] |= 1ull << v;
    adj[v] |= 1ull << u;
  }
  return adj;
}

MonomialIdeal edge_ideal(const SimpleGraph& G) {
  std::vector<Monomial> gens;
  gens.reserve(G.edges().size());
  for (const auto& [u, v] : G.edges()) {
    std::vector<int> e(G.vertex_count(), 0);
    e[u] = 1;
    e[v] = 1;
    gens.emplace_back(std::move(e));
  }
  // Square-free quadratic generators of distinct edges never divide one
  // another, so the set is already minimal.
  return MonomialIdeal::from_generators(G.vertex_count(), std::move(gens));
}

std::vector<std::vector<int>> minimal_vertex_covers(const SimpleGraph& G, int vertex_cap) {
  const int n = G.vertex_count();
  if (n > vertex_cap) {
    throw CapExceededError("minimal_vertex_covers: " + std::to_string(n) +
                           " vertices exceed cap " + std::to_string(vertex_cap));
  }
  const auto adj = G.adjacency_masks();
  std::vector<std::vector<int>> covers;
  const unsigned long long limit = 1ull << n;
  for (unsigned long long mask = 0; mask < limit; ++mask) {
    const unsigned long long outside = ~mask & (limit - 1);
    // mask is a cover iff the complement is independent.
    bool is_cover = true;
    for (int v = 0; v < n && is_cover; ++v) {
      if ((outside >> v) & 1ull) {
        if (adj[v] & outside) is_cover = false;
      }
    }
    if (!is_cover) continue;
    // Minimal iff every chosen vertex still has a neighbour outside.
    bool minimal = true;
    for (int v = 0; v < n && minimal; ++v) {
      if ((mask >> v) & 1ull) {
        if ((adj[v] & outside) == 0) minimal = false;
      }
    }
    if (!minimal) continue;
    std::vector<int> cover;
    for (int v = 0; v < n; ++v) {
      if ((mask >> v) & 1ull) cover.push_back(v);
    }
    covers.push_back(std::move(cover));
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

int Parallelization::block_of(int v) const {
  for (int i = 0; i < block_count(); ++i) {
    if (v >= offsets[i] && v < offsets[i + 1]) return i;
  }
  throw DomainError("parallelization: vertex out of range");
}

std::pair<SimpleGraph, Parallelization> parallelize(const SimpleGraph& G,
                                                    const std::vector<int>& alpha) {
  if (static_cast<int>(alpha.size()) != G.vertex_count()) {
    throw DomainError("parallelize: alpha length " + std::to_string(alpha.size()) +
                      " differs from vertex count " + std::to_string(G.vertex_count()));
  }
  Parallelization par;
  par.alpha = alpha;
  par.offsets.assign(1, 0);
  for (int a : alpha) {
    if (a < 1) throw DomainError("parallelize: every alpha entry must be >= 1");
    par.offsets.push_back(par.offsets.back() + a);
  }

  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : G.edges()) {
    for (int t = 0; t < alpha[u]; ++t) {
      for (int l = 0; l < alpha[v]; ++l) {
        edges.emplace_back(par.vertex_of(u, t), par.vertex_of(v, l));
      }
    }
  }
  std::vector<std::string> labels(par.total_vertices());
  for (int i = 0; i < par.block_count(); ++i) {
    for (int t = 0; t < par.block_size(i); ++t) {
      labels[par.vertex_of(i, t)] =
          "x_{" + std::to_string(i + 1) + "," + std::to_string(t + 1) + "}";
    }
  }
  SimpleGraph parallelized(par.total_vertices(), std::move(edges), std::move(labels));
  return {std::move(parallelized), std::move(par)};
}

std::vector<std::vector<int>> lifted_minimal_covers(const SimpleGraph& G,
                                                    const Parallelization& par,
                                                    int vertex_cap) {
  auto base_covers = minimal_vertex_covers(G, vertex_cap);
  std::vector<std::vector<int>> lifted;
  lifted.reserve(base_covers.size());
  for (const auto& cover : base_covers) {
    std::vector<int> big;
    for (int v : cover) {
      for (int t = 0; t < par.block_size(v); ++t) big.push_back(par.vertex_of(v, t));
    }
    std::sort(big.begin(), big.end());
    lifted.push_back(std::move(big));
  }
  std::sort(lifted.begin(), lifted.end());
  return lifted;
}

SimpleGraph read_graph(std::istream& in) {
  int n = 0;
  if (!(in >> n)) throw ParseError("graph file: missing vertex count");
  std::vector<std::pair<int, int>> edges;
  int u, v;
  while (in >> u >> v) {
    if (u < 1 || v < 1 || u > n || v > n) {
      throw ParseError("graph file: edge endpoint outside 1.." + std::to_string(n));
    }
    edges.emplace_back(u - 1, v - 1);
  }
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph graph_from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string kind = spec.substr(0, colon);
    const std::string arg = spec.substr(colon + 1);
    int n = 0;
    try {
      n = std::stoi(arg);
    } catch (const std::exception&) {
      throw ParseError("graph spec: bad size '" + arg + "'");
    }
    if (kind == "complete") return SimpleGraph::complete(n);
    if (kind == "path") return SimpleGraph::path(n);
    if (kind == "cycle") return SimpleGraph::cycle(n);
    throw ParseError("graph spec: unknown constructor '" + kind + "'");
  }
  std::ifstream file(spec);
  if (!file) throw ParseError("graph spec: cannot open file '" + spec + "'");
  return read_graph(file);
}

}  // namespace symedge
