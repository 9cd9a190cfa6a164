#pragma once

#include <cstddef>
#include <functional>
#include <istream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace indzero {

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable after construction.
class Graph {
public:
  using Edge = std::pair<int, int>;

  Graph() = default;
  /// Builds a graph on n vertices. Duplicate edges are collapsed; self-loops and
  /// out-of-range endpoints throw PreconditionError.
  Graph(int n, const std::vector<Edge>& edges);

  int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::span<const int> neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const { return static_cast<int>(adj_.at(static_cast<std::size_t>(v)).size()); }
  bool adjacent(int u, int v) const;

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const int> perm) const;

  bool is_connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  std::vector<std::vector<int>> adj_;
  std::size_t edge_count_ = 0;
};

/// Default vertex cap for the generators.
inline constexpr std::size_t kDefaultVertexCap = 1'000'000;
/// Largest n_max accepted by gen_all_trees.
inline constexpr int kMaxCatalogVertices = 16;

/// Reads the edge-list format: blank lines, '#' comments, or "u v" per line.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph read_edge_list_file(const std::string& path);

/// Writes the edge-list format (one "u v" per line). Isolated trailing vertices
/// are not representable and are dropped.
std::string to_edge_list(const Graph& g);

int max_degree(const Graph& g);

Graph gen_complete_dary_tree(int d, int depth, std::size_t vertex_cap = kDefaultVertexCap);

/// Spherically symmetric tree: every vertex at level i has arities[i] children.
Graph gen_layered_tree(std::span<const int> arities, std::size_t vertex_cap = kDefaultVertexCap);

/// One representative per isomorphism class of trees with 1..n_max vertices and
/// maximum degree <= max_deg, in deterministic order (by size, then canonical
/// generation order). The callback may return false to stop early.
void for_each_tree(int n_max, int max_deg, const std::function<bool(const Graph&)>& visit);
std::vector<Graph> gen_all_trees(int n_max, int max_deg);

/// AHU canonical string of a tree rooted at its centre(s); equal iff isomorphic.
std::string tree_canonical_form(const Graph& tree);

} // namespace indzero
