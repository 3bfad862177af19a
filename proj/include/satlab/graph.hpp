#ifndef SATLAB_GRAPH_HPP
#define SATLAB_GRAPH_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "satlab/errors.hpp"

namespace satlab {

/// Immutable simple undirected graph on at most 31 labeled vertices.
///
/// Adjacency is stored as one 32-bit row per vertex, so any vertex subset
/// fits in a machine word. All operations that "modify" a graph return a
/// fresh value; instances are safe to share across threads.
class Graph {
  public:
    static constexpr int kMaxVertices = 31;

    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    /// Builds a graph from an edge list. Duplicate pairs are idempotent.
    /// Throws std::out_of_range for a vertex index >= n,
    /// std::invalid_argument for a loop, capacity_error for n > 31.
    static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);

    /// Wraps precomputed adjacency rows. Rows must be symmetric, loop-free
    /// and confined to bits 0..n-1 (checked by assertion only).
    static Graph from_rows(int n, const std::uint32_t* rows);

    int order() const { return n_; }
    int size() const;

    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
    std::uint32_t neighbors(int v) const { return adj_[v]; }
    std::uint32_t vertex_mask() const { return n_ == 31 ? 0x7fffffffu : ((1u << n_) - 1u); }
    int degree(int v) const;
    int min_degree() const;
    int max_degree() const;
    std::vector<int> sorted_degrees() const;

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;
    Graph without_vertex(int v) const;

    /// Relabels the graph: vertex i of the result is perm[i] of the source.
    Graph permuted(std::span<const int> perm) const;

    std::vector<std::pair<int, int>> edges() const;

    /// All unordered non-adjacent pairs u < v in lexicographic order.
    std::vector<std::pair<int, int>> nonedges() const;

    bool is_complete() const;
    bool is_connected() const;

    /// BFS-exact diameter; nullopt iff disconnected, 0 for a single vertex.
    /// Throws std::invalid_argument on the empty graph.
    std::optional<int> diameter() const;

    bool operator==(const Graph&) const = default;

  private:
    int n_ = 0;
    std::array<std::uint32_t, kMaxVertices> adj_{};
};

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
/// Star K_{1,n-1} with the hub at index 0.
Graph star_graph(int n);

/// Join: disjoint union plus all edges between the two sides. The left
/// operand keeps indices 0..n(g)-1, the right is shifted after it.
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

}  // namespace satlab

#endif
