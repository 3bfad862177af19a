#include "satlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace satlab {

namespace {

void check_order(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (n > Graph::kMaxVertices)
        throw capacity_error("graph order " + std::to_string(n) + " exceeds the 31-vertex cap");
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::out_of_range("edge endpoint out of range for order " + std::to_string(n));
        if (u == v) throw std::invalid_argument("loops are not allowed");
        g.adj_[u] |= 1u << v;
        g.adj_[v] |= 1u << u;
    }
    return g;
}

Graph Graph::from_rows(int n, const std::uint32_t* rows) {
    Graph g(n);
    for (int v = 0; v < n; ++v) {
        assert((rows[v] & ~g.vertex_mask()) == 0);
        assert(((rows[v] >> v) & 1u) == 0);
        g.adj_[v] = rows[v];
    }
#ifndef NDEBUG
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) assert(g.has_edge(u, v) == g.has_edge(v, u));
#endif
    return g;
}

int Graph::size() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<int> Graph::sorted_degrees() const {
    std::vector<int> ds(n_);
    for (int v = 0; v < n_; ++v) ds[v] = degree(v);
    std::sort(ds.begin(), ds.end());
    return ds;
}

Graph Graph::with_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    Graph g = *this;
    g.adj_[u] |= 1u << v;
    g.adj_[v] |= 1u << u;
    return g;
}

Graph Graph::without_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("edge endpoint out of range");
    Graph g = *this;
    g.adj_[u] &= ~(1u << v);
    g.adj_[v] &= ~(1u << u);
    return g;
}

Graph Graph::without_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
    Graph g(n_ - 1);
    for (int u = 0; u < n_; ++u) {
        if (u == v) continue;
        std::uint32_t row = adj_[u];
        std::uint32_t low = row & ((1u << v) - 1u);
        std::uint32_t high = (row >> (v + 1)) << v;
        g.adj_[u < v ? u : u - 1] = low | high;
    }
    return g;
}

Graph Graph::permuted(std::span<const int> perm) const {
    assert(static_cast<int>(perm.size()) == n_);
    Graph g(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (has_edge(perm[i], perm[j])) {
                g.adj_[i] |= 1u << j;
                g.adj_[j] |= 1u << i;
            }
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

std::vector<std::pair<int, int>> Graph::nonedges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

bool Graph::is_complete() const {
    for (int v = 0; v < n_; ++v)
        if (adj_[v] != (vertex_mask() & ~(1u << v))) return false;
    return true;
}

bool Graph::is_connected() const {
    if (n_ == 0) return true;
    std::uint32_t seen = 1u;
    std::uint32_t frontier = 1u;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f;) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= adj_[v];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == vertex_mask();
}

std::optional<int> Graph::diameter() const {
    if (n_ == 0) throw std::invalid_argument("diameter is undefined on the empty graph");
    int diam = 0;
    for (int s = 0; s < n_; ++s) {
        std::uint32_t seen = 1u << s;
        std::uint32_t frontier = seen;
        int dist = 0;
        while (seen != vertex_mask()) {
            std::uint32_t next = 0;
            for (std::uint32_t f = frontier; f;) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= adj_[v];
            }
            next &= ~seen;
            if (!next) return std::nullopt;  // disconnected
            seen |= next;
            frontier = next;
            ++dist;
        }
        diam = std::max(diam, dist);
    }
    return diam;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
    Graph g(n);
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph::from_edge_list(n, es);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
    return Graph::from_edge_list(n, es);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycles need at least 3 vertices");
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
    return Graph::from_edge_list(n, es);
}

Graph star_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int v = 1; v < n; ++v) es.emplace_back(0, v);
    return Graph::from_edge_list(n, es);
}

Graph join(const Graph& g, const Graph& h) {
    int n = g.order() + h.order();
    if (n > Graph::kMaxVertices)
        throw capacity_error("join order " + std::to_string(n) + " exceeds the 31-vertex cap");
    std::vector<std::pair<int, int>> es = g.edges();
    int off = g.order();
    for (auto [u, v] : h.edges()) es.emplace_back(u + off, v + off);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) es.emplace_back(u, v + off);
    return Graph::from_edge_list(n, es);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    int n = g.order() + h.order();
    if (n > Graph::kMaxVertices)
        throw capacity_error("union order " + std::to_string(n) + " exceeds the 31-vertex cap");
    std::vector<std::pair<int, int>> es = g.edges();
    int off = g.order();
    for (auto [u, v] : h.edges()) es.emplace_back(u + off, v + off);
    return Graph::from_edge_list(n, es);
}

}  // namespace satlab
