#include "satlab/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "satlab/graph6.hpp"

namespace satlab {

namespace {

// Column d of an ordering (v_0..v_{n-1}) is the bit run
// x(v_0,v_d) x(v_1,v_d) ... x(v_{d-1},v_d) of the relabeled upper triangle.
// Packing the first bit highest makes integer comparison of two columns
// agree with lexicographic comparison of the bit runs, hence with byte
// comparison of the graph6 encodings.

struct ColumnSearch {
    int n = 0;
    std::uint32_t all = 0;
    std::uint32_t rows[Graph::kMaxVertices] = {};
    std::uint32_t ident[Graph::kMaxVertices] = {};  // columns of the input labeling
    std::uint32_t best[Graph::kMaxVertices] = {};
    std::uint32_t cur[Graph::kMaxVertices] = {};
    std::uint32_t colbits[Graph::kMaxVertices] = {};
    std::uint32_t chosen = 0;

    void init(const std::uint32_t* r, int order) {
        n = order;
        all = order == 31 ? 0x7fffffffu : ((1u << order) - 1u);
        for (int v = 0; v < n; ++v) rows[v] = r[v];
        for (int d = 0; d < n; ++d) {
            std::uint32_t c = 0;
            for (int i = 0; i < d; ++i) c = (c << 1) | ((rows[d] >> i) & 1u);
            ident[d] = c;
        }
    }

    void push(int u) {
        chosen |= 1u << u;
        for (std::uint32_t rest = all & ~chosen; rest;) {
            int x = std::countr_zero(rest);
            rest &= rest - 1;
            colbits[x] = (colbits[x] << 1) | ((rows[u] >> x) & 1u);
        }
    }

    void pop(int u) {
        chosen &= ~(1u << u);
        for (std::uint32_t rest = all & ~chosen; rest;) {
            int x = std::countr_zero(rest);
            rest &= rest - 1;
            if (x != u) colbits[x] >>= 1;
        }
        colbits[u] = 0;  // recomputed below when needed
    }

    // Swapping two unchosen vertices whose rows agree outside the pair is an
    // automorphism fixing everything chosen so far; only one branch matters.
    bool twin(int u, int w) const {
        std::uint32_t m = ~((1u << u) | (1u << w));
        return (rows[u] & m) == (rows[w] & m);
    }

    // TEST mode: true iff no ordering yields a strictly smaller column string
    // than the input labeling. Walks only prefixes tying the identity.
    bool test_dfs(int d) {
        if (d == n) return true;
        int ties[Graph::kMaxVertices];
        int nt = 0;
        for (std::uint32_t rest = all & ~chosen; rest;) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint32_t c = colbits[u];
            if (c < ident[d]) return false;
            if (c == ident[d]) ties[nt++] = u;
        }
        for (int i = 0; i < nt; ++i) {
            int u = ties[i];
            bool dup = false;
            for (int j = 0; j < i && !dup; ++j) dup = twin(u, ties[j]);
            if (dup) continue;
            std::uint32_t saved = colbits[u];
            push(u);
            bool ok = test_dfs(d + 1);
            pop(u);
            colbits[u] = saved;
            if (!ok) return false;
        }
        return true;
    }

    // KEY mode: leaves best[] holding the minimal column string.
    void key_dfs(int d) {
        if (d == n) {
            if (!std::equal(cur, cur + n, best)) std::copy(cur, cur + n, best);
            return;
        }
        int cand[Graph::kMaxVertices];
        std::uint32_t cval[Graph::kMaxVertices];
        int nc = 0;
        for (std::uint32_t rest = all & ~chosen; rest;) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            // insertion sort by (column value, vertex)
            std::uint32_t c = colbits[u];
            int p = nc++;
            while (p > 0 && cval[p - 1] > c) {
                cval[p] = cval[p - 1];
                cand[p] = cand[p - 1];
                --p;
            }
            cval[p] = c;
            cand[p] = u;
        }
        bool tight = std::equal(cur, cur + d, best);
        std::uint32_t cmin = cval[0];
        for (int i = 0; i < nc; ++i) {
            if (tight ? cval[i] > best[d] : cval[i] > cmin) break;
            int u = cand[i];
            bool dup = false;
            for (int j = 0; j < i && !dup; ++j)
                if (cval[j] == cval[i]) dup = twin(u, cand[j]);
            if (dup) continue;
            cur[d] = cval[i];
            std::uint32_t saved = colbits[u];
            push(u);
            key_dfs(d + 1);
            pop(u);
            colbits[u] = saved;
        }
    }
};

Graph graph_from_columns(const std::uint32_t* cols, int n) {
    std::uint32_t rows[Graph::kMaxVertices] = {};
    for (int d = 0; d < n; ++d)
        for (int i = 0; i < d; ++i)
            if ((cols[d] >> (d - 1 - i)) & 1u) {
                rows[i] |= 1u << d;
                rows[d] |= 1u << i;
            }
    return Graph::from_rows(n, rows);
}

}  // namespace

namespace detail {

bool is_canonical_rows(const std::uint32_t* rows, int n) {
    if (n <= 1) return true;
    ColumnSearch s;
    s.init(rows, n);
    return s.test_dfs(0);
}

}  // namespace detail

bool is_canonical_labeling(const Graph& g) {
    std::uint32_t rows[Graph::kMaxVertices];
    for (int v = 0; v < g.order(); ++v) rows[v] = g.neighbors(v);
    return detail::is_canonical_rows(rows, g.order());
}

CanonicalKey canonical_key_search(const Graph& g) {
    int n = g.order();
    if (n <= 1) return graph6_encode(g);
    ColumnSearch s;
    std::uint32_t rows[Graph::kMaxVertices];
    for (int v = 0; v < n; ++v) rows[v] = g.neighbors(v);
    s.init(rows, n);
    std::copy(s.ident, s.ident + n, s.best);
    s.key_dfs(0);
    return graph6_encode(graph_from_columns(s.best, n));
}

CanonicalKey canonical_key_bruteforce(const Graph& g) {
    int n = g.order();
    if (n <= 1) return graph6_encode(g);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::uint32_t best[Graph::kMaxVertices];
    std::uint32_t cur[Graph::kMaxVertices];
    bool have_best = false;
    do {
        bool worse = false;
        int d = 0;
        for (; d < n; ++d) {
            std::uint32_t c = 0;
            for (int i = 0; i < d; ++i) c = (c << 1) | (g.has_edge(order[i], order[d]) ? 1u : 0u);
            cur[d] = c;
            if (have_best) {
                if (c > best[d]) {
                    worse = true;
                    break;
                }
                if (c < best[d]) break;  // strictly better; finish columns plainly
            }
        }
        if (worse) continue;
        for (; d < n; ++d) {
            std::uint32_t c = 0;
            for (int i = 0; i < d; ++i) c = (c << 1) | (g.has_edge(order[i], order[d]) ? 1u : 0u);
            cur[d] = c;
        }
        if (!have_best || std::lexicographical_compare(cur, cur + n, best, best + n)) {
            std::copy(cur, cur + n, best);
            have_best = true;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return graph6_encode(graph_from_columns(best, n));
}

CanonicalKey canonical_key(const Graph& g) {
    return g.order() <= 9 ? canonical_key_bruteforce(g) : canonical_key_search(g);
}

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) return false;
    if (g.size() != h.size()) return false;
    if (g.sorted_degrees() != h.sorted_degrees()) return false;
    return canonical_key(g) == canonical_key(h);
}

}  // namespace satlab
