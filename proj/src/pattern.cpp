#include "satlab/pattern.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cctype>
#include <charconv>

namespace satlab {

namespace {

bool parse_int(std::string_view text, int& out) {
    if (text.empty() || text.size() > 4) return false;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc() && p == text.data() + text.size();
}

}  // namespace

PatternSpec parse_pattern(std::string_view text) {
    std::string t(text);
    for (char& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    int s = 0, k = 0;
    if (auto vp = t.find("vp"); vp != std::string::npos) {
        if (t.empty() || t[0] != 'k' || !parse_int(std::string_view(t).substr(1, vp - 1), s) ||
            !parse_int(std::string_view(t).substr(vp + 2), k) || s < 0 || k < 1)
            throw std::invalid_argument("bad pattern '" + std::string(text) +
                                        "': expected KsvPk with s >= 0, k >= 1");
        return {s, k};
    }
    if (!t.empty() && t[0] == 'p') {
        if (!parse_int(std::string_view(t).substr(1), k) || k < 1)
            throw std::invalid_argument("bad pattern '" + std::string(text) +
                                        "': expected Pk with k >= 1");
        return {0, k};
    }
    if (!t.empty() && t[0] == 'k') {
        int p = 0;
        if (!parse_int(std::string_view(t).substr(1), p) || p < 1)
            throw std::invalid_argument("bad pattern '" + std::string(text) +
                                        "': expected Kp with p >= 1");
        return {p - 1, 1};
    }
    throw std::invalid_argument("bad pattern '" + std::string(text) +
                                "': expected Pk, Kp or KsvPk");
}

std::string to_string(const PatternSpec& p) {
    if (p.is_clique()) return "K" + std::to_string(p.order());
    if (p.s == 0) return "P" + std::to_string(p.k);
    return "K" + std::to_string(p.s) + "vP" + std::to_string(p.k);
}

namespace {

constexpr int kPathDpCap = 24;

struct PathDp {
    int w = 0;
    int verts[kPathDpCap];               // local index -> vertex
    std::uint32_t ladj[kPathDpCap];      // local adjacency
    std::vector<std::uint32_t>* reach;   // endpoint sets per visited subset

    // Returns the covered subset and an endpoint of some k-vertex path, or
    // (0, -1) if none exists.
    std::pair<std::uint32_t, int> run(const Graph& g, std::uint32_t within, int k) {
        if (k < 1) throw std::invalid_argument("path order must be >= 1");
        within &= g.vertex_mask();
        w = std::popcount(within);
        if (w > kPathDpCap)
            throw capacity_error("path search instance too large: " + std::to_string(w) +
                                 " candidate vertices exceed the 24-vertex DP cap");
        if (k > w) return {0, -1};
        int local_of[Graph::kMaxVertices];
        int idx = 0;
        for (std::uint32_t rest = within; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            local_of[v] = idx;
            verts[idx++] = v;
        }
        for (int i = 0; i < w; ++i) {
            std::uint32_t m = 0;
            for (std::uint32_t nb = g.neighbors(verts[i]) & within; nb;) {
                int v = std::countr_zero(nb);
                nb &= nb - 1;
                m |= 1u << local_of[v];
            }
            ladj[i] = m;
        }
        if (k == 1) return {1u, 0};  // any single vertex

        static thread_local std::vector<std::uint32_t> buf;
        buf.assign(std::size_t(1) << w, 0);
        reach = &buf;
        auto& r = buf;
        for (int i = 0; i < w; ++i) r[1u << i] = 1u << i;
        std::uint32_t full = (w == 32) ? 0xffffffffu : ((1u << w) - 1u);
        for (std::uint32_t set = 1; set <= full; ++set) {
            std::uint32_t ends = r[set];
            if (!ends) continue;
            if (std::popcount(set) == k) return {set, std::countr_zero(ends)};
            for (std::uint32_t e = ends; e;) {
                int v = std::countr_zero(e);
                e &= e - 1;
                for (std::uint32_t ext = ladj[v] & ~set; ext;) {
                    int u = std::countr_zero(ext);
                    ext &= ext - 1;
                    r[set | (1u << u)] |= 1u << u;
                }
            }
        }
        return {0, -1};
    }

    std::vector<int> rebuild(std::uint32_t set, int endpoint) const {
        auto& r = *reach;
        std::vector<int> path;
        int v = endpoint;
        std::uint32_t s = set;
        while (true) {
            path.push_back(verts[v]);
            s &= ~(1u << v);
            if (!s) break;
            std::uint32_t prev = r[s] & ladj[v];
            assert(prev);
            v = std::countr_zero(prev);
        }
        std::reverse(path.begin(), path.end());
        return path;
    }
};

}  // namespace

bool has_path_of_order(const Graph& g, std::uint32_t within, int k) {
    PathDp dp;
    return dp.run(g, within, k).second >= 0;
}

std::optional<std::vector<int>> find_path_of_order(const Graph& g, std::uint32_t within, int k) {
    PathDp dp;
    auto [set, end] = dp.run(g, within, k);
    if (end < 0) return std::nullopt;
    if (k == 1) {
        within &= g.vertex_mask();
        return std::vector<int>{std::countr_zero(within)};
    }
    return dp.rebuild(set, end);
}

namespace {

// Finds a q-clique, smallest lexicographic vertex set first. Returns the
// ascending vertex list or empty if none.
bool find_clique(const Graph& g, int q, int from, std::uint32_t cands, std::vector<int>& acc) {
    if (q == 0) return true;
    for (int v = from; v < g.order(); ++v) {
        if (!((cands >> v) & 1u)) continue;
        acc.push_back(v);
        if (find_clique(g, q - 1, v + 1, cands & g.neighbors(v), acc)) return true;
        acc.pop_back();
    }
    return false;
}

struct CenterScan {
    const Graph* g;
    int k;
    PatternWitness found;

    bool scan(int s_left, int from, std::uint32_t common, std::vector<int>& centers) {
        if (s_left == 0) {
            std::uint32_t ground = common;
            for (int c : centers) ground &= ~(1u << c);
            auto path = find_path_of_order(*g, ground, k);
            if (!path) return false;
            found.center = centers;
            found.path = std::move(*path);
            return true;
        }
        for (int v = from; v < g->order(); ++v) {
            if (!((common >> v) & 1u)) continue;  // must be adjacent to all chosen centers
            centers.push_back(v);
            if (scan(s_left - 1, v + 1, common & g->neighbors(v), centers)) return true;
            centers.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<PatternWitness> contains_pattern(const Graph& g, const PatternSpec& p) {
    if (p.order() > g.order()) return std::nullopt;
    if (p.is_clique()) {
        std::vector<int> clique;
        if (!find_clique(g, p.order(), 0, g.vertex_mask(), clique)) return std::nullopt;
        PatternWitness w;
        w.center.assign(clique.begin(), clique.begin() + p.s);
        w.path.assign(clique.begin() + p.s, clique.end());
        return w;
    }
    CenterScan scan{&g, p.k, {}};
    std::vector<int> centers;
    if (!scan.scan(p.s, 0, g.vertex_mask(), centers)) return std::nullopt;
    return scan.found;
}

namespace {

bool oracle_check(const Graph& g, const PatternSpec& p, const int* slots) {
    for (int i = 0; i < p.s; ++i)
        for (int j = i + 1; j < p.s; ++j)
            if (!g.has_edge(slots[i], slots[j])) return false;
    for (int i = 0; i < p.s; ++i)
        for (int j = 0; j < p.k; ++j)
            if (!g.has_edge(slots[i], slots[p.s + j])) return false;
    for (int j = 0; j + 1 < p.k; ++j)
        if (!g.has_edge(slots[p.s + j], slots[p.s + j + 1])) return false;
    return true;
}

bool oracle_rec(const Graph& g, const PatternSpec& p, int depth, int* slots, bool* used) {
    if (depth == p.order()) return oracle_check(g, p, slots);
    for (int v = 0; v < g.order(); ++v) {
        if (used[v]) continue;
        used[v] = true;
        slots[depth] = v;
        if (oracle_rec(g, p, depth + 1, slots, used)) {
            used[v] = false;
            return true;
        }
        used[v] = false;
    }
    return false;
}

}  // namespace

bool contains_pattern_oracle(const Graph& g, const PatternSpec& p) {
    if (p.order() > g.order()) return false;
    int slots[Graph::kMaxVertices];
    bool used[Graph::kMaxVertices] = {};
    return oracle_rec(g, p, 0, slots, used);
}

bool witness_valid(const Graph& g, const PatternSpec& p, const PatternWitness& w) {
    if (static_cast<int>(w.center.size()) != p.s) return false;
    if (static_cast<int>(w.path.size()) != p.k) return false;
    std::uint32_t seen = 0;
    for (int v : w.center) {
        if (v < 0 || v >= g.order() || ((seen >> v) & 1u)) return false;
        seen |= 1u << v;
    }
    for (int v : w.path) {
        if (v < 0 || v >= g.order() || ((seen >> v) & 1u)) return false;
        seen |= 1u << v;
    }
    for (std::size_t i = 0; i < w.center.size(); ++i)
        for (std::size_t j = i + 1; j < w.center.size(); ++j)
            if (!g.has_edge(w.center[i], w.center[j])) return false;
    for (int c : w.center)
        for (int v : w.path)
            if (!g.has_edge(c, v)) return false;
    for (std::size_t j = 0; j + 1 < w.path.size(); ++j)
        if (!g.has_edge(w.path[j], w.path[j + 1])) return false;
    return true;
}

}  // namespace satlab
