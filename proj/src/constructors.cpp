#include "satlab/constructors.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include <json.hpp>

#include "satlab/graph6.hpp"

namespace satlab {

namespace {

Graph matching_plus_isolated(int pairs, int singles) {
    Graph g = empty_graph(singles);
    for (int i = 0; i < pairs; ++i) g = disjoint_union(complete_graph(2), g);
    return g;
}

}  // namespace

std::vector<Graph> minimal_path_saturated(int n, int k) {
    if (k == 3) {
        if (n < 3) throw std::invalid_argument("minimal P3-saturated graphs need n >= 3");
        return {matching_plus_isolated(n / 2, n % 2)};
    }
    if (k == 4) {
        if (n < 4) throw std::invalid_argument("minimal P4-saturated graphs need n >= 4");
        if (n % 2 == 0) return {matching_plus_isolated(n / 2, 0)};
        std::vector<Graph> out;
        out.push_back(disjoint_union(complete_graph(3), matching_plus_isolated((n - 3) / 2, 0)));
        out.push_back(disjoint_union(star_graph(5), matching_plus_isolated((n - 5) / 2, 0)));
        return out;
    }
    throw std::invalid_argument("minimal path-saturated constructors cover k in {3, 4} only");
}

Graph clique_extremal(int n, int p) {
    if (p < 2 || n < p) throw std::invalid_argument("clique extremal needs n >= p >= 2");
    return join(complete_graph(p - 2), empty_graph(n - p + 2));
}

std::vector<Graph> join_extremal(int n, int s, int k) {
    if (s != 1 && s != 2)
        throw std::invalid_argument("join extremal constructors cover s in {1, 2} only");
    std::vector<Graph> out;
    for (const Graph& f : minimal_path_saturated(n - s, k)) out.push_back(join(complete_graph(s), f));
    return out;
}

bool is_join_form(const Graph& g, const std::vector<CanonicalKey>& lower_keys) {
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) != g.order() - 1) continue;
        CanonicalKey key = canonical_key(g.without_vertex(v));
        if (std::find(lower_keys.begin(), lower_keys.end(), key) != lower_keys.end()) return true;
    }
    return false;
}

std::vector<SporadicEntry> derive_sporadics(const SporadicStoreOptions& opts) {
    struct Query {
        PatternSpec pattern;
        PatternSpec lower;
    };
    const std::vector<Query> grid = {
        {{1, 3}, {0, 3}}, {{1, 4}, {0, 4}}, {{1, 5}, {0, 5}},
        {{2, 3}, {1, 3}}, {{2, 4}, {1, 4}}, {{2, 5}, {1, 5}},
    };

    std::vector<SporadicEntry> entries;
    std::map<std::string, std::vector<CanonicalKey>> by_pattern_order;  // "<pattern>/<n>.g6"

    for (const Query& q : grid) {
        for (int n = q.pattern.order(); n <= 8; ++n) {
            SearchResult res = find_saturation_number(n, q.pattern, opts.search);
            SearchResult lower = find_saturation_number(n - 1, q.lower, opts.search);
            for (const CanonicalKey& key : res.minimal_graphs) {
                Graph g = graph6_decode(key);
                if (is_join_form(g, lower.minimal_graphs)) continue;
                SporadicEntry e;
                e.pattern = to_string(q.pattern);
                e.order = n;
                e.edges = g.size();
                e.key = key;
                e.search_query = search_query_id(n, q.pattern, res.sat_number, res.pruning_enabled);
                entries.push_back(std::move(e));
            }
        }
    }

    // stable ids by (pattern grid order, order, key) -- the loop above already
    // emits in that order
    for (std::size_t i = 0; i < entries.size(); ++i) {
        entries[i].id = "H" + std::to_string(i + 1);
        by_pattern_order[entries[i].pattern + "/" + std::to_string(entries[i].order) + ".g6"]
            .push_back(entries[i].key);
    }

    if (!opts.dir.empty()) {
        std::error_code ec;
        for (const auto& [rel, keys] : by_pattern_order) {
            std::filesystem::path file = opts.dir / rel;
            std::filesystem::create_directories(file.parent_path(), ec);
            std::ofstream out(file);
            for (const auto& k : keys) out << k << "\n";
        }
        std::filesystem::create_directories(opts.dir, ec);
        nlohmann::json index = nlohmann::json::array();
        for (const auto& e : entries)
            index.push_back({{"id", e.id},
                             {"pattern", e.pattern},
                             {"order", e.order},
                             {"edges", e.edges},
                             {"key", e.key},
                             {"search_query", e.search_query}});
        std::ofstream out(opts.dir / "index.json");
        out << index.dump(2) << "\n";
    }
    return entries;
}

}  // namespace satlab
