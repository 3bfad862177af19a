#ifndef SATLAB_CONSTRUCTORS_HPP
#define SATLAB_CONSTRUCTORS_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "satlab/enumeration.hpp"
#include "satlab/graph.hpp"

namespace satlab {

/// Every minimal P_k-saturated graph of order n, for k in {3, 4}:
/// k=3: floor(n/2) K_2 plus one isolated vertex when n is odd;
/// k=4: (n/2) K_2 for even n; K_3 + matching and K_{1,4} + matching for odd n.
std::vector<Graph> minimal_path_saturated(int n, int k);

/// The unique minimal K_p-saturated graph K_{p-2} v empty(n-p+2).
Graph clique_extremal(int n, int p);

/// Join-form extremal family {K_s v F : F minimal P_k-saturated of order
/// n-s} for s in {1, 2}, k in {3, 4}.
std::vector<Graph> join_extremal(int n, int s, int k);

/// A minimal saturated graph with no conical vertex, found by search and
/// not expressible as a join over a smaller minimal graph.
struct SporadicEntry {
    std::string id;       // "H1", "H2", ... assigned by (pattern, order, key) sort
    std::string pattern;  // pattern text it is minimal-saturated for
    int order = 0;
    int edges = 0;
    CanonicalKey key;
    std::string search_query;  // cache query id of the search that found it
    std::string provenance() const { return "derived-by-search:" + search_query; }
};

struct SporadicStoreOptions {
    std::filesystem::path dir;  // empty = don't persist
    SearchOptions search;
};

/// Runs the minimal-saturated searches for K1vPk and K2vPk (k in {3,4,5})
/// at every order up to 8, classifies each minimal class as join-form (a
/// conical vertex strips to a minimal lower-pattern-saturated graph) or
/// sporadic, and persists the sporadics under
/// dir/<pattern>/<n>.g6 plus dir/index.json.
std::vector<SporadicEntry> derive_sporadics(const SporadicStoreOptions& opts);

/// True iff the graph has a conical vertex whose deletion lands in
/// `lower_keys` (the minimal set one pattern level down).
bool is_join_form(const Graph& g, const std::vector<CanonicalKey>& lower_keys);

}  // namespace satlab

#endif
