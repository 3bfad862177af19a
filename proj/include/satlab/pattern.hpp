#ifndef SATLAB_PATTERN_HPP
#define SATLAB_PATTERN_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "satlab/graph.hpp"

namespace satlab {

/// The target pattern K_s v P_k: a clique of order s joined to a path of
/// order k. For k <= 2 the pattern degenerates to the clique K_{s+k} and is
/// matched as such.
struct PatternSpec {
    int s = 0;  // clique part ("center")
    int k = 1;  // path part
    int order() const { return s + k; }
    bool is_clique() const { return k <= 2; }
    bool operator==(const PatternSpec&) const = default;
};

/// Parses the pattern grammar used across the CLI and reports:
/// "Pk" (s=0), "Kp" (cliques), "KsvPk" in general. Case-insensitive,
/// no spaces. Throws std::invalid_argument on anything else.
PatternSpec parse_pattern(std::string_view text);

std::string to_string(const PatternSpec& p);

/// Image of a pattern copy in a host graph: the center vertices and the
/// path vertices in path order.
struct PatternWitness {
    std::vector<int> center;
    std::vector<int> path;
};

/// True iff k distinct vertices of `within` (a vertex bitmask) form a path
/// in g. Dynamic programming over (endpoint, visited-subset) states.
/// Throws capacity_error when |within| > 24.
bool has_path_of_order(const Graph& g, std::uint32_t within, int k);

/// Like has_path_of_order but reconstructs one witness path.
std::optional<std::vector<int>> find_path_of_order(const Graph& g, std::uint32_t within, int k);

/// Fast detector: scans s-subsets inducing cliques in increasing
/// lexicographic order and runs the path DP on their common neighborhood.
/// Copies are subgraphs, not induced subgraphs.
std::optional<PatternWitness> contains_pattern(const Graph& g, const PatternSpec& p);

/// Independent brute-force oracle: tries every ordered selection of s+k
/// distinct vertices and checks the adjacency conditions directly. Shares
/// nothing with contains_pattern beyond the Graph type. Factorial cost.
bool contains_pattern_oracle(const Graph& g, const PatternSpec& p);

/// Re-checks a witness against a host graph (adjacency only).
bool witness_valid(const Graph& g, const PatternSpec& p, const PatternWitness& w);

}  // namespace satlab

#endif
