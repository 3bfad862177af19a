#ifndef SATLAB_SATURATION_HPP
#define SATLAB_SATURATION_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "satlab/graph.hpp"
#include "satlab/pattern.hpp"

namespace satlab {

enum class SaturationStatus { saturated, contains_copy, misses_nonedge };

std::string to_string(SaturationStatus s);

/// Outcome of the saturation test, with audit certificates on request.
struct SaturationVerdict {
    SaturationStatus status;
    /// Set when status == contains_copy.
    std::optional<PatternWitness> copy_witness;
    /// First non-edge (lexicographic) whose addition creates no copy.
    std::optional<std::pair<int, int>> failing_nonedge;
    /// When certificates were requested and the graph is saturated: one
    /// witness per non-edge, valid in g plus that edge.
    std::optional<std::map<std::pair<int, int>, PatternWitness>> per_nonedge_witnesses;

    bool saturated() const { return status == SaturationStatus::saturated; }
};

/// The central predicate: g contains no copy of the pattern, and adding any
/// missing edge creates one. A complete graph is saturated iff it is
/// pattern-free (the non-edge condition is vacuous); in particular every
/// graph on fewer than s+k vertices is saturated iff complete. Failures are
/// reported in deterministic order: the copy check first, then non-edges
/// lexicographically.
SaturationVerdict is_saturated(const Graph& g, const PatternSpec& p,
                               bool want_certificates = false);

/// If some vertex is adjacent to all others, deletes the smallest-index one
/// and returns it with the reduced graph (indices compacted).
/// Throws std::invalid_argument for graphs on fewer than 2 vertices.
std::optional<std::pair<int, Graph>> strip_conical(const Graph& g);

/// Necessary conditions satisfied by every K1vPk- and K2vPk-saturated graph
/// (k >= 3): diameter exactly 2, and for the K2 case at least two common
/// neighbors behind every non-edge.
struct StructuralReport {
    bool diameter_ok = false;
    /// Non-adjacent pairs with fewer than 2 common neighbors.
    std::vector<std::pair<int, int>> bad_pairs;
};

StructuralReport structural_check(const Graph& g, const PatternSpec& p);

/// JSON object {status, n, pattern, edges, failing_nonedge?, witnesses?},
/// witnesses keyed "u-v" with u < v in decimal.
std::string verdict_to_json(const Graph& g, const PatternSpec& p, const SaturationVerdict& v);

}  // namespace satlab

#endif
