#ifndef SATLAB_ENUMERATION_HPP
#define SATLAB_ENUMERATION_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <vector>

#include "satlab/canonical.hpp"
#include "satlab/graph.hpp"
#include "satlab/pattern.hpp"

namespace satlab {

/// Cache entries are keyed by (n, pattern, m, pruning flag, code version);
/// bump on any change that affects search output.
inline constexpr std::string_view kCodeVersion = "1";

struct SearchOptions {
    bool use_pruning = false;
    int jobs = 0;                       // 0 = hardware concurrency
    std::filesystem::path cache_dir{};  // empty = no disk cache
};

/// Result of a minimal-saturated-graph search at one order.
struct SearchResult {
    int n = 0;
    PatternSpec pattern;
    int sat_number = -1;
    std::vector<CanonicalKey> minimal_graphs;  // sorted, duplicate-free
    std::uint64_t scanned = 0;                 // isomorphism classes examined
    std::uint64_t pruned = 0;                  // rejected by necessary conditions
    bool pruning_enabled = false;
};

/// An independent subtree of the edge-choice recursion: the first
/// prefix_len slots (column-major pair order) are fixed to prefix_bits.
/// Chunks with distinct prefixes generate disjoint labeled-graph sets.
struct WorkChunk {
    int n = 0;
    int m = 0;
    int prefix_len = 0;
    std::uint32_t prefix_bits = 0;
};

/// Streams exactly one representative per isomorphism class with n vertices
/// and m edges: the member whose graph6 encoding equals its canonical key,
/// emitted in ascending key order. Throws capacity_error for n > 12.
void enumerate_graphs(int n, int m, const std::function<void(const Graph&)>& visit);
std::vector<Graph> enumerate_graphs(int n, int m);

/// One representative per d-regular isomorphism class on n vertices.
std::vector<Graph> enumerate_regular_graphs(int n, int d);

/// Deterministic cover of the (n, m) space by disjoint chunks; the union of
/// chunk outputs equals the full enumeration.
std::vector<WorkChunk> split_work(int n, int m, int target_chunks);
void enumerate_chunk(const WorkChunk& chunk, const std::function<void(const Graph&)>& visit);

/// Scans m = 0, 1, 2, ... and stops at the first edge count admitting a
/// saturated graph; returns all saturated classes at that count. The lower
/// bound is exhaustive: every smaller level was fully scanned. Pruning (an
/// opt-in) skips classes failing the structural necessary conditions and is
/// applied only for patterns with s >= 1, k >= 3.
SearchResult find_saturation_number(int n, const PatternSpec& p, const SearchOptions& opts = {});

/// All saturated isomorphism classes with exactly m edges, sorted.
std::vector<CanonicalKey> enumerate_minimal_saturated(int n, const PatternSpec& p, int m,
                                                      const SearchOptions& opts = {});

/// Cache query id, also used as the directory name: n{n}_{pattern}_m{m}_p{0|1}_v{version}.
std::string search_query_id(int n, const PatternSpec& p, int m, bool pruning);

/// Cache directory from the SATLAB_CACHE environment variable, or empty.
std::filesystem::path default_cache_dir();

std::string search_result_to_json(const SearchResult& r);

}  // namespace satlab

#endif
