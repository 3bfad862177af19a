#ifndef SATLAB_CANONICAL_HPP
#define SATLAB_CANONICAL_HPP

#include <string>

#include "satlab/graph.hpp"

namespace satlab {

/// graph6 encoding of the lexicographically minimal relabeling of a graph.
/// Two graphs have equal keys iff they are isomorphic.
using CanonicalKey = std::string;

/// Oracle route: scans all n! orderings. Practical for n <= 9 only.
CanonicalKey canonical_key_bruteforce(const Graph& g);

/// Pruned ordering search (branch and bound over column prefixes with
/// symmetry dedup). Exact for every order; the production route.
CanonicalKey canonical_key_search(const Graph& g);

/// Dispatches to the scan for n <= 9 and the search above 9. The two
/// routes are cross-validated against each other in the test band n in
/// {8, 9}.
CanonicalKey canonical_key(const Graph& g);

/// True iff the graph's own labeling is the lexicographically minimal one,
/// i.e. graph6_encode(g) == canonical_key(g). Early-aborting; this is the
/// per-leaf filter of the isomorph-free generator.
bool is_canonical_labeling(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

namespace detail {
/// is_canonical_labeling on raw adjacency rows (no Graph construction).
bool is_canonical_rows(const std::uint32_t* rows, int n);
}  // namespace detail

}  // namespace satlab

#endif
