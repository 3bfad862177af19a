#ifndef SATLAB_GRAPH6_HPP
#define SATLAB_GRAPH6_HPP

#include <string>
#include <string_view>

#include "satlab/graph.hpp"

namespace satlab {

/// Standard graph6 encoding for n <= 31: size byte chr(n+63), then the
/// upper-triangle adjacency bits in column order (0,1),(0,2),(1,2),(0,3),...
/// packed 6 per byte (first bit highest), each byte + 63, zero padding.
std::string graph6_encode(const Graph& g);

/// Inverse of graph6_encode. Accepts an optional ">>graph6<<" header.
/// Throws format_error on malformed input (bad length, size byte out of
/// the supported range, byte outside 63..126, nonzero padding).
Graph graph6_decode(std::string_view bytes);

}  // namespace satlab

#endif
