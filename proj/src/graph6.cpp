#include "satlab/graph6.hpp"

namespace satlab {

namespace {
constexpr std::string_view kHeader = ">>graph6<<";
}

std::string graph6_encode(const Graph& g) {
    int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph graph6_decode(std::string_view bytes) {
    if (bytes.substr(0, kHeader.size()) == kHeader) bytes.remove_prefix(kHeader.size());
    if (bytes.empty()) throw format_error("empty graph6 string");
    int size_byte = static_cast<unsigned char>(bytes[0]);
    if (size_byte < 63 || size_byte > 63 + Graph::kMaxVertices)
        throw format_error("graph6 size byte out of the supported range (n <= 31)");
    int n = size_byte - 63;
    int nbits = n * (n - 1) / 2;
    std::size_t expect = 1 + (nbits + 5) / 6;
    if (bytes.size() != expect)
        throw format_error("graph6 string has wrong length for order " + std::to_string(n));

    std::uint32_t rows[Graph::kMaxVertices] = {};
    int bit = 0, i = 0, j = 1;
    for (std::size_t p = 1; p < bytes.size(); ++p) {
        int c = static_cast<unsigned char>(bytes[p]);
        if (c < 63 || c > 126) throw format_error("graph6 byte outside the printable range");
        int group = c - 63;
        for (int k = 5; k >= 0; --k, ++bit) {
            int b = (group >> k) & 1;
            if (bit >= nbits) {
                if (b) throw format_error("graph6 padding bits must be zero");
                continue;
            }
            if (b) {
                rows[i] |= 1u << j;
                rows[j] |= 1u << i;
            }
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return Graph::from_rows(n, rows);
}

}  // namespace satlab
