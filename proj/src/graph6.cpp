#include "ebu/graph6.hpp"

#include <vector>

namespace ebu {

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        // Extended header: '~' then three 6-bit digits, most significant first.
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int chunk = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
    return out;
}

Graph decode_graph6(const std::string& text) {
    if (text.empty()) throw Graph6Error("empty input", 0);
    std::size_t pos = 0;
    int n;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~')
            throw Graph6Error("graphs beyond 258047 vertices are not supported", 1);
        if (text.size() < 4) throw Graph6Error("truncated extended header", text.size());
        n = 0;
        for (pos = 1; pos <= 3; ++pos) {
            unsigned char c = text[pos];
            if (c < 63 || c > 126) throw Graph6Error("header byte out of range", pos);
            n = (n << 6) | (c - 63);
        }
        if (n <= 62) throw Graph6Error("extended header used for an order the short form covers", 1);
    } else {
        unsigned char c = text[0];
        if (c < 63 || c > 125) throw Graph6Error("header byte out of range", 0);
        n = c - 63;
        pos = 1;
    }
    if (n > kMaxVertices)
        throw Graph6Error("order " + std::to_string(n) + " exceeds the library cap of " +
                              std::to_string(kMaxVertices),
                          0);
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (text.size() < pos + nbytes)
        throw Graph6Error("adjacency data truncated (need " + std::to_string(nbytes) + " bytes)",
                          text.size());
    if (text.size() > pos + nbytes) throw Graph6Error("trailing bytes after adjacency data", pos + nbytes);

    std::vector<bool> bits;
    bits.reserve(nbytes * 6);
    for (std::size_t b = 0; b < nbytes; ++b, ++pos) {
        unsigned char c = text[pos];
        if (c < 63 || c > 126) throw Graph6Error("data byte out of range", pos);
        int v = c - 63;
        for (int s = 5; s >= 0; --s) bits.push_back((v >> s) & 1);
    }
    for (std::size_t b = nbits; b < bits.size(); ++b)
        if (bits[b]) throw Graph6Error("nonzero padding bits", pos - 1);

    std::vector<std::pair<int, int>> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (bits[k]) edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

}  // namespace ebu
