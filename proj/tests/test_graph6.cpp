#include <doctest.h>

#include <random>
#include <string>

#include "ebu/graph6.hpp"

using namespace ebu;

namespace {

// Reference encoder written independently of the codec: builds the bit
// string one character at a time.
std::string reference_encode(const Graph& g) {
    std::string bits;
    for (int j = 1; j < g.order(); ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? '1' : '0');
    while (bits.size() % 6 != 0) bits.push_back('0');
    std::string out(1, static_cast<char>(g.order() + 63));
    for (size_t c = 0; c < bits.size(); c += 6) {
        int value = 0;
        for (size_t b = 0; b < 6; ++b) value = value * 2 + (bits[c + b] - '0');
        out.push_back(static_cast<char>(value + 63));
    }
    return out;
}

}  // namespace

TEST_CASE("frozen encodings") {
    CHECK(encode_graph6(complete(3)) == "Bw");
    CHECK(encode_graph6(independent(1)) == "@");
    CHECK(reference_encode(complete(3)) == "Bw");
    CHECK(reference_encode(independent(1)) == "@");
}

TEST_CASE("round trip and reference agreement on random graphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 30);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) g = g.with_edge(u, v);
        std::string text = encode_graph6(g);
        CHECK(text == reference_encode(g));
        CHECK(decode_graph6(text) == g);
    }
}

TEST_CASE("round trip at the short-form boundary and above") {
    for (int n : {61, 62, 63, 64}) {
        Graph g(n);
        for (int v = 1; v < n; ++v) g = g.with_edge(0, v);
        std::string text = encode_graph6(g);
        if (n <= 62) CHECK(text[0] != '~');
        else CHECK(text[0] == '~');
        CHECK(decode_graph6(text) == g);
    }
}

TEST_CASE("random byte strings either decode or throw with an offset") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 3000; ++trial) {
        size_t len = 1 + rng() % 12;
        std::string text(len, '\0');
        for (char& c : text) c = static_cast<char>(rng() % 256);
        try {
            Graph g = decode_graph6(text);
            CHECK(encode_graph6(g) == text);  // accepted inputs round-trip
        } catch (const Graph6Error& e) {
            CHECK(e.byte_offset <= text.size());
        }
    }
}

TEST_CASE("malformed input reports a byte offset") {
    CHECK_THROWS_AS(decode_graph6(""), Graph6Error);
    CHECK_THROWS_AS(decode_graph6("B"), Graph6Error);        // truncated data
    CHECK_THROWS_AS(decode_graph6("Bw!"), Graph6Error);      // trailing bytes
    CHECK_THROWS_AS(decode_graph6(std::string(1, '\n')), Graph6Error);
    try {
        decode_graph6("B\x01");
    } catch (const Graph6Error& e) {
        CHECK(e.byte_offset == 1);
    }
    // Padding bits must be zero.
    CHECK_THROWS_AS(decode_graph6("B~"), Graph6Error);
}
