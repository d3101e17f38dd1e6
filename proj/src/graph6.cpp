#include "lazycop/graph6.hpp"

namespace lazycop {

namespace {
constexpr char kHeader[] = ">>graph6<<";
}

std::string to_graph6(const Graph& g) {
    std::string out;
    const int n = g.n();
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, bits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                bits = 0;
            }
        }
    if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
    return out;
}

Graph parse_graph6(const std::string& text) {
    std::size_t pos = 0;
    if (text.rfind(kHeader, 0) == 0) pos = sizeof(kHeader) - 1;
    if (pos >= text.size()) throw Error("graph6: empty input");

    auto sextet = [&](std::size_t at) -> int {
        unsigned char c = static_cast<unsigned char>(text[at]);
        if (c < 63 || c > 126)
            throw Error("graph6: character out of range 63..126 at offset " + std::to_string(at));
        return c - 63;
    };

    long long n;
    if (static_cast<unsigned char>(text[pos]) == 126) {
        if (pos + 4 > text.size()) throw Error("graph6: truncated extended size");
        if (static_cast<unsigned char>(text[pos + 1]) == 126)
            throw Error("graph6: 8-byte size form exceeds the 64-vertex cap");
        n = (static_cast<long long>(sextet(pos + 1)) << 12) |
            (static_cast<long long>(sextet(pos + 2)) << 6) | sextet(pos + 3);
        pos += 4;
    } else {
        n = sextet(pos);
        pos += 1;
    }
    if (n < 1 || n > kMaxVertices)
        throw Error("graph6: vertex count " + std::to_string(n) + " out of range 1..64");

    const long long pair_bits = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((pair_bits + 5) / 6);
    if (text.size() - pos < body) throw Error("graph6: body shorter than required");
    if (text.size() - pos > body) throw Error("graph6: trailing garbage after body");

    Graph g(static_cast<int>(n));
    long long bit = 0;
    for (std::size_t idx = 0; idx < body; ++idx) {
        int v = sextet(pos + idx);
        for (int b = 5; b >= 0; --b, ++bit) {
            int on = (v >> b) & 1;
            if (bit < pair_bits) {
                if (on) {
                    // column order: bit index -> pair (i, j)
                    long long t = bit;
                    int j = 1;
                    while (t >= j) t -= j++;
                    g.add_edge(static_cast<int>(t), j);
                }
            } else if (on) {
                throw Error("graph6: nonzero padding bits");
            }
        }
    }
    return g;
}

}  // namespace lazycop
