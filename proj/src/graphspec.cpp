#include "lazycop/graphspec.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "lazycop/graph6.hpp"

namespace lazycop {

namespace {

Graph read_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open edge list file: " + path);
    std::vector<std::pair<int, int>> edges;
    int n = 0;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == '#') continue;
        if (first == "n") {
            if (!(ls >> n)) throw Error("edge list: malformed vertex-count line");
            continue;
        }
        int u = std::stoi(first), v = 0;
        if (!(ls >> v)) throw Error("edge list: malformed edge line '" + line + "'");
        edges.emplace_back(u, v);
        n = std::max({n, u + 1, v + 1});
    }
    if (n == 0) throw Error("edge list: no vertices");
    return new_graph(n, edges);
}

struct Parser {
    std::vector<std::string> tokens;
    std::size_t pos = 0;

    std::string next(const std::string& what) {
        if (pos >= tokens.size()) throw Error("graph spec: missing " + what);
        return tokens[pos++];
    }

    int next_int(const std::string& what) {
        const std::string t = next(what);
        try {
            return std::stoi(t);
        } catch (...) {
            throw Error("graph spec: expected a number for " + what + ", got '" + t + "'");
        }
    }

    Graph parse() {
        const std::string t = next("graph spec");
        if (t == "petersen") return petersen();
        if (t == "complete") return complete(next_int("vertex count"));
        if (t == "cycle") return cycle(next_int("vertex count"));
        if (t == "path") return path(next_int("vertex count"));
        if (t == "rook" || t == "rooks") return rooks(next_int("board side"));
        if (t == "cart") {
            Graph a = parse();
            Graph b = parse();
            return cartesian_product(a, b);
        }
        if (t == "file") return read_edge_list(next("path"));
        if (t == "g6") return parse_graph6(next("graph6 text"));
        // bare graph6 literal
        try {
            return parse_graph6(t);
        } catch (const Error& e) {
            throw Error("graph spec: unknown generator '" + t + "' (and not valid graph6: " +
                        e.what() + ")");
        }
    }
};

}  // namespace

Graph parse_graph_spec(const std::string& spec) {
    Parser p;
    std::istringstream in(spec);
    std::string tok;
    while (in >> tok) p.tokens.push_back(tok);
    Graph g = p.parse();
    if (p.pos != p.tokens.size()) throw Error("graph spec: trailing tokens after a complete spec");
    return g;
}

}  // namespace lazycop
