#include "turanlab/graph6.hpp"

#include "turanlab/error.hpp"

#include <cctype>
#include <string>

namespace turan {

namespace {

[[noreturn]] void bad(const std::string& what, std::size_t offset) {
    throw error(errc::parse, what + " at byte " + std::to_string(offset));
}

} // namespace

std::string to_graph6(const SmallGraph& g) {
    if (g.n > 62) throw error(errc::size_cap, "graph6 short form capped at 62 vertices");
    std::string out;
    out.push_back(static_cast<char>(63 + g.n));
    int bits = 0, value = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) {
            value = value << 1 | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + value));
                bits = 0;
                value = 0;
            }
        }
    if (bits) out.push_back(static_cast<char>(63 + (value << (6 - bits))));
    return out;
}

SmallGraph from_graph6(const std::string& s) {
    if (s.empty()) bad("empty graph6 string", 0);
    unsigned char head = static_cast<unsigned char>(s[0]);
    if (head == 126) bad("long-form graph6 is not supported", 0);
    if (head < 63 || head > 125) bad("header byte outside graph6 range", 0);
    int n = head - 63;
    int nbits = n * (n - 1) / 2;
    std::size_t want = 1 + (nbits + 5) / 6;
    if (s.size() != want)
        bad("expected " + std::to_string(want) + " bytes for " + std::to_string(n) +
                " vertices, got " + std::to_string(s.size()),
            s.size() < want ? s.size() : want);
    SmallGraph g;
    g.n = n;
    g.adj.assign(n, 0);
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            std::size_t at = 1 + bit / 6;
            unsigned char c = static_cast<unsigned char>(s[at]);
            if (c < 63 || c > 126) bad("payload byte outside graph6 range", at);
            if ((c - 63) >> (5 - bit % 6) & 1) {
                g.adj[i] |= 1ull << j;
                g.adj[j] |= 1ull << i;
            }
        }
    // Trailing pad bits must be zero; anything else signals corruption.
    for (int t = nbits; t < 6 * static_cast<int>(want - 1); ++t) {
        std::size_t at = 1 + t / 6;
        unsigned char c = static_cast<unsigned char>(s[at]);
        if (c < 63 || c > 126) bad("payload byte outside graph6 range", at);
        if ((c - 63) >> (5 - t % 6) & 1) bad("nonzero padding bits", at);
    }
    return g;
}

std::string to_edge_list(const SmallGraph& g) {
    std::string out = std::to_string(g.n) + ";";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        out += first ? " " : ",";
        out += std::to_string(u) + "-" + std::to_string(v);
        first = false;
    }
    return out;
}

namespace {

struct EdgeListScanner {
    const std::string& s;
    std::size_t at = 0;

    void skip_space() {
        while (at < s.size() && std::isspace(static_cast<unsigned char>(s[at]))) ++at;
    }

    int number() {
        skip_space();
        std::size_t start = at;
        while (at < s.size() && std::isdigit(static_cast<unsigned char>(s[at]))) ++at;
        if (at == start) bad("expected a number", at);
        if (at - start > 2) bad("number too long", start);
        return std::stoi(s.substr(start, at - start));
    }

    void expect(char c) {
        skip_space();
        if (at >= s.size() || s[at] != c)
            bad(std::string("expected '") + c + "'", at);
        ++at;
    }

    bool done() {
        skip_space();
        return at >= s.size();
    }
};

} // namespace

SmallGraph from_edge_list(const std::string& s) {
    EdgeListScanner in{s};
    int n = in.number();
    in.expect(';');
    std::vector<std::pair<int, int>> edges;
    if (!in.done()) {
        while (true) {
            int u = in.number();
            in.expect('-');
            int v = in.number();
            edges.emplace_back(u, v);
            if (in.done()) break;
            in.expect(',');
        }
    }
    return graph_from_edges(n, edges);
}

SmallGraph parse_graph(const std::string& s) {
    if (s.find(';') != std::string::npos) return from_edge_list(s);
    return from_graph6(s);
}

} // namespace turan
