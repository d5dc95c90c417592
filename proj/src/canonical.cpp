#include "turanlab/canonical.hpp"

#include "turanlab/counting.hpp"
#include "turanlab/error.hpp"

#include <algorithm>
#include <numeric>

namespace turan {

namespace {

constexpr int kMaxCanonVertices = 10;

void check_cap(const SmallGraph& g, const char* who) {
    if (g.n > kMaxCanonVertices)
        throw error(errc::size_cap,
                    std::string(who) + " capped at 10 vertices, got " + std::to_string(g.n));
}

// Builds the lexicographically minimal upper-triangle bit-string over all
// labelings.  The string is packed MSB-first into one u64 (at most 45 bits at
// 10 vertices), so prefix comparison is integer comparison against a shifted
// incumbent.  Branches place one vertex at a time; a partial labeling of p
// vertices has committed exactly the first p(p-1)/2 bits.
struct CanonSearch {
    const SmallGraph& g;
    int n, total_bits;
    std::vector<int> perm, best_perm;
    std::uint64_t best;

    explicit CanonSearch(const SmallGraph& graph)
        : g(graph), n(graph.n), total_bits(graph.n * (graph.n - 1) / 2), perm(graph.n),
          best_perm(graph.n) {
        std::iota(best_perm.begin(), best_perm.end(), 0);
        best = total_bits == 64 ? ~0ull : (1ull << total_bits) - 1;
        descend(0, 0, 0, 0);
    }

    void descend(int pos, std::uint64_t used, std::uint64_t cur, int bits) {
        if (pos == n) {
            if (cur < best) {
                best = cur;
                best_perm = perm;
            }
            return;
        }
        struct Cand {
            int v;
            std::uint64_t col;
        };
        std::vector<Cand> cands;
        for (int v = 0; v < n; ++v) {
            if (used >> v & 1) continue;
            std::uint64_t col = 0;
            for (int i = 0; i < pos; ++i) col = col << 1 | (g.has_edge(perm[i], v) ? 1 : 0);
            cands.push_back({v, col});
        }
        std::sort(cands.begin(), cands.end(), [&](const Cand& a, const Cand& b) {
            if (a.col != b.col) return a.col < b.col;
            if (g.degree(a.v) != g.degree(b.v)) return g.degree(a.v) < g.degree(b.v);
            return a.v < b.v;
        });
        // Twins (equal neighborhoods away from each other) yield isomorphic
        // completions, so only the first of each twin class is branched on.
        std::vector<int> tried;
        for (const Cand& c : cands) {
            bool twin = false;
            for (int u : tried)
                if (((g.adj[u] ^ g.adj[c.v]) & ~((1ull << u) | (1ull << c.v))) == 0) {
                    twin = true;
                    break;
                }
            tried.push_back(c.v);
            if (twin) continue;
            std::uint64_t grown = cur << pos | c.col;
            int grown_bits = bits + pos;
            if (grown > best >> (total_bits - grown_bits)) continue;
            perm[pos] = c.v;
            descend(pos + 1, used | 1ull << c.v, grown, grown_bits);
        }
    }
};

} // namespace

CanonicalCode canonical_form(const SmallGraph& g) {
    check_cap(g, "canonical_form");
    CanonSearch search(g);
    CanonicalCode code;
    code.push_back(static_cast<char>(g.n));
    for (int t = 0; t < search.total_bits; t += 8) {
        unsigned char byte = 0;
        for (int b = 0; b < 8 && t + b < search.total_bits; ++b)
            byte |= (search.best >> (search.total_bits - 1 - (t + b)) & 1) << (7 - b);
        code.push_back(static_cast<char>(byte));
    }
    return code;
}

SmallGraph canonical_relabel(const SmallGraph& g) {
    check_cap(g, "canonical_relabel");
    CanonSearch search(g);
    SmallGraph out;
    out.n = g.n;
    out.adj.assign(g.n, 0);
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.has_edge(search.best_perm[i], search.best_perm[j])) {
                out.adj[i] |= 1ull << j;
                out.adj[j] |= 1ull << i;
            }
    return out;
}

bool is_isomorphic(const SmallGraph& a, const SmallGraph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

long long automorphism_count(const SmallGraph& g) {
    check_cap(g, "automorphism_count");
    // An edge-preserving bijection of a finite simple graph onto itself maps
    // the edge set onto itself, hence is an automorphism.
    return static_cast<long long>(count_injective_homs(g, g));
}

} // namespace turan
