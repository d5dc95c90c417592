#include "turanlab/counting.hpp"

#include "turanlab/error.hpp"

#include <algorithm>
#include <vector>

namespace turan {

namespace {

// Backtracking embedder.  Vertices of h are placed in a connectivity-first
// order; each level intersects candidate masks of the already-placed
// neighbors (and, for induced counting, complements of non-neighbors).
template <bool Induced, class Acc> struct Embedder {
    const SmallGraph& g;
    int hn;
    std::vector<std::vector<int>> nbr_before, nonnbr_before;
    std::vector<int> image;

    Embedder(const SmallGraph& h, const SmallGraph& host) : g(host), hn(h.n), image(h.n) {
        std::vector<int> order;
        std::uint64_t placed = 0;
        while (static_cast<int>(order.size()) < h.n) {
            int pick = -1, pick_anchored = -1, pick_deg = -1;
            for (int v = 0; v < h.n; ++v) {
                if (placed >> v & 1) continue;
                int anchored = std::popcount(h.adj[v] & placed);
                if (anchored > pick_anchored ||
                    (anchored == pick_anchored && h.degree(v) > pick_deg)) {
                    pick = v;
                    pick_anchored = anchored;
                    pick_deg = h.degree(v);
                }
            }
            order.push_back(pick);
            placed |= 1ull << pick;
        }
        nbr_before.resize(h.n);
        nonnbr_before.resize(h.n);
        for (int p = 0; p < h.n; ++p)
            for (int q = 0; q < p; ++q) {
                if (h.has_edge(order[p], order[q]))
                    nbr_before[p].push_back(q);
                else
                    nonnbr_before[p].push_back(q);
            }
    }

    Acc run() { return descend(0, 0); }

    Acc descend(int pos, std::uint64_t used) {
        if (pos == hn) return 1;
        std::uint64_t cand = g.full_mask() & ~used;
        for (int q : nbr_before[pos]) cand &= g.adj[image[q]];
        if constexpr (Induced)
            for (int q : nonnbr_before[pos]) cand &= ~g.adj[image[q]];
        Acc total = 0;
        while (cand) {
            int w = std::countr_zero(cand);
            cand &= cand - 1;
            image[pos] = w;
            total += descend(pos + 1, used | 1ull << w);
        }
        return total;
    }
};

template <bool Induced> Count count_embeddings(const SmallGraph& h, const SmallGraph& g) {
    if (h.n > g.n) return 0;
    if (h.n == 0) return 1;
    // The total is bounded by the number of injective vertex maps; stay on
    // native integer arithmetic whenever that bound fits.
    if (falling_factorial(g.n, h.n) < Count(1) << 63)
        return Count(Embedder<Induced, std::uint64_t>(h, g).run());
    return Embedder<Induced, Count>(h, g).run();
}

std::vector<std::uint64_t> submasks_of_size(std::uint64_t pool, int k) {
    std::vector<int> bits;
    for (std::uint64_t m = pool; m; m &= m - 1) bits.push_back(std::countr_zero(m));
    std::vector<std::uint64_t> out;
    int n = static_cast<int>(bits.size());
    if (k < 0 || k > n) return out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::uint64_t mask = 0;
        for (int i : idx) mask |= 1ull << bits[i];
        out.push_back(mask);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

// Injective maps of the host into g[s1 | s2] sending left onto s1, right onto
// s2, and every host edge to an edge of g.  Within-side edges hold for free
// because all four sides are cliques; only cross edges are checked.
std::uint64_t count_side_respecting_maps(const SplitPattern& split, std::uint64_t s1,
                                         std::uint64_t s2, const SmallGraph& g) {
    auto unpack = [](std::uint64_t mask) {
        std::vector<int> out;
        for (std::uint64_t m = mask; m; m &= m - 1) out.push_back(std::countr_zero(m));
        return out;
    };
    std::vector<int> lver = unpack(split.left), rver = unpack(split.right);
    std::vector<int> limg = unpack(s1), rimg = unpack(s2);
    std::vector<std::pair<int, int>> cross;
    for (std::size_t i = 0; i < lver.size(); ++i)
        for (std::size_t j = 0; j < rver.size(); ++j)
            if (split.host.has_edge(lver[i], rver[j])) cross.emplace_back(i, j);
    std::uint64_t total = 0;
    std::sort(limg.begin(), limg.end());
    std::sort(rimg.begin(), rimg.end());
    do {
        auto rcopy = rimg;
        std::sort(rcopy.begin(), rcopy.end());
        do {
            bool ok = true;
            for (auto [i, j] : cross)
                if (!g.has_edge(limg[i], rcopy[j])) {
                    ok = false;
                    break;
                }
            total += ok;
        } while (std::next_permutation(rcopy.begin(), rcopy.end()));
    } while (std::next_permutation(limg.begin(), limg.end()));
    return total;
}

} // namespace

Count count_injective_homs(const SmallGraph& h, const SmallGraph& g) {
    return count_embeddings<false>(h, g);
}

Count count_copies(const SmallGraph& h, const SmallGraph& g) {
    if (h.n == 0) return 1;
    Count homs = count_embeddings<false>(h, g);
    if (homs == 0) return 0;
    return homs / count_embeddings<false>(h, h);
}

Count count_induced_copies(const SmallGraph& h, const SmallGraph& g) {
    if (h.n == 0) return 1;
    Count embeddings = count_embeddings<true>(h, g);
    if (embeddings == 0) return 0;
    return embeddings / count_embeddings<false>(h, h);
}

Count count_disjoint_pairs(const SmallGraph& g1, const SmallGraph& g2, const SmallGraph& g) {
    if (g1.n + g2.n > g.n) return 0;
    Count total = 0;
    for (std::uint64_t s : submasks_of_size(g.full_mask(), g1.n)) {
        Count c1 = count_copies(g1, induced_subgraph(g, s));
        if (c1 == 0) continue;
        total += c1 * count_copies(g2, induced_subgraph(g, g.full_mask() & ~s));
    }
    return total;
}

SplitPattern split_pattern(const SmallGraph& host, std::uint64_t left) {
    std::uint64_t right = host.full_mask() & ~left;
    if (left & ~host.full_mask())
        throw error(errc::invalid_type, "left mask references missing vertices");
    if (!left || !right)
        throw error(errc::invalid_type, "both sides of a split must be nonempty");
    if (!is_complete(induced_subgraph(host, left)))
        throw error(errc::invalid_type, "left side does not induce a clique");
    if (!is_complete(induced_subgraph(host, right)))
        throw error(errc::invalid_type, "right side does not induce a clique");
    return SplitPattern{host, left, right};
}

Count count_split_copies(const SplitPattern& split, std::uint64_t s1, std::uint64_t s2,
                         const SmallGraph& g) {
    if ((s1 | s2) & ~g.full_mask())
        throw error(errc::invalid_pair, "pair references missing vertices");
    if (s1 & s2) throw error(errc::invalid_pair, "pair sets overlap");
    if (std::popcount(s1) != split.left_size() || std::popcount(s2) != split.right_size())
        throw error(errc::invalid_pair, "pair sizes do not match the split");
    if (!is_complete(induced_subgraph(g, s1)) || !is_complete(induced_subgraph(g, s2)))
        throw error(errc::invalid_pair, "pair sets must induce cliques");
    // Each qualifying copy is hit once per side-preserving automorphism of
    // the host, so dividing the raw map count is exact.
    std::uint64_t self = count_side_respecting_maps(split, split.left, split.right, split.host);
    std::uint64_t raw = count_side_respecting_maps(split, s1, s2, g);
    if (raw % self) throw error(errc::internal, "split map count not divisible by its stabilizer");
    return Count(raw / self);
}

Count split_multiplicity(const SplitPattern& split) {
    const SmallGraph& host = split.host;
    Count total = 0;
    for (std::uint64_t a : submasks_of_size(host.full_mask(), split.left_size())) {
        if (!is_complete(induced_subgraph(host, a))) continue;
        for (std::uint64_t b : submasks_of_size(host.full_mask() & ~a, split.right_size())) {
            if (!is_complete(induced_subgraph(host, b))) continue;
            total += count_split_copies(split, a, b, host);
        }
    }
    return total;
}

} // namespace turan
