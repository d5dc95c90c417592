#include "turanlab/multipartite.hpp"

#include "turanlab/canonical.hpp"
#include "turanlab/counting.hpp"
#include "turanlab/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace turan {

int PartVector::total() const {
    return std::accumulate(sizes.begin(), sizes.end(), 0);
}

PartVector part_vector(std::vector<int> sizes) {
    for (int s : sizes)
        if (s < 0) throw error(errc::invalid_argument, "negative part size");
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    while (!sizes.empty() && sizes.back() == 0) sizes.pop_back();
    return PartVector{std::move(sizes)};
}

PartVector parse_part_vector(const std::string& s) {
    std::vector<int> sizes;
    std::size_t at = 0;
    while (at <= s.size()) {
        std::size_t comma = s.find(',', at);
        std::string tok = s.substr(at, comma == std::string::npos ? comma : comma - at);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw error(errc::parse, "bad part size '" + tok + "' in '" + s + "'");
        if (tok.size() > 6) throw error(errc::parse, "part size too large in '" + s + "'");
        sizes.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        at = comma + 1;
    }
    return part_vector(std::move(sizes));
}

std::string format_part_vector(const PartVector& p) {
    std::string out;
    for (std::size_t i = 0; i < p.sizes.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(p.sizes[i]);
    }
    return out;
}

PartVector turan_parts(int r, int n) {
    if (r < 1) throw error(errc::invalid_argument, "Turán graph needs at least one part");
    if (n < 0) throw error(errc::invalid_argument, "negative vertex count");
    std::vector<int> sizes(r);
    for (int i = 0; i < r; ++i) sizes[i] = n / r + (i < n % r ? 1 : 0);
    return part_vector(std::move(sizes));
}

SmallGraph realize_multipartite(const PartVector& p) {
    int n = p.total();
    if (n > 64) throw error(errc::size_cap, "realized multipartite graph exceeds 64 vertices");
    SmallGraph g;
    g.n = n;
    g.adj.assign(n, 0);
    int start = 0;
    for (int size : p.sizes) {
        std::uint64_t part = ((size == 64 ? ~0ull : (1ull << size) - 1)) << start;
        for (int v = start; v < start + size; ++v) g.adj[v] = g.full_mask() & ~part;
        start += size;
    }
    return g;
}

std::vector<int> multipartite_profile(const SmallGraph& g) {
    SmallGraph co;
    co.n = g.n;
    co.adj.assign(g.n, 0);
    for (int v = 0; v < g.n; ++v) co.adj[v] = g.full_mask() & ~g.adj[v] & ~(1ull << v);
    std::vector<int> profile;
    for (std::uint64_t comp : component_masks(co)) {
        if (!is_complete(induced_subgraph(co, comp))) return {};
        profile.push_back(std::popcount(comp));
    }
    std::sort(profile.begin(), profile.end(), std::greater<>());
    return profile;
}

namespace {

// Sum over proper part-assignments of the core's vertices, each weighted by
// the product of falling factorials of part sizes.  Vertices are walked in a
// connectivity-first order so the properness prune fires early.
struct AssignmentSum {
    const SmallGraph& core;
    const std::vector<int>& part_sizes;
    std::vector<int> order, used;
    std::vector<int> part_of;
    Count total = 0;

    AssignmentSum(const SmallGraph& c, const std::vector<int>& sizes)
        : core(c), part_sizes(sizes), used(sizes.size(), 0), part_of(c.n, -1) {
        std::uint64_t placed = 0;
        while (static_cast<int>(order.size()) < core.n) {
            int pick = -1, pick_anchored = -1;
            for (int v = 0; v < core.n; ++v) {
                if (placed >> v & 1) continue;
                int anchored = std::popcount(core.adj[v] & placed);
                if (anchored > pick_anchored) {
                    pick = v;
                    pick_anchored = anchored;
                }
            }
            order.push_back(pick);
            placed |= 1ull << pick;
        }
        descend(0, 1);
    }

    void descend(std::size_t pos, const Count& weight) {
        if (pos == order.size()) {
            total += weight;
            return;
        }
        int v = order[pos];
        for (std::size_t part = 0; part < part_sizes.size(); ++part) {
            if (used[part] == part_sizes[part]) continue;
            bool proper = true;
            for (std::uint64_t m = core.adj[v]; m; m &= m - 1)
                if (part_of[std::countr_zero(m)] == static_cast<int>(part)) {
                    proper = false;
                    break;
                }
            if (!proper) continue;
            part_of[v] = static_cast<int>(part);
            ++used[part];
            descend(pos + 1, weight * (part_sizes[part] - used[part] + 1));
            --used[part];
            part_of[v] = -1;
        }
    }
};

} // namespace

Count count_copies_in_multipartite(const SmallGraph& h, const PartVector& p) {
    // Isolated vertices of h are free choices among the leftover host
    // vertices, so only the positive-degree core needs the assignment sum.
    std::uint64_t core_mask = 0;
    for (int v = 0; v < h.n; ++v)
        if (h.degree(v) > 0) core_mask |= 1ull << v;
    SmallGraph core = induced_subgraph(h, core_mask);
    int isolated = h.n - core.n;
    Count free_choices = binomial(p.total() - core.n, isolated);
    if (free_choices == 0) return 0;
    if (core.n == 0) return free_choices;
    AssignmentSum sum(core, p.sizes);
    if (sum.total == 0) return 0;
    Count aut = count_injective_homs(core, core);
    return sum.total / aut * free_choices;
}

Count induced_type_count(const std::vector<int>& t, const PartVector& p) {
    for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i] <= 0 || (i > 0 && t[i] > t[i - 1]))
            throw error(errc::invalid_type, "profile must be non-increasing and positive");
    // remaining = multiset of profile entries still to hand out to parts.
    std::map<int, int, std::greater<int>> remaining;
    for (int a : t) ++remaining[a];
    Count total = 0;
    auto descend = [&](auto&& self, std::size_t part, const Count& weight) -> void {
        std::size_t left = 0;
        for (auto& [value, mult] : remaining) left += mult;
        if (part == p.sizes.size()) {
            if (left == 0) total += weight;
            return;
        }
        if (left > p.sizes.size() - part) return;
        self(self, part + 1, weight);
        for (auto& [value, mult] : remaining) {
            if (mult == 0 || value > p.sizes[part]) continue;
            --mult;
            self(self, part + 1, weight * binomial(p.sizes[part], value));
            ++mult;
        }
    };
    descend(descend, 0, 1);
    return total;
}

std::vector<SmallGraph> multipartite_types(int m, int rmax) {
    if (m < 1 || m > 10) throw error(errc::size_cap, "type vertex count outside [1, 10]");
    if (rmax < 1) throw error(errc::invalid_argument, "need at least one part");
    std::vector<SmallGraph> out;
    std::vector<int> parts;
    auto partitions = [&](auto&& self, int rest, int cap) -> void {
        if (rest == 0) {
            out.push_back(canonical_relabel(realize_multipartite(part_vector(parts))));
            return;
        }
        if (static_cast<int>(parts.size()) == rmax) return;
        for (int next = std::min(rest, cap); next >= 1; --next) {
            parts.push_back(next);
            self(self, rest - next, next);
            parts.pop_back();
        }
    };
    partitions(partitions, m, m);
    std::sort(out.begin(), out.end(), [](const SmallGraph& a, const SmallGraph& b) {
        if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
        return canonical_form(a) < canonical_form(b);
    });
    return out;
}

Count zykov_bound(int n, int r, int k) {
    if (k < 2) throw error(errc::invalid_argument, "clique bound needs k >= 2");
    if (r < 1 || r > k - 1)
        throw error(errc::invalid_argument, "clique size r must satisfy 1 <= r <= k-1");
    if (n < 0) throw error(errc::invalid_argument, "negative vertex count");
    Count ceil_part = (n + k - 2) / (k - 1);
    Count power = 1;
    for (int i = 0; i < r; ++i) power *= ceil_part;
    return binomial(k - 1, r) * power;
}

BalancingStep balancing_compare(const SmallGraph& h, const std::vector<int>& sizes, int i, int j) {
    int r = static_cast<int>(sizes.size());
    if (i < 0 || i >= r || j < 0 || j >= r || i == j)
        throw error(errc::invalid_argument, "part indices out of range");
    if (sizes[j] < sizes[i] + 2)
        throw error(errc::invalid_argument, "balancing needs sizes[j] >= sizes[i] + 2");
    std::vector<int> moved = sizes;
    ++moved[i];
    --moved[j];
    return BalancingStep{count_copies_in_multipartite(h, part_vector(sizes)),
                         count_copies_in_multipartite(h, part_vector(moved))};
}

} // namespace turan
