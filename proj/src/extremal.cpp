#include "turanlab/extremal.hpp"

#include "turanlab/canonical.hpp"
#include "turanlab/counting.hpp"
#include "turanlab/enumerate.hpp"
#include "turanlab/error.hpp"
#include "turanlab/graph6.hpp"
#include "turanlab/multipartite.hpp"

#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <thread>

namespace turan {

namespace {

int worker_count() {
    if (const char* env = std::getenv("TURANLAB_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return std::min(n, 64);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Deterministic parallel map: slot i of the result is always the count of
// stream element i, whatever the thread count.
std::vector<Count> count_over_stream(const SmallGraph& h, const std::vector<SmallGraph>& stream) {
    std::vector<Count> counts(stream.size());
    int workers = std::min<std::size_t>(worker_count(), stream.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < stream.size(); ++i) counts[i] = count_copies(h, stream[i]);
        return counts;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < stream.size();)
                counts[i] = count_copies(h, stream[i]);
        });
    for (std::thread& t : pool) t.join();
    return counts;
}

} // namespace

ExtremalReport brute_force_ex(const SmallGraph& h, int n, int k, bool maximal_only) {
    if (n < 1 || n > 9) throw error(errc::size_cap, "exhaustive sweeps capped at 9 vertices");
    if (k < 3) throw error(errc::invalid_argument, "clique bound needs k >= 3");
    if (h.n < 1) throw error(errc::invalid_argument, "pattern needs at least one vertex");
    if (contains_clique(h, k))
        throw error(errc::invalid_type, "pattern contains K_" + std::to_string(k));

    ExtremalReport report;
    report.h = h;
    report.n = n;
    report.k = k;
    report.maximal_only = maximal_only;

    const std::vector<SmallGraph> stream =
        maximal_only ? enumerate_kfree_maximal(n, k) : enumerate_kfree(n, k);
    std::vector<Count> counts = count_over_stream(h, stream);

    report.maximum = 0;
    for (const Count& c : counts)
        if (c > report.maximum) report.maximum = c;
    for (std::size_t i = 0; i < stream.size(); ++i)
        if (counts[i] == report.maximum) report.extremal_graphs.push_back(stream[i]);

    SmallGraph turan = canonical_relabel(realize_multipartite(turan_parts(k - 1, n)));
    report.turan_count = count_copies(h, turan);
    report.turan_is_max = report.turan_count == report.maximum;
    report.turan_unique = report.turan_is_max && report.extremal_graphs.size() == 1 &&
                          canonical_form(report.extremal_graphs[0]) == canonical_form(turan);
    return report;
}

ExtremalReport check_turan_good_at(const SmallGraph& h, int n, int k) {
    ExtremalReport report = brute_force_ex(h, n, k, true);
    report.note = "verdict at n = " + std::to_string(n) + " only, not the asymptotic statement";
    return report;
}

std::string extremal_report_to_json(const ExtremalReport& report) {
    nlohmann::json j;
    j["h"] = to_graph6(report.h);
    j["n"] = report.n;
    j["k"] = report.k;
    j["maximal_only"] = report.maximal_only;
    j["maximum"] = report.maximum.str();
    j["turan_count"] = report.turan_count.str();
    j["turan_is_max"] = report.turan_is_max;
    j["turan_unique"] = report.turan_unique;
    j["extremal_graphs"] = nlohmann::json::array();
    for (const SmallGraph& g : report.extremal_graphs)
        j["extremal_graphs"].push_back(to_graph6(g));
    if (!report.note.empty()) j["note"] = report.note;
    return j.dump(2) + "\n";
}

} // namespace turan
