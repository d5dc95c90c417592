#include "turanlab/certify.hpp"

#include "turanlab/counting.hpp"
#include "turanlab/enumerate.hpp"
#include "turanlab/error.hpp"
#include "turanlab/graph6.hpp"
#include "turanlab/multipartite.hpp"
#include "turanlab/rational_lp.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>

namespace turan {

namespace {

struct ColumnSet {
    std::vector<SmallGraph> types;
    std::vector<bool> multipartite; // equality column?
};

// Inequality columns: every K_k-free type containing h.  Equality columns:
// every complete multipartite type with <= k-1 parts, whether or not it
// contains h.  The two overlap; multipartite wins.
ColumnSet certificate_columns(const SmallGraph& h, int k, int m) {
    ColumnSet out;
    std::map<CanonicalCode, std::size_t> index;
    for (const SmallGraph& t : enumerate_types(m, k, h)) {
        index[canonical_form(t)] = out.types.size();
        out.types.push_back(t);
        out.multipartite.push_back(!multipartite_profile(t).empty());
    }
    for (const SmallGraph& t : multipartite_types(m, k - 1)) {
        CanonicalCode code = canonical_form(t);
        if (index.count(code)) continue;
        index[code] = out.types.size();
        out.types.push_back(t);
        out.multipartite.push_back(true);
    }
    return out;
}

int common_size(const SmallGraph& h, const std::vector<SmallGraph>& gadgets) {
    int m = h.n;
    for (const SmallGraph& g : gadgets) m = std::max(m, g.n);
    return m;
}

std::vector<std::string> check_gadget_provenance(const std::vector<SmallGraph>& gadgets, int k,
                                                 const GoodnessRegistry& registry) {
    std::vector<std::string> tags;
    for (const SmallGraph& g : gadgets) {
        auto entry = registry.is_known_good(g, k);
        if (!entry)
            throw error(errc::provenance, "gadget " + to_graph6(g) + " is not known " +
                                              std::to_string(k) + "-good");
        tags.push_back(provenance_tag(entry->provenance));
    }
    return tags;
}

nlohmann::json column_check_json(const ColumnCheck& c) {
    nlohmann::json j;
    j["type"] = to_graph6(c.type);
    j["pattern_count"] = c.pattern_count.str();
    j["combination"] = rat_to_string(c.combination);
    return j;
}

} // namespace

VerificationReport verify_certificate(const Certificate& cert, const GoodnessRegistry& registry) {
    if (cert.k < 3) throw error(errc::invalid_argument, "certificates need k >= 3");
    if (cert.h.n < 1) throw error(errc::invalid_argument, "pattern needs at least one vertex");
    if (contains_clique(cert.h, cert.k))
        throw error(errc::invalid_type, "pattern contains K_" + std::to_string(cert.k));
    if (cert.gadgets.size() != cert.coefficients.size())
        throw error(errc::invalid_argument, "one coefficient per gadget required");
    for (const Rat& c : cert.coefficients)
        if (c < 0) throw error(errc::invalid_argument, "coefficients must be nonnegative");

    VerificationReport report;
    report.certificate = cert;
    report.m = common_size(cert.h, cert.gadgets);
    for (SmallGraph& g : report.certificate.gadgets) g = pad_to(g, report.m);
    report.certificate.provenance =
        check_gadget_provenance(report.certificate.gadgets, cert.k, registry);

    ColumnSet columns = certificate_columns(cert.h, cert.k, report.m);
    report.verified = true;
    for (std::size_t i = 0; i < columns.types.size(); ++i) {
        const SmallGraph& t = columns.types[i];
        ColumnCheck check;
        check.type = t;
        check.pattern_count = count_copies(cert.h, t);
        check.combination = 0;
        for (std::size_t j = 0; j < report.certificate.gadgets.size(); ++j)
            check.combination += cert.coefficients[j] *
                                 Rat(count_copies(report.certificate.gadgets[j], t));
        bool ok = columns.multipartite[i] ? Rat(check.pattern_count) == check.combination
                                          : Rat(check.pattern_count) <= check.combination;
        if (!ok && report.verified) {
            report.verified = false;
            report.failing_column = t;
            report.failure = std::string(columns.multipartite[i] ? "equality" : "inequality") +
                             " fails on type " + to_graph6(t) + ": pattern count " +
                             check.pattern_count.str() + " vs combination " +
                             rat_to_string(check.combination);
        }
        (columns.multipartite[i] ? report.equality_columns : report.inequality_columns)
            .push_back(std::move(check));
    }
    return report;
}

FindResult find_certificate(const SmallGraph& h, int k, const std::vector<SmallGraph>& pool,
                            const GoodnessRegistry& registry) {
    if (k < 3) throw error(errc::invalid_argument, "certificates need k >= 3");
    if (h.n < 1) throw error(errc::invalid_argument, "pattern needs at least one vertex");
    if (contains_clique(h, k))
        throw error(errc::invalid_type, "pattern contains K_" + std::to_string(k));
    if (pool.empty()) throw error(errc::invalid_argument, "empty gadget pool");
    int m = common_size(h, pool);
    std::vector<SmallGraph> padded;
    for (const SmallGraph& g : pool) padded.push_back(pad_to(g, m));
    std::vector<std::string> tags = check_gadget_provenance(padded, k, registry);

    ColumnSet columns = certificate_columns(h, k, m);
    LpProblem lp;
    lp.nvars = static_cast<int>(padded.size());
    for (std::size_t i = 0; i < columns.types.size(); ++i) {
        std::vector<Rat> row(padded.size());
        for (std::size_t j = 0; j < padded.size(); ++j)
            row[j] = Rat(count_copies(padded[j], columns.types[i]));
        Rat b = Rat(count_copies(h, columns.types[i]));
        if (columns.multipartite[i]) {
            lp.eq_rows.push_back(std::move(row));
            lp.eq_rhs.push_back(b);
        } else {
            // N(h, t) <= sum c_j N_j(t), flipped into <= form.
            for (Rat& v : row) v = -v;
            lp.le_rows.push_back(std::move(row));
            lp.le_rhs.push_back(-b);
        }
    }

    // Smallest coefficient sum first, then each coefficient in turn.
    std::vector<std::vector<Rat>> objectives;
    objectives.emplace_back(padded.size(), 1);
    for (std::size_t j = 0; j < padded.size(); ++j) {
        std::vector<Rat> e(padded.size(), 0);
        e[j] = 1;
        objectives.push_back(std::move(e));
    }
    LpResult res = lp_lexicographic(lp, objectives);

    if (std::holds_alternative<LpInfeasible>(res)) {
        const LpInfeasible& inf = std::get<LpInfeasible>(res);
        InfeasibilityWitness w;
        w.h = h;
        w.k = k;
        w.pool = padded;
        std::size_t eq_at = 0, le_at = 0;
        for (std::size_t i = 0; i < columns.types.size(); ++i) {
            // Solver orientation: eq multipliers pair with "sum = N_h" rows,
            // le multipliers with the flipped rows, combined row >= 0 and
            // combined rhs < 0.  Restated over the original columns: with
            // u = -y_eq on equality columns and u = y_le on inequality
            // columns, each gadget satisfies sum_t u_t N_j(t) <= 0 while
            // sum_t u_t N_h(t) > 0.
            Rat u = columns.multipartite[i] ? -inf.eq_multipliers[eq_at++]
                                            : inf.le_multipliers[le_at++];
            if (u != 0) w.combination.emplace_back(columns.types[i], u);
        }
        return w;
    }

    const LpSolution& sol = std::get<LpSolution>(res);
    Certificate cert;
    cert.h = h;
    cert.k = k;
    cert.gadgets = padded;
    cert.coefficients = sol.x;
    cert.provenance = tags;
    return cert;
}

BoundReport certificate_bound_at(const Certificate& cert, const GoodnessRegistry& registry,
                                 int n) {
    if (n < 1) throw error(errc::invalid_argument, "host size must be positive");
    VerificationReport check = verify_certificate(cert, registry);
    if (!check.verified)
        throw error(errc::unverified, "certificate does not verify: " + check.failure);
    PartVector parts = turan_parts(cert.k - 1, n);
    BoundReport out;
    out.n = n;
    out.pattern_count = count_copies_in_multipartite(cert.h, parts);
    Rat bound = 0;
    for (std::size_t j = 0; j < check.certificate.gadgets.size(); ++j)
        bound += cert.coefficients[j] *
                 Rat(count_copies_in_multipartite(check.certificate.gadgets[j], parts));
    if (denominator(bound) != 1)
        throw error(errc::internal, "certificate bound is not an integer");
    out.bound = numerator(bound);
    if (out.bound != out.pattern_count)
        throw error(errc::internal, "verified certificate disagrees with the closed form");
    return out;
}

std::string certificate_to_json(const Certificate& cert) {
    nlohmann::json j;
    j["h"] = to_graph6(cert.h);
    j["k"] = cert.k;
    j["gadgets"] = nlohmann::json::array();
    for (const SmallGraph& g : cert.gadgets) j["gadgets"].push_back(to_graph6(g));
    j["coefficients"] = nlohmann::json::array();
    for (const Rat& c : cert.coefficients) j["coefficients"].push_back(rat_to_string(c));
    if (!cert.provenance.empty()) j["provenance"] = cert.provenance;
    return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw error(errc::parse, std::string("bad certificate JSON: ") + e.what());
    }
    try {
        Certificate cert;
        cert.h = from_graph6(j.at("h").get<std::string>());
        cert.k = j.at("k").get<int>();
        for (const auto& s : j.at("gadgets"))
            cert.gadgets.push_back(from_graph6(s.get<std::string>()));
        for (const auto& s : j.at("coefficients"))
            cert.coefficients.push_back(rat_from_string(s.get<std::string>()));
        if (j.count("provenance"))
            for (const auto& s : j.at("provenance")) cert.provenance.push_back(s.get<std::string>());
        return cert;
    } catch (const nlohmann::json::exception& e) {
        throw error(errc::parse, std::string("bad certificate JSON: ") + e.what());
    }
}

std::string verification_report_to_json(const VerificationReport& report) {
    nlohmann::json j;
    j["verified"] = report.verified;
    j["h"] = to_graph6(report.certificate.h);
    j["k"] = report.certificate.k;
    j["m"] = report.m;
    j["gadgets"] = nlohmann::json::array();
    for (const SmallGraph& g : report.certificate.gadgets) j["gadgets"].push_back(to_graph6(g));
    j["coefficients"] = nlohmann::json::array();
    for (const Rat& c : report.certificate.coefficients)
        j["coefficients"].push_back(rat_to_string(c));
    j["provenance"] = report.certificate.provenance;
    j["equality_columns"] = nlohmann::json::array();
    for (const ColumnCheck& c : report.equality_columns)
        j["equality_columns"].push_back(column_check_json(c));
    j["inequality_columns"] = nlohmann::json::array();
    for (const ColumnCheck& c : report.inequality_columns)
        j["inequality_columns"].push_back(column_check_json(c));
    if (report.failing_column) {
        j["failing_column"] = to_graph6(*report.failing_column);
        j["failure"] = report.failure;
    }
    return j.dump(2) + "\n";
}

std::string witness_to_json(const InfeasibilityWitness& witness) {
    nlohmann::json j;
    j["feasible"] = false;
    j["h"] = to_graph6(witness.h);
    j["k"] = witness.k;
    j["pool"] = nlohmann::json::array();
    for (const SmallGraph& g : witness.pool) j["pool"].push_back(to_graph6(g));
    j["combination"] = nlohmann::json::array();
    for (const auto& [t, u] : witness.combination) {
        nlohmann::json e;
        e["type"] = to_graph6(t);
        e["multiplier"] = rat_to_string(u);
        j["combination"].push_back(e);
    }
    return j.dump(2) + "\n";
}

} // namespace turan
