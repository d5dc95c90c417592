#include "turanlab/tables.hpp"

#include "turanlab/canonical.hpp"
#include "turanlab/counting.hpp"
#include "turanlab/enumerate.hpp"
#include "turanlab/error.hpp"
#include "turanlab/graph6.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace turan {

TypeTable build_type_table(const SmallGraph& h, std::optional<int> k,
                           const std::vector<SmallGraph>& gadgets,
                           const std::vector<SmallGraph>& extra_types) {
    if (h.n < 1) throw error(errc::invalid_argument, "pattern needs at least one vertex");
    if (k && *k < 3) throw error(errc::invalid_argument, "clique bound needs k >= 3");
    int m = h.n;
    TypeTable table;
    table.h = h;
    table.k = k;
    table.m = m;
    for (const SmallGraph& g : gadgets) {
        if (g.n > m)
            throw error(errc::invalid_argument,
                        "gadget " + to_graph6(g) + " is larger than the pattern");
        table.gadgets.push_back(pad_to(g, m));
    }
    table.types = enumerate_types(m, k, h);
    std::set<CanonicalCode> present;
    for (const SmallGraph& t : table.types) present.insert(canonical_form(t));
    for (const SmallGraph& t : extra_types) {
        if (t.n != m)
            throw error(errc::invalid_type, "extra type " + to_graph6(t) + " has the wrong size");
        if (k && contains_clique(t, *k))
            throw error(errc::invalid_type, "extra type " + to_graph6(t) + " contains a K_k");
        SmallGraph rep = canonical_relabel(t);
        if (present.insert(canonical_form(rep)).second) table.types.push_back(rep);
    }
    std::sort(table.types.begin(), table.types.end(),
              [](const SmallGraph& a, const SmallGraph& b) {
                  if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
                  return canonical_form(a) < canonical_form(b);
              });
    for (const SmallGraph& g : table.gadgets) {
        std::vector<Count> row;
        for (const SmallGraph& t : table.types) row.push_back(count_copies(g, t));
        table.gadget_counts.push_back(std::move(row));
    }
    for (const SmallGraph& t : table.types) table.h_counts.push_back(count_copies(h, t));
    return table;
}

std::string render_table_csv(const TypeTable& table) {
    std::string out = "pattern";
    for (const SmallGraph& t : table.types) out += "," + to_graph6(t);
    out += "\n";
    for (std::size_t i = 0; i < table.gadgets.size(); ++i) {
        out += to_graph6(table.gadgets[i]);
        for (const Count& c : table.gadget_counts[i]) out += "," + c.str();
        out += "\n";
    }
    out += to_graph6(table.h);
    for (const Count& c : table.h_counts) out += "," + c.str();
    out += "\n";
    return out;
}

std::string render_table_json(const TypeTable& table) {
    nlohmann::json j;
    j["h"] = to_graph6(table.h);
    if (table.k)
        j["k"] = *table.k;
    else
        j["k"] = nullptr;
    j["m"] = table.m;
    j["gadgets"] = nlohmann::json::array();
    for (const SmallGraph& g : table.gadgets) j["gadgets"].push_back(to_graph6(g));
    j["types"] = nlohmann::json::array();
    for (const SmallGraph& t : table.types) j["types"].push_back(to_graph6(t));
    j["gadget_counts"] = nlohmann::json::array();
    for (const auto& row : table.gadget_counts) {
        nlohmann::json jr = nlohmann::json::array();
        for (const Count& c : row) jr.push_back(c.str());
        j["gadget_counts"].push_back(jr);
    }
    j["h_counts"] = nlohmann::json::array();
    for (const Count& c : table.h_counts) j["h_counts"].push_back(c.str());
    return j.dump(2) + "\n";
}

TypeTable parse_table_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw error(errc::parse, std::string("bad table JSON: ") + e.what());
    }
    try {
        TypeTable table;
        table.h = from_graph6(j.at("h").get<std::string>());
        if (!j.at("k").is_null()) table.k = j.at("k").get<int>();
        table.m = j.at("m").get<int>();
        for (const auto& s : j.at("gadgets")) table.gadgets.push_back(from_graph6(s.get<std::string>()));
        for (const auto& s : j.at("types")) table.types.push_back(from_graph6(s.get<std::string>()));
        for (const auto& row : j.at("gadget_counts")) {
            std::vector<Count> r;
            for (const auto& s : row) r.push_back(Count(s.get<std::string>()));
            table.gadget_counts.push_back(std::move(r));
        }
        for (const auto& s : j.at("h_counts")) table.h_counts.push_back(Count(s.get<std::string>()));
        if (table.gadget_counts.size() != table.gadgets.size() ||
            table.h_counts.size() != table.types.size())
            throw error(errc::parse, "table JSON dimensions do not line up");
        for (const auto& row : table.gadget_counts)
            if (row.size() != table.types.size())
                throw error(errc::parse, "table JSON dimensions do not line up");
        return table;
    } catch (const nlohmann::json::exception& e) {
        throw error(errc::parse, std::string("bad table JSON: ") + e.what());
    }
}

} // namespace turan
