#pragma once

#include "turanlab/graph.hpp"
#include "turanlab/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace turan {

// Count matrix of a pattern h and a list of gadgets over all type graphs on
// m = |V(h)| vertices.  Columns are the types in stream order; rows are the
// padded gadgets, then h itself.  Gadgets are padded to m with isolated
// vertices.
struct TypeTable {
    SmallGraph h;
    std::optional<int> k;
    int m = 0;
    std::vector<SmallGraph> gadgets;
    std::vector<SmallGraph> types;
    std::vector<std::vector<Count>> gadget_counts;
    std::vector<Count> h_counts;
};

// Columns default to enumerate_types(m, k, h): every column then holds at
// least one copy of h.  extra_types admits hand-picked additional columns
// (same size, K_k-free when k is given); those may have h_count zero.
// Gadgets larger than |V(h)| are rejected.
TypeTable build_type_table(const SmallGraph& h, std::optional<int> k,
                           const std::vector<SmallGraph>& gadgets,
                           const std::vector<SmallGraph>& extra_types = {});

// First cell is "pattern"; other header cells are the graph6 codes of the
// type columns.  Every later row starts with the graph6 code of its graph.
std::string render_table_csv(const TypeTable& table);

// Counts are decimal strings (they outgrow 64-bit integers quickly).
std::string render_table_json(const TypeTable& table);
TypeTable parse_table_json(const std::string& text);

} // namespace turan
