#pragma once

#include "turanlab/graph.hpp"

#include <string>

namespace turan {

// Short-form graph6: header byte n + 63, then the upper triangle in
// column-major order, six bits per printable byte.  Limited to 62 vertices.
std::string to_graph6(const SmallGraph& g);

// Parse errors carry the offending byte offset in the message.
SmallGraph from_graph6(const std::string& s);

// Plain edge-list form "n; u-v,u-v,...", e.g. "3; 0-1,1-2".  "n;" alone is
// the edgeless graph.
std::string to_edge_list(const SmallGraph& g);
SmallGraph from_edge_list(const std::string& s);

// Dispatch: strings containing ';' are edge lists ((';') never occurs in
// graph6), everything else is graph6.
SmallGraph parse_graph(const std::string& s);

} // namespace turan
