#pragma once

#include <string>

#include "lcom/corpus.hpp"
#include "lcom/member_graph.hpp"
#include "lcom/stats.hpp"

namespace lcom {

// Four decimals, never "-0.0000".
std::string format_number(double value);

/// Per-type table. Columns: repo, qualified_name, kind, n_methods,
/// n_attributes, lcom1..lcom5, yalcom; NotComputable is written as -1.
std::string metrics_csv(const CorpusRun& run);
std::string metrics_json(const CorpusRun& run);

std::string distances_csv(const DistanceReport& report);
std::string distances_json(const DistanceReport& report);

/// Graphviz rendering of a member graph: methods as boxes, attributes as
/// rounded boxes, invocations dashed. Node order follows vertex order.
std::string member_graph_dot(const MemberGraph& graph, std::string_view type_name);

}  // namespace lcom
