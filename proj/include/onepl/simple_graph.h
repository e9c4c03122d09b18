#pragma once

#include <vector>

#include "onepl/embedding.h"

namespace onepl {

/// Underlying simple graph (parallel edges collapsed, no loops) used by the
/// oracles and the separator checks.
struct SimpleGraph {
    int n = 0;
    std::vector<std::vector<VertexId>> adj;   // sorted, deduplicated

    bool has_edge(VertexId u, VertexId v) const;
    int num_edges() const;
    bool is_complete() const;
};

SimpleGraph simple_graph_of(const OnePlaneEmbedding& e);

bool is_connected(const SimpleGraph& g);

/// Connected components of g with the vertices in `removed` deleted.
/// Returns component index per vertex (-1 for removed) and the count.
std::pair<std::vector<int>, int> components_without(const SimpleGraph& g,
                                                    const std::vector<bool>& removed);

} // namespace onepl
