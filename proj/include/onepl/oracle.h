#pragma once

#include <optional>
#include <vector>

#include "onepl/simple_graph.h"

namespace onepl {

/// Result of a connectivity computation: kappa plus either a witness
/// separating set or the marker that no separating set exists (complete
/// underlying simple graph; kappa = n-1 by convention).
struct KappaResult {
    int kappa = 0;
    bool complete = false;
    std::vector<VertexId> separator;   // empty iff complete
};

/// Exact vertex connectivity by minimum s-t vertex cuts (unit-capacity
/// flows on the vertex-split graph) over all non-adjacent pairs reachable
/// from a minimum-degree closed neighbourhood.  Throws InvalidInputError
/// on disconnected input.
KappaResult brute_kappa(const SimpleGraph& g);

bool verify_separator(const SimpleGraph& g, const std::vector<VertexId>& s);

/// Greedy minimal separating subset of s, removing candidates in ascending
/// id order.  Throws InvalidInputError if s does not separate g.
std::vector<VertexId> minimalize_separator(const SimpleGraph& g, std::vector<VertexId> s);

} // namespace onepl
