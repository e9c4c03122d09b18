#pragma once

#include <vector>

#include "onepl/layers.h"

namespace onepl {

struct TreeDecomposition {
    std::vector<std::vector<int>> bags;   // sorted vertex lists (window-local ids)
    std::vector<std::vector<int>> tree;   // adjacency between bag indices
    int width() const;
};

/// The three tree-decomposition properties: every vertex covered, every
/// edge covered, and per-vertex contiguity, plus the tree being a tree.
bool validate_decomposition(const TreeDecomposition& t, int num_vertices,
                            const std::vector<WindowGraph::Edge>& edges);

/// Decomposition of Lambda_i with width at most 3*(w+3)-1: min-degree
/// elimination first, the radius-based construction (triangulation of the
/// contracted plane window + BFS-root-path bags) as the guaranteed
/// fallback.  `ctx` supplies the embedding for the fallback.
TreeDecomposition tree_decompose(const WindowGraph& win, const LambdaLayers& ctx);

/// Min-degree elimination on an arbitrary graph; always valid, width
/// depends on the graph.
TreeDecomposition min_degree_decomposition(int num_vertices,
                                           const std::vector<WindowGraph::Edge>& edges);

/// Radius-based construction with guaranteed width <= 3*(w+3)-1.
TreeDecomposition radius_decomposition(const WindowGraph& win, const LambdaLayers& ctx);

/// T^+ for Lambda_i^+: every bag holding a dummy also receives the dummy's
/// in-window crossing endpoints; width grows to at most 5*(width+1)-1.
TreeDecomposition augment_decomposition(const TreeDecomposition& t, const WindowPlus& wp);

/// Rooted nice form: Leaf / Introduce / Forget / Join, children stored
/// before parents so node order is a valid bottom-up schedule.
struct NiceTreeDecomposition {
    enum class Kind { Leaf, Introduce, Forget, Join };
    struct Node {
        Kind kind;
        int vertex = -1;             // Introduce/Forget subject
        int child0 = -1, child1 = -1;
        std::vector<int> bag;        // sorted
    };
    std::vector<Node> nodes;         // nodes.back() is the root (empty bag)
    int width() const;
};

NiceTreeDecomposition make_nice(const TreeDecomposition& t);

} // namespace onepl
