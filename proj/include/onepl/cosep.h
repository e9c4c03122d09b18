#pragma once

#include <optional>

#include "onepl/layers.h"
#include "onepl/tree_decomposition.h"

namespace onepl {

/// Vertex labels of a co-separating assignment.  X consolidates the
/// k singleton G-vertex sets and the dummy/face rest: only the count of
/// X-labelled G-vertices matters.
enum class Label : unsigned char { A = 0, X = 1, B = 2 };

/// Total labelling of a window's vertices (local ids).
struct CoSepAssignment {
    std::vector<Label> labels;

    std::vector<int> set_of(Label l) const {
        std::vector<int> out;
        for (int v = 0; v < static_cast<int>(labels.size()); ++v)
            if (labels[v] == l) out.push_back(v);
        return out;
    }
};

/// All conditions of a valid co-separating assignment of wp for size k:
/// X only on the allowed layers, exactly k G-vertices in X, a G-vertex in
/// both A and B, and no Lambda_i^+ edge between A and B.
bool is_valid_cosep(const WindowPlus& wp, int k, const std::vector<Label>& labels);

/// Bottom-up DP over the nice decomposition of T^+.  State: bag labelling,
/// count of X-labelled G-vertices seen (capped), and has-G flags for A and
/// B.  Returns an assignment or nullopt iff none exists.
std::optional<CoSepAssignment> find_cosep(const WindowPlus& wp,
                                          const NiceTreeDecomposition& nice, int k);

/// 3^n enumeration oracle; requires wp.num_vertices() <= 16.
std::optional<CoSepAssignment> exhaustive_cosep(const WindowPlus& wp, int k);

/// Sound skip test for k <= 2: true only if no valid assignment can exist
/// (removing a candidate G-subset together with every free vertex on the
/// allowed layers never splits the window into two G-carrying parts).
/// Returns false for k > 2.
bool window_quick_reject(const WindowPlus& wp, int k);

} // namespace onepl
