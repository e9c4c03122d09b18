#pragma once

#include <cstdint>

#include "onepl/embedding.h"

namespace onepl {

/// Plane c-cycle prism stack (cylinder grid), c >= 3, length >= 1.
OnePlaneEmbedding gen_cylinder(int circumference, int length);

/// Four vertices, four edges, one arrow crossing (tip = vertex 0).
OnePlaneEmbedding gen_arrow_single();

/// Hand-built 4-connected 1-plane graph whose crossings are all arrows and
/// that admits a minimum separating set without a radial 8-cycle.
OnePlaneEmbedding gen_fig5();

/// The documented 4-element separating set of gen_fig5().
std::vector<VertexId> fig5_separator();

/// Two interleaved polar-grid copies whose crossings are all x-crossings,
/// joined by two subdivided bridges.  rings >= 2, width >= 3.
OnePlaneEmbedding gen_xcross_rings(int rings, int width);

/// Random full 1-plane instance: random plane base with quad pockets, a
/// crossing planted in each chosen pocket (kite edges are the pocket
/// boundary).
OnePlaneEmbedding gen_full_random(uint64_t seed, int size);

/// Random 1-plane instance mixing the five non-x crossing classes.
OnePlaneEmbedding gen_random_1plane(uint64_t seed, int size);

} // namespace onepl
