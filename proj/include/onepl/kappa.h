#pragma once

#include "onepl/cosep.h"
#include "onepl/oracle.h"

namespace onepl {

struct KappaOptions {
    int bag_ceiling = 22;   // abort threshold for T^+ bag sizes
};

struct KappaRunStats {
    int max_width = -1;        // largest T bag size - 1 over all windows
    int max_width_plus = -1;   // largest T^+ bag size - 1
    long long windows = 0;     // windows assembled
    long long dp_runs = 0;     // windows that reached the DP
};

/// Vertex connectivity of a valid, connected 1-plane embedding without
/// x-crossings: kite pre-processing, radial planarization, BFS layering,
/// then for k = 1..7 (w = 4k+2) a co-separating-triple search over every
/// window.  The first hit yields kappa = k and the verified separator
/// X cap V(G).  Complete underlying graphs short-circuit to kappa = n-1.
KappaResult kappa(const OnePlaneEmbedding& e, const KappaOptions& opts = {},
                  KappaRunStats* stats = nullptr);

} // namespace onepl
