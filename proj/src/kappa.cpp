#include "onepl/kappa.h"

#include <algorithm>

#include "onepl/errors.h"

namespace onepl {

KappaResult kappa(const OnePlaneEmbedding& e, const KappaOptions& opts, KappaRunStats* stats) {
    ValidationReport rep = validate(e);
    if (!rep.ok()) throw InvalidInputError("invalid embedding: " + rep.joined());
    for (int c = 0; c < e.num_crossings(); ++c)
        if (classify_crossing(e, c).cls == CrossingClass::XCross)
            throw XCrossingError("crossing " + std::to_string(c) + " is an x-crossing");

    SimpleGraph g = simple_graph_of(e);
    if (g.is_complete()) {
        KappaResult res;
        res.kappa = g.n - 1;
        res.complete = true;
        return res;
    }

    OnePlaneEmbedding ek = add_kite_edges(e);
    PlanarGraph lambda = radial_planarization(ek);
    LambdaLayers ctx = build_lambda_layers(lambda, ek);

    KappaRunStats local_stats;
    KappaRunStats& st = stats ? *stats : local_stats;

    for (int k = 1; k <= 7; ++k) {
        const int w = 4 * k + 2;
        const int last = std::max(0, ctx.bl.depth - w + 2);
        for (int i = 0; i <= last; ++i) {
            WindowGraph win = assemble_window(ctx, i, w);
            WindowPlus wp = augment_window(ctx, std::move(win));
            ++st.windows;

            // A valid assignment needs k G-vertices in X plus one in each
            // of A and B.
            int allowed_g = 0;
            for (int v = 0; v < wp.num_vertices(); ++v)
                if (wp.is_g[v] && wp.x_allowed[v]) ++allowed_g;
            if (allowed_g < k || wp.g_vertex_count() < k + 2) continue;
            if (window_quick_reject(wp, k)) continue;

            TreeDecomposition td = tree_decompose(wp, ctx);
            TreeDecomposition tdp = augment_decomposition(td, wp);
            st.max_width = std::max(st.max_width, td.width());
            st.max_width_plus = std::max(st.max_width_plus, tdp.width());
            if (tdp.width() + 1 > opts.bag_ceiling)
                throw WidthBlowupError("width blowup: window " + std::to_string(i) + " at k=" +
                                       std::to_string(k) + " needs bags of " +
                                       std::to_string(tdp.width() + 1) + " > ceiling " +
                                       std::to_string(opts.bag_ceiling));

            NiceTreeDecomposition nice = make_nice(tdp);
            ++st.dp_runs;
            std::optional<CoSepAssignment> found = find_cosep(wp, nice, k);
            if (!found) continue;

            KappaResult res;
            res.kappa = k;
            for (int v = 0; v < wp.num_vertices(); ++v)
                if (found->labels[v] == Label::X && wp.is_g[v])
                    res.separator.push_back(lambda.vertices[wp.verts[v]].ref);
            std::sort(res.separator.begin(), res.separator.end());
            if (static_cast<int>(res.separator.size()) != k ||
                !verify_separator(g, res.separator))
                throw InternalInvariantError("found assignment is not a verified separator");
            return res;
        }
    }
    throw InternalInvariantError(
        "no separating set of size <= 7 found for a non-complete 1-plane input");
}

} // namespace onepl
