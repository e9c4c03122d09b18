// onepl: vertex connectivity of 1-plane graphs without x-crossings, plus
// the generators, validators and benchmarks around it.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "onepl/errors.h"
#include "onepl/format.h"
#include "onepl/generators.h"
#include "onepl/kappa.h"
#include "onepl/separating_cycle.h"

namespace {

using namespace onepl;

OnePlaneEmbedding load(const std::string& path) {
    if (path == "-") return parse_1pl(std::cin);
    return parse_1pl_file(path);
}

uint64_t seed_override(uint64_t seed) {
    if (const char* env = std::getenv("ONEPL_SEED")) return std::strtoull(env, nullptr, 10);
    return seed;
}

void require_valid(const OnePlaneEmbedding& e) {
    ValidationReport rep = validate(e);
    if (!rep.ok()) throw InvalidInputError("invalid embedding: " + rep.joined());
}

int cmd_validate(const std::string& path) {
    OnePlaneEmbedding e = load(path);
    ValidationReport rep = validate(e);
    if (!rep.ok()) {
        for (const auto& v : rep.violations) std::cout << v << "\n";
        return 2;
    }
    std::cout << "ok\n";
    return 0;
}

int cmd_classify(const std::string& path) {
    OnePlaneEmbedding e = load(path);
    require_valid(e);
    for (int c = 0; c < e.num_crossings(); ++c) {
        CrossingInfo info = classify_crossing(e, c);
        std::cout << "cross " << c << " " << to_string(info.cls);
        if (info.cls == CrossingClass::Arrow)
            std::cout << " tip " << info.tip << " tail " << info.tail << " base "
                      << info.base_vertices[0] << " " << info.base_vertices[1];
        if (info.cls == CrossingClass::AlmostFull)
            std::cout << " wing-tips " << info.wing_tips[0] << " " << info.wing_tips[1]
                      << " spine " << info.spine_vertices[0] << " " << info.spine_vertices[1];
        std::cout << "\n";
    }
    return 0;
}

int cmd_kappa(const std::string& path, bool brute, bool certificate, int bag_ceiling) {
    OnePlaneEmbedding e = load(path);
    KappaResult res;
    if (brute) {
        require_valid(e);
        res = brute_kappa(simple_graph_of(e));
    } else {
        KappaOptions opts;
        opts.bag_ceiling = bag_ceiling;
        res = kappa(e, opts);
    }
    std::cout << "kappa " << res.kappa << "\n";
    if (certificate) {
        if (res.complete) {
            std::cout << "complete\n";
        } else {
            std::cout << "separator";
            for (VertexId v : res.separator) std::cout << " " << v;
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_planarize(const std::string& path, bool radial) {
    OnePlaneEmbedding e = load(path);
    require_valid(e);
    PlanarGraph p = planarize(e);
    if (radial) p = radialize(p);
    std::cout << serialize_pg(p);
    return 0;
}

int cmd_layers(const std::string& path, bool tw, int k) {
    OnePlaneEmbedding e = load(path);
    require_valid(e);
    if (has_x_crossing(e)) throw XCrossingError("input has an x-crossing");
    OnePlaneEmbedding ek = add_kite_edges(e);
    PlanarGraph lambda = radial_planarization(ek);
    LambdaLayers ctx = build_lambda_layers(lambda, ek);
    std::cout << "layer\tsize\twithin\tbetween\tU\tL\n";
    for (int j = 1; j <= ctx.bl.depth; ++j) {
        std::cout << j << "\t" << ctx.bl.layer_vertices[j].size() << "\t"
                  << ctx.bl.within[j].size() << "\t" << ctx.bl.between[j].size() << "\t"
                  << ctx.aux.upper[j].size() << "\t" << ctx.aux.lower[j].size() << "\n";
    }
    if (tw) {
        const int w = 4 * k + 2;
        std::cout << "window\tvertices\tedges\twidth\twidth_plus\tecc\n";
        const int last = std::max(0, ctx.bl.depth - w + 2);
        for (int i = 0; i <= last; ++i) {
            WindowGraph win = assemble_window(ctx, i, w);
            WindowPlus wp = augment_window(ctx, std::move(win));
            TreeDecomposition td = tree_decompose(wp, ctx);
            TreeDecomposition tdp = augment_decomposition(td, wp);
            std::cout << i << "\t" << wp.num_vertices() << "\t" << wp.edges.size() << "\t"
                      << td.width() << "\t" << tdp.width() << "\t" << wp.eccentricity << "\n";
        }
    }
    return 0;
}

int cmd_gen(const std::string& family, const std::vector<int>& params, uint64_t seed,
            const std::string& out) {
    OnePlaneEmbedding e;
    std::string note = family;
    if (family == "cylinder") {
        if (params.size() != 2) throw UsageError("gen cylinder <circumference> <length>");
        e = gen_cylinder(params[0], params[1]);
    } else if (family == "arrow") {
        e = gen_arrow_single();
    } else if (family == "fig5") {
        e = gen_fig5();
    } else if (family == "xcross_rings") {
        if (params.size() != 2) throw UsageError("gen xcross_rings <rings> <width>");
        e = gen_xcross_rings(params[0], params[1]);
    } else if (family == "full_random") {
        if (params.size() != 1) throw UsageError("gen full_random <size>");
        e = gen_full_random(seed_override(seed), params[0]);
    } else if (family == "random_1plane") {
        if (params.size() != 1) throw UsageError("gen random_1plane <size>");
        e = gen_random_1plane(seed_override(seed), params[0]);
    } else {
        throw UsageError("unknown family " + family);
    }
    std::string text = serialize_1pl(e, note);
    if (out.empty() || out == "-") {
        std::cout << text;
    } else {
        std::ofstream os(out);
        os << text;
    }
    return 0;
}

int cmd_cycle(const std::string& path, const std::string& sep_arg) {
    OnePlaneEmbedding e = load(path);
    require_valid(e);
    std::vector<VertexId> s;
    if (!sep_arg.empty()) {
        std::istringstream is(sep_arg);
        std::string tok;
        while (std::getline(is, tok, ',')) s.push_back(std::stoi(tok));
    } else {
        KappaResult res = brute_kappa(simple_graph_of(e));
        if (res.complete) throw InvalidInputError("complete graph has no separating set");
        s = minimalize_separator(simple_graph_of(e), res.separator);
    }
    SeparatingCycle sc = full_cycle(e, s);
    std::cout << "cycle";
    for (VertexId v : sc.cycle) {
        char kind = sc.lambda.vertices[v].kind == VertexKind::Original ? 'G' : 'F';
        std::cout << " " << kind << sc.lambda.vertices[v].ref;
    }
    std::cout << "\n";
    auto dump_side = [&](const char* name, const std::vector<VertexId>& side) {
        std::cout << name;
        for (VertexId v : side)
            if (sc.lambda.vertices[v].kind == VertexKind::Original)
                std::cout << " " << sc.lambda.vertices[v].ref;
        std::cout << "\n";
    };
    dump_side("inside", sc.side_a);
    dump_side("outside", sc.side_b);
    return 0;
}

int cmd_bench(const std::string& family, const std::string& sizes, const std::string& csv) {
    size_t dots = sizes.find("..");
    if (dots == std::string::npos) throw UsageError("bench sizes must be <lo>..<hi>");
    long lo = std::stol(sizes.substr(0, dots));
    long hi = std::stol(sizes.substr(dots + 2));
    if (lo <= 0 || hi < lo) throw UsageError("bad bench size range");

    std::ostringstream os;
    os << "family,n,wall_time_ms,kappa,max_window_width\n";
    for (long n = lo; n <= hi; n *= 2) {
        OnePlaneEmbedding e;
        if (family == "cylinder") {
            e = gen_cylinder(6, std::max(1L, n / 6));
        } else if (family == "full_random") {
            e = gen_full_random(seed_override(12345), static_cast<int>(n));
        } else {
            throw UsageError("unknown bench family " + family);
        }
        KappaRunStats stats;
        auto t0 = std::chrono::steady_clock::now();
        KappaResult res = kappa(e, {}, &stats);
        auto t1 = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        os << family << "," << e.n << "," << ms << "," << res.kappa << ","
           << stats.max_width_plus << "\n";
    }
    if (csv.empty() || csv == "-") {
        std::cout << os.str();
    } else {
        std::ofstream f(csv);
        f << os.str();
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"vertex connectivity of 1-plane graphs without x-crossings"};
    app.require_subcommand(1);

    std::string path = "-", sep_arg, out, csv;
    bool brute = false, certificate = false, radial = false, tw = false;
    int k = 1, bag_ceiling = 22;
    uint64_t seed = 1;
    std::string family, sizes;
    std::vector<int> params;

    auto* v = app.add_subcommand("validate", "check a .1pl embedding");
    v->add_option("file", path);
    auto* cl = app.add_subcommand("classify", "classify all crossings");
    cl->add_option("file", path);
    auto* ka = app.add_subcommand("kappa", "compute vertex connectivity");
    ka->add_option("file", path);
    ka->add_flag("--brute", brute, "use the max-flow oracle instead");
    ka->add_flag("--certificate", certificate, "print the witness");
    ka->add_option("--bag-ceiling", bag_ceiling, "abort threshold for bag sizes");
    auto* pl = app.add_subcommand("planarize", "emit the planarization as .pg");
    pl->add_option("file", path);
    pl->add_flag("--radial", radial, "emit the radial planarization");
    auto* la = app.add_subcommand("layers", "dump BFS layers and aux set sizes");
    la->add_option("file", path);
    la->add_flag("--tw", tw, "also decompose every window");
    la->add_option("--k", k, "separator size defining the window span")->check(CLI::Range(1, 7));
    auto* ge = app.add_subcommand("gen", "generate an instance");
    ge->add_option("family", family)->required();
    ge->add_option("params", params);
    ge->add_option("--seed", seed);
    ge->add_option("--out", out);
    auto* cy = app.add_subcommand("cycle", "separating cycle of a full 1-plane graph");
    cy->add_option("file", path);
    cy->add_option("--sep", sep_arg, "comma-separated separating set");
    auto* be = app.add_subcommand("bench", "doubling benchmark, CSV output");
    be->add_option("family", family)->required();
    be->add_option("sizes", sizes)->required();
    be->add_option("--csv", csv);

    try {
        app.parse(argc, argv);
        if (v->parsed()) return cmd_validate(path);
        if (cl->parsed()) return cmd_classify(path);
        if (ka->parsed()) return cmd_kappa(path, brute, certificate, bag_ceiling);
        if (pl->parsed()) return cmd_planarize(path, radial);
        if (la->parsed()) return cmd_layers(path, tw, k);
        if (ge->parsed()) return cmd_gen(family, params, seed, out);
        if (cy->parsed()) return cmd_cycle(path, sep_arg);
        if (be->parsed()) return cmd_bench(family, sizes, csv);
        return 1;
    } catch (const CLI::ParseError& err) {
        if (err.get_exit_code() == 0) return app.exit(err);   // --help
        std::cerr << "usage error: " << err.what() << "\n";
        return 1;
    } catch (const UsageError& err) {
        std::cerr << "usage error: " << err.what() << "\n";
        return 1;
    } catch (const XCrossingError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 3;
    } catch (const InvalidInputError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const InternalInvariantError& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 4;
    }
}
