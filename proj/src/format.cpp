#include "onepl/format.h"

#include <fstream>
#include <sstream>

#include "onepl/errors.h"

namespace onepl {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw InvalidInputError("line " + std::to_string(line) + ": " + msg);
}

struct Tokens {
    std::vector<std::string> parts;
    int line;
};

} // namespace

OnePlaneEmbedding parse_1pl(std::istream& in) {
    std::string raw;
    int lineno = 0;
    std::vector<Tokens> lines;
    while (std::getline(in, raw)) {
        ++lineno;
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Tokens t{{}, lineno};
        std::string tok;
        while (ls >> tok) t.parts.push_back(tok);
        if (!t.parts.empty()) lines.push_back(std::move(t));
    }
    if (lines.empty()) fail(lineno ? lineno : 1, "empty file");

    auto to_int = [&](const std::string& s, int line) {
        try {
            size_t pos;
            int v = std::stoi(s, &pos);
            if (pos != s.size()) fail(line, "bad integer '" + s + "'");
            return v;
        } catch (const InvalidInputError&) {
            throw;
        } catch (...) {
            fail(line, "bad integer '" + s + "'");
        }
    };

    size_t idx = 0;
    const Tokens& head = lines[idx++];
    if (head.parts.size() != 4 || head.parts[0] != "1pl")
        fail(head.line, "expected header '1pl <n> <m> <c>'");
    OnePlaneEmbedding e;
    e.n = to_int(head.parts[1], head.line);
    int m = to_int(head.parts[2], head.line);
    int c = to_int(head.parts[3], head.line);
    if (e.n <= 0 || m < 0 || c < 0) fail(head.line, "bad header counts");
    e.edges.assign(m, {kNone, kNone});
    e.rotations.assign(e.n, {});

    std::vector<bool> edge_seen(m, false);
    for (int i = 0; i < m; ++i) {
        if (idx >= lines.size()) fail(lineno, "missing edge lines");
        const Tokens& t = lines[idx++];
        if (t.parts.size() != 4 || t.parts[0] != "edge")
            fail(t.line, "expected 'edge <id> <u> <v>'");
        int id = to_int(t.parts[1], t.line);
        if (id < 0 || id >= m) fail(t.line, "edge id out of range");
        if (edge_seen[id]) fail(t.line, "duplicate edge id");
        edge_seen[id] = true;
        int u = to_int(t.parts[2], t.line), v = to_int(t.parts[3], t.line);
        if (u < 0 || u >= e.n || v < 0 || v >= e.n) fail(t.line, "edge endpoint out of range");
        e.edges[id] = {u, v};
    }

    std::vector<bool> rot_seen(e.n, false);
    for (int i = 0; i < e.n; ++i) {
        if (idx >= lines.size()) fail(lineno, "missing rotation lines");
        const Tokens& t = lines[idx++];
        if (t.parts.size() < 2 || t.parts[0] != "rot")
            fail(t.line, "expected 'rot <v>: <edge-end list>'");
        std::string vs = t.parts[1];
        if (!vs.empty() && vs.back() == ':') vs.pop_back();
        int v = to_int(vs, t.line);
        if (v < 0 || v >= e.n) fail(t.line, "rotation vertex out of range");
        if (rot_seen[v]) fail(t.line, "duplicate rotation line");
        rot_seen[v] = true;
        size_t first = 2;
        if (t.parts.size() > 2 && t.parts[2] == ":") first = 3;
        for (size_t j = first; j < t.parts.size(); ++j) {
            std::string s = t.parts[j];
            if (!s.empty() && s.back() == '\'') s.pop_back();   // second incidence marker
            int id = to_int(s, t.line);
            if (id < 0 || id >= m) fail(t.line, "rotation names unknown edge");
            e.rotations[v].push_back(id);
        }
    }

    for (int i = 0; i < c; ++i) {
        if (idx >= lines.size()) fail(lineno, "missing crossing lines");
        const Tokens& t = lines[idx++];
        if (t.parts.size() != 8 || t.parts[0] != "cross" || t.parts[3] != ":")
            fail(t.line, "expected 'cross <idA> <idB> : <p0> <p1> <p2> <p3>'");
        CrossingSpec cs;
        cs.edge_a = to_int(t.parts[1], t.line);
        cs.edge_b = to_int(t.parts[2], t.line);
        if (cs.edge_a < 0 || cs.edge_a >= m || cs.edge_b < 0 || cs.edge_b >= m)
            fail(t.line, "crossing edge id out of range");
        for (int j = 0; j < 4; ++j) {
            int p = to_int(t.parts[4 + j], t.line);
            if (p < 0 || p >= e.n) fail(t.line, "crossing endpoint out of range");
            cs.cw_endpoints[j] = p;
        }
        e.crossings.push_back(cs);
    }
    if (idx != lines.size()) fail(lines[idx].line, "trailing content");
    return e;
}

OnePlaneEmbedding parse_1pl_string(const std::string& text) {
    std::istringstream in(text);
    return parse_1pl(in);
}

OnePlaneEmbedding parse_1pl_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open " + path);
    return parse_1pl(in);
}

std::string serialize_1pl(const OnePlaneEmbedding& e, const std::string& comment) {
    std::ostringstream os;
    if (!comment.empty()) {
        std::istringstream cs(comment);
        std::string line;
        while (std::getline(cs, line)) os << "# " << line << "\n";
    }
    os << "1pl " << e.n << " " << e.num_edges() << " " << e.num_crossings() << "\n";
    for (int i = 0; i < e.num_edges(); ++i)
        os << "edge " << i << " " << e.edges[i].first << " " << e.edges[i].second << "\n";
    for (int v = 0; v < e.n; ++v) {
        os << "rot " << v << ":";
        std::vector<bool> seen(e.num_edges(), false);
        for (EdgeId id : e.rotations[v]) {
            os << " " << id;
            if (seen[id]) os << "'";
            seen[id] = true;
        }
        os << "\n";
    }
    for (const CrossingSpec& cs : e.crossings) {
        os << "cross " << cs.edge_a << " " << cs.edge_b << " :";
        for (int j = 0; j < 4; ++j) os << " " << cs.cw_endpoints[j];
        os << "\n";
    }
    return os.str();
}

std::string serialize_pg(const PlanarGraph& p) {
    std::ostringstream os;
    os << "pg " << p.num_vertices() << " " << p.num_edges() << "\n";
    for (int v = 0; v < p.num_vertices(); ++v) {
        char k = p.vertices[v].kind == VertexKind::Original ? 'G'
                 : p.vertices[v].kind == VertexKind::Dummy  ? 'D'
                                                            : 'F';
        os << "v " << v << " " << k << "\n";
    }
    for (int i = 0; i < p.num_edges(); ++i) {
        os << "edge " << i << " " << p.edges[i].u << " " << p.edges[i].v << " "
           << (p.edges[i].kind == EdgeKind::Plain ? 'P' : 'R') << "\n";
    }
    for (int v = 0; v < p.num_vertices(); ++v) {
        os << "rot " << v << ":";
        std::vector<bool> seen(p.num_edges(), false);
        for (EdgeId id : p.rotation_of(v)) {
            os << " " << id;
            if (seen[id]) os << "'";
            seen[id] = true;
        }
        os << "\n";
    }
    return os.str();
}

} // namespace onepl
