#pragma once

#include <iosfwd>
#include <string>

#include "onepl/planar_graph.h"

namespace onepl {

/// Parses the `.1pl` text format.  Throws InvalidInputError with a line
/// number on syntax or semantic problems.
OnePlaneEmbedding parse_1pl(std::istream& in);
OnePlaneEmbedding parse_1pl_string(const std::string& text);
OnePlaneEmbedding parse_1pl_file(const std::string& path);

/// Canonical serialization: header, edges by id, rotations by vertex,
/// crossings in stored order.  parse(serialize(e)) == e.
std::string serialize_1pl(const OnePlaneEmbedding& e, const std::string& comment = "");

/// Planarized `.pg` output: same grammar plus vertex kind tags
/// (`v <id> G|D|F`) and an edge kind column (P|R).
std::string serialize_pg(const PlanarGraph& p);

} // namespace onepl
