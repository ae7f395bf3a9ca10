#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "bhp/polyhedron.hpp"

namespace bhp {

/// Parses a BHP document. Throws ParseError carrying the offending line.
Polyhedron parse_bhp(std::string_view text);

/// Canonical text form; parse_bhp(serialize_bhp(p)) == p and the text is
/// stable under a second round-trip.
std::string serialize_bhp(const Polyhedron& p);

/// Plain bar graph: `graph 1`, `vertices ...`, `edges <count>` with one
/// "u v" line per edge, `end`.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

/// True if the first non-comment token is `graph`.
bool looks_like_graph(std::string_view text);

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t h);

/// Reads a whole file ("-" means stdin).
std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace bhp
