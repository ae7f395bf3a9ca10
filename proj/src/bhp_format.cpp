#include "bhp/bhp_format.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <vector>

#include "bhp/error.hpp"

namespace bhp {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {std::istream_iterator<std::string>(in), {}}};
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

VertexId to_id(const std::string& tok, int line) {
  VertexId v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size() || v < 0) {
    throw ParseError(line, "expected a vertex id, got '" + tok + "'");
  }
  return v;
}

std::vector<VertexId> ids(const Line& l, std::size_t from) {
  std::vector<VertexId> out;
  for (std::size_t i = from; i < l.tokens.size(); ++i) out.push_back(to_id(l.tokens[i], l.number));
  return out;
}

Edge to_edge(const std::string& tok, int line) {
  auto dash = tok.find('-');
  if (dash == std::string::npos) throw ParseError(line, "expected u-v, got '" + tok + "'");
  VertexId a = to_id(tok.substr(0, dash), line);
  VertexId b = to_id(tok.substr(dash + 1), line);
  if (a == b) throw ParseError(line, "brace " + tok + " is a loop");
  return Edge(a, b);
}

std::string join(const std::vector<VertexId>& v) {
  std::string s;
  for (VertexId x : v) s += " " + std::to_string(x);
  return s;
}

Face reversed(Face f) {
  std::reverse(f.begin(), f.end());
  return canonical_cycle(std::move(f));
}

struct PendingFace {
  int line;
  Face cycle;
};

struct PendingDisc {
  int line;
  DiscId id;
  std::vector<VertexId> boundary;
  std::vector<VertexId> interior;
  bool has_boundary = false;
  std::vector<PendingFace> triangles;
};

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "graph") throw ParseError(1, "missing 'graph 1' header");
  if (lines[0].tokens.size() != 2 || lines[0].tokens[1] != "1") {
    throw ParseError(lines[0].number, "unsupported version");
  }
  std::size_t i = 1;
  if (i >= lines.size() || lines[i].tokens[0] != "vertices") {
    throw ParseError(i < lines.size() ? lines[i].number : lines.back().number, "expected 'vertices'");
  }
  Graph g;
  for (VertexId v : ids(lines[i], 1)) {
    if (g.has_vertex(v)) throw ParseError(lines[i].number, "duplicate vertex " + std::to_string(v));
    g.add_vertex(v);
  }
  ++i;
  if (i >= lines.size() || lines[i].tokens[0] != "edges" || lines[i].tokens.size() != 2) {
    throw ParseError(i < lines.size() ? lines[i].number : lines.back().number, "expected 'edges <count>'");
  }
  const int count = to_id(lines[i].tokens[1], lines[i].number);
  ++i;
  for (int k = 0; k < count; ++k, ++i) {
    if (i >= lines.size()) throw ParseError(lines.back().number, "fewer edges than declared");
    const Line& l = lines[i];
    if (l.tokens.size() != 2) throw ParseError(l.number, "expected 'u v'");
    const Edge e(to_id(l.tokens[0], l.number), to_id(l.tokens[1], l.number));
    if (!g.has_vertex(e.u) || !g.has_vertex(e.v)) throw ParseError(l.number, "edge uses an undeclared vertex");
    try {
      g.add_edge(e);
    } catch (const PreconditionError& err) {
      throw ParseError(l.number, err.what());
    }
  }
  if (i >= lines.size() || lines[i].tokens != std::vector<std::string>{"end"}) {
    throw ParseError(i < lines.size() ? lines[i].number : lines.back().number, "expected 'end'");
  }
  if (i + 1 < lines.size()) throw ParseError(lines[i + 1].number, "text after 'end'");
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "graph 1\nvertices" << join(g.vertices()) << "\nedges " << g.edge_count() << "\n";
  for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
  out << "end\n";
  return out.str();
}

bool looks_like_graph(std::string_view text) {
  const auto lines = tokenize(text);
  return !lines.empty() && lines[0].tokens[0] == "graph";
}

Polyhedron parse_bhp(std::string_view text) {
  const auto lines = tokenize(text);
  std::size_t i = 0;
  auto at_end = [&] { return i >= lines.size(); };
  const int last_line = lines.empty() ? 1 : lines.back().number;

  if (at_end() || lines[0].tokens[0] != "bhp") throw ParseError(1, "missing 'bhp 1' header");
  if (lines[0].tokens.size() != 2 || lines[0].tokens[1] != "1") {
    throw ParseError(lines[0].number, "unsupported version");
  }
  ++i;

  std::vector<VertexId> vertices;
  int vertices_line = 0;
  std::vector<std::pair<Edge, int>> edges;
  int edges_line = 0;
  Rotation rotation;
  int rotation_line = 0;
  std::vector<std::pair<PendingFace, std::vector<Edge>>> blocks;
  std::vector<PendingFace> holes;
  std::vector<PendingDisc> discs;
  bool ended = false;

  auto is_section = [](const std::string& t) {
    return t == "vertices" || t == "edges" || t == "rotation" || t == "block" || t == "hole" ||
           t == "disc" || t == "end";
  };

  while (!at_end()) {
    const Line& l = lines[i];
    const std::string& kw = l.tokens[0];
    if (ended) throw ParseError(l.number, "content after 'end'");
    if (kw == "vertices") {
      if (vertices_line) throw ParseError(l.number, "duplicate 'vertices' section");
      vertices_line = l.number;
      vertices = ids(l, 1);
      ++i;
    } else if (kw == "edges") {
      if (edges_line) throw ParseError(l.number, "duplicate 'edges' section");
      edges_line = l.number;
      if (l.tokens.size() != 2) throw ParseError(l.number, "expected 'edges <count>'");
      const int count = to_id(l.tokens[1], l.number);
      ++i;
      for (int k = 0; k < count; ++k, ++i) {
        if (at_end()) throw ParseError(last_line, "edge list ends early");
        const auto uv = ids(lines[i], 0);
        if (uv.size() != 2) throw ParseError(lines[i].number, "expected 'u v'");
        if (uv[0] == uv[1]) throw ParseError(lines[i].number, "self-loop");
        edges.push_back({Edge(uv[0], uv[1]), lines[i].number});
      }
    } else if (kw == "rotation") {
      if (rotation_line) throw ParseError(l.number, "duplicate 'rotation' section");
      rotation_line = l.number;
      ++i;
      while (!at_end() && !is_section(lines[i].tokens[0])) {
        const Line& r = lines[i];
        if (r.tokens.size() < 3 || r.tokens[1] != ":") {
          throw ParseError(r.number, "expected 'v : w1 w2 ...'");
        }
        VertexId v = to_id(r.tokens[0], r.number);
        if (!rotation.emplace(v, ids(r, 2)).second) {
          throw ParseError(r.number, "second rotation for vertex " + std::to_string(v));
        }
        ++i;
      }
    } else if (kw == "block" || kw == "hole") {
      if (l.tokens.size() != 1) throw ParseError(l.number, "unexpected tokens after '" + kw + "'");
      ++i;
      if (at_end() || lines[i].tokens[0] != "boundary") {
        throw ParseError(at_end() ? last_line : lines[i].number, "expected 'boundary'");
      }
      PendingFace face{lines[i].number, ids(lines[i], 1)};
      ++i;
      if (kw == "hole") {
        holes.push_back(face);
        continue;
      }
      std::vector<Edge> braces;
      if (!at_end() && lines[i].tokens[0] == "braces") {
        for (std::size_t t = 1; t < lines[i].tokens.size(); ++t) {
          braces.push_back(to_edge(lines[i].tokens[t], lines[i].number));
        }
        ++i;
      }
      blocks.push_back({face, braces});
    } else if (kw == "disc") {
      if (l.tokens.size() != 2) throw ParseError(l.number, "expected 'disc <id>'");
      PendingDisc d{l.number, to_id(l.tokens[1], l.number), {}, {}, false, {}};
      ++i;
      while (!at_end() && !is_section(lines[i].tokens[0])) {
        const Line& r = lines[i];
        if (r.tokens[0] == "boundary") {
          d.boundary = ids(r, 1);
          d.has_boundary = true;
        } else if (r.tokens[0] == "interior") {
          d.interior = ids(r, 1);
        } else if (r.tokens[0] == "triangle") {
          auto t = ids(r, 1);
          if (t.size() != 3) throw ParseError(r.number, "triangle needs three vertices");
          d.triangles.push_back({r.number, t});
        } else {
          throw ParseError(r.number, "unknown disc entry '" + r.tokens[0] + "'");
        }
        ++i;
      }
      if (!d.has_boundary) throw ParseError(d.line, "disc without 'boundary'");
      if (d.triangles.empty()) throw ParseError(d.line, "disc without triangles");
      discs.push_back(std::move(d));
    } else if (kw == "end") {
      if (l.tokens.size() != 1) throw ParseError(l.number, "unexpected tokens after 'end'");
      ended = true;
      ++i;
    } else {
      throw ParseError(l.number, "unknown keyword '" + kw + "'");
    }
  }
  if (!ended) throw ParseError(last_line, "missing 'end'");
  if (!vertices_line) throw ParseError(last_line, "missing 'vertices' section");
  if (!rotation_line) throw ParseError(last_line, "missing 'rotation' section");

  // Cross-check vertices and edges against the rotation.
  {
    std::set<VertexId> vs(vertices.begin(), vertices.end());
    if (vs.size() != vertices.size()) throw ParseError(vertices_line, "repeated vertex id");
    std::set<VertexId> rs;
    for (const auto& [v, _] : rotation) rs.insert(v);
    if (vs != rs) throw ParseError(rotation_line, "rotation vertices differ from 'vertices'");
  }
  std::set<Edge> from_rotation;
  for (const auto& [v, ring] : rotation) {
    for (VertexId w : ring) from_rotation.insert(Edge(v, w));
  }
  if (edges_line) {
    std::set<Edge> listed;
    for (const auto& [e, ln] : edges) {
      if (!listed.insert(e).second) throw ParseError(ln, "parallel edge " + to_string(e));
      if (!from_rotation.count(e)) throw ParseError(ln, "edge " + to_string(e) + " missing from rotation");
    }
    if (listed.size() != from_rotation.size()) {
      throw ParseError(edges_line, "edge count differs from the rotation");
    }
  }

  TopologicalGraph topo;
  try {
    topo = TopologicalGraph(rotation);
  } catch (const PreconditionError& e) {
    throw ParseError(rotation_line, e.what());
  }
  std::set<Face> derived(topo.faces().begin(), topo.faces().end());
  auto orient = [&](const PendingFace& f) {
    Face c = canonical_cycle(f.cycle);
    if (derived.count(c)) return c;
    Face r = reversed(f.cycle);
    if (derived.count(r)) return r;
    throw ParseError(f.line, "cycle (" + join(f.cycle).substr(f.cycle.empty() ? 0 : 1) +
                                 ") is not a face of the rotation");
  };

  FacePartition part;
  for (const auto& [face, braces] : blocks) part.blocks.push_back({orient(face), braces});
  for (const auto& face : holes) part.holes.push_back({orient(face)});
  std::map<DiscId, int> disc_lines;
  for (const auto& d : discs) {
    if (!disc_lines.emplace(d.id, d.line).second) {
      throw ParseError(d.line, "duplicate disc id " + std::to_string(d.id));
    }
    TriangulatedDisc td;
    for (const auto& t : d.triangles) {
      Face f = orient(t);
      td.triangles.push_back({f[0], f[1], f[2]});
    }
    part.discs.emplace(d.id, std::move(td));
  }

  Polyhedron p;
  try {
    p = Polyhedron(std::move(topo), std::move(part));
  } catch (const PreconditionError& e) {
    throw ParseError(last_line, e.what());
  }
  for (const auto& d : discs) {
    std::set<VertexId> b(d.boundary.begin(), d.boundary.end());
    std::set<VertexId> in(d.interior.begin(), d.interior.end());
    const Face& actual = p.disc_boundary(d.id);
    if (b != std::set<VertexId>(actual.begin(), actual.end()) || d.boundary.size() != actual.size()) {
      throw ParseError(d.line, "disc " + std::to_string(d.id) + " boundary does not match its triangles");
    }
    if (in != p.disc_interior(d.id)) {
      throw ParseError(d.line, "disc " + std::to_string(d.id) + " interior does not match its triangles");
    }
  }
  return p;
}

std::string serialize_bhp(const Polyhedron& p) {
  std::ostringstream out;
  const auto& topo = p.topology();
  out << "bhp 1\n";
  out << "vertices" << join(topo.vertices()) << "\n";
  const auto edges = topo.edges();
  out << "edges " << edges.size() << "\n";
  for (const Edge& e : edges) out << e.u << " " << e.v << "\n";
  out << "rotation\n";
  for (const auto& [v, ring] : topo.rotation()) out << v << " :" << join(ring) << "\n";
  for (const Block& b : p.blocks()) {
    out << "block\nboundary" << join(b.boundary) << "\n";
    if (!b.braces.empty()) {
      out << "braces";
      for (const Edge& e : b.braces) out << " " << e.u << "-" << e.v;
      out << "\n";
    }
  }
  for (const Hole& h : p.holes()) out << "hole\nboundary" << join(h.boundary) << "\n";
  for (const auto& [id, disc] : p.discs()) {
    out << "disc " << id << "\n";
    out << "boundary" << join(canonical_cycle(p.disc_boundary(id))) << "\n";
    const auto& in = p.disc_interior(id);
    if (!in.empty()) out << "interior" << join({in.begin(), in.end()}) << "\n";
    for (const Triangle& t : disc.triangles) {
      out << "triangle " << t[0] << " " << t[1] << " " << t[2] << "\n";
    }
  }
  out << "end\n";
  return out.str();
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) s[i] = digits[h & 0xf];
  return s;
}

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write " + path);
  out << text;
}

}  // namespace bhp
