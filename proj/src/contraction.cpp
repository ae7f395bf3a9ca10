#include "bhp/contraction.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "bhp/bhp_format.hpp"
#include "bhp/error.hpp"
#include "bhp/predicates.hpp"

namespace bhp {

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::Reroute: return "reroute";
    case MoveKind::ContractInterior: return "contract_interior";
    case MoveKind::ContractSpoke: return "contract_spoke";
    case MoveKind::ContractPath: return "contract_path";
    case MoveKind::ContractLength1: return "contract_length1";
  }
  return "?";
}

std::size_t ContractionCertificate::count(MoveKind k) const {
  return static_cast<std::size_t>(
      std::count_if(moves.begin(), moves.end(), [&](const CertificateMove& m) { return m.kind == k; }));
}

namespace {

std::string vs(VertexId v) { return std::to_string(v); }

std::string hash_of(const Polyhedron& p) { return hex64(fnv1a64(serialize_bhp(p))); }

std::set<VertexId> interior_vertices(const Polyhedron& p) {
  std::set<VertexId> out;
  for (const auto& [d, _] : p.discs()) {
    const auto& in = p.disc_interior(d);
    out.insert(in.begin(), in.end());
  }
  return out;
}

std::size_t path_vertex_count(const Polyhedron& p) {
  std::size_t n = 0;
  for (VertexId v : p.topology().vertices()) {
    const auto labels = p.labels_at(v);
    n += std::count_if(labels.begin(), labels.end(), [](FaceLabel l) { return l.is_disc(); }) >= 2;
  }
  return n;
}

bool any_unclean(const Polyhedron& p) {
  for (const auto& [d, _] : p.discs()) {
    if (!has_clean_boundary(p, d)) return true;
  }
  return false;
}

/// Contracts if the edge is long and the contraction is legal.
std::optional<Polyhedron> try_contract(const Polyhedron& p, VertexId keep, VertexId removed,
                                       ContractionMove& mv) {
  if (!is_long_edge(p, Edge(keep, removed))) return std::nullopt;
  try {
    return contract_edge(p, keep, removed, &mv);
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
}

void record(std::vector<CertificateMove>& moves, MoveKind kind, const ContractionMove& mv) {
  CertificateMove m;
  m.kind = kind;
  m.contraction = mv;
  moves.push_back(std::move(m));
}

Polyhedron rebuild(const FacePartition& part, VertexId next_id, const std::string& what) {
  try {
    return Polyhedron::from_partition(part, next_id);
  } catch (const PreconditionError& e) {
    throw PreconditionError(what + ": " + e.what());
  }
}

Polyhedron move_triangles(const Polyhedron& p, DiscId from, DiscId to,
                          const std::vector<Triangle>& tris) {
  FacePartition part = p.partition();
  auto& src = part.discs.at(from).triangles;
  for (const Triangle& t : tris) {
    auto it = std::find(src.begin(), src.end(), canonical_triangle(t));
    if (it == src.end()) {
      throw PreconditionError("triangle " + vs(t[0]) + " " + vs(t[1]) + " " + vs(t[2]) +
                              " not in disc " + std::to_string(from));
    }
    src.erase(it);
    part.discs[to].triangles.push_back(t);
  }
  if (src.empty()) throw PreconditionError("reroute would empty disc " + std::to_string(from));
  return rebuild(part, p.next_vertex_id(), "reroute");
}

/// Hands the part of disc `from` cut off by `chord` along its shared path
/// with `to` over to `to`.
Polyhedron reroute(const Polyhedron& p, DiscId from, DiscId to, Edge chord, RerouteMove& mv) {
  const Face& bd = p.disc_boundary(from);
  const int len = static_cast<int>(bd.size());
  const int ix = static_cast<int>(std::find(bd.begin(), bd.end(), chord.u) - bd.begin());
  const int iy = static_cast<int>(std::find(bd.begin(), bd.end(), chord.v) - bd.begin());
  if (ix == len || iy == len) throw PreconditionError("chord " + to_string(chord) + " not on disc boundary");
  auto arc_ok = [&](int a, int b) {  // forward arc a..b lies on the path shared with `to`
    for (int i = a; i != b; i = (i + 1) % len) {
      if (p.label_left(bd[(i + 1) % len], bd[i]) != FaceLabel::disc(to)) return false;
    }
    return true;
  };
  const int l1 = ((iy - ix) % len + len) % len;
  const int l2 = len - l1;
  std::optional<int> start;
  if (arc_ok(ix, iy)) start = ix;
  if (arc_ok(iy, ix) && (!start || l2 < l1)) start = iy;
  if (!start) {
    throw PreconditionError("chord " + to_string(chord) + " of disc " + std::to_string(from) +
                            " does not cut off part of its path with disc " + std::to_string(to));
  }
  // Flood the triangles of `from` from the first arc edge without crossing the chord.
  const auto& tris = p.discs().at(from).triangles;
  std::map<std::pair<VertexId, VertexId>, std::size_t> owner;
  for (std::size_t i = 0; i < tris.size(); ++i) {
    for (int k = 0; k < 3; ++k) owner[{tris[i][k], tris[i][(k + 1) % 3]}] = i;
  }
  std::vector<bool> taken(tris.size(), false);
  std::vector<std::size_t> stack{owner.at({bd[*start], bd[(*start + 1) % len]})};
  taken[stack.back()] = true;
  while (!stack.empty()) {
    const Triangle t = tris[stack.back()];
    stack.pop_back();
    for (int k = 0; k < 3; ++k) {
      const VertexId a = t[k];
      const VertexId b = t[(k + 1) % 3];
      if (Edge(a, b) == chord) continue;
      auto it = owner.find({b, a});
      if (it == owner.end() || taken[it->second]) continue;
      taken[it->second] = true;
      stack.push_back(it->second);
    }
  }
  mv = RerouteMove{from, to, chord, {}};
  for (std::size_t i = 0; i < tris.size(); ++i) {
    if (taken[i]) mv.triangles.push_back(tris[i]);
  }
  return move_triangles(p, from, to, mv.triangles);
}

/// Descent to a long edge: one among `cands` or inside the
/// non-facial triangle of a short one. Every candidate touches `region`.
Edge find_long(const Polyhedron& p, std::vector<Edge> cands, std::set<VertexId> region) {
  const Graph& g = p.surface_graph();
  while (true) {
    if (cands.empty()) throw Error("long-edge descent ran out of candidates");
    std::sort(cands.begin(), cands.end());
    for (const Edge& e : cands) {
      if (is_long_edge(p, e)) return e;
    }
    const Edge e = cands.front();
    const VertexId w = short_witnesses(p, e).front();
    const std::set<VertexId> tri{e.u, e.v, w};
    std::set<VertexId> inside;
    for (const auto& comp : components_without(g, tri)) {
      if (std::includes(region.begin(), region.end(), comp.begin(), comp.end())) {
        inside.insert(comp.begin(), comp.end());
      }
    }
    if (inside.empty() || inside.size() >= region.size()) {
      throw Error("long-edge descent did not shrink at " + to_string(e));
    }
    cands.clear();
    for (VertexId z : inside) {
      for (VertexId y : g.neighbors(z)) {
        if (inside.count(y) || tri.count(y)) {
          const Edge f(z, y);
          if (!inside.count(y) || z < y) cands.push_back(f);
        }
      }
    }
    region = std::move(inside);
  }
}

/// Contract until no edge joins two interior vertices.
bool contract_interior_edges(Polyhedron& p, std::vector<CertificateMove>& moves,
                             std::optional<DiscId> only = std::nullopt) {
  bool changed = false;
  while (true) {
    std::optional<DiscId> target;
    std::vector<Edge> cands;
    for (const auto& [d, _] : p.discs()) {
      if (only && d != *only) continue;
      const auto& in = p.disc_interior(d);
      for (VertexId v : in) {
        for (VertexId w : p.surface_graph().neighbors(v)) {
          if (v < w && in.count(w)) cands.emplace_back(v, w);
        }
      }
      if (!cands.empty()) {
        target = d;
        break;
      }
    }
    if (!target) return changed;
    const auto& in = p.disc_interior(*target);
    const Edge e = find_long(p, cands, in);
    VertexId keep = e.u;
    VertexId removed = e.v;
    if (!in.count(removed)) std::swap(keep, removed);
    ContractionMove mv;
    auto q = try_contract(p, keep, removed, mv);
    if (!q) throw Error("long interior edge " + to_string(e) + " could not be contracted");
    record(moves, MoveKind::ContractInterior, mv);
    p = std::move(*q);
    changed = true;
  }
}

/// One spoke per hub in discs that are clean at that moment.
bool contract_spokes(Polyhedron& p, std::vector<CertificateMove>& moves,
                     std::optional<DiscId> only = std::nullopt) {
  bool changed = false;
  for (VertexId h : interior_vertices(p)) {
    const auto d = p.disc_containing_interior(h);
    if (!d || (only && *d != *only) || !has_clean_boundary(p, *d)) continue;
    for (VertexId r : p.surface_graph().neighbors(h)) {
      ContractionMove mv;
      if (auto q = try_contract(p, r, h, mv)) {
        record(moves, MoveKind::ContractSpoke, mv);
        p = std::move(*q);
        changed = true;
        break;
      }
    }
  }
  return changed;
}

/// Shrink every open disc-disc path to length 1.
bool contract_path_edges(Polyhedron& p, std::vector<CertificateMove>& moves) {
  bool changed = false;
  while (true) {
    bool progressed = false;
    for (const BoundaryPath& path : p.disc_disc_paths()) {
      if (path.closed() || path.length() < 2) continue;
      const auto& x = path.vertices;
      std::vector<std::size_t> order;
      for (std::size_t j = 1; j + 1 < x.size(); ++j) order.push_back(j);
      std::sort(order.begin(), order.end(), [&](auto a, auto b) { return x[a] < x[b]; });
      for (std::size_t j : order) {
        for (VertexId keep : {std::min(x[j - 1], x[j + 1]), std::max(x[j - 1], x[j + 1])}) {
          ContractionMove mv;
          if (auto q = try_contract(p, keep, x[j], mv)) {
            record(moves, MoveKind::ContractPath, mv);
            p = std::move(*q);
            progressed = true;
            break;
          }
        }
        if (progressed) break;
      }
      if (progressed) break;
      throw Error("path between " + to_string(path.first) + " and " + to_string(path.second) +
                  " has no contractible edge");
    }
    if (!progressed) return changed;
    changed = true;
  }
}

void require_well_designed(const Polyhedron& p) {
  const auto rep = check_well_designed(p);
  if (!rep.ok()) throw PreconditionError("polyhedron is not well designed\n" + rep.to_text());
}

}  // namespace

Polyhedron clean_boundaries(const Polyhedron& p0, std::vector<CertificateMove>& moves) {
  Polyhedron p = p0;
  while (true) {
    bool found = false;
    for (const auto& [d, _] : p.discs()) {
      const auto chords = unclean_chords(p, d);
      if (chords.empty()) continue;
      const Edge c = chords.front();
      if (!p.surface_graph().has_edge(c)) {
        throw PreconditionError("brace " + to_string(c) + " is a chord of disc " + std::to_string(d));
      }
      const FaceLabel l = p.label_left(c.u, c.v);
      if (!l.is_disc() || l != p.label_left(c.v, c.u)) {
        throw PreconditionError("chord " + to_string(c) + " of disc " + std::to_string(d) +
                                " is not interior to another disc");
      }
      CertificateMove m;
      m.kind = MoveKind::Reroute;
      Polyhedron q = reroute(p, l.index, d, c, m.reroute);
      moves.push_back(std::move(m));
      p = std::move(q);
      found = true;
      break;
    }
    if (!found) return p;
  }
}

ContractionCertificate run_contraction_sequence(const Polyhedron& input) {
  require_well_designed(input);
  ContractionCertificate cert;
  cert.original_hash = hash_of(input);
  Polyhedron p = input;
  while (true) {
    while (any_unclean(p) || !interior_vertices(p).empty()) {
      const auto before = std::pair(p.vertex_count(), path_vertex_count(p));
      p = clean_boundaries(p, cert.moves);
      contract_interior_edges(p, cert.moves);
      contract_spokes(p, cert.moves);
      const auto after = std::pair(p.vertex_count(), path_vertex_count(p));
      if (!(after < before)) {
        throw Error("contraction measure did not decrease (" + std::to_string(after.first) + ", " +
                    std::to_string(after.second) + ")");
      }
    }
    if (!contract_path_edges(p, cert.moves)) break;
  }
  cert.base = p;
  cert.base_hash = hash_of(p);
  return cert;
}

void contract_to_base(ContractionCertificate& cert, std::string_view target) {
  Polyhedron p = cert.base;
  if (!interior_vertices(p).empty()) throw PreconditionError("base still has interior vertices");
  for (const BoundaryPath& path : p.disc_disc_paths()) {
    if (!path.closed() && path.length() > 1) throw PreconditionError("base is not simplified");
  }
  auto collapse = [&](VertexId a, VertexId b) {
    ContractionMove mv;
    auto q = try_contract(p, std::min(a, b), std::max(a, b), mv);
    if (!q) return false;
    record(cert.moves, MoveKind::ContractLength1, mv);
    p = std::move(*q);
    return true;
  };
  auto is_unit_path = [&](VertexId a, VertexId b) {
    for (const BoundaryPath& path : p.disc_disc_paths()) {
      if (path.length() == 1 && Edge(path.vertices[0], path.vertices[1]) == Edge(a, b)) return true;
    }
    return false;
  };
  std::istringstream in{std::string(target)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word != "collapse") throw ParseError(number, "expected 'collapse', got '" + word + "'");
    std::string a;
    if (!(ls >> a)) throw ParseError(number, "'collapse' needs 'all' or two vertices");
    if (a == "all") {
      bool again = true;
      while (again) {
        again = false;
        for (const BoundaryPath& path : p.disc_disc_paths()) {
          if (path.length() == 1 && collapse(path.vertices[0], path.vertices[1])) {
            again = true;
            break;
          }
        }
      }
      continue;
    }
    VertexId u = 0;
    VertexId v = 0;
    try {
      u = std::stoi(a);
    } catch (const std::exception&) {
      throw ParseError(number, "bad vertex '" + a + "'");
    }
    if (!(ls >> v)) throw ParseError(number, "'collapse' needs two vertices");
    if (!is_unit_path(u, v)) {
      throw PreconditionError("{" + vs(u) + "," + vs(v) + "} is not a length-1 path between two discs");
    }
    if (!collapse(u, v)) {
      throw PreconditionError("collapsing {" + vs(u) + "," + vs(v) + "} would break the face partition");
    }
  }
  cert.base = p;
  cert.base_hash = hash_of(p);
}

ContractionCertificate clear_disc(const Polyhedron& input, DiscId d) {
  if (!input.has_disc(d)) throw PreconditionError("no disc " + std::to_string(d));
  if (!has_clean_boundary(input, d)) {
    throw PreconditionError("boundary of disc " + std::to_string(d) + " is not clear");
  }
  ContractionCertificate cert;
  cert.original_hash = hash_of(input);
  Polyhedron p = input;
  while (!p.disc_interior(d).empty()) {
    const std::size_t before = p.vertex_count();
    contract_interior_edges(p, cert.moves, d);
    contract_spokes(p, cert.moves, d);
    if (p.vertex_count() >= before) throw Error("disc clearing stalled");
  }
  cert.base = p;
  cert.base_hash = hash_of(p);
  return cert;
}

Polyhedron undo(const Polyhedron& after, const CertificateMove& m) {
  if (m.kind == MoveKind::Reroute) {
    return move_triangles(after, m.reroute.to, m.reroute.from, m.reroute.triangles);
  }
  return vertex_split(after, invert(m.contraction));
}

Polyhedron replay(const Polyhedron& base, const std::vector<CertificateMove>& moves) {
  Polyhedron p = base;
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) p = undo(p, *it);
  return p;
}

VerifyResult verify_certificate(const Polyhedron& base, const ContractionCertificate& cert,
                                const Polyhedron& original) {
  VerifyResult r;
  auto problem = [&](std::string s) {
    r.ok = false;
    r.problems.push_back(std::move(s));
  };
  if (hash_of(base) != cert.base_hash) problem("base hash " + hash_of(base) + " != " + cert.base_hash);
  if (hash_of(original) != cert.original_hash) {
    problem("original hash " + hash_of(original) + " != " + cert.original_hash);
  }
  Polyhedron cur = base;
  for (std::size_t i = cert.moves.size(); i-- > 0;) {
    const CertificateMove& m = cert.moves[i];
    const std::string tag = "move " + std::to_string(i) + " (" + to_string(m.kind) + ")";
    Polyhedron pre;
    try {
      pre = undo(cur, m);
    } catch (const Error& e) {
      problem(tag + ": replay failed: " + e.what());
      return r;
    }
    if (m.kind == MoveKind::Reroute) {
      const auto chords = unclean_chords(pre, m.reroute.to);
      if (std::find(chords.begin(), chords.end(), m.reroute.chord) == chords.end()) {
        problem(tag + ": " + to_string(m.reroute.chord) + " was not an unclean chord");
      }
    } else {
      const ContractionMove& c = m.contraction;
      const Edge e(c.keep, c.removed);
      std::vector<VertexId> common;
      for (VertexId w : pre.graph().neighbors(c.keep)) {
        if (pre.graph().neighbors(c.removed).count(w)) common.push_back(w);
      }
      if (!pre.surface_graph().has_edge(e) || !is_long_edge(pre, e)) {
        problem(tag + ": " + to_string(e) + " is not long");
      } else if (common != c.witness ||
                 common != std::vector<VertexId>{std::min(c.first, c.second), std::max(c.first, c.second)}) {
        problem(tag + ": witness of " + to_string(e) + " does not revalidate");
      } else {
        ContractionMove again;
        if (contract_edge(pre, c.keep, c.removed, &again) != cur || !(again == c)) {
          problem(tag + ": contraction does not reproduce the recorded move");
        }
      }
    }
    cur = std::move(pre);
  }
  if (serialize_bhp(cur) != serialize_bhp(original)) problem("replay does not reproduce the original");
  return r;
}

bool is_simplified(const Polyhedron& p) {
  if (!interior_vertices(p).empty()) return false;
  for (const BoundaryPath& path : p.disc_disc_paths()) {
    if (!path.closed() && path.length() > 1) return false;
  }
  return true;
}

namespace {

std::string signature(const Polyhedron& p) {
  std::ostringstream out;
  for (const Block& b : p.blocks()) out << "B" << b.boundary.size() << " ";
  for (const Hole& h : p.holes()) out << "H" << h.boundary.size() << " ";
  std::vector<FaceLabel> labels;
  for (std::size_t i = 0; i < p.blocks().size(); ++i) labels.push_back(FaceLabel::block(static_cast<int>(i)));
  for (std::size_t i = 0; i < p.holes().size(); ++i) labels.push_back(FaceLabel::hole(static_cast<int>(i)));
  for (const auto& [d, _] : p.discs()) labels.push_back(FaceLabel::disc(d));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto vi = p.boundary_vertices(labels[i]);
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      const auto vj = p.boundary_vertices(labels[j]);
      const bool touch = std::any_of(vi.begin(), vi.end(), [&](VertexId v) { return vj.count(v) != 0; });
      const std::size_t shared = p.shared_paths(labels[i], labels[j]).size();
      if (touch || shared) {
        out << to_string(labels[i]) << "~" << to_string(labels[j]) << ":" << shared << " ";
      }
    }
  }
  return out.str();
}

}  // namespace

bool topologically_equivalent(const Polyhedron& a, const Polyhedron& b) {
  return signature(a) == signature(b);
}

// ---- certificate text --------------------------------------------------

std::string serialize_certificate(const ContractionCertificate& cert) {
  std::ostringstream out;
  out << "bhp-certificate 1\n"
      << "original " << cert.original_hash << "\n"
      << "base " << cert.base_hash << "\n"
      << "moves " << cert.moves.size() << "\n";
  for (const CertificateMove& m : cert.moves) {
    out << to_string(m.kind);
    if (m.kind == MoveKind::Reroute) {
      const auto& r = m.reroute;
      out << " from " << r.from << " to " << r.to << " chord " << r.chord.u << " " << r.chord.v
          << " triangles";
      for (const Triangle& t : r.triangles) out << " " << t[0] << " " << t[1] << " " << t[2];
    } else {
      const auto& c = m.contraction;
      out << " keep " << c.keep << " removed " << c.removed << " first " << c.first << " second "
          << c.second << " first_disc " << c.first_disc << " second_disc " << c.second_disc
          << " run";
      for (VertexId v : c.run) out << " " << v;
      out << " witness";
      for (VertexId v : c.witness) out << " " << v;
    }
    out << "\n";
  }
  out << "end\n";
  return out.str();
}

namespace {

MoveKind kind_from(const std::string& s, int line) {
  for (MoveKind k : {MoveKind::Reroute, MoveKind::ContractInterior, MoveKind::ContractSpoke,
                     MoveKind::ContractPath, MoveKind::ContractLength1}) {
    if (to_string(k) == s) return k;
  }
  throw ParseError(line, "unknown move '" + s + "'");
}

class Tokens {
 public:
  Tokens(const std::string& text, int line) : line_(line) {
    std::istringstream in(text);
    std::string t;
    while (in >> t) toks_.push_back(t);
  }
  bool done() const { return pos_ == toks_.size(); }
  const std::string& peek() const { return toks_.at(pos_); }
  std::string word() {
    if (done()) throw ParseError(line_, "unexpected end of line");
    return toks_[pos_++];
  }
  void expect(const std::string& w) {
    const std::string got = word();
    if (got != w) throw ParseError(line_, "expected '" + w + "', got '" + got + "'");
  }
  int number() {
    const std::string t = word();
    try {
      std::size_t used = 0;
      int v = std::stoi(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      return v;
    } catch (const std::exception&) {
      throw ParseError(line_, "expected an integer, got '" + t + "'");
    }
  }
  std::vector<int> numbers_until(const std::string& stop) {
    std::vector<int> out;
    while (!done() && peek() != stop) out.push_back(number());
    return out;
  }

 private:
  std::vector<std::string> toks_;
  std::size_t pos_ = 0;
  int line_;
};

}  // namespace

ContractionCertificate parse_certificate(std::string_view text) {
  ContractionCertificate cert;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  int stage = 0;  // 0 header, 1 original, 2 base, 3 count, 4 moves, 5 after end
  std::size_t expected = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    Tokens t(raw, number);
    if (t.done()) continue;
    if (stage == 5) throw ParseError(number, "text after 'end'");
    const std::string head = t.word();
    switch (stage) {
      case 0:
        if (head != "bhp-certificate" || t.number() != 1) throw ParseError(number, "expected 'bhp-certificate 1'");
        break;
      case 1:
        if (head != "original") throw ParseError(number, "expected 'original <hash>'");
        cert.original_hash = t.word();
        break;
      case 2:
        if (head != "base") throw ParseError(number, "expected 'base <hash>'");
        cert.base_hash = t.word();
        break;
      case 3:
        if (head != "moves") throw ParseError(number, "expected 'moves <count>'");
        expected = static_cast<std::size_t>(t.number());
        break;
      default:
        if (head == "end") {
          if (cert.moves.size() != expected) {
            throw ParseError(number, "declared " + std::to_string(expected) + " moves, found " +
                                         std::to_string(cert.moves.size()));
          }
          stage = 5;
          continue;
        } else {
          CertificateMove m;
          m.kind = kind_from(head, number);
          if (m.kind == MoveKind::Reroute) {
            auto& r = m.reroute;
            t.expect("from");
            r.from = t.number();
            t.expect("to");
            r.to = t.number();
            t.expect("chord");
            const int a = t.number();
            const int b = t.number();
            r.chord = Edge(a, b);
            t.expect("triangles");
            const auto v = t.numbers_until("");
            if (v.empty() || v.size() % 3) throw ParseError(number, "triangle list needs triples");
            for (std::size_t i = 0; i < v.size(); i += 3) r.triangles.push_back({v[i], v[i + 1], v[i + 2]});
          } else {
            auto& c = m.contraction;
            t.expect("keep");
            c.keep = t.number();
            t.expect("removed");
            c.removed = t.number();
            t.expect("first");
            c.first = t.number();
            t.expect("second");
            c.second = t.number();
            t.expect("first_disc");
            c.first_disc = t.number();
            t.expect("second_disc");
            c.second_disc = t.number();
            t.expect("run");
            c.run = t.numbers_until("witness");
            t.expect("witness");
            c.witness = t.numbers_until("");
          }
          if (!t.done()) throw ParseError(number, "trailing tokens");
          cert.moves.push_back(std::move(m));
        }
        continue;
    }
    if (!t.done()) throw ParseError(number, "trailing tokens");
    ++stage;
  }
  if (stage != 5) throw ParseError(number, "missing 'end'");
  return cert;
}

}  // namespace bhp
