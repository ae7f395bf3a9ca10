#include "bhp/counting.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "bhp/error.hpp"

namespace bhp {

BalanceReport balance_check(const Polyhedron& p) {
  BalanceReport r;
  for (const Block& b : p.blocks()) r.block_sum += static_cast<long>(b.boundary.size()) - 3;
  for (const Hole& h : p.holes()) r.hole_sum += static_cast<long>(h.boundary.size()) - 3;
  return r;
}

// ---- pebble game --------------------------------------------------------

namespace {

class PebbleGame {
 public:
  explicit PebbleGame(const Graph& g) {
    for (VertexId v : g.vertices()) pebbles_[v] = 3;
  }

  /// Tries to put `need` pebbles on `t`. On failure fills `region` with the
  /// closed set found by the search.
  bool gather(const std::vector<VertexId>& t, int need, std::set<VertexId>* region) {
    auto on_t = [&] {
      int s = 0;
      for (VertexId v : t) s += pebbles_[v];
      return s;
    };
    while (on_t() < need) {
      bool moved = false;
      std::set<VertexId> reached(t.begin(), t.end());
      for (VertexId x : t) {
        if (pebbles_[x] == 3) continue;
        std::set<VertexId> seen(t.begin(), t.end());
        if (fetch(x, seen)) {
          moved = true;
          break;
        }
        reached.insert(seen.begin(), seen.end());
      }
      if (!moved) {
        if (region) *region = reached;
        return false;
      }
    }
    return true;
  }

  void insert(VertexId u, VertexId v) {
    if (pebbles_[u] == 0) std::swap(u, v);
    --pebbles_[u];
    out_[u].push_back(v);
  }

 private:
  /// Depth-first search for a free pebble outside `seen`; reverses the path.
  bool fetch(VertexId x, std::set<VertexId>& seen) {
    std::map<VertexId, VertexId> parent;
    std::vector<VertexId> stack{x};
    while (!stack.empty()) {
      VertexId a = stack.back();
      stack.pop_back();
      for (VertexId b : out_[a]) {
        if (!seen.insert(b).second) continue;
        parent[b] = a;
        if (pebbles_[b] > 0) {
          --pebbles_[b];
          ++pebbles_[x];
          for (VertexId c = b; c != x;) {
            VertexId pa = parent[c];
            auto& o = out_[pa];
            o.erase(std::find(o.begin(), o.end(), c));
            out_[c].push_back(pa);
            c = pa;
          }
          return true;
        }
        stack.push_back(b);
      }
    }
    return false;
  }

  std::map<VertexId, int> pebbles_;
  std::map<VertexId, std::vector<VertexId>> out_;
};

}  // namespace

SparsityReport sparsity_check(const Graph& g) {
  SparsityReport r;
  PebbleGame game(g);
  const auto verts = g.vertices();
  for (const Edge& e : g.edges()) {
    for (VertexId w : verts) {
      if (w == e.u || w == e.v) continue;
      std::set<VertexId> region;
      if (!game.gather({e.u, e.v, w}, 7, &region)) {
        r.sparse = false;
        r.blocked_edge = e;
        r.violating_subset = region;
        return r;
      }
    }
    game.insert(e.u, e.v);
  }
  return r;
}

bool sparse_by_subsets(const Graph& g) {
  const auto verts = g.vertices();
  const std::size_t n = verts.size();
  if (n > 20) throw PreconditionError("subset enumeration limited to 20 vertices");
  std::map<VertexId, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) idx[verts[i]] = i;
  std::vector<unsigned> masks;
  for (const Edge& e : g.edges()) masks.push_back((1u << idx[e.u]) | (1u << idx[e.v]));
  for (unsigned s = 0; s < (1u << n); ++s) {
    const int k = std::popcount(s);
    if (k < 3) continue;
    int m = 0;
    for (unsigned em : masks) m += (em & s) == em;
    if (m > 3 * k - 6) return false;
  }
  return true;
}

// ---- separation ---------------------------------------------------------

namespace {

std::string list(const std::set<VertexId>& s) {
  std::string out;
  for (VertexId v : s) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

template <class Faces>
void pairwise(const Polyhedron& p, const Faces& faces, const char* what,
              std::vector<std::string>& out) {
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const std::set<VertexId> a(faces[i].boundary.begin(), faces[i].boundary.end());
    for (std::size_t j = i + 1; j < faces.size(); ++j) {
      std::set<VertexId> meet;
      for (VertexId v : faces[j].boundary) {
        if (a.count(v)) meet.insert(v);
      }
      const std::string tag = std::string(what) + " " + std::to_string(i) + "," + std::to_string(j);
      if (meet.size() > 2) {
        out.push_back(tag + " meet in " + std::to_string(meet.size()) + " vertices {" + list(meet) + "}");
      } else if (meet.size() == 2) {
        const Edge e(*meet.begin(), *meet.rbegin());
        if (!p.surface_graph().has_edge(e)) {
          out.push_back(tag + " meet in non-adjacent vertices {" + list(meet) + "}");
        }
      }
    }
  }
}

std::set<Edge> cycle_edges(const Face& f) {
  std::set<Edge> out;
  for (std::size_t i = 0; i < f.size(); ++i) out.insert(Edge(f[i], f[(i + 1) % f.size()]));
  return out;
}

void chords(const Polyhedron& p, const Face& boundary, const std::vector<Edge>& braces,
            const std::string& tag, std::vector<std::string>& out) {
  std::set<Edge> own = cycle_edges(boundary);
  own.insert(braces.begin(), braces.end());
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    for (std::size_t j = i + 1; j < boundary.size(); ++j) {
      const Edge e(boundary[i], boundary[j]);
      if (p.graph().has_edge(e) && !own.count(e)) out.push_back(tag + " chord " + to_string(e));
    }
  }
}

}  // namespace

SeparationReport separation_check(const Polyhedron& p) {
  SeparationReport r;
  pairwise(p, p.blocks(), "blocks", r.block_block);
  pairwise(p, p.holes(), "holes", r.hole_hole);
  for (std::size_t i = 0; i < p.blocks().size(); ++i) {
    chords(p, p.blocks()[i].boundary, p.blocks()[i].braces, "block " + std::to_string(i), r.block_chords);
  }
  for (std::size_t i = 0; i < p.holes().size(); ++i) {
    chords(p, p.holes()[i].boundary, {}, "hole " + std::to_string(i), r.hole_chords);
  }
  return r;
}

std::string SeparationReport::to_text() const {
  std::ostringstream out;
  auto section = [&](const char* name, const std::vector<std::string>& items) {
    out << name << " = " << (items.empty() ? "pass" : "fail") << "\n";
    for (const auto& s : items) out << "  " << s << "\n";
  };
  section("separation.block_block", block_block);
  section("separation.hole_hole", hole_hole);
  section("separation.block_chords", block_chords);
  section("separation.hole_chords", hole_chords);
  return out.str();
}

// ---- Menger -------------------------------------------------------------

namespace {

/// Unit vertex capacities: vertex i is split into in-node 2i and out-node 2i+1.
class VertexFlow {
 public:
  VertexFlow(const Graph& g, const std::set<VertexId>& a, const std::set<VertexId>& b) {
    verts_ = g.vertices();
    for (std::size_t i = 0; i < verts_.size(); ++i) idx_[verts_[i]] = static_cast<int>(i);
    n_ = static_cast<int>(2 * verts_.size() + 2);
    src_ = n_ - 2;
    snk_ = n_ - 1;
    out_.resize(n_);
    const int big = n_;
    for (VertexId v : verts_) add(2 * idx_[v], 2 * idx_[v] + 1, 1);
    for (const Edge& e : g.edges()) {
      add(2 * idx_[e.u] + 1, 2 * idx_[e.v], big);
      add(2 * idx_[e.v] + 1, 2 * idx_[e.u], big);
    }
    for (VertexId v : a) {
      if (idx_.count(v)) add(src_, 2 * idx_[v], big);
    }
    for (VertexId v : b) {
      if (idx_.count(v)) add(2 * idx_[v] + 1, snk_, big);
    }
  }

  int run() {
    int flow = 0;
    while (true) {
      std::vector<int> via(n_, -1);
      const auto seen = reach(&via);
      if (!seen[snk_]) return flow;
      for (int x = snk_; x != src_; x = arcs_[via[x] ^ 1].to) {
        arcs_[via[x]].cap -= 1;
        arcs_[via[x] ^ 1].cap += 1;
      }
      ++flow;
    }
  }

  /// After run(): vertices whose in-node is reachable but out-node is not.
  std::set<VertexId> source_side_cut() const {
    const auto seen = reach(nullptr);
    std::set<VertexId> cut;
    for (VertexId v : verts_) {
      const int i = idx_.at(v);
      if (seen[2 * i] && !seen[2 * i + 1]) cut.insert(v);
    }
    return cut;
  }

 private:
  struct Arc {
    int to;
    int cap;
  };

  void add(int x, int y, int c) {
    out_[x].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({y, c});
    out_[y].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({x, 0});
  }

  std::vector<bool> reach(std::vector<int>* via) const {
    std::vector<bool> seen(n_, false);
    std::deque<int> q{src_};
    seen[src_] = true;
    while (!q.empty()) {
      const int x = q.front();
      q.pop_front();
      for (int id : out_[x]) {
        if (arcs_[id].cap > 0 && !seen[arcs_[id].to]) {
          seen[arcs_[id].to] = true;
          if (via) (*via)[arcs_[id].to] = id;
          q.push_back(arcs_[id].to);
        }
      }
    }
    return seen;
  }

  std::vector<VertexId> verts_;
  std::map<VertexId, int> idx_;
  int n_ = 0;
  int src_ = 0;
  int snk_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
};

}  // namespace

int menger_paths(const Graph& g, const std::set<VertexId>& a, const std::set<VertexId>& b) {
  return VertexFlow(g, a, b).run();
}

std::set<VertexId> min_vertex_cut(const Graph& g, const std::set<VertexId>& a,
                                  const std::set<VertexId>& b) {
  VertexFlow f(g, a, b);
  f.run();
  return f.source_side_cut();
}

int menger_paths(const Polyhedron& p, FaceLabel a, FaceLabel b) {
  if (a == b) throw PreconditionError("menger_paths needs two different faces");
  return menger_paths(p.surface_graph(), p.boundary_vertices(a), p.boundary_vertices(b));
}

// ---- cut cycles ---------------------------------------------------------

namespace {

constexpr int kSkeleton = -1;  // step realised by an edge between different faces

struct CutCycleContext {
  const Polyhedron& p;
  std::map<VertexId, std::set<VertexId>> adj;
  std::map<VertexId, std::set<DiscId>> discs_of;
  std::map<DiscId, std::map<VertexId, int>> position;  // boundary positions per disc
  std::map<FaceLabel, long> weight;

  /// Ways to realise the step u-v: kSkeleton, or a disc id for a chord.
  std::vector<int> realisations(VertexId u, VertexId v, bool edges_only) const {
    if (p.surface_graph().has_edge(Edge(u, v))) {
      const FaceLabel l = p.label_left(u, v);
      const FaceLabel r = p.label_left(v, u);
      if (l == r) return {l.index};
      return {kSkeleton};
    }
    if (edges_only) return {};
    std::vector<int> out;
    const auto& du = discs_of.at(u);
    for (DiscId d : discs_of.at(v)) {
      if (du.count(d)) out.push_back(d);
    }
    return out;
  }
};

struct Chord {
  int a;
  int b;  // boundary positions
};

bool crossing(const Chord& x, const Chord& y, int len) {
  auto inside = [&](int from, int to, int q) {  // strictly inside the forward arc from..to
    const int dq = ((q - from) % len + len) % len;
    const int dt = ((to - from) % len + len) % len;
    return dq > 0 && dq < dt;
  };
  if (x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b) return false;
  return inside(x.a, x.b, y.a) != inside(x.a, x.b, y.b);
}

/// Piece index for each boundary position i (edge b_i -> b_{i+1}).
std::vector<int> trace_pieces(int len, const std::vector<Chord>& chords) {
  constexpr int kNext = -1;
  constexpr int kPrev = -2;
  struct Dart {
    int to;
    int chord;  // chord index, kNext or kPrev
  };
  std::vector<std::vector<Dart>> ring(len);
  for (int i = 0; i < len; ++i) {
    std::vector<std::pair<int, int>> cs;  // (forward offset, chord)
    for (int k = 0; k < static_cast<int>(chords.size()); ++k) {
      int other = -1;
      if (chords[k].a == i) other = chords[k].b;
      if (chords[k].b == i) other = chords[k].a;
      if (other >= 0) cs.push_back({((other - i) % len + len) % len, k});
    }
    std::sort(cs.begin(), cs.end());
    ring[i].push_back({(i + 1) % len, kNext});
    for (auto [_, k] : cs) ring[i].push_back({chords[k].a == i ? chords[k].b : chords[k].a, k});
    ring[i].push_back({(i + len - 1) % len, kPrev});
  }
  std::vector<int> piece(len, -1);
  int next_piece = 0;
  for (int s = 0; s < len; ++s) {
    if (piece[s] >= 0) continue;
    const int id = next_piece++;
    int u = s;
    std::size_t k = 0;
    do {
      const Dart d = ring[u][k];
      if (d.chord == kNext) piece[u] = id;
      const auto& r = ring[d.to];
      std::size_t twin = r.size() - 1;
      if (d.chord >= 0) {
        twin = 0;
        while (r[twin].chord != d.chord) ++twin;
      }
      u = d.to;
      k = twin - 1;
    } while (!(u == s && k == 0));
  }
  return piece;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

/// Evaluates one realised cycle. Returns false when the realisation is not a
/// simple separating curve.
bool evaluate(const CutCycleContext& ctx, const std::vector<VertexId>& cyc,
              const std::vector<int>& steps, long& side_a, long& side_b) {
  const Polyhedron& p = ctx.p;
  const int c = static_cast<int>(cyc.size());
  // Collapse runs through interior vertices into boundary-to-boundary chords.
  std::map<DiscId, std::vector<Chord>> chords;
  std::set<Edge> cut_edges;
  int start = -1;
  for (int i = 0; i < c; ++i) {
    const int prev_step = steps[(i + c - 1) % c];
    const auto& pos = prev_step == kSkeleton ? std::map<VertexId, int>{} : ctx.position.at(prev_step);
    if (prev_step == kSkeleton || pos.count(cyc[i])) {
      start = i;
      break;
    }
  }
  if (start < 0) {  // the whole curve lies inside one disc
    side_a = 0;
    side_b = 0;
    for (const auto& [l, w] : ctx.weight) side_b += w;
    return true;
  }
  int i = start;
  int done = 0;
  while (done < c) {
    const int s = steps[i];
    if (s == kSkeleton) {
      cut_edges.insert(Edge(cyc[i], cyc[(i + 1) % c]));
      i = (i + 1) % c;
      ++done;
      continue;
    }
    const auto& pos = ctx.position.at(s);
    const VertexId from = cyc[i];
    int j = (i + 1) % c;
    ++done;
    while (!pos.count(cyc[j])) {
      if (steps[j] != s) return false;
      j = (j + 1) % c;
      ++done;
    }
    if (cyc[j] != from) chords[s].push_back({pos.at(from), pos.at(cyc[j])});
    i = j;
  }
  // Nodes: blocks, holes, then disc pieces.
  std::map<FaceLabel, int> node;
  std::map<DiscId, std::vector<int>> piece_node;
  int n = 0;
  for (std::size_t b = 0; b < p.blocks().size(); ++b) node[FaceLabel::block(static_cast<int>(b))] = n++;
  for (std::size_t h = 0; h < p.holes().size(); ++h) node[FaceLabel::hole(static_cast<int>(h))] = n++;
  for (const auto& [d, _] : p.discs()) {
    const int len = static_cast<int>(p.disc_boundary(d).size());
    const auto& cs = chords[d];
    for (std::size_t a = 0; a < cs.size(); ++a) {
      for (std::size_t b = a + 1; b < cs.size(); ++b) {
        if (crossing(cs[a], cs[b], len)) return false;
      }
    }
    auto pieces = trace_pieces(len, cs);
    const int base = n;
    int most = 0;
    for (int& x : pieces) {
      most = std::max(most, x + 1);
      x += base;
    }
    n += most;
    piece_node[d] = pieces;
  }
  auto node_left = [&](VertexId u, VertexId v) {
    const FaceLabel l = p.label_left(u, v);
    if (!l.is_disc()) return node.at(l);
    return piece_node.at(l.index)[ctx.position.at(l.index).at(u)];
  };
  UnionFind uf(n);
  for (const Edge& e : p.surface_graph().edges()) {
    const FaceLabel l = p.label_left(e.u, e.v);
    const FaceLabel r = p.label_left(e.v, e.u);
    if (l == r || cut_edges.count(e)) continue;
    uf.unite(node_left(e.u, e.v), node_left(e.v, e.u));
  }
  std::map<int, long> sums;
  for (int x = 0; x < n; ++x) sums[uf.find(x)];
  for (const auto& [l, w] : ctx.weight) sums[uf.find(node.at(l))] += w;
  if (sums.size() > 2) return false;
  side_a = sums.begin()->second;
  side_b = sums.size() == 2 ? sums.rbegin()->second : 0;
  return true;
}

}  // namespace

CutCycleReport cut_cycle_check(const Polyhedron& p, int max_c, bool edges_only) {
  if (max_c > kMaxCutCycle) {
    throw PreconditionError("cut-cycle bound " + std::to_string(max_c) + " exceeds " +
                            std::to_string(kMaxCutCycle) +
                            "; enumeration is exponential, lower --cut-max");
  }
  CutCycleReport report;
  report.max_c = max_c;
  CutCycleContext ctx{p, {}, {}, {}, {}};
  for (std::size_t b = 0; b < p.blocks().size(); ++b) {
    ctx.weight[FaceLabel::block(static_cast<int>(b))] = static_cast<long>(p.blocks()[b].boundary.size()) - 3;
  }
  for (std::size_t h = 0; h < p.holes().size(); ++h) {
    ctx.weight[FaceLabel::hole(static_cast<int>(h))] = 3 - static_cast<long>(p.holes()[h].boundary.size());
  }
  for (VertexId v : p.surface_graph().vertices()) {
    ctx.discs_of[v];
    for (VertexId w : p.surface_graph().neighbors(v)) ctx.adj[v].insert(w);
  }
  for (const auto& [d, _] : p.discs()) {
    const Face& bd = p.disc_boundary(d);
    for (std::size_t i = 0; i < bd.size(); ++i) ctx.position[d][bd[i]] = static_cast<int>(i);
    const auto verts = p.face_vertices(FaceLabel::disc(d));
    for (VertexId v : verts) {
      ctx.discs_of[v].insert(d);
      if (edges_only) continue;
      for (VertexId w : verts) {
        if (w != v) ctx.adj[v].insert(w);
      }
    }
  }

  std::vector<VertexId> path;
  std::set<VertexId> on_path;
  auto check = [&] {
    const int c = static_cast<int>(path.size());
    std::vector<std::vector<int>> options;
    for (int i = 0; i < c; ++i) {
      options.push_back(ctx.realisations(path[i], path[(i + 1) % c], edges_only));
      if (options.back().empty()) return;
    }
    std::vector<int> choice(c, 0);
    while (true) {
      std::vector<int> steps(c);
      for (int i = 0; i < c; ++i) steps[i] = options[i][choice[i]];
      long a = 0;
      long b = 0;
      ++report.cycles_checked;
      if (!evaluate(ctx, path, steps, a, b)) {
        ++report.realisations_skipped;
      } else if (a > c - 3 || b > c - 3) {
        CutCycleViolation v{path, {}, a, b};
        for (int s : steps) v.steps.push_back(s == kSkeleton ? "edge" : "disc " + std::to_string(s));
        report.violations.push_back(std::move(v));
      }
      int k = 0;
      while (k < c && ++choice[k] == static_cast<int>(options[k].size())) choice[k++] = 0;
      if (k == c) break;
    }
  };
  std::function<void()> extend = [&] {
    const VertexId s = path.front();
    const VertexId last = path.back();
    if (path.size() >= 3 && path[1] < last && ctx.adj[last].count(s)) check();
    if (static_cast<int>(path.size()) == max_c) return;
    for (VertexId w : ctx.adj[last]) {
      if (w <= s || on_path.count(w)) continue;
      path.push_back(w);
      on_path.insert(w);
      extend();
      on_path.erase(w);
      path.pop_back();
    }
  };
  for (const auto& [s, _] : ctx.adj) {
    path = {s};
    on_path = {s};
    extend();
  }
  return report;
}

std::string CutCycleViolation::csv_row() const {
  std::ostringstream out;
  out << "cut_cycle," << c() << ",";
  for (std::size_t i = 0; i < cycle.size(); ++i) out << (i ? " " : "") << cycle[i];
  out << ",";
  for (std::size_t i = 0; i < steps.size(); ++i) out << (i ? ";" : "") << steps[i];
  out << "," << side_a << "," << side_b;
  return out.str();
}

std::string CutCycleReport::to_text() const {
  std::ostringstream out;
  out << "cut_cycles.max_c = " << max_c << "\n"
      << "cut_cycles.checked = " << cycles_checked << "\n"
      << "cut_cycles.skipped = " << realisations_skipped << "\n"
      << "cut_cycles.violations = " << violations.size() << "\n";
  for (const auto& v : violations) out << "  " << v.csv_row() << "\n";
  return out.str();
}

}  // namespace bhp
