#include "bhp/rigidity.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <sstream>

#include "bhp/error.hpp"

namespace bhp {

namespace field {

std::uint64_t inv(std::uint64_t a) {
  std::uint64_t result = 1;
  std::uint64_t e = kPrime - 2;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

}  // namespace field

bool RowEchelon::add(std::vector<std::uint64_t> row) {
  for (std::size_t c = 0; c < columns_; ++c) {
    const std::uint64_t lead = row[c];
    if (lead == 0) continue;
    const long pr = pivot_of_[c];
    if (pr < 0) {
      const std::uint64_t s = field::inv(lead);
      std::vector<std::uint64_t> stored(row.begin() + static_cast<long>(c), row.end());
      for (auto& x : stored) x = field::mul(x, s);
      pivot_of_[c] = static_cast<long>(rows_.size());
      rows_.push_back(std::move(stored));
      start_.push_back(c);
      return true;
    }
    const auto& p = rows_[static_cast<std::size_t>(pr)];
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (p[k]) row[c + k] = field::sub(row[c + k], field::mul(lead, p[k]));
    }
  }
  return false;
}

namespace {

std::uint64_t draw(std::mt19937_64& rng) { return 1 + rng() % (field::kPrime - 1); }

bool spans(const std::vector<Point>& pts) {
  if (pts.size() < 2) return true;
  const std::size_t need = std::min<std::size_t>(3, pts.size() - 1);
  RowEchelon ech(3);
  for (std::size_t i = 1; i < pts.size() && ech.rank() < need; ++i) {
    ech.add({field::sub(pts[i][0], pts[0][0]), field::sub(pts[i][1], pts[0][1]),
             field::sub(pts[i][2], pts[0][2])});
  }
  return ech.rank() == need;
}

std::vector<std::uint64_t> edge_row(const Framework& f, const std::map<VertexId, std::size_t>& col,
                                    Edge e) {
  std::vector<std::uint64_t> row(3 * col.size(), 0);
  const Point& pu = f.config.at(e.u);
  const Point& pv = f.config.at(e.v);
  const std::size_t cu = 3 * col.at(e.u);
  const std::size_t cv = 3 * col.at(e.v);
  for (int k = 0; k < 3; ++k) {
    const std::uint64_t d = field::sub(pu[k], pv[k]);
    row[cu + k] = d;
    row[cv + k] = field::sub(0, d);
  }
  return row;
}

std::map<VertexId, std::size_t> columns(const Graph& g) {
  std::map<VertexId, std::size_t> col;
  for (VertexId v : g.vertices()) col.emplace(v, col.size());
  return col;
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

std::size_t rank_bound(const Graph& g, std::size_t edges) {
  const std::size_t v = g.vertex_count();
  if (v < 2) return 0;
  const std::size_t motions = v == 2 ? 5 : 6;
  return std::min(edges, 3 * v - motions);
}

template <class Fn>
std::vector<decltype(std::declval<Fn>()(0))> run_trials(const KernelOptions& opt, Fn fn,
                                                        std::size_t bound) {
  using R = decltype(fn(0));
  std::vector<R> out;
  const int trials = std::max(1, opt.trials);
  if (opt.jobs > 1) {
    std::vector<std::future<R>> fs;
    for (int t = 0; t < trials; ++t) fs.push_back(std::async(std::launch::async, fn, t));
    for (auto& f : fs) out.push_back(f.get());
    return out;
  }
  for (int t = 0; t < trials; ++t) {
    out.push_back(fn(t));
    if (out.back().rank >= bound) break;  // already at the combinatorial maximum
  }
  return out;
}

}  // namespace

Framework random_framework(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Framework f{g, {}};
  while (true) {
    std::vector<Point> pts;
    for (VertexId v : g.vertices()) {
      Point p{draw(rng), draw(rng), draw(rng)};
      f.config[v] = p;
      pts.push_back(p);
    }
    if (spans(pts)) return f;
  }
}

std::vector<std::vector<std::uint64_t>> rigidity_matrix(const Framework& f) {
  const auto col = columns(f.graph);
  std::vector<std::vector<std::uint64_t>> m;
  for (const Edge& e : f.graph.edges()) m.push_back(edge_row(f, col, e));
  return m;
}

RankResult framework_rank(const Framework& f, const std::vector<Edge>& extra,
                          std::size_t* extra_rank) {
  const auto col = columns(f.graph);
  RowEchelon ech(3 * col.size());
  RankResult r;
  for (const Edge& e : f.graph.edges()) {
    if (!ech.add(edge_row(f, col, e))) r.redundant.push_back(e);
  }
  r.rank = ech.rank();
  for (const Edge& e : extra) ech.add(edge_row(f, col, e));
  if (extra_rank) *extra_rank = ech.rank() - r.rank;
  return r;
}

RigidityReport analyze_rigidity(const Graph& g, const KernelOptions& opt) {
  RigidityReport rep;
  rep.vertices = g.vertex_count();
  rep.edges = g.edge_count();
  if (rep.vertices < 3) throw PreconditionError("rigidity analysis needs at least 3 vertices");
  auto results = run_trials(
      opt, [&](int t) { return framework_rank(random_framework(g, trial_seed(opt.seed, t))); },
      rank_bound(g, g.edge_count()));
  std::size_t best = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (results[i].rank > results[best].rank) best = i;
  }
  rep.rank = results[best].rank;
  rep.redundant_edges = results[best].redundant;
  rep.trials = static_cast<int>(results.size());
  rep.agreeing = static_cast<int>(std::count_if(
      results.begin(), results.end(), [&](const RankResult& r) { return r.rank == rep.rank; }));
  rep.degenerate = rep.agreeing != rep.trials;
  const long full = 3 * static_cast<long>(rep.vertices) - 6;
  rep.idof = std::max(full - static_cast<long>(rep.rank), 0L);
  rep.independent = rep.rank == rep.edges;
  rep.isostatic = rep.independent && static_cast<long>(rep.edges) == full;
  return rep;
}

std::size_t generic_rank(const Graph& g, const KernelOptions& opt) {
  if (g.vertex_count() < 2) return 0;
  auto results = run_trials(
      opt, [&](int t) { return framework_rank(random_framework(g, trial_seed(opt.seed, t))); },
      rank_bound(g, g.edge_count()));
  std::size_t best = 0;
  for (const auto& r : results) best = std::max(best, r.rank);
  return best;
}

long idof(const Graph& g, const KernelOptions& opt) {
  if (g.vertex_count() < 3) throw PreconditionError("idof needs at least 3 vertices");
  return 3 * static_cast<long>(g.vertex_count()) - 6 - static_cast<long>(generic_rank(g, opt));
}

bool edge_independent(const Graph& g, Edge e, const KernelOptions& opt) {
  if (g.has_edge(e)) throw PreconditionError("edge " + to_string(e) + " already present");
  Graph h = g;
  h.add_edge(e);
  return generic_rank(h, opt) == generic_rank(g, opt) + 1;
}

long hole_idof(const Graph& g, const std::vector<VertexId>& hole_vertices, const KernelOptions& opt) {
  std::vector<Edge> missing;
  for (std::size_t i = 0; i < hole_vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < hole_vertices.size(); ++j) {
      const Edge e(hole_vertices[i], hole_vertices[j]);
      if (!g.has_edge(e)) missing.push_back(e);
    }
  }
  struct Pair {
    std::size_t rank;
    std::size_t with_hole;
  };
  const std::size_t bound = rank_bound(g, g.edge_count() + missing.size());
  auto results = run_trials(
      opt,
      [&](int t) {
        std::size_t extra = 0;
        auto r = framework_rank(random_framework(g, trial_seed(opt.seed, t)), missing, &extra);
        return Pair{r.rank, r.rank + extra};
      },
      0);
  (void)bound;
  std::size_t base = 0;
  std::size_t with_hole = 0;
  for (const auto& r : results) {
    base = std::max(base, r.rank);
    with_hole = std::max(with_hole, r.with_hole);
  }
  return static_cast<long>(with_hole) - static_cast<long>(base);
}

std::string RigidityReport::to_text() const {
  std::ostringstream out;
  out << "vertices = " << vertices << "\n"
      << "edges = " << edges << "\n"
      << "rank = " << rank << "\n"
      << "idof = " << idof << "\n"
      << "isostatic = " << (isostatic ? "true" : "false") << "\n"
      << "independent = " << (independent ? "true" : "false") << "\n"
      << "redundant_edges =";
  for (const Edge& e : redundant_edges) out << " " << e.u << "-" << e.v;
  out << "\n"
      << "trials = " << trials << "\n"
      << "agreeing = " << agreeing << "\n";
  if (degenerate) out << "warning = trials disagreed; maximum rank reported\n";
  return out.str();
}

std::string RigidityReport::csv_header() {
  return "vertices,edges,rank,idof,isostatic,independent,redundant,trials,agreeing";
}

std::string RigidityReport::csv_row() const {
  std::ostringstream out;
  out << vertices << "," << edges << "," << rank << "," << idof << "," << isostatic << ","
      << independent << "," << redundant_edges.size() << "," << trials << "," << agreeing;
  return out.str();
}

}  // namespace bhp
