// One PASS/FAIL line per acceptance criterion, with wall time against budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "bhp/allostery.hpp"
#include "bhp/bhp_format.hpp"
#include "bhp/contraction.hpp"
#include "bhp/counting.hpp"
#include "bhp/generators.hpp"
#include "bhp/rigidity.hpp"
#include "bhp/transform.hpp"
#include "corpus.hpp"
#include "rational_oracle.hpp"

using namespace bhp;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) note << what;
      ok = false;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double budget, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.require(secs < budget, "over time budget");
  if (!out.ok) ++failures;
  std::printf("%s %2d %-28s %7.2fs / %5.0fs%s%s\n", out.ok ? "PASS" : "FAIL", id, name.c_str(), secs, budget,
              out.ok ? "" : "  ", out.note.str().c_str());
  std::fflush(stdout);
}

std::vector<long> idofs(const TransmissionTrace& t) {
  std::vector<long> v;
  for (const auto& s : t.steps) v.push_back(s.idof);
  return v;
}

// Random split of x keeping two neighbours; the rest go either way.
GraphSplit random_split(const Graph& g, std::mt19937_64& rng) {
  const auto verts = g.vertices();
  const VertexId x = verts[rng() % verts.size()];
  std::vector<VertexId> nb(g.neighbors(x).begin(), g.neighbors(x).end());
  std::shuffle(nb.begin(), nb.end(), rng);
  GraphSplit s{x, nb[0], nb[1], {}, g.next_free_id()};
  for (std::size_t i = 2; i < nb.size(); ++i)
    if (rng() % 2) s.moved.insert(nb[i]);
  return s;
}

}  // namespace

int main() {
  criterion(1, "C(4,4,4) fill", 1, [](Outcome& o) {
    const auto c = make_cylinder(4, 4, 4);
    const auto t = run_transmission(c);
    o.require(idofs(t) == std::vector<long>{2, 1, 0}, "idof profile");
    o.require(t.steps[0].target_idof == 2 && t.steps[0].other_idof == 2, "initial hole idof");
    Graph g = c.graph();
    for (const auto& s : t.steps)
      if (s.edge) g.add_edge(*s.edge);
    const auto r = analyze_rigidity(g);
    o.require(r.isostatic && r.rank == 3 * r.vertices - 6 && r.rank == r.edges, "final isostatic");
  });

  criterion(2, "C(4,4,8) H1 blocked", 1, [](Outcome& o) {
    const auto r = analyze_rigidity(block_hole(make_cylinder(4, 4, 8), 0).graph());
    o.require(r.idof == 4, "idof");
    o.require(r.independent, "independent");
  });

  criterion(3, "C(8,4,4) fill", 2, [](Outcome& o) {
    const auto t = run_transmission(make_cylinder(8, 4, 4));
    o.require(t.steps.size() == 11, "step count");
    o.require(t.steps[0].idof == 6, "initial idof");
    for (int i = 0; i <= 4; ++i) o.require(t.steps[i].other_idof == 2, "H2 before 5");
    o.require(t.steps[6].other_idof == 0, "H2 after 6");
    for (int i = 1; i <= 6; ++i) o.require(t.steps[i].independent, "1-6 independent");
    for (int i = 7; i <= 10; ++i) o.require(!t.steps[i].independent, "7-10 redundant");
  });

  criterion(4, "C(8,4,8) fill", 2, [](Outcome& o) {
    const auto c = make_cylinder(8, 4, 8);
    const auto t = run_transmission(c);
    o.require(t.steps[0].idof == 10, "initial idof");
    o.require(t.steps.back().other_idof == 4, "final H2");
    const auto w = waist_decomposition_check(c);
    o.require(w.component_rigid_after == 6, "component rigid after 6");
    o.require(w.side_rigid_after == 6, "side rigid after 6");
  });

  criterion(5, "random spheres", 60, [](Outcome& o) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
      const int n = 4 + static_cast<int>(rng() % 197);
      const auto p = sphere_polyhedron(random_triangulated_sphere(n, rng()));
      o.require(analyze_rigidity(p.graph()).isostatic, "sphere n=" + std::to_string(n));
    }
  });

  criterion(6, "towers", 10, [](Outcome& o) {
    for (int n = 3; n <= 8; ++n) o.require(analyze_rigidity(make_tower(n).graph()).isostatic, "tower " + std::to_string(n));
    const auto r = cut_cycle_check(make_defective_tower(6, 3), 3);
    o.require(!r.violations.empty() && r.violations.front().c() == 3, "defective tower cut cycle");
  });

  criterion(7, "contraction round trip", 60, [](Outcome& o) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 25; ++i) {
      Polyhedron base;
      if (i % 2 == 0) {
        base = make_tower(4 + i / 2 % 5);
      } else {
        const int m = 4 + static_cast<int>(rng() % 4);
        const int n = 4 + static_cast<int>(rng() % 4);
        base = make_cylinder(m, 4, n);
      }
      const int a = 2 + static_cast<int>(rng() % 12);
      const auto e = expand(base, rng(), {a, a, 3 * a});
      const auto cert = run_contraction_sequence(e);
      const std::string tag = " (case " + std::to_string(i) + ")";
      o.require(is_simplified(cert.base), "simplified" + tag);
      o.require(topologically_equivalent(cert.base, base), "equivalent" + tag);
      o.require(serialize_bhp(replay(cert.base, cert.moves)) == serialize_bhp(e), "replay" + tag);
      o.require(verify_certificate(cert.base, cert, e).ok, "verify" + tag);
    }
  });

  criterion(8, "vertex split rank +3", 30, [](Outcome& o) {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 200; ++i) {
      const Graph g = i % 4 == 0 ? make_tower(3 + i % 6).graph()
                                 : random_triangulated_sphere(5 + static_cast<int>(rng() % 40), rng()).graph();
      const auto before = generic_rank(g);
      const auto after = generic_rank(graph_vertex_split(g, random_split(g, rng)));
      o.require(after == before + 3, "split " + std::to_string(i));
    }
  });

  criterion(9, "counting insufficiency", 2, [](Outcome& o) {
    const Graph db = fixtures::double_banana();
    const auto twin = fixtures::twin_block_sphere();
    o.require(balance_check(twin).balanced(), "balance");
    o.require(twin.graph() == db, "twin sphere bar graph");
    o.require(sparsity_check(db).sparse, "sparsity");
    o.require(db.edge_count() == 3 * db.vertex_count() - 6, "count");
    const auto r = analyze_rigidity(db);
    o.require(r.rank == 17 && r.idof == 1, "rank 17");
    o.require(!analyze_rigidity(twin.graph()).redundant_edges.empty(), "redundant edges");
  });

  criterion(10, "kernel oracles", 120, [](Outcome& o) {
    std::mt19937_64 rng(10);
    for (const auto& g : corpus::small_graphs(7)) {
      std::size_t best = 0;
      for (int t = 0; t < 2; ++t) {
        const auto x = oracle::integer_config(g, rng);
        const auto q = oracle::rational_rank(g, x);
        o.require(q == oracle::modular_rank(g, x), "modular vs rational");
        best = std::max(best, q);
      }
      o.require(best == generic_rank(g), "generic vs rational");
    }
    for (const auto& g : corpus::small_graphs(9)) o.require(sparsity_check(g).sparse == sparse_by_subsets(g), "pebble");
    for (int t = 0; t < 2000; ++t) {
      const int n = 3 + static_cast<int>(rng() % 7);
      const Graph g = corpus::random_graph(n, static_cast<int>(rng() % (3 * n)), rng);
      o.require(sparsity_check(g).sparse == sparse_by_subsets(g), "pebble random");
    }
  });

  criterion(11, "cycle splits", 60, [](Outcome& o) {
    std::mt19937_64 rng(11);
    int done = 0;
    for (int attempt = 0; attempt < 2000 && done < 100; ++attempt) {
      const auto t = random_triangulated_sphere(8 + static_cast<int>(rng() % 30), rng());
      const Graph g = t.graph();
      const auto verts = g.vertices();
      const VertexId c = verts[rng() % verts.size()];
      const auto link = t.rotation_at(c);
      const std::size_t k = 3 + rng() % 4;
      if (link.size() < k) continue;
      const std::size_t off = rng() % link.size();
      std::vector<VertexId> cyc{c};
      for (std::size_t i = 0; i + 1 < k; ++i) cyc.push_back(link[(off + i) % link.size()]);
      CycleSplitSpec spec{cyc, {}, {}};
      VertexId next = g.next_free_id();
      for (VertexId v : cyc)
        if (rng() % 2) spec.duplicate[v] = next++;
      if (spec.duplicate.empty()) spec.duplicate[cyc[rng() % k]] = next++;
      for (auto [v, _] : spec.duplicate)
        for (VertexId w : g.neighbors(v))
          if (std::find(cyc.begin(), cyc.end(), w) == cyc.end() && rng() % 3 == 0) spec.selections[v].insert(w);
      const Graph direct = cycle_split(g, spec);
      const Graph seq = replay_splits(g, cycle_split_sequence(g, spec));
      o.require(direct == seq, "replay");
      o.require(analyze_rigidity(direct).isostatic, "isostatic");
      ++done;
    }
    o.require(done == 100, "only " + std::to_string(done) + " splits generated");
  });

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
