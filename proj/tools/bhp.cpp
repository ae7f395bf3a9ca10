// bhp: command-line front end for the block-and-hole workbench.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bhp/allostery.hpp"
#include "bhp/bhp_format.hpp"
#include "bhp/contraction.hpp"
#include "bhp/counting.hpp"
#include "bhp/error.hpp"
#include "bhp/generators.hpp"
#include "bhp/predicates.hpp"
#include "bhp/rigidity.hpp"
#include "bhp/transform.hpp"

using namespace bhp;

namespace {

constexpr int kOk = 0;
constexpr int kPrecondition = 1;
constexpr int kParse = 2;

Polyhedron load(const std::string& path) { return parse_bhp(read_text(path)); }

Graph load_graph(const std::string& path) {
  const std::string text = read_text(path);
  return looks_like_graph(text) ? parse_graph(text) : parse_bhp(text).graph();
}

Edge parse_edge(const std::string& s) {
  const auto dash = s.find('-');
  if (dash == std::string::npos) throw PreconditionError("expected u-v, got '" + s + "'");
  return Edge(std::stoi(s.substr(0, dash)), std::stoi(s.substr(dash + 1)));
}

std::pair<VertexId, std::vector<VertexId>> parse_assignment(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw PreconditionError("expected i:list, got '" + s + "'");
  std::vector<VertexId> vals;
  std::stringstream rest(s.substr(colon + 1));
  std::string tok;
  while (std::getline(rest, tok, ',')) {
    if (!tok.empty()) vals.push_back(std::stoi(tok));
  }
  return {std::stoi(s.substr(0, colon)), vals};
}

Polyhedron single_block(int n) {
  FacePartition part;
  Block b = double_fan_block(n);
  Face back(b.boundary.rbegin(), b.boundary.rend());
  part.blocks.push_back(std::move(b));
  part.holes.push_back({back});
  return Polyhedron::from_partition(part);
}

struct Globals {
  int jobs = 1;
};

KernelOptions kernel(int trials, std::uint64_t seed, const Globals& g) { return {trials, seed, g.jobs}; }

std::string counting_text(const Polyhedron& p, int cut_max) {
  std::ostringstream out;
  const auto bal = balance_check(p);
  out << "balance.block_sum = " << bal.block_sum << "\n"
      << "balance.hole_sum = " << bal.hole_sum << "\n"
      << "balance = " << (bal.balanced() ? "pass" : "fail") << "\n";
  out << separation_check(p).to_text();
  out << check_well_designed(p).to_text();
  if (cut_max > 0) out << cut_cycle_check(p, cut_max).to_text();
  return out.str();
}

std::string sparsity_text(const Graph& g) {
  std::ostringstream out;
  const auto sp = sparsity_check(g);
  out << "sparsity = " << (sp.sparse ? "pass" : "fail") << "\n";
  if (!sp.sparse) {
    out << "sparsity.blocked_edge = " << sp.blocked_edge->u << "-" << sp.blocked_edge->v << "\n"
        << "sparsity.violating_subset =";
    for (VertexId v : sp.violating_subset) out << " " << v;
    out << "\n";
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial rigidity workbench for block-and-hole polyhedra"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--jobs", globals.jobs, "Parallel kernel trials")->check(CLI::PositiveNumber);

  std::function<void()> action;

  // generate
  auto* gen = app.add_subcommand("generate", "Emit a generated polyhedron in BHP format");
  gen->require_subcommand(1);
  gen->fallthrough();
  std::string gen_out = "-";
  std::uint64_t gen_seed = 1;
  gen->add_option("-o,--output", gen_out, "Output file")->capture_default_str();
  gen->add_option("--seed", gen_seed, "Random seed")->capture_default_str();
  int sphere_n = 12;
  auto* g_sphere = gen->add_subcommand("sphere", "Random triangulated sphere (one triangle as disc 0)");
  g_sphere->add_option("n", sphere_n, "Vertex count")->required();
  g_sphere->callback([&] {
    action = [&] { write_text(gen_out, serialize_bhp(sphere_polyhedron(random_triangulated_sphere(sphere_n, gen_seed)))); };
  });
  int tower_n = 4;
  int tower_waist = 0;
  auto* g_tower = gen->add_subcommand("tower", "Proper n-tower, or a defective one with --waist");
  g_tower->add_option("n", tower_n, "Block and hole size")->required();
  g_tower->add_option("--waist", tower_waist, "Waist size k < n for a defective tower");
  g_tower->callback([&] {
    action = [&] {
      write_text(gen_out, serialize_bhp(tower_waist ? make_defective_tower(tower_n, tower_waist) : make_tower(tower_n)));
    };
  });
  int cyl_m = 4;
  int cyl_k = 4;
  int cyl_n = 4;
  std::vector<int> cyl_block;
  auto* g_cyl = gen->add_subcommand("cylinder", "Cylinder C(m,k,n)");
  g_cyl->add_option("m", cyl_m, "First hole size")->required();
  g_cyl->add_option("k", cyl_k, "Waist size")->required();
  g_cyl->add_option("n", cyl_n, "Second hole size")->required();
  g_cyl->add_option("--block", cyl_block, "Hole indices to fill with a block");
  g_cyl->callback([&] {
    action = [&] {
      Polyhedron p = make_cylinder(cyl_m, cyl_k, cyl_n);
      std::sort(cyl_block.rbegin(), cyl_block.rend());
      for (int h : cyl_block) p = block_hole(p, h);
      write_text(gen_out, serialize_bhp(p));
    };
  });
  int block_n = 4;
  auto* g_block = gen->add_subcommand("block", "Double-fan block on an n-gon, hole on the other side");
  g_block->add_option("n", block_n, "Boundary size")->required();
  g_block->callback([&] { action = [&] { write_text(gen_out, serialize_bhp(single_block(block_n))); }; });
  std::string fixture;
  auto* g_fix = gen->add_subcommand("fixture", "Named fixture: twin-block, hexagon, hexagon-expanded, double-banana");
  g_fix->add_option("name", fixture, "Fixture name")
      ->required()
      ->check(CLI::IsMember({"twin-block", "hexagon", "hexagon-expanded", "double-banana"}));
  g_fix->callback([&] {
    action = [&] {
      if (fixture == "double-banana") return write_text(gen_out, serialize_graph(fixtures::double_banana()));
      const Polyhedron p = fixture == "twin-block" ? fixtures::twin_block_sphere()
                           : fixture == "hexagon"  ? fixtures::hexagon_base()
                                                   : fixtures::hexagon_expanded();
      write_text(gen_out, serialize_bhp(p));
    };
  });

  // analyze
  auto* ana = app.add_subcommand("analyze", "Rigidity and counting report");
  std::string ana_file;
  int ana_trials = 3;
  int ana_cut = 0;
  std::uint64_t ana_seed = 1;
  bool ana_csv = false;
  ana->add_option("file", ana_file, "BHP or graph file, - for stdin")->required();
  ana->add_option("--trials", ana_trials, "Random configurations")->capture_default_str()->check(CLI::PositiveNumber);
  ana->add_option("--cut-max", ana_cut, "Check cut cycles up to this length (at most 12)");
  ana->add_option("--seed", ana_seed, "Configuration seed")->capture_default_str();
  ana->add_flag("--csv", ana_csv, "Emit the rigidity report as CSV");
  ana->callback([&] {
    action = [&] {
      const std::string text = read_text(ana_file);
      const bool graph_only = looks_like_graph(text);
      std::optional<Polyhedron> p;
      Graph g;
      if (graph_only) {
        g = parse_graph(text);
      } else {
        p = parse_bhp(text);
        g = p->graph();
      }
      const auto rep = analyze_rigidity(g, kernel(ana_trials, ana_seed, globals));
      if (ana_csv) {
        std::cout << RigidityReport::csv_header() << "\n" << rep.csv_row() << "\n";
        return;
      }
      std::cout << rep.to_text() << sparsity_text(g);
      if (p) std::cout << counting_text(*p, ana_cut);
    };
  });

  // contract
  auto* con = app.add_subcommand("contract", "Run the contraction sequence and write certificate and base");
  std::string con_file;
  std::string con_target;
  std::string con_cert = "-";
  std::string con_base;
  con->add_option("file", con_file, "Expanded polyhedron")->required();
  con->add_option("--to-base", con_target, "Target file of 'collapse' lines");
  con->add_option("-c,--certificate", con_cert, "Certificate output")->capture_default_str();
  con->add_option("-b,--base", con_base, "Base polyhedron output")->required();
  con->callback([&] {
    action = [&] {
      auto cert = run_contraction_sequence(load(con_file));
      if (!con_target.empty()) contract_to_base(cert, read_text(con_target));
      write_text(con_base, serialize_bhp(cert.base));
      write_text(con_cert, serialize_certificate(cert));
    };
  });

  // verify
  auto* ver = app.add_subcommand("verify", "Replay a certificate and compare with the original");
  std::string ver_base;
  std::string ver_cert;
  std::string ver_orig;
  int ver_status = kOk;
  ver->add_option("base", ver_base, "Base polyhedron")->required();
  ver->add_option("certificate", ver_cert, "Certificate")->required();
  ver->add_option("original", ver_orig, "Original polyhedron")->required();
  ver->callback([&] {
    action = [&] {
      const auto r = verify_certificate(load(ver_base), parse_certificate(read_text(ver_cert)), load(ver_orig));
      for (const auto& s : r.problems) std::cerr << s << "\n";
      std::cout << (r.ok ? "verified" : "rejected") << "\n";
      ver_status = r.ok ? kOk : kPrecondition;
    };
  });

  // expand
  auto* exp = app.add_subcommand("expand", "Seeded subdivisions, insertions and flips");
  std::string exp_file;
  std::string exp_out = "-";
  std::uint64_t exp_seed = 1;
  ExpandOps ops;
  exp->add_option("file", exp_file, "Base polyhedron")->required();
  exp->add_option("--seed", exp_seed, "Random seed")->required();
  exp->add_option("--subdiv", ops.subdivisions, "Boundary subdivisions")->capture_default_str();
  exp->add_option("--insert", ops.insertions, "Interior insertions")->capture_default_str();
  exp->add_option("--flip", ops.flips, "Edge flips")->capture_default_str();
  exp->add_option("-o,--output", exp_out, "Output file")->capture_default_str();
  exp->callback([&] { action = [&] { write_text(exp_out, serialize_bhp(expand(load(exp_file), exp_seed, ops))); }; });

  // transmit
  auto* tra = app.add_subcommand("transmit", "Fill a hole edge by edge and trace idof");
  std::string tra_file;
  int tra_hole = 0;
  std::vector<std::string> tra_order;
  bool tra_stop = false;
  bool tra_waist = false;
  int tra_trials = 3;
  tra->add_option("file", tra_file, "Two-hole polyhedron")->required();
  tra->add_option("--hole", tra_hole, "Hole index to fill (0 or 1)")->required();
  tra->add_option("--order", tra_order, "Explicit edge list u-v,u-v,...")->delimiter(',');
  tra->add_flag("--stop-at-redundant", tra_stop, "Stop at the first redundant edge");
  tra->add_flag("--waist", tra_waist, "Append the waist decomposition report");
  tra->add_option("--trials", tra_trials, "Random configurations")->capture_default_str();
  tra->callback([&] {
    action = [&] {
      TransmissionOptions o;
      o.target_hole = tra_hole;
      for (const auto& s : tra_order) o.order.push_back(parse_edge(s));
      o.stop_at_redundant = tra_stop;
      o.kernel = kernel(tra_trials, 1, globals);
      o.track_side = tra_waist;
      const Polyhedron p = load(tra_file);
      std::cout << run_transmission(p, o).csv();
      if (tra_waist) std::cout << "\n" << waist_decomposition_check(p, o).to_text();
    };
  });

  // transform
  auto* trf = app.add_subcommand("transform", "Single transforms");
  trf->require_subcommand(1);
  trf->fallthrough();
  std::string trf_file;
  std::string trf_out = "-";
  trf->add_option("-o,--output", trf_out, "Output file")->capture_default_str();

  SplitSpec split;
  std::optional<int> split_d1;
  std::optional<int> split_d2;
  auto* t_split = trf->add_subcommand("split", "Surface vertex split");
  t_split->add_option("file", trf_file)->required();
  t_split->add_option("--vertex", split.x)->required();
  t_split->add_option("--first", split.first)->required();
  t_split->add_option("--second", split.second)->required();
  t_split->add_option("--moved", split.moved, "Ccw run between first and second")->delimiter(',');
  t_split->add_option("--new-id", split.new_id);
  t_split->add_option("--first-disc", split_d1);
  t_split->add_option("--second-disc", split_d2);
  t_split->callback([&] {
    action = [&] {
      split.first_disc = split_d1;
      split.second_disc = split_d2;
      write_text(trf_out, serialize_bhp(vertex_split(load(trf_file), split)));
    };
  });

  VertexId ce_keep = -1;
  VertexId ce_removed = -1;
  auto* t_ce = trf->add_subcommand("contract-edge", "Contract one long edge");
  t_ce->add_option("file", trf_file)->required();
  t_ce->add_option("--keep", ce_keep)->required();
  t_ce->add_option("--removed", ce_removed)->required();
  t_ce->callback([&] { action = [&] { write_text(trf_out, serialize_bhp(contract_edge(load(trf_file), ce_keep, ce_removed))); }; });

  std::vector<VertexId> walk;
  std::vector<std::string> dups;
  std::vector<std::string> selects;
  bool as_sequence = false;
  auto fill = [&](auto& spec) {
    for (const auto& s : dups) {
      auto [i, v] = parse_assignment(s);
      if (v.size() != 1) throw PreconditionError("--dup expects i:j");
      spec.duplicate[i] = v[0];
    }
    for (const auto& s : selects) {
      auto [i, v] = parse_assignment(s);
      spec.selections[i].insert(v.begin(), v.end());
    }
  };
  auto print_sequence = [&](const std::vector<GraphSplit>& seq) {
    std::ostringstream out;
    for (const auto& s : seq) {
      out << "split " << s.x << " keep " << s.a << " " << s.b << " new " << s.new_id << " moved";
      for (VertexId v : s.moved) out << " " << v;
      out << "\n";
    }
    write_text(trf_out, out.str());
  };
  for (const char* kind : {"cycle-split", "path-split"}) {
    const bool cyc = std::string(kind) == "cycle-split";
    auto* sc = trf->add_subcommand(kind, cyc ? "Cycle split with an antiprism strip" : "Path split with a fence");
    sc->add_option("file", trf_file)->required();
    sc->add_option(cyc ? "--cycle" : "--path", walk, "Vertices in order")->delimiter(',')->required();
    sc->add_option("--dup", dups, "Duplicate i:i' (repeatable)");
    sc->add_option("--select", selects, "Moved far endpoints i:w,w (repeatable)");
    sc->add_flag("--sequence", as_sequence, "Print the equivalent vertex-split sequence instead");
    sc->callback([&, cyc] {
      action = [&, cyc] {
        const Graph g = load_graph(trf_file);
        if (cyc) {
          CycleSplitSpec spec{walk, {}, {}};
          fill(spec);
          if (as_sequence) return print_sequence(cycle_split_sequence(g, spec));
          write_text(trf_out, serialize_graph(cycle_split(g, spec)));
        } else {
          PathSplitSpec spec{walk, {}, {}};
          fill(spec);
          if (as_sequence) return print_sequence(path_split_sequence(g, spec));
          write_text(trf_out, serialize_graph(path_split(g, spec)));
        }
      };
    });
  }

  auto* t_swap = trf->add_subcommand("swap", "Blocks become holes and holes blocks");
  t_swap->add_option("file", trf_file)->required();
  t_swap->callback([&] { action = [&] { write_text(trf_out, serialize_bhp(swap_blocks_holes(load(trf_file)))); }; });

  std::string sub_edge;
  auto* t_sub = trf->add_subcommand("subdivide", "Subdivide an edge between two discs");
  t_sub->add_option("file", trf_file)->required();
  t_sub->add_option("--edge", sub_edge, "u-v")->required();
  t_sub->callback([&] { action = [&] { write_text(trf_out, serialize_bhp(subdivide_boundary_edge(load(trf_file), parse_edge(sub_edge)))); }; });

  DiscId ins_disc = 0;
  std::vector<VertexId> ins_tri;
  auto* t_ins = trf->add_subcommand("insert", "Insert a vertex into a disc triangle");
  t_ins->add_option("file", trf_file)->required();
  t_ins->add_option("--disc", ins_disc)->required();
  t_ins->add_option("--triangle", ins_tri, "a,b,c")->delimiter(',')->expected(3)->required();
  t_ins->callback([&] {
    action = [&] {
      write_text(trf_out, serialize_bhp(insert_interior_vertex(load(trf_file), ins_disc, {ins_tri[0], ins_tri[1], ins_tri[2]})));
    };
  });

  DiscId flip_disc = 0;
  std::string flip_edge_s;
  auto* t_flip = trf->add_subcommand("flip", "Flip an interior disc edge");
  t_flip->add_option("file", trf_file)->required();
  t_flip->add_option("--disc", flip_disc)->required();
  t_flip->add_option("--edge", flip_edge_s, "u-v")->required();
  t_flip->callback([&] { action = [&] { write_text(trf_out, serialize_bhp(flip_edge(load(trf_file), flip_disc, parse_edge(flip_edge_s)))); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kPrecondition;
  }
  try {
    if (action) action();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  }
  return ver_status;
}
