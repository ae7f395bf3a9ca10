#include "bhp/allostery.hpp"

#include <algorithm>
#include <sstream>

#include "bhp/counting.hpp"
#include "bhp/error.hpp"
#include "bhp/generators.hpp"

namespace bhp {

std::vector<Edge> block_fill_order(const Face& boundary) { return double_fan_braces(boundary); }

std::vector<int> TransmissionTrace::transmitting_steps() const {
  std::vector<int> out;
  for (const auto& s : steps) {
    if (s.transmitted) out.push_back(s.step);
  }
  return out;
}

std::optional<int> TransmissionTrace::side_rigid_after() const {
  for (const auto& s : steps) {
    if (s.side_idof && *s.side_idof == 0) return s.step;
  }
  return std::nullopt;
}

std::string TransmissionTrace::csv() const {
  std::ostringstream out;
  out << "step,edge,independent,idof,target_hole_idof,other_hole_idof,transmitted,side_idof\n";
  for (const auto& s : steps) {
    out << s.step << ",";
    if (s.edge) out << s.edge->u << "-" << s.edge->v;
    out << "," << (s.step ? (s.independent ? "1" : "0") : "") << "," << s.idof << "," << s.target_idof
        << "," << s.other_idof << "," << (s.transmitted ? 1 : 0) << ",";
    if (s.side_idof) out << *s.side_idof;
    out << "\n";
  }
  return out.str();
}

namespace {

long side_idof(const Graph& g, const std::set<VertexId>& side, const KernelOptions& k) {
  return idof(g.induced(side), k);
}

}  // namespace

TransmissionTrace run_transmission(const Polyhedron& p, const TransmissionOptions& opt) {
  if (p.holes().size() != 2) throw PreconditionError("transmission needs exactly two holes");
  if (opt.target_hole < 0 || opt.target_hole > 1) throw PreconditionError("hole index must be 0 or 1");
  const Face& target = p.holes()[opt.target_hole].boundary;
  const Face& other = p.holes()[1 - opt.target_hole].boundary;
  std::vector<Edge> order = opt.order.empty() ? block_fill_order(target) : opt.order;
  const std::set<VertexId> tv(target.begin(), target.end());
  for (const Edge& e : order) {
    if (!tv.count(e.u) || !tv.count(e.v)) {
      throw PreconditionError("edge " + to_string(e) + " does not join two vertices of the hole");
    }
  }

  TransmissionTrace trace;
  trace.target_size = static_cast<int>(target.size());
  trace.other_size = static_cast<int>(other.size());
  const std::set<VertexId> ov(other.begin(), other.end());
  trace.waist = menger_paths(p.graph(), tv, ov);
  std::set<VertexId> side;
  if (opt.track_side) {
    const auto cut = min_vertex_cut(p.graph(), tv, ov);
    for (const auto& comp : components_without(p.graph(), cut)) {
      if (std::any_of(comp.begin(), comp.end(), [&](VertexId v) { return tv.count(v) != 0; })) {
        side.insert(comp.begin(), comp.end());
      }
    }
    side.insert(cut.begin(), cut.end());
  }

  Graph g = p.graph();
  const std::vector<VertexId> tlist(target.begin(), target.end());
  const std::vector<VertexId> olist(other.begin(), other.end());
  std::size_t rank = generic_rank(g, opt.kernel);
  auto snapshot = [&](int step) {
    TransmissionStep s;
    s.step = step;
    s.idof = 3 * static_cast<long>(g.vertex_count()) - 6 - static_cast<long>(rank);
    s.target_idof = hole_idof(g, tlist, opt.kernel);
    s.other_idof = hole_idof(g, olist, opt.kernel);
    if (opt.track_side) s.side_idof = side_idof(g, side, opt.kernel);
    return s;
  };
  trace.steps.push_back(snapshot(0));
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Edge e = order[i];
    if (g.has_edge(e)) throw PreconditionError("edge " + to_string(e) + " is already present");
    g.add_edge(e);
    const std::size_t next = generic_rank(g, opt.kernel);
    const bool independent = next > rank;
    rank = next;
    TransmissionStep s = snapshot(static_cast<int>(i) + 1);
    s.edge = e;
    s.independent = independent;
    s.transmitted = s.other_idof < trace.steps.back().other_idof;
    trace.steps.push_back(s);
    if (!independent && opt.stop_at_redundant) break;
  }
  return trace;
}

WaistReport waist_decomposition_check(const Polyhedron& p, const TransmissionOptions& opt) {
  WaistReport r;
  TransmissionOptions o = opt;
  o.track_side = true;
  const TransmissionTrace t = run_transmission(p, o);
  r.m = t.target_size;
  r.n = t.other_size;
  r.k = t.waist;
  r.final_other_idof = t.steps.back().other_idof;
  r.expected_other_idof = r.n - r.k;
  r.applicable = r.k < std::min(r.m, r.n);
  if (!r.applicable) return r;
  r.formula_window = {r.m - r.k + 1, r.m - r.k + 2 * (r.k - 3)};
  r.phrase_window = {r.m - r.k, r.m + r.k - 3};
  const auto tx = t.transmitting_steps();
  if (!tx.empty()) r.measured_window = std::pair(tx.front(), tx.back());
  r.side_rigid_after = t.side_rigid_after();

  TransmissionOptions co = opt;
  co.order.clear();
  co.target_hole = 0;
  co.track_side = false;
  const auto comp = run_transmission(make_cylinder(r.m, r.k, r.k), co);
  for (const auto& s : comp.steps) {
    if (s.idof == 0) {
      r.component_rigid_after = s.step;
      break;
    }
  }
  const bool contiguous = !tx.empty() && tx.back() - tx.front() + 1 == static_cast<int>(tx.size());
  const bool none_expected = r.formula_window.second < r.formula_window.first;
  r.formula_agrees = none_expected ? tx.empty() : contiguous && r.measured_window == r.formula_window;
  r.phrase_agrees = contiguous && r.measured_window == r.phrase_window;
  return r;
}

std::string WaistReport::to_text() const {
  std::ostringstream out;
  out << "applicable = " << (applicable ? "true" : "false") << "\n"
      << "m = " << m << "\nk = " << k << "\nn = " << n << "\n";
  if (!applicable) return out.str();
  auto win = [](std::pair<int, int> w) { return std::to_string(w.first) + ".." + std::to_string(w.second); };
  out << "formula_window = " << (formula_window.second < formula_window.first ? "none" : win(formula_window)) << "\n"
      << "phrase_window = " << win(phrase_window) << "\n"
      << "measured_window = " << (measured_window ? win(*measured_window) : "none") << "\n"
      << "formula_agrees = " << (formula_agrees ? "true" : "false") << "\n"
      << "phrase_agrees = " << (phrase_agrees ? "true" : "false") << "\n"
      << "final_other_hole_idof = " << final_other_idof << "\n"
      << "expected_other_hole_idof = " << expected_other_idof << "\n"
      << "component_rigid_after = " << (component_rigid_after ? std::to_string(*component_rigid_after) : "never") << "\n"
      << "side_rigid_after = " << (side_rigid_after ? std::to_string(*side_rigid_after) : "never") << "\n";
  if (!formula_agrees || !phrase_agrees) {
    out << "warning = measured window disagrees with "
        << (!formula_agrees && !phrase_agrees ? "both predicted windows"
            : !formula_agrees                 ? "the formula window"
                                              : "the phrase window")
        << "\n";
  }
  return out.str();
}

}  // namespace bhp
