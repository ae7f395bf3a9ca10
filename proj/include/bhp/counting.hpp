#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bhp/graph.hpp"
#include "bhp/polyhedron.hpp"

namespace bhp {

struct BalanceReport {
  long block_sum = 0;  // sum of (b - 3)
  long hole_sum = 0;   // sum of (h - 3)
  bool balanced() const { return block_sum == hole_sum; }
};

BalanceReport balance_check(const Polyhedron& p);

struct SparsityReport {
  bool sparse = true;
  std::optional<Edge> blocked_edge;
  std::set<VertexId> violating_subset;  // spans at least 3|V'| - 5 edges
};

/// (3,6)-pebble game: every subset of at least three vertices spans at most
/// 3|V'| - 6 edges.
SparsityReport sparsity_check(const Graph& g);

/// Exhaustive subset check; for tests and tiny graphs only.
bool sparse_by_subsets(const Graph& g);

struct SeparationReport {
  std::vector<std::string> block_block;  // clause 1
  std::vector<std::string> hole_hole;    // clause 1 for holes
  std::vector<std::string> block_chords;  // clause 2
  std::vector<std::string> hole_chords;   // clause 2 for holes
  bool ok() const {
    return block_block.empty() && hole_hole.empty() && block_chords.empty() && hole_chords.empty();
  }
  std::string to_text() const;
};

SeparationReport separation_check(const Polyhedron& p);

/// Maximum number of vertex-disjoint paths between the boundaries of two
/// blocks/holes/discs.
int menger_paths(const Polyhedron& p, FaceLabel a, FaceLabel b);
int menger_paths(const Graph& g, const std::set<VertexId>& a, const std::set<VertexId>& b);

/// A minimum vertex set separating `a` from `b`, chosen closest to `a`.
std::set<VertexId> min_vertex_cut(const Graph& g, const std::set<VertexId>& a,
                                  const std::set<VertexId>& b);

struct CutCycleViolation {
  std::vector<VertexId> cycle;
  std::vector<std::string> steps;  // "edge" or "disc <id>" per consecutive pair
  long side_a = 0;                 // sum (b-3) - sum (h-3) on each side
  long side_b = 0;
  int c() const { return static_cast<int>(cycle.size()); }
  std::string csv_row() const;
};

struct CutCycleReport {
  int max_c = 0;
  long cycles_checked = 0;
  long realisations_skipped = 0;  // crossing chords or non-separating
  std::vector<CutCycleViolation> violations;
  std::string to_text() const;
};

inline constexpr int kMaxCutCycle = 12;

/// Enumerates cut cycles with 3 <= c <= max_c through surface edges and
/// shared-disc chords and checks both sides' block/hole excess against c - 3.
/// Set `edges_only` to ignore chords.
CutCycleReport cut_cycle_check(const Polyhedron& p, int max_c, bool edges_only = false);

}  // namespace bhp
