#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bhp/graph.hpp"

namespace bhp {

namespace field {

inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = (static_cast<std::uint64_t>(z) & kPrime) + static_cast<std::uint64_t>(z >> 61);
  return r >= kPrime ? r - kPrime : r;
}
std::uint64_t inv(std::uint64_t a);

}  // namespace field

using Point = std::array<std::uint64_t, 3>;

struct Framework {
  Graph graph;
  std::map<VertexId, Point> config;
};

/// Configuration with coordinates uniform in [1, p-1], resampled until the
/// points affinely span 3-space (or a plane for three vertices). Depends
/// only on (vertex set, seed).
Framework random_framework(const Graph& g, std::uint64_t seed);

/// |E| rows by 3|V| columns, vertex column blocks in increasing id order.
std::vector<std::vector<std::uint64_t>> rigidity_matrix(const Framework& f);

/// Incremental row echelon form over the field.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t columns) : columns_(columns), pivot_of_(columns, -1) {}
  /// Returns true if the row was independent of those already added.
  bool add(std::vector<std::uint64_t> row);
  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t columns_;
  std::vector<long> pivot_of_;
  std::vector<std::vector<std::uint64_t>> rows_;  // stored from their pivot column on
  std::vector<std::size_t> start_;
};

struct RankResult {
  std::size_t rank = 0;
  std::vector<Edge> redundant;  // edges whose row reduced to zero, in insertion order
};

/// Rank at one configuration; `extra` rows are appended after the graph edges
/// and their contribution is reported separately through `extra_rank`.
RankResult framework_rank(const Framework& f, const std::vector<Edge>& extra = {},
                          std::size_t* extra_rank = nullptr);

struct KernelOptions {
  int trials = 3;
  std::uint64_t seed = 1;
  int jobs = 1;
};

struct RigidityReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t rank = 0;
  long idof = 0;
  bool isostatic = false;
  bool independent = false;
  std::vector<Edge> redundant_edges;
  int trials = 0;           // configurations evaluated
  int agreeing = 0;         // of those, how many reached the maximum
  bool degenerate = false;  // trials disagreed

  std::string to_text() const;
  static std::string csv_header();
  std::string csv_row() const;
};

RigidityReport analyze_rigidity(const Graph& g, const KernelOptions& opt = {});
std::size_t generic_rank(const Graph& g, const KernelOptions& opt = {});
/// 3|V| - 6 - generic rank; throws for |V| < 3.
long idof(const Graph& g, const KernelOptions& opt = {});
/// Throws if e is already an edge.
bool edge_independent(const Graph& g, Edge e, const KernelOptions& opt = {});
/// Rank gained by adding every missing pair among `hole_vertices`.
long hole_idof(const Graph& g, const std::vector<VertexId>& hole_vertices,
               const KernelOptions& opt = {});

}  // namespace bhp
