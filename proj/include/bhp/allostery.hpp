#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bhp/polyhedron.hpp"
#include "bhp/rigidity.hpp"

namespace bhp {

/// Braces of the double-fan block on `boundary`: fan 1 then fan 2.
std::vector<Edge> block_fill_order(const Face& boundary);

struct TransmissionStep {
  int step = 0;  // 0 is the starting state
  std::optional<Edge> edge;
  bool independent = false;
  long idof = 0;
  long target_idof = 0;  // hole_idof at the hole being filled
  long other_idof = 0;   // hole_idof at the other hole
  bool transmitted = false;  // other_idof dropped at this step
  std::optional<long> side_idof;  // idof of the target side of the waist
};

struct TransmissionTrace {
  int target_size = 0;
  int other_size = 0;
  int waist = 0;  // vertex-disjoint paths between the two holes
  std::vector<TransmissionStep> steps;

  /// Additions at which the other hole lost idof.
  std::vector<int> transmitting_steps() const;
  /// First step at which the target side of the waist is rigid.
  std::optional<int> side_rigid_after() const;
  std::string csv() const;
};

struct TransmissionOptions {
  int target_hole = 0;
  std::vector<Edge> order;  // empty: block_fill_order of the target hole
  bool stop_at_redundant = false;
  bool track_side = false;  // also follow the idof of the target side of the waist
  KernelOptions kernel;
};

/// Adds the edges one at a time at the target hole of a two-hole polyhedron.
TransmissionTrace run_transmission(const Polyhedron& p, const TransmissionOptions& opt = {});

struct WaistReport {
  bool applicable = false;
  int m = 0;  // filled hole
  int k = 0;  // waist
  int n = 0;  // other hole
  std::pair<int, int> formula_window{0, 0};  // (m-k)+1 .. (m-k)+2(k-3)
  std::pair<int, int> phrase_window{0, 0};   // m-k .. m+k-3, the looser bounds
  std::optional<std::pair<int, int>> measured_window;
  long final_other_idof = 0;
  long expected_other_idof = 0;  // n - k
  std::optional<int> component_rigid_after;  // C(m,k,k) alone reaches idof 0
  std::optional<int> side_rigid_after;       // measured in place
  bool formula_agrees = false;
  bool phrase_agrees = false;

  std::string to_text() const;
};

/// Splits the transmission narrative at a minimum waist and compares it with
/// the measured trace.
WaistReport waist_decomposition_check(const Polyhedron& p, const TransmissionOptions& opt = {});

}  // namespace bhp
