#pragma once

#include <string>
#include <vector>

#include "bhp/polyhedron.hpp"

namespace bhp {

/// True iff the triple spans a 3-cycle of surface edges that is not a face.
/// Throws PreconditionError if one of the three edges is missing.
bool is_nonfacial_triangle(const Polyhedron& p, VertexId a, VertexId b, VertexId c);

/// Common surface neighbours w of e's endpoints with {u,v,w} non-facial.
std::vector<VertexId> short_witnesses(const Polyhedron& p, Edge e);

/// An edge lying in no non-facial triangle.
bool is_long_edge(const Polyhedron& p, Edge e);

/// Graph edges (braces included) joining two boundary vertices of the disc
/// that are neither boundary edges nor triangulation edges of that disc.
std::vector<Edge> unclean_chords(const Polyhedron& p, DiscId d);
bool has_clean_boundary(const Polyhedron& p, DiscId d);

/// Intersection of two discs is one path (or a closed cycle), interior path
/// vertices see only the two discs, and each disc keeps boundary edges off
/// the path. Two discs covering the whole sphere along a closed cycle pass.
bool is_well_attached(const Polyhedron& p, DiscId a, DiscId b, std::string* why = nullptr);

struct ConditionResult {
  bool pass = true;
  std::vector<std::string> witnesses;

  void fail(std::string w) {
    pass = false;
    witnesses.push_back(std::move(w));
  }
};

struct WellDesignedReport {
  ConditionResult well_attached;
  ConditionResult well_surrounded;  // witnesses tagged contact:, long path:, chord:
  ConditionResult coverage;

  bool ok() const { return well_attached.pass && well_surrounded.pass && coverage.pass; }
  std::string to_text() const;
};

WellDesignedReport check_well_designed(const Polyhedron& p);

}  // namespace bhp
