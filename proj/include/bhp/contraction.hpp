#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bhp/polyhedron.hpp"
#include "bhp/transform.hpp"

namespace bhp {

enum class MoveKind { Reroute, ContractInterior, ContractSpoke, ContractPath, ContractLength1 };

std::string to_string(MoveKind k);

/// Triangles of `from` cut off by `chord` handed to `to`, so the shared path
/// of the two discs runs through the chord.
struct RerouteMove {
  DiscId from = -1;
  DiscId to = -1;
  Edge chord;
  std::vector<Triangle> triangles;

  bool operator==(const RerouteMove&) const = default;
};

struct CertificateMove {
  MoveKind kind = MoveKind::ContractInterior;
  ContractionMove contraction;  // all kinds but Reroute
  RerouteMove reroute;          // Reroute only

  bool operator==(const CertificateMove&) const = default;
};

struct ContractionCertificate {
  std::string original_hash;  // FNV-1a of the serialized input
  std::string base_hash;      // FNV-1a of the serialized base
  std::vector<CertificateMove> moves;
  Polyhedron base;

  std::size_t count(MoveKind k) const;
};

/// Loop: clean boundaries, contract interior edges, then spokes, while some
/// disc is unclean or has interior vertices; then shrink disc-disc paths to
/// length 1. Throws
/// PreconditionError if the input is not well designed.
ContractionCertificate run_contraction_sequence(const Polyhedron& p);

/// The boundary-cleaning phase on its own.
Polyhedron clean_boundaries(const Polyhedron& p, std::vector<CertificateMove>& moves);

/// Target file: lines `collapse all` or `collapse u v` (blank lines and `#`
/// comments allowed). Collapses length-1 disc-disc paths to length 0,
/// appending moves to `cert` and replacing its base.
void contract_to_base(ContractionCertificate& cert, std::string_view target);

/// Removes every interior vertex of disc d, whose boundary must be clear.
ContractionCertificate clear_disc(const Polyhedron& p, DiscId d);

/// Applies the inverse of one move to the post-move polyhedron.
Polyhedron undo(const Polyhedron& after, const CertificateMove& move);

/// Replays the moves backwards from `base`.
Polyhedron replay(const Polyhedron& base, const std::vector<CertificateMove>& moves);

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Checks hashes, replays the certificate, revalidates every long-edge
/// witness and compares the result with `original` byte for byte.
VerifyResult verify_certificate(const Polyhedron& base, const ContractionCertificate& cert,
                                const Polyhedron& original);

/// No vertex interior to a disc and every open disc-disc path of length 1.
bool is_simplified(const Polyhedron& p);

/// Same blocks and holes (boundary lengths), same disc ids, and the same
/// pattern of which classes share edges and which share only vertices.
bool topologically_equivalent(const Polyhedron& a, const Polyhedron& b);

std::string serialize_certificate(const ContractionCertificate& cert);
/// Parses the move list and hashes; the base is supplied separately.
ContractionCertificate parse_certificate(std::string_view text);

}  // namespace bhp
