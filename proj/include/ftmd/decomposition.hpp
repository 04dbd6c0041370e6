#pragma once

#include <map>
#include <string>
#include <vector>

#include "ftmd/graph.hpp"

namespace ftmd {

/// One primary subgraph together with the names of its anchored vertices.
/// Vertices carrying the same anchor name in different pieces are merged.
struct PieceSpec {
  Graph graph;
  std::map<Vertex, std::string> anchors;
};

enum class PieceRole {
  End,       // exactly one attachment vertex
  Internal,  // two or more attachment vertices
  Lone,      // single-piece decomposition, no attachment vertices
};

std::string_view to_string(PieceRole role);

/// A graph built by point-attaching primary subgraphs in order. Piece i >= 1
/// must share exactly one anchor name with pieces 0..i-1. Global labels are
/// assigned piece by piece: piece 0 keeps its labels, later pieces append
/// their unshared vertices in local order.
class Decomposition {
 public:
  /// Throws AnchorReuseWithinPiece, NonTreeAttachment, DisconnectedResult,
  /// VertexOutOfRange or IllegalParameter (empty input).
  static Decomposition point_attach(std::vector<PieceSpec> pieces);

  int piece_count() const noexcept { return static_cast<int>(pieces_.size()); }
  const Graph& piece(int i) const { return pieces_[i].graph; }
  const std::map<Vertex, std::string>& anchors(int i) const { return pieces_[i].anchors; }
  const std::vector<PieceSpec>& pieces() const noexcept { return pieces_; }

  const Graph& composite() const noexcept { return composite_; }

  Vertex global_id(int piece, Vertex local) const { return global_ids_[piece][local]; }
  const std::vector<Vertex>& global_ids(int piece) const { return global_ids_[piece]; }

  /// At(G_i) in local labels, sorted.
  const VertexSet& attachment_set(int piece) const { return local_attachment_[piece]; }
  /// At(G) in global labels, sorted.
  const VertexSet& attachment_vertices() const noexcept { return attachment_; }

  PieceRole role(int piece) const;

  /// Maps a local vertex set of one piece to sorted global labels.
  VertexSet to_global(int piece, const VertexSet& local) const;

 private:
  Decomposition(std::vector<PieceSpec> pieces, Graph composite)
      : pieces_(std::move(pieces)), composite_(std::move(composite)) {}

  std::vector<PieceSpec> pieces_;
  Graph composite_;
  std::vector<std::vector<Vertex>> global_ids_;
  std::vector<VertexSet> local_attachment_;
  VertexSet attachment_;
};

}  // namespace ftmd
