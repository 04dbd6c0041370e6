#include "ftmd/decomposition.hpp"

#include <algorithm>
#include <set>

#include "ftmd/error.hpp"

namespace ftmd {

std::string_view to_string(PieceRole role) {
  switch (role) {
    case PieceRole::End: return "end";
    case PieceRole::Internal: return "internal";
    case PieceRole::Lone: return "lone";
  }
  return "unknown";
}

Decomposition Decomposition::point_attach(std::vector<PieceSpec> pieces) {
  if (pieces.empty()) throw Error(ErrorCode::IllegalParameter, "no pieces");

  std::map<std::string, Vertex> by_name;
  std::vector<std::vector<Vertex>> global_ids;
  std::vector<Edge> edges;
  int next_id = 0;

  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& spec = pieces[i];
    const std::string where = "piece " + std::to_string(i);
    std::set<std::string> names;
    for (const auto& [local, name] : spec.anchors) {
      if (local < 0 || local >= spec.graph.order()) {
        throw Error(ErrorCode::VertexOutOfRange,
                    where + ": anchor on missing vertex " + std::to_string(local));
      }
      if (!names.insert(name).second) {
        throw Error(ErrorCode::AnchorReuseWithinPiece, where + ": anchor '" + name + "' repeated");
      }
    }

    std::vector<Vertex> ids(spec.graph.order(), -1);
    int shared = 0;
    for (const auto& [local, name] : spec.anchors) {
      if (auto it = by_name.find(name); it != by_name.end()) {
        ids[local] = it->second;
        ++shared;
      }
    }
    if (i > 0 && shared == 0) {
      throw Error(ErrorCode::DisconnectedResult, where + " shares no anchor with earlier pieces");
    }
    if (shared > 1) {
      throw Error(ErrorCode::NonTreeAttachment,
                  where + " shares " + std::to_string(shared) + " anchors with earlier pieces");
    }
    for (auto& id : ids) {
      if (id < 0) id = next_id++;
    }
    for (const auto& [local, name] : spec.anchors) by_name.emplace(name, ids[local]);
    for (auto [u, v] : spec.graph.edges()) edges.emplace_back(ids[u], ids[v]);
    global_ids.push_back(std::move(ids));
  }

  Decomposition dec(std::move(pieces), Graph::build(next_id, edges));
  dec.global_ids_ = std::move(global_ids);

  std::vector<int> owners(next_id, 0);
  for (const auto& ids : dec.global_ids_) {
    for (Vertex g : ids) ++owners[g];
  }
  for (Vertex g = 0; g < next_id; ++g) {
    if (owners[g] >= 2) dec.attachment_.push_back(g);
  }
  for (std::size_t i = 0; i < dec.pieces_.size(); ++i) {
    VertexSet local;
    const auto& ids = dec.global_ids_[i];
    for (Vertex v = 0; v < static_cast<Vertex>(ids.size()); ++v) {
      if (owners[ids[v]] >= 2) local.push_back(v);
    }
    dec.local_attachment_.push_back(std::move(local));
  }

  // Tree-like attachment keeps every piece isometric in the composite.
  const auto& dg = dec.composite_.distances();
  for (std::size_t i = 0; i < dec.pieces_.size(); ++i) {
    const auto& piece = dec.pieces_[i].graph;
    const auto& ids = dec.global_ids_[i];
    for (Vertex u = 0; u < piece.order(); ++u) {
      for (Vertex w = u + 1; w < piece.order(); ++w) {
        if (dg(ids[u], ids[w]) != piece.distance(u, w)) {
          throw Error(ErrorCode::NonTreeAttachment,
                      "piece " + std::to_string(i) + " is not isometric in the composite");
        }
      }
    }
  }
  return dec;
}

PieceRole Decomposition::role(int piece) const {
  const auto count = local_attachment_[piece].size();
  if (count == 0) return PieceRole::Lone;
  return count == 1 ? PieceRole::End : PieceRole::Internal;
}

VertexSet Decomposition::to_global(int piece, const VertexSet& local) const {
  VertexSet out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(global_id(piece, v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ftmd
