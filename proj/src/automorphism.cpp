#include "ftmd/automorphism.hpp"

#include <algorithm>
#include <functional>

#include "ftmd/error.hpp"

namespace ftmd {

namespace {

class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const Graph& g) : d_(g.distances()), n_(g.order()) {
    profile_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      auto row = d_.row(v);
      profile_[v].assign(row.begin(), row.end());
      std::sort(profile_[v].begin(), profile_[v].end());
    }
  }

  /// Visits each automorphism with image[order[0]] == first_image (or any
  /// image when first_image < 0). The visitor returns false to stop.
  void run(const std::vector<Vertex>& order, Vertex first_image,
           const std::function<bool(const Permutation&)>& visit) {
    order_ = order;
    image_.assign(n_, -1);
    used_.assign(n_, false);
    first_image_ = first_image;
    visit_ = &visit;
    extend(0);
  }

 private:
  bool compatible(std::size_t depth, Vertex w) const {
    const Vertex v = order_[depth];
    if (used_[w] || profile_[v] != profile_[w]) return false;
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex u = order_[i];
      if (d_(u, v) != d_(image_[u], w)) return false;
    }
    return true;
  }

  // returns false once the visitor asked to stop
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return (*visit_)(image_);
    const Vertex v = order_[depth];
    for (Vertex w = 0; w < n_; ++w) {
      if (depth == 0 && first_image_ >= 0 && w != first_image_) continue;
      if (!compatible(depth, w)) continue;
      image_[v] = w;
      used_[w] = true;
      const bool keep_going = extend(depth + 1);
      used_[w] = false;
      image_[v] = -1;
      if (!keep_going) return false;
    }
    return true;
  }

  const DistanceMatrix& d_;
  int n_;
  std::vector<std::vector<int>> profile_;
  std::vector<Vertex> order_;
  Permutation image_;
  std::vector<bool> used_;
  Vertex first_image_ = -1;
  const std::function<bool(const Permutation&)>* visit_ = nullptr;
};

void check_cap(const Graph& g, int cap) {
  if (g.order() > cap) {
    throw Error(ErrorCode::OrderCapExceeded,
                "order " + std::to_string(g.order()) + " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

std::optional<Permutation> find_automorphism(const Graph& g, Vertex from, Vertex to) {
  std::vector<Vertex> order{from};
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v != from) order.push_back(v);
  }
  std::optional<Permutation> found;
  AutomorphismSearch(g).run(order, to, [&](const Permutation& p) {
    found = p;
    return false;
  });
  return found;
}

std::vector<Permutation> automorphisms(const Graph& g, int cap) {
  check_cap(g, cap);
  std::vector<Vertex> order(g.order());
  for (Vertex v = 0; v < g.order(); ++v) order[v] = v;
  std::vector<Permutation> all;
  AutomorphismSearch(g).run(order, -1, [&](const Permutation& p) {
    all.push_back(p);
    return true;
  });
  return all;
}

bool is_vertex_transitive(const Graph& g, int cap) {
  check_cap(g, cap);
  for (Vertex t = 1; t < g.order(); ++t) {
    if (!find_automorphism(g, 0, t)) return false;
  }
  return true;
}

}  // namespace ftmd
