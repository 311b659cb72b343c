#pragma once

#include <utility>
#include <vector>

namespace icfd {

// Undirected graph on vertices 0..m-1. Edges are stored canonically
// (u < v, sorted, no duplicates) so serialization is deterministic.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return m_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;

  bool connected() const;
  // Induced connectivity; the empty set counts as connected.
  bool connected_subset(const std::vector<int>& vs) const;
  // keep must be ascending and distinct; new vertex i corresponds to keep[i].
  Graph induced(const std::vector<int>& keep) const;

 private:
  int m_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace icfd
