#include "graph.hpp"

#include <algorithm>

#include "errors.hpp"

namespace icfd {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : m_(vertex_count), edges_(std::move(edges)) {
  if (m_ < 0) throw ValidationError("vertex count must be non-negative");
  for (auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= m_ || v >= m_)
      throw ValidationError("edge endpoint out of range");
    if (u == v) throw ValidationError("self-loop is not allowed");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw ValidationError("duplicate edge");
  adj_.assign(m_, {});
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& lst : adj_) std::sort(lst.begin(), lst.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

bool Graph::connected() const {
  if (m_ <= 1) return true;
  std::vector<char> seen(m_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj_[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == m_;
}

bool Graph::connected_subset(const std::vector<int>& vs) const {
  if (vs.empty()) return true;
  std::vector<char> in(m_, 0);
  for (int v : vs) {
    if (v < 0 || v >= m_) throw ValidationError("vertex out of range");
    if (in[v]) throw ValidationError("duplicate vertex in set");
    in[v] = 1;
  }
  std::vector<char> seen(m_, 0);
  std::vector<int> stack{vs[0]};
  seen[vs[0]] = 1;
  size_t count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj_[x]) {
      if (in[y] && !seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == vs.size();
}

Graph Graph::induced(const std::vector<int>& keep) const {
  std::vector<int> to_new(m_, -1);
  for (size_t i = 0; i < keep.size(); ++i) {
    int v = keep[i];
    if (v < 0 || v >= m_) throw ValidationError("vertex out of range");
    if (i > 0 && keep[i - 1] >= v) throw ValidationError("keep list must be ascending");
    to_new[v] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> kept_edges;
  for (auto [u, v] : edges_) {
    if (to_new[u] >= 0 && to_new[v] >= 0) kept_edges.emplace_back(to_new[u], to_new[v]);
  }
  return Graph(static_cast<int>(keep.size()), std::move(kept_edges));
}

}  // namespace icfd
