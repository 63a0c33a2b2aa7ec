#include "recolor/graph.hpp"

#include <algorithm>
#include <string>

namespace recolor {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw Error(ErrorCode::VertexOutOfRange, "vertex count is negative");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") on " +
                      std::to_string(n_) + " vertices");
    if (u == v)
      throw Error(ErrorCode::InvalidEdge, "loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  adj_.resize(n_);
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
}

bool Graph::adjacent(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw Error(ErrorCode::VertexOutOfRange, "adjacent() endpoint out of range");
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::int8_t> side(n, -1);
  std::vector<int> queue;
  for (int root = 0; root < n; ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;  // component roots land on side 0
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (int w : g.neighbors(u)) {
        if (side[w] == -1) {
          side[w] = static_cast<std::int8_t>(side[u] ^ 1);
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return std::nullopt;  // odd cycle
        }
      }
    }
  }
  Bipartition out;
  out.side.assign(side.begin(), side.end());
  return out;
}

Graph join_clique(const Graph& b, int m) {
  if (m < 0) throw Error(ErrorCode::ShapeError, "clique size is negative");
  const int n = b.vertex_count();
  std::vector<std::pair<int, int>> edges = b.edges();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) edges.emplace_back(n + i, n + j);
  for (int i = 0; i < m; ++i)
    for (int v = 0; v < n; ++v) edges.emplace_back(v, n + i);
  return Graph(n + m, std::move(edges));
}

Graph quotient(const Graph& g, const QuotientMap& q) {
  const int n = g.vertex_count();
  std::vector<int> class_of(n, -1);
  for (std::size_t ci = 0; ci < q.classes.size(); ++ci) {
    if (q.classes[ci].empty())
      throw Error(ErrorCode::ShapeError, "quotient class " + std::to_string(ci) + " is empty");
    for (int v : q.classes[ci]) {
      if (v < 0 || v >= n)
        throw Error(ErrorCode::VertexOutOfRange, "class member " + std::to_string(v));
      if (class_of[v] != -1)
        throw Error(ErrorCode::ShapeError, "vertex " + std::to_string(v) + " is in two classes");
      class_of[v] = static_cast<int>(ci);
    }
  }
  for (int v = 0; v < n; ++v)
    if (class_of[v] == -1)
      throw Error(ErrorCode::ShapeError, "vertex " + std::to_string(v) + " is not covered");
  for (auto [u, v] : g.edges())
    if (class_of[u] == class_of[v])
      throw Error(ErrorCode::NotIndependent,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") inside class " +
                      std::to_string(class_of[u]));

  std::vector<std::pair<int, int>> qedges;
  qedges.reserve(g.edges().size());
  for (auto [u, v] : g.edges()) qedges.emplace_back(class_of[u], class_of[v]);
  return Graph(static_cast<int>(q.classes.size()), std::move(qedges));
}

}  // namespace recolor
