#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "equipart/errors.hpp"
#include "equipart/number.hpp"
#include "equipart/vertex_set.hpp"

namespace equipart {

inline constexpr std::size_t default_max_vertices = 4096;

// Undirected simple graph with bit-set adjacency rows. Immutable once built.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const { return adj_.size(); }
  const VertexSet& neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const { return adj_.at(u).contains(v); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += row.size();
    return twice / 2;
  }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < order(); ++u)
      for (auto v : adj_[u].members())
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(std::size_t, const std::vector<std::pair<Vertex, Vertex>>&, std::size_t);
  friend Graph distance2_graph(const Graph&);

  explicit Graph(std::size_t n) : adj_(n, VertexSet(n)) {}

  std::vector<VertexSet> adj_;
};

inline Graph build_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                         std::size_t max_vertices = default_max_vertices) {
  if (n < 1) throw precondition_error("graph needs at least one vertex");
  if (n > max_vertices)
    throw precondition_error("graph has " + std::to_string(n) + " vertices, limit is " + std::to_string(max_vertices));
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw precondition_error("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has a vertex outside 0.." +
                               std::to_string(n));
    if (u == v) throw precondition_error("loop at vertex " + std::to_string(u));
    g.adj_[u].insert(v);
    g.adj_[v].insert(u);
  }
  return g;
}

inline std::optional<std::size_t> is_regular(const Graph& g) {
  const auto r = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) != r) return std::nullopt;
  return r;
}

inline std::size_t require_regular(const Graph& g) {
  const auto r = is_regular(g);
  if (!r) throw precondition_error("graph is not regular");
  return *r;
}

// BFS distances from `source`; unreachable vertices get SIZE_MAX.
inline std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::size_t> dist(g.order(), SIZE_MAX);
  std::queue<Vertex> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const auto u = q.front();
    q.pop();
    for (auto v : g.neighbors(u).members()) {
      if (dist[v] == SIZE_MAX) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  for (auto d : bfs_distances(g, 0))
    if (d == SIZE_MAX) return false;
  return true;
}

inline void require_connected_regular(const Graph& g) {
  require_regular(g);
  if (!is_connected(g)) throw precondition_error("graph is not connected");
}

// u ~ v in the result iff dist_g(u, v) == 2.
inline Graph distance2_graph(const Graph& g) {
  Graph d2(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    VertexSet reach(g.order());
    for (auto w : g.neighbors(u).members()) reach |= g.neighbors(w);
    for (auto v : reach.members())
      if (v != u && !g.adjacent(u, v)) d2.adj_[u].insert(v);
  }
  return d2;
}

// e(A,B) = (1_A, M 1_B); an edge inside A ∩ B is counted twice.
inline std::int64_t edge_count_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  std::int64_t total = 0;
  for (auto u : a.members()) total += static_cast<std::int64_t>(g.neighbors(u).intersection_size(b));
  return total;
}

// Average internal degree (M 1_S, 1_S) / |S|.
inline Rational sigma(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw precondition_error("sigma of an empty set");
  return Rational(edge_count_between(g, s, s), static_cast<std::int64_t>(s.size()));
}

// sigma on the distance-2 graph. Pass a precomputed `d2` when evaluating many subsets.
inline Rational sigma2_with(const Graph& d2, const VertexSet& s) { return sigma(d2, s); }
inline Rational sigma2(const Graph& g, const VertexSet& s) { return sigma(distance2_graph(g), s); }

// M_2 = p2 M^2 + p1 M + p0 I, with lambda_g / mu the common-neighbour counts of
// adjacent / distance-2 pairs.
struct AmplyParams {
  std::int64_t r = 0;
  std::int64_t lambda_g = 0;
  std::int64_t mu = 0;
  Rational p2;
  Rational p1;
  Rational p0;

  Rational poly(const Rational& x) const { return p2 * x * x + p1 * x + p0; }

  friend bool operator==(const AmplyParams&, const AmplyParams&) = default;
};

inline AmplyParams detect_amply_regular(const Graph& g) {
  const auto r = is_regular(g);
  if (!r) throw precondition_error("not amply regular: graph is not regular");
  std::optional<std::int64_t> lambda_g;
  std::optional<std::int64_t> mu;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const auto common = static_cast<std::int64_t>(g.neighbors(u).intersection_size(g.neighbors(v)));
      if (g.adjacent(u, v)) {
        if (lambda_g && *lambda_g != common)
          throw precondition_error("not amply regular: adjacent pairs have " + std::to_string(*lambda_g) + " and " +
                                   std::to_string(common) + " common neighbours");
        lambda_g = common;
      } else if (common > 0) {
        if (mu && *mu != common)
          throw precondition_error("not amply regular: distance-2 pairs have " + std::to_string(*mu) + " and " +
                                   std::to_string(common) + " common neighbours");
        mu = common;
      }
    }
  }
  if (!mu) throw precondition_error("not amply regular: no pair at distance 2 (diameter < 2)");
  AmplyParams p;
  p.r = static_cast<std::int64_t>(*r);
  p.lambda_g = lambda_g.value_or(0);
  p.mu = *mu;
  p.p2 = Rational(1, p.mu);
  p.p1 = Rational(-p.lambda_g, p.mu);
  p.p0 = Rational(-p.r, p.mu);
  return p;
}

}  // namespace equipart
