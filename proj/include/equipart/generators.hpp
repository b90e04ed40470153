#pragma once

// Standard graph families with fixed vertex numbering:
//
//   complete n               vertices 0..n-1
//   complete_bipartite m k   side one is 0..m-1, side two is m..m+k-1
//   cycle n                  i ~ i+1 (mod n)
//   hypercube d              vertex = bit mask of length d, neighbours differ in one bit
//   hamming d q              vertex = x_0 + q x_1 + ... + q^(d-1) x_(d-1), neighbours differ in one coordinate
//   johnson n k              k-subsets of {0..n-1} in lexicographic order, adjacent iff they share k-1 elements
//   kneser n k               same numbering, adjacent iff disjoint
//   petersen                 kneser 5 2, so vertex 0 = {0,1}, 1 = {0,2}, ..., 9 = {3,4}

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "equipart/graph.hpp"

namespace equipart {

namespace detail {

inline std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline int shared_elements(const std::vector<int>& a, const std::vector<int>& b) {
  int c = 0;
  for (int x : a)
    for (int y : b) c += x == y;
  return c;
}

inline void expect_params(std::string_view name, const std::vector<std::int64_t>& params, std::size_t count) {
  if (params.size() != count)
    throw precondition_error("family '" + std::string(name) + "' takes " + std::to_string(count) + " parameter(s), got " +
                             std::to_string(params.size()));
}

}  // namespace detail

inline Graph generate_family(std::string_view name, const std::vector<std::int64_t>& params,
                             std::size_t max_vertices = default_max_vertices) {
  using detail::expect_params;
  std::vector<std::pair<Vertex, Vertex>> edges;
  auto positive = [&](std::int64_t v, const char* what) {
    if (v < 1) throw precondition_error(std::string(name) + ": " + what + " must be positive");
    return static_cast<std::size_t>(v);
  };
  auto capped = [&](std::size_t n) {
    if (n > max_vertices)
      throw precondition_error(std::string(name) + ": " + std::to_string(n) + " vertices exceeds limit " +
                               std::to_string(max_vertices));
    return n;
  };

  if (name == "complete") {
    expect_params(name, params, 1);
    const auto n = capped(positive(params[0], "n"));
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return build_graph(n, edges, max_vertices);
  }
  if (name == "complete_bipartite") {
    expect_params(name, params, 2);
    const auto m = positive(params[0], "m");
    const auto k = positive(params[1], "k");
    for (Vertex u = 0; u < m; ++u)
      for (Vertex v = m; v < m + k; ++v) edges.emplace_back(u, v);
    return build_graph(capped(m + k), edges, max_vertices);
  }
  if (name == "cycle") {
    expect_params(name, params, 1);
    if (params[0] < 3) throw precondition_error("cycle: n must be at least 3");
    const auto n = capped(static_cast<std::size_t>(params[0]));
    for (Vertex u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
    return build_graph(n, edges, max_vertices);
  }
  if (name == "hypercube") {
    expect_params(name, params, 1);
    const auto d = positive(params[0], "d");
    if (d > 12) throw precondition_error("hypercube: d must be at most 12");
    const auto n = capped(std::size_t{1} << d);
    for (Vertex u = 0; u < n; ++u)
      for (std::size_t bit = 0; bit < d; ++bit)
        if (const auto v = u ^ (std::size_t{1} << bit); u < v) edges.emplace_back(u, v);
    return build_graph(n, edges, max_vertices);
  }
  if (name == "hamming") {
    expect_params(name, params, 2);
    const auto d = positive(params[0], "d");
    const auto q = positive(params[1], "q");
    if (q < 2) throw precondition_error("hamming: q must be at least 2");
    std::size_t n = 1;
    for (std::size_t i = 0; i < d; ++i) n = capped(n * q);
    for (Vertex u = 0; u < n; ++u) {
      std::size_t place = 1;
      for (std::size_t i = 0; i < d; ++i, place *= q) {
        const auto digit = (u / place) % q;
        for (std::size_t x = digit + 1; x < q; ++x) edges.emplace_back(u, u + (x - digit) * place);
      }
    }
    return build_graph(n, edges, max_vertices);
  }
  if (name == "johnson" || name == "kneser" || name == "petersen") {
    std::int64_t n = 5;
    std::int64_t k = 2;
    if (name == "petersen") {
      expect_params(name, params, 0);
    } else {
      expect_params(name, params, 2);
      n = params[0];
      k = params[1];
      if (n < 1 || k < 1 || k >= n) throw precondition_error(std::string(name) + ": need 1 <= k < n");
    }
    const auto subsets = detail::k_subsets(static_cast<int>(n), static_cast<int>(k));
    capped(subsets.size());
    const bool kneser = name != "johnson";
    for (Vertex u = 0; u < subsets.size(); ++u)
      for (Vertex v = u + 1; v < subsets.size(); ++v) {
        const auto shared = detail::shared_elements(subsets[u], subsets[v]);
        if (kneser ? shared == 0 : shared == k - 1) edges.emplace_back(u, v);
      }
    return build_graph(subsets.size(), edges, max_vertices);
  }
  throw precondition_error("unknown graph family '" + std::string(name) + "'");
}

}  // namespace equipart
