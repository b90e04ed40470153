#include <gtest/gtest.h>

#include <random>

#include "equipart/equipart.hpp"
#include "oracle.hpp"

using namespace equipart;

TEST(BuildGraph, Triangle) {
  const auto g = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(is_regular(g), 2u);
}

TEST(BuildGraph, EdgelessAndDedup) {
  const auto empty = build_graph(2, {});
  EXPECT_EQ(empty.edge_count(), 0u);
  const auto path = build_graph(4, {{0, 1}, {0, 1}, {1, 0}});
  EXPECT_EQ(path.edge_count(), 1u);
  EXPECT_EQ(path.degree(0), 1u);
}

TEST(BuildGraph, RejectsBadInput) {
  EXPECT_THROW(build_graph(3, {{0, 3}}), precondition_error);
  EXPECT_THROW(build_graph(3, {{1, 1}}), precondition_error);
  EXPECT_THROW(build_graph(0, {}), precondition_error);
  EXPECT_THROW(build_graph(10, {}, 8), precondition_error);
}

TEST(IsRegular, Examples) {
  EXPECT_EQ(is_regular(generate_family("petersen", {})), 3u);
  EXPECT_EQ(is_regular(generate_family("complete_bipartite", {1, 3})), std::nullopt);
  EXPECT_EQ(is_regular(generate_family("hypercube", {4})), 4u);
}

TEST(Generators, Sizes) {
  const auto q3 = generate_family("hypercube", {3});
  EXPECT_EQ(q3.order(), 8u);
  EXPECT_EQ(q3.edge_count(), 12u);
  EXPECT_EQ(is_regular(q3), 3u);

  const auto pet = generate_family("petersen", {});
  EXPECT_EQ(pet.order(), 10u);
  EXPECT_EQ(pet.edge_count(), 15u);
  EXPECT_EQ(oracle::girth(pet), 5);

  const auto h23 = generate_family("hamming", {2, 3});
  EXPECT_EQ(h23.order(), 9u);
  EXPECT_EQ(is_regular(h23), 4u);

  const auto j52 = generate_family("johnson", {5, 2});
  EXPECT_EQ(j52.order(), 10u);
  EXPECT_EQ(is_regular(j52), 6u);

  EXPECT_EQ(generate_family("cycle", {6}).edge_count(), 6u);
  EXPECT_EQ(generate_family("kneser", {6, 2}).order(), 15u);
}

TEST(Generators, PetersenIsComplementOfJohnson) {
  const auto pet = generate_family("petersen", {});
  const auto j = generate_family("johnson", {5, 2});
  for (Vertex u = 0; u < 10; ++u)
    for (Vertex v = 0; v < 10; ++v)
      if (u != v) {
        EXPECT_NE(pet.adjacent(u, v), j.adjacent(u, v));
      }
}

TEST(Generators, Errors) {
  EXPECT_THROW(generate_family("moebius", {3}), precondition_error);
  EXPECT_THROW(generate_family("hypercube", {}), precondition_error);
  EXPECT_THROW(generate_family("cycle", {2}), precondition_error);
  EXPECT_THROW(generate_family("johnson", {3, 3}), precondition_error);
}

TEST(Distance2, Examples) {
  const auto pet = generate_family("petersen", {});
  const auto d2 = distance2_graph(pet);
  EXPECT_EQ(is_regular(d2), 6u);
  for (Vertex u = 0; u < 10; ++u)
    for (Vertex v = 0; v < 10; ++v)
      if (u != v) {
        EXPECT_NE(d2.adjacent(u, v), pet.adjacent(u, v));
      }

  EXPECT_EQ(distance2_graph(generate_family("complete", {4})).edge_count(), 0u);

  // C6: i ~ i+2, two triangles {0,2,4}, {1,3,5}
  const auto c6 = distance2_graph(generate_family("cycle", {6}));
  EXPECT_EQ(c6, build_graph(6, {{0, 2}, {2, 4}, {0, 4}, {1, 3}, {3, 5}, {1, 5}}));
}

TEST(Distance2, MatchesFloydWarshallOnCorpus) {
  for (const auto& [name, g] : oracle::corpus()) {
    const auto want = oracle::distance2_matrix(g);
    const auto got = distance2_graph(g);
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = 0; v < g.order(); ++v) EXPECT_EQ(got.adjacent(u, v), want[u][v] == 1) << name;
  }
}

TEST(AmplyRegular, Examples) {
  const auto pet = detect_amply_regular(generate_family("petersen", {}));
  EXPECT_EQ(pet.r, 3);
  EXPECT_EQ(pet.lambda_g, 0);
  EXPECT_EQ(pet.mu, 1);
  EXPECT_EQ(pet.p2, Rational(1));
  EXPECT_EQ(pet.p1, Rational(0));
  EXPECT_EQ(pet.p0, Rational(-3));

  const auto q3 = detect_amply_regular(generate_family("hypercube", {3}));
  EXPECT_EQ(q3.mu, 2);
  EXPECT_EQ(q3.p2, Rational(1, 2));
  EXPECT_EQ(q3.p1, Rational(0));
  EXPECT_EQ(q3.p0, Rational(-3, 2));

  const auto h = detect_amply_regular(generate_family("hamming", {2, 3}));
  EXPECT_EQ(h.r, 4);
  EXPECT_EQ(h.lambda_g, 1);
  EXPECT_EQ(h.mu, 2);
  EXPECT_EQ(h.p2, Rational(1, 2));
  EXPECT_EQ(h.p1, Rational(-1, 2));
  EXPECT_EQ(h.p0, Rational(-2));
}

TEST(AmplyRegular, Rejections) {
  EXPECT_THROW(detect_amply_regular(generate_family("complete_bipartite", {1, 3})), precondition_error);
  EXPECT_THROW(detect_amply_regular(generate_family("complete", {4})), precondition_error);
  // K3 x K2 prism: triangle edges share a neighbour, rungs do not.
  const auto prism = build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  EXPECT_THROW(detect_amply_regular(prism), precondition_error);
}

// p2 (M^2)_uv + p1 M_uv + p0 [u=v] == (M_2)_uv, and r = -p0/p2, on every amply regular corpus graph.
TEST(AmplyRegular, PolynomialReproducesDistance2Matrix) {
  for (const auto& [name, g] : oracle::corpus()) {
    AmplyParams p;
    try {
      p = detect_amply_regular(g);
    } catch (const precondition_error&) {
      continue;
    }
    const auto m = oracle::adjacency(g);
    const auto m2 = oracle::multiply(m, m);
    const auto d2 = oracle::distance2_matrix(g);
    for (std::size_t u = 0; u < g.order(); ++u)
      for (std::size_t v = 0; v < g.order(); ++v)
        EXPECT_EQ(p.p2 * Rational(m2[u][v]) + p.p1 * Rational(m[u][v]) + p.p0 * Rational(u == v ? 1 : 0),
                  Rational(d2[u][v]))
            << name;
    EXPECT_EQ(Rational(p.r), -p.p0 / p.p2) << name;
  }
}

TEST(EdgeCount, Examples) {
  const auto k33 = generate_family("complete_bipartite", {3, 3});
  EXPECT_EQ(edge_count_between(k33, VertexSet(6, {0, 1, 2}), VertexSet(6, {3, 4, 5})), 9);
  const auto pet = generate_family("petersen", {});
  const VertexSet star(10, {0, 1, 2, 3});
  EXPECT_EQ(edge_count_between(pet, star, star), 0);
  const auto k3 = generate_family("complete", {3});
  EXPECT_EQ(edge_count_between(k3, VertexSet::full(3), VertexSet::full(3)), 6);
}

TEST(EdgeCount, PropertiesOnRandomSubsets) {
  std::mt19937_64 rng(7);
  for (const auto& [name, g] : oracle::corpus()) {
    const auto m = oracle::adjacency(g);
    const auto r = static_cast<std::int64_t>(*is_regular(g));
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = oracle::random_subset(g.order(), rng, false);
      const auto b = oracle::random_subset(g.order(), rng, false);
      const auto eab = edge_count_between(g, a, b);
      EXPECT_EQ(eab, oracle::bilinear(m, a, b)) << name;
      EXPECT_EQ(eab, edge_count_between(g, b, a)) << name;
      EXPECT_EQ(edge_count_between(g, a, a) % 2, 0) << name;
      EXPECT_EQ(eab + edge_count_between(g, a, b.complement()), r * static_cast<std::int64_t>(a.size())) << name;
    }
  }
}

TEST(Sigma, Examples) {
  const auto pet = generate_family("petersen", {});
  const VertexSet star(10, {0, 1, 2, 3});
  EXPECT_EQ(sigma(pet, star), Rational(0));
  EXPECT_EQ(sigma(pet, star.complement()), Rational(1));
  EXPECT_EQ(sigma(generate_family("complete", {4}), VertexSet(4, {0, 1})), Rational(1));
  EXPECT_THROW(sigma(pet, VertexSet(10)), precondition_error);
}

TEST(Sigma2, Examples) {
  const auto pet = generate_family("petersen", {});
  EXPECT_EQ(sigma2(pet, VertexSet(10, {0, 1, 2, 3})), Rational(3));
  const auto q3 = generate_family("hypercube", {3});
  EXPECT_EQ(sigma2(q3, VertexSet(8, {0, 3, 5, 6})), Rational(3));
  EXPECT_EQ(sigma2(generate_family("complete", {4}), VertexSet(4, {0, 2})), Rational(0));
  EXPECT_THROW(sigma2(pet, VertexSet(10)), precondition_error);
}

TEST(Sigma, TimesSizeIsInternalCount) {
  std::mt19937_64 rng(11);
  for (const auto& [name, g] : oracle::corpus()) {
    const auto d2m = oracle::distance2_matrix(g);
    const auto d2 = distance2_graph(g);
    for (int trial = 0; trial < 100; ++trial) {
      const auto s = oracle::random_subset(g.order(), rng);
      const Rational size(static_cast<std::int64_t>(s.size()));
      EXPECT_EQ(sigma(g, s) * size, Rational(edge_count_between(g, s, s))) << name;
      EXPECT_EQ(sigma2(g, s) * size, Rational(oracle::bilinear(d2m, s, s))) << name;
      EXPECT_EQ(sigma2_with(d2, s), sigma2(g, s)) << name;
    }
  }
}

TEST(VertexSetTest, Basics) {
  VertexSet s(70, {0, 64, 69});
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.contains(64));
  EXPECT_EQ(s.complement().size(), 67u);
  EXPECT_EQ(s.to_string(), "0,64,69");
  EXPECT_THROW(s.insert(70), precondition_error);
  EXPECT_TRUE(VertexSet(4, {0, 3}) < VertexSet(4, {1, 2}));
  EXPECT_TRUE(VertexSet(4, {0}) < VertexSet(4, {0, 1}));
}
