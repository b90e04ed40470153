#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "equipart/graph.hpp"
#include "equipart/number.hpp"

namespace equipart {

// Quotient matrix ((a, b), (c, d)) of a two-class partition {C1, C2}: a vertex of
// C1 has a neighbours in C1 and b in C2, a vertex of C2 has c in C1 and d in C2.
struct QuotientMatrix2 {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 0;

  std::int64_t degree() const { return a + b; }
  // The same partition with the classes swapped.
  QuotientMatrix2 swapped() const { return {d, c, b, a}; }
  std::string to_string() const {
    return "((" + std::to_string(a) + "," + std::to_string(b) + "),(" + std::to_string(c) + "," + std::to_string(d) +
           "))";
  }

  friend bool operator==(const QuotientMatrix2&, const QuotientMatrix2&) = default;
};

// Exact check that {S, V \ S} is equitable.
inline std::optional<QuotientMatrix2> verify_two_coloring(const Graph& g, const VertexSet& s) {
  const auto r = static_cast<std::int64_t>(require_regular(g));
  if (s.universe() != g.order()) throw precondition_error("vertex set universe does not match the graph");
  if (s.empty() || s.size() == g.order()) throw precondition_error("two-coloring needs two nonempty classes");

  std::optional<std::int64_t> inside;
  std::optional<std::int64_t> outside;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto k = static_cast<std::int64_t>(g.neighbors(v).intersection_size(s));
    auto& slot = s.contains(v) ? inside : outside;
    if (slot && *slot != k) return std::nullopt;
    slot = k;
  }
  return QuotientMatrix2{*inside, r - *inside, *outside, r - *outside};
}

using ColorMatrix = std::vector<std::vector<std::int64_t>>;

// k-class version. colors[v] in 0..k-1, every class nonempty; row sums of the
// result are the degrees, so a regular graph gives constant row sums.
inline std::optional<ColorMatrix> verify_coloring(const Graph& g, std::span<const std::size_t> colors) {
  if (colors.size() != g.order()) throw precondition_error("coloring length does not match the graph");
  std::size_t k = 0;
  for (auto c : colors) k = std::max(k, c + 1);
  std::vector<std::size_t> class_size(k, 0);
  for (auto c : colors) ++class_size[c];
  for (std::size_t c = 0; c < k; ++c)
    if (class_size[c] == 0) throw precondition_error("color class " + std::to_string(c) + " is empty");

  ColorMatrix q(k, std::vector<std::int64_t>(k, 0));
  std::vector<bool> seen(k, false);
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<std::int64_t> row(k, 0);
    for (auto w : g.neighbors(v).members()) ++row[colors[w]];
    if (!seen[colors[v]]) {
      q[colors[v]] = row;
      seen[colors[v]] = true;
    } else if (q[colors[v]] != row) {
      return std::nullopt;
    }
  }
  return q;
}

inline std::int64_t quotient_second_eigenvalue(const QuotientMatrix2& q) { return q.degree() - q.b - q.c; }

// Quotient matrix an equitable partition with class sizes (|A|, |B|) and second
// eigenvalue lambda must have. Throws when an entry is not a nonnegative integer,
// i.e. no such partition exists.
inline QuotientMatrix2 quotient_from_spectral_data(std::int64_t r, double lambda, std::int64_t size_a,
                                                   std::int64_t size_b, double integral_tolerance = 1e-6) {
  if (size_a < 1 || size_b < 1) throw precondition_error("both classes must be nonempty");
  const double snapped = std::round(lambda);
  if (std::abs(lambda - snapped) > integral_tolerance)
    throw precondition_error("no equitable partition: eigenvalue is not an integer, quotient entries are irrational");
  const auto lam = static_cast<std::int64_t>(snapped);
  if (lam == r) throw precondition_error("lambda must differ from r");
  const auto n = size_a + size_b;
  const Rational entries[4] = {Rational(r * size_a + lam * size_b, n), Rational((r - lam) * size_b, n),
                               Rational((r - lam) * size_a, n), Rational(r * size_b + lam * size_a, n)};
  for (const auto& e : entries)
    if (!is_integer(e) || e < Rational(0))
      throw precondition_error("no equitable partition: quotient entry " + to_string(e) +
                               " is not a nonnegative integer");
  return {entries[0].numerator(), entries[1].numerator(), entries[2].numerator(), entries[3].numerator()};
}

// beta = sigma2(C1) that any perfect coloring with quotient q has on an amply regular graph.
inline Rational coloring_sigma2(const AmplyParams& p, const QuotientMatrix2& q) {
  const Rational a(q.a);
  return p.p2 * (a * a + Rational(q.b * q.c)) + p.p1 * a + p.p0;
}

// |C1| = (beta - p(a)) n / (p2 (r - a)^2 + beta - p(a)).
inline Rational predicted_class_size(const AmplyParams& p, const QuotientMatrix2& q, std::int64_t n) {
  const Rational a(q.a);
  const auto excess = coloring_sigma2(p, q) - p.poly(a);
  const auto denom = p.p2 * (Rational(p.r) - a) * (Rational(p.r) - a) + excess;
  if (denom == Rational(0)) throw precondition_error("class-size formula has a zero denominator for " + q.to_string());
  return excess * Rational(n) / denom;
}

}  // namespace equipart
