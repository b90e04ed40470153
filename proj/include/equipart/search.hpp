#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "equipart/equitable.hpp"
#include "equipart/graph.hpp"
#include "equipart/parallel.hpp"
#include "equipart/spectral.hpp"

namespace equipart {

enum class Objective {
  all_perfect_2colorings,
  max_set_sigma_le,             // max |S| with sigma(S) <= a
  max_set_sigma_eq_sigma2_le,   // max |S| with sigma(S) = a and sigma2(S) <= beta
  max_independent,
  max_cut,
};

struct SearchConstraints {
  std::optional<QuotientMatrix2> target_quotient;
  std::size_t max_results = SIZE_MAX;
  Objective objective = Objective::all_perfect_2colorings;
  Rational a{0};
  Rational beta{0};
};

struct PerfectColoring {
  VertexSet set;
  QuotientMatrix2 quotient;

  friend bool operator==(const PerfectColoring&, const PerfectColoring&) = default;
  friend bool operator<(const PerfectColoring& x, const PerfectColoring& y) {
    if (x.set.size() != y.set.size()) return x.set.size() < y.set.size();
    return x.set < y.set;
  }
};

// Reports the smaller class; for equal sizes the one that is lexicographically least.
inline PerfectColoring canonical_coloring(const VertexSet& s, const QuotientMatrix2& q) {
  const auto comp = s.complement();
  const auto n = s.universe();
  if (s.size() * 2 > n || (s.size() * 2 == n && comp < s)) return {comp, q.swapped()};
  return {s, q};
}

namespace detail {

struct Candidate {
  QuotientMatrix2 q;
  std::size_t size = 0;
};

// Quotient matrices whose eigenvalue r-b-c is (nearly) in the spectrum and whose
// class size c n/(b+c) is integral. Only c <= b, i.e. |S| <= n/2, is needed.
inline std::vector<Candidate> candidate_quotients(std::int64_t r, std::int64_t n, const Spectrum& spec) {
  std::vector<Candidate> out;
  for (std::int64_t b = 1; b <= r; ++b)
    for (std::int64_t c = 1; c <= b; ++c) {
      if (spec.find(static_cast<double>(r - b - c), 10.0) == nullptr) continue;
      if ((c * n) % (b + c) != 0) continue;
      const auto size = c * n / (b + c);
      if (size < 1 || size >= n) continue;
      out.push_back({{r - b, b, c, r - c}, static_cast<std::size_t>(size)});
    }
  return out;
}

// Backtracking over vertices in index order. A vertex's count of S-neighbours
// (resp. outside neighbours) among assigned vertices may never exceed what its
// class allows, and S must end with exactly `size` members.
class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, const Candidate& cand, std::size_t limit)
      : g_(g), cand_(cand), limit_(limit), n_(g.order()), state_(n_, unassigned), in_(n_, 0), out_(n_, 0) {
    neighbors_.reserve(n_);
    for (Vertex v = 0; v < n_; ++v) neighbors_.push_back(g.neighbors(v).members());
  }

  std::vector<VertexSet> run() {
    recurse(0, 0);
    return std::move(found_);
  }

 private:
  static constexpr std::int8_t unassigned = -1;

  std::int64_t allowed_in(Vertex v) const { return state_[v] == 1 ? cand_.q.a : cand_.q.c; }

  bool feasible(Vertex v) const {
    const auto r = cand_.q.degree();
    if (state_[v] == unassigned)
      return in_[v] <= std::max(cand_.q.a, cand_.q.c) && out_[v] <= std::max(cand_.q.b, cand_.q.d);
    const auto want_in = allowed_in(v);
    return in_[v] <= want_in && out_[v] <= r - want_in;
  }

  void assign(Vertex v, std::int8_t color, int delta) {
    for (auto w : neighbors_[v]) (color == 1 ? in_[w] : out_[w]) += delta;
  }

  void recurse(Vertex v, std::size_t in_count) {
    if (found_.size() >= limit_) return;
    if (v == n_) {
      if (in_count != cand_.size) return;
      VertexSet s(n_);
      for (Vertex u = 0; u < n_; ++u)
        if (state_[u] == 1) s.insert(u);
      found_.push_back(std::move(s));
      return;
    }
    const auto remaining = n_ - v;
    for (std::int8_t color : {std::int8_t{1}, std::int8_t{0}}) {
      if (color == 1 && in_count >= cand_.size) continue;
      if (color == 0 && in_count + remaining - 1 < cand_.size) continue;
      state_[v] = color;
      assign(v, color, +1);
      bool ok = feasible(v);
      for (auto w : neighbors_[v]) ok = ok && feasible(w);
      if (ok) recurse(v + 1, in_count + (color == 1 ? 1 : 0));
      assign(v, color, -1);
      state_[v] = unassigned;
    }
  }

  const Graph& g_;
  Candidate cand_;
  std::size_t limit_;
  std::size_t n_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<std::int8_t> state_;
  std::vector<std::int64_t> in_;
  std::vector<std::int64_t> out_;
  std::vector<VertexSet> found_;
};

}  // namespace detail

// All perfect 2-colorings, canonical and sorted by (class size, members).
inline std::vector<PerfectColoring> enumerate_perfect_two_colorings(const Graph& g, const Spectrum& spec,
                                                                    const SearchConstraints& cons = {}) {
  require_connected_regular(g);
  if (cons.max_results < 1) throw precondition_error("max_results must be at least 1");
  const auto r = static_cast<std::int64_t>(g.degree(0));
  const auto n = static_cast<std::int64_t>(g.order());
  auto candidates = detail::candidate_quotients(r, n, spec);
  if (cons.target_quotient)
    std::erase_if(candidates, [&](const auto& cand) {
      return cand.q != *cons.target_quotient && cand.q.swapped() != *cons.target_quotient;
    });

  // Each candidate search emits sets in lexicographic order, so cutting it at
  // max_results still leaves the first max_results overall after the merge.
  std::vector<std::vector<PerfectColoring>> slots(candidates.size());
  parallel_for(candidates.size(), [&](std::size_t i) {
    const auto& cand = candidates[i];
    for (auto& s : detail::ColoringSearch(g, cand, cons.max_results).run()) {
      const auto q = verify_two_coloring(g, s);
      if (!q || *q != cand.q) throw std::logic_error("search emitted an unverified coloring " + s.to_string());
      slots[i].push_back(canonical_coloring(s, *q));
    }
  });

  std::set<PerfectColoring> merged;
  for (auto& slot : slots)
    for (auto& c : slot) merged.insert(std::move(c));
  std::vector<PerfectColoring> out(merged.begin(), merged.end());
  if (out.size() > cons.max_results) out.resize(cons.max_results);
  return out;
}

inline constexpr std::size_t oracle_max_vertices = 24;

struct OracleResult {
  std::optional<VertexSet> best;
  Rational value{0};
  std::vector<VertexSet> all_optima;  // sorted; for all_perfect_2colorings the canonical classes
};

// Exhaustive scan over all nonempty proper subsets in Gray-code order with
// incremental internal-edge counters. Independent ground truth for the search
// and for every bound.
inline OracleResult brute_force_oracle(const Graph& g, const SearchConstraints& cons) {
  const auto n = g.order();
  if (n > oracle_max_vertices)
    throw precondition_error("oracle is capped at " + std::to_string(oracle_max_vertices) + " vertices");
  const bool needs_d2 = cons.objective == Objective::max_set_sigma_eq_sigma2_le;
  const auto d2 = needs_d2 ? distance2_graph(g) : Graph{};
  std::vector<std::uint32_t> adj(n);
  std::vector<std::uint32_t> adj2(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    adj[v] = static_cast<std::uint32_t>(g.neighbors(v).mask());
    if (needs_d2) adj2[v] = static_cast<std::uint32_t>(d2.neighbors(v).mask());
  }

  const std::uint64_t total = std::uint64_t{1} << n;
  const std::uint32_t full = static_cast<std::uint32_t>(total - 1);
  const std::uint64_t chunks = std::min<std::uint64_t>(total, 64);
  const std::uint64_t per_chunk = total / chunks;

  struct Partial {
    std::optional<Rational> value;
    std::vector<std::uint32_t> optima;
  };
  std::vector<Partial> parts(chunks);

  parallel_for(chunks, [&](std::size_t chunk) {
    auto& part = parts[chunk];
    auto offer = [&](const Rational& v, std::uint32_t mask) {
      if (!part.value || v > *part.value) {
        part.value = v;
        part.optima.assign(1, mask);
      } else if (v == *part.value) {
        part.optima.push_back(mask);
      }
    };
    const auto first = chunk * per_chunk;
    auto mask = static_cast<std::uint32_t>(first ^ (first >> 1));
    std::int64_t e_in = 0;
    std::int64_t e2_in = 0;
    std::int64_t deg_sum = 0;
    for (Vertex v = 0; v < n; ++v)
      if ((mask >> v) & 1U) {
        e_in += std::popcount(adj[v] & mask);
        e2_in += std::popcount(adj2[v] & mask);
        deg_sum += std::popcount(adj[v]);
      }
    for (std::uint64_t i = first; i < first + per_chunk; ++i) {
      if (i != first) {
        const auto v = static_cast<Vertex>(std::countr_zero(i));
        const std::uint32_t bit = 1U << v;
        const auto others = mask & ~bit;
        const auto de = 2 * std::popcount(adj[v] & others);
        const auto de2 = 2 * std::popcount(adj2[v] & others);
        const auto dd = std::popcount(adj[v]);
        if (mask & bit) {
          e_in -= de, e2_in -= de2, deg_sum -= dd;
        } else {
          e_in += de, e2_in += de2, deg_sum += dd;
        }
        mask ^= bit;
      }
      if (mask == 0 || mask == full) continue;
      const auto size = static_cast<std::int64_t>(std::popcount(mask));
      switch (cons.objective) {
        case Objective::max_independent:
          if (e_in == 0) offer(Rational(size), mask);
          break;
        case Objective::max_set_sigma_le:
          if (Rational(e_in, size) <= cons.a) offer(Rational(size), mask);
          break;
        case Objective::max_set_sigma_eq_sigma2_le:
          if (Rational(e_in, size) == cons.a && Rational(e2_in, size) <= cons.beta) offer(Rational(size), mask);
          break;
        case Objective::max_cut:
          offer(Rational(deg_sum - e_in), mask);
          break;
        case Objective::all_perfect_2colorings: {
          const auto s = VertexSet::from_mask(n, mask);
          if (const auto q = verify_two_coloring(g, s)) {
            const auto canon = canonical_coloring(s, *q);
            if (canon.set == s &&
                (!cons.target_quotient || *q == *cons.target_quotient || q->swapped() == *cons.target_quotient))
              part.optima.push_back(mask);
          }
          break;
        }
      }
    }
  });

  OracleResult result;
  std::vector<VertexSet> optima;
  if (cons.objective == Objective::all_perfect_2colorings) {
    std::vector<PerfectColoring> found;
    for (const auto& part : parts)
      for (auto m : part.optima) {
        const auto s = VertexSet::from_mask(n, m);
        found.push_back({s, *verify_two_coloring(g, s)});
      }
    std::sort(found.begin(), found.end());
    for (auto& c : found) optima.push_back(std::move(c.set));
    result.value = Rational(static_cast<std::int64_t>(optima.size()));
  } else {
    std::optional<Rational> best;
    for (const auto& part : parts)
      if (part.value && (!best || *part.value > *best)) best = part.value;
    if (best) {
      for (const auto& part : parts)
        if (part.value && *part.value == *best)
          for (auto m : part.optima) optima.push_back(VertexSet::from_mask(n, m));
      std::sort(optima.begin(), optima.end());
      result.value = *best;
    }
  }
  if (!optima.empty()) result.best = optima.front();
  if (optima.size() > cons.max_results) optima.resize(cons.max_results);
  result.all_optima = std::move(optima);
  return result;
}

}  // namespace equipart
