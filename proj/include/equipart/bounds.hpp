#pragma once

// Spectral extremal bounds on regular graphs. Every report carries the bound
// value, the value attained by the given subset, and a tightness verdict that is
// only `tight` once the exact verifier has confirmed the quotient matrix the
// bound predicts for its extremal sets.

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "equipart/equitable.hpp"
#include "equipart/graph.hpp"
#include "equipart/number.hpp"
#include "equipart/spectral.hpp"

namespace equipart {

inline constexpr double default_bound_tolerance = 1e-8;

enum class Verdict {
  strict,                        // inequality holds strictly
  tight,                         // equality, confirmed by the exact verifier
  numerically_tight_unverified,  // equal within tolerance only, verifier disagrees
  inconsistent,                  // exact equality without the predicted partition (or the converse)
  coincident,                    // two bound values coincide; no subset involved
  not_applicable,
};

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::strict: return "strict";
    case Verdict::tight: return "tight";
    case Verdict::numerically_tight_unverified: return "numerically_tight_unverified";
    case Verdict::inconsistent: return "inconsistent";
    case Verdict::coincident: return "coincident";
    case Verdict::not_applicable: return "not_applicable";
  }
  return "?";
}

// upper: attained <= value; lower: attained >= value.
enum class Sense { upper, lower };

inline const char* to_string(Sense s) { return s == Sense::upper ? "upper" : "lower"; }

struct Witness {
  VertexSet set;
  QuotientMatrix2 quotient;
};

struct BoundReport {
  std::string name;
  Sense sense = Sense::upper;
  Number value;
  Number attained;
  bool holds = true;
  Verdict verdict = Verdict::strict;
  std::optional<Witness> witness;
  std::optional<ColorMatrix> color_quotient;
  std::map<std::string, Number> detail;
  std::string note;

  bool tight() const { return verdict == Verdict::tight; }
};

// Two reports computed together: (lower, upper) for the cut and internal-edge
// bounds, (class 1, class 2) for the sigma2 comparison.
struct BoundPair {
  BoundReport first;
  BoundReport second;
};

namespace detail {

inline bool eigenvalue_matches(std::int64_t theta, const Eigenspace& space, const Spectrum& spec) {
  if (space.integral) return theta == *space.integral;
  return std::abs(static_cast<double>(theta) - space.value) <= spec.match_tolerance();
}

inline void require_proper(const Graph& g, const VertexSet& s, const char* what) {
  if (s.universe() != g.order()) throw precondition_error(std::string(what) + ": vertex set universe does not match");
  if (s.empty() || s.size() == g.order())
    throw precondition_error(std::string(what) + ": set must be nonempty and proper");
}

inline std::int64_t count(const VertexSet& s) { return static_cast<std::int64_t>(s.size()); }

// Fills holds/verdict/witness. `matches` is the quotient the bound predicts at
// equality; with `converse` set, a matching partition that misses equality is
// flagged as inconsistent too.
inline void settle(BoundReport& rep, const Graph& g, const VertexSet& s, double tol,
                   const std::function<bool(const QuotientMatrix2&)>& matches, bool converse = true) {
  const int cmp = compare(rep.attained, rep.value, tol);
  rep.holds = rep.sense == Sense::upper ? cmp <= 0 : cmp >= 0;
  const auto q = verify_two_coloring(g, s);
  const bool predicted = q && matches(*q);
  if (cmp == 0) {
    if (predicted) {
      rep.verdict = Verdict::tight;
      rep.witness = Witness{s, *q};
    } else {
      rep.verdict = rep.value.exact() && rep.attained.exact() ? Verdict::inconsistent
                                                               : Verdict::numerically_tight_unverified;
    }
  } else {
    rep.verdict = predicted && converse ? Verdict::inconsistent : Verdict::strict;
  }
}

inline void require_params_match(const AmplyParams& params, const Graph& g) {
  if (detect_amply_regular(g) != params) throw precondition_error("amply-regular parameters do not match the graph");
}

}  // namespace detail

// |S|/n <= (r-d)/(2r-a-d) when every x in S has <= a neighbours in S and every
// y outside has >= d neighbours outside.
inline BoundReport hamming_type(const Graph& g, const VertexSet& s, std::int64_t a, std::int64_t d,
                                double tol = default_bound_tolerance) {
  const auto r = static_cast<std::int64_t>(require_regular(g));
  detail::require_proper(g, s, "hamming_type");
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto in_s = static_cast<std::int64_t>(g.neighbors(v).intersection_size(s));
    if (s.contains(v) && in_s > a)
      throw precondition_error("hamming_type: vertex " + std::to_string(v) + " in S has " + std::to_string(in_s) +
                               " neighbours in S, more than a = " + std::to_string(a));
    if (!s.contains(v) && r - in_s < d)
      throw precondition_error("hamming_type: vertex " + std::to_string(v) + " outside S has " +
                               std::to_string(r - in_s) + " neighbours outside S, fewer than d = " + std::to_string(d));
  }
  const auto denom = 2 * r - a - d;
  if (denom <= 0) throw precondition_error("hamming_type: 2r - a - d must be positive");

  BoundReport rep;
  rep.name = "hamming_type";
  rep.value = Rational(r - d, denom);
  rep.attained = Rational(detail::count(s), static_cast<std::int64_t>(g.order()));
  const QuotientMatrix2 expected{a, r - a, r - d, d};
  detail::settle(rep, g, s, tol, [&](const auto& q) { return q == expected; });
  return rep;
}

// |S| <= (a - lambda_min) n / (r - lambda_min) whenever sigma(S) <= a.
inline BoundReport hoffman_average(const Graph& g, const Spectrum& spec, const VertexSet& s, const Rational& a,
                                   double tol = default_bound_tolerance) {
  const auto r = static_cast<std::int64_t>(require_regular(g));
  detail::require_proper(g, s, "hoffman_average");
  const auto sig = sigma(g, s);
  if (sig > a) throw precondition_error("hoffman_average: sigma(S) = " + to_string(sig) + " exceeds a = " + to_string(a));
  const auto lmin = spec.smallest().number();
  const Number n(static_cast<std::int64_t>(g.order()));

  BoundReport rep;
  rep.name = "hoffman_average";
  rep.value = (Number(a) - lmin) * n / (Number(r) - lmin);
  rep.attained = Number(detail::count(s));
  rep.detail["a"] = a;
  rep.detail["lambda_min"] = lmin;
  rep.detail["sigma"] = sig;
  detail::settle(rep, g, s, tol, [&](const QuotientMatrix2& q) {
    if (!is_integer(a) || !lmin.exact() || !is_integer(lmin.rational())) return false;
    const auto ai = a.numerator();
    const auto li = lmin.rational().numerator();
    return q == QuotientMatrix2{ai, r - ai, ai - li, r + li - ai};
  });
  return rep;
}

// A proper k-coloring with k = (lambda_min - r)/lambda_min must be perfect.
inline BoundReport chromatic_corollary_check(const Graph& g, const Spectrum& spec, std::span<const std::size_t> colors,
                                             double tol = default_bound_tolerance) {
  const auto r = static_cast<std::int64_t>(require_regular(g));
  if (colors.size() != g.order()) throw precondition_error("chromatic_corollary_check: coloring length mismatch");
  for (const auto& [u, v] : g.edges())
    if (colors[u] == colors[v])
      throw precondition_error("chromatic_corollary_check: improper coloring, edge (" + std::to_string(u) + "," +
                               std::to_string(v) + ") is monochromatic");
  const auto lmin = spec.smallest().number();
  if (compare(lmin, Number(0), tol) == 0) throw precondition_error("chromatic_corollary_check: lambda_min is 0");

  std::size_t k = 0;
  for (auto c : colors) k = std::max(k, c + 1);

  BoundReport rep;
  rep.name = "chromatic_corollary";
  rep.sense = Sense::lower;
  rep.value = (lmin - Number(r)) / lmin;
  rep.attained = Number(static_cast<std::int64_t>(k));
  rep.detail["lambda_min"] = lmin;
  const int cmp = compare(rep.attained, rep.value, tol);
  rep.holds = cmp >= 0;
  if (cmp != 0) {
    rep.verdict = Verdict::not_applicable;
    rep.note = "corollary not applicable: number of colors differs from (lambda_min - r)/lambda_min";
    return rep;
  }
  if (auto q = verify_coloring(g, colors)) {
    rep.verdict = Verdict::tight;
    rep.color_quotient = std::move(q);
  } else {
    rep.verdict = rep.value.exact() ? Verdict::inconsistent : Verdict::numerically_tight_unverified;
  }
  return rep;
}

// |e(A,B) - r|A||B|/n| <= |lambda| sqrt(|A||B|(1-|A|/n)(1-|B|/n)), lambda the
// second largest eigenvalue in modulus.
inline BoundReport expander_mixing(const Graph& g, const Spectrum& spec, const VertexSet& a, const VertexSet& b,
                                   double tol = default_bound_tolerance) {
  require_connected_regular(g);
  require_simple_top(spec);
  detail::require_proper(g, a, "expander_mixing");
  detail::require_proper(g, b, "expander_mixing");
  const auto r = static_cast<std::int64_t>(g.degree(0));
  const auto n = static_cast<std::int64_t>(g.order());
  const auto sa = detail::count(a);
  const auto sb = detail::count(b);
  const auto& space = spec.second_max_modulus();
  const auto lam = space.number();

  const auto e = edge_count_between(g, a, b);
  auto lhs = Rational(e) - Rational(r * sa * sb, n);
  if (lhs < Rational(0)) lhs = -lhs;
  const Number rhs_sq = lam * lam * Number(Rational(sa * sb * (n - sa) * (n - sb), n * n));

  BoundReport rep;
  rep.name = "expander_mixing";
  rep.attained = lhs;
  if (rhs_sq.exact()) {
    if (auto root = exact_sqrt(rhs_sq.rational()))
      rep.value = *root;
    else
      rep.value = Number::approx(std::sqrt(rhs_sq.to_double()));
  } else {
    rep.value = Number::approx(std::sqrt(rhs_sq.to_double()));
  }
  rep.detail["lambda"] = lam;
  rep.detail["e_ab"] = Rational(e);
  rep.detail["rhs_squared"] = rhs_sq;

  // Decide on squares so that integral spectra give an exact verdict.
  const int cmp = rhs_sq.exact() ? compare(Number(lhs * lhs), rhs_sq, tol) : compare(rep.attained, rep.value, tol);
  rep.holds = cmp <= 0;
  const bool paired = b == a || b == a.complement();
  const auto q = verify_two_coloring(g, a);
  const bool predicted = paired && q && [&] {
    const auto theta = quotient_second_eigenvalue(*q);
    if (space.integral) return std::abs(theta) == std::abs(*space.integral);
    return std::abs(std::abs(static_cast<double>(theta)) - std::abs(space.value)) <= spec.match_tolerance();
  }();
  if (cmp == 0) {
    if (predicted) {
      rep.verdict = Verdict::tight;
      rep.witness = Witness{a, *q};
    } else {
      rep.verdict = rhs_sq.exact() ? Verdict::inconsistent : Verdict::numerically_tight_unverified;
    }
  } else {
    rep.verdict = predicted ? Verdict::inconsistent : Verdict::strict;
  }
  return rep;
}

// (r - lambda_1)|A||B|/n <= e(A, V\A) <= (r - lambda_k)|A||B|/n.
inline BoundPair cut_size_bounds(const Graph& g, const Spectrum& spec, const VertexSet& a,
                                 double tol = default_bound_tolerance) {
  require_connected_regular(g);
  require_simple_top(spec);
  detail::require_proper(g, a, "cut_size_bounds");
  const auto r = static_cast<std::int64_t>(g.degree(0));
  const auto n = static_cast<std::int64_t>(g.order());
  const auto b = a.complement();
  const Number sizes(Rational(detail::count(a) * detail::count(b), n));
  const Number e(edge_count_between(g, a, b));
  const auto& l1 = spec.second_largest();
  const auto& lk = spec.smallest();

  BoundPair out;
  auto& lower = out.first;
  lower.name = "cut_lower";
  lower.sense = Sense::lower;
  lower.value = (Number(r) - l1.number()) * sizes;
  lower.attained = e;
  lower.detail["lambda_1"] = l1.number();
  detail::settle(lower, g, a, tol,
                 [&](const auto& q) { return detail::eigenvalue_matches(quotient_second_eigenvalue(q), l1, spec); });

  auto& upper = out.second;
  upper.name = "cut_upper";
  upper.value = (Number(r) - lk.number()) * sizes;
  upper.attained = e;
  upper.detail["lambda_k"] = lk.number();
  upper.detail["max_cut_bound"] = (Number(r) - lk.number()) * Number(Rational(n, 4));
  detail::settle(upper, g, a, tol,
                 [&](const auto& q) { return detail::eigenvalue_matches(quotient_second_eigenvalue(q), lk, spec); });
  return out;
}

// lambda_k|C| + (r-lambda_k)|C|^2/n <= e(C,C) <= lambda_1|C| + (r-lambda_1)|C|^2/n.
inline BoundPair internal_edge_bounds(const Graph& g, const Spectrum& spec, const VertexSet& c,
                                      double tol = default_bound_tolerance) {
  require_connected_regular(g);
  require_simple_top(spec);
  detail::require_proper(g, c, "internal_edge_bounds");
  const auto r = static_cast<std::int64_t>(g.degree(0));
  const auto n = static_cast<std::int64_t>(g.order());
  const auto size = detail::count(c);
  const Number e(edge_count_between(g, c, c));
  const auto& l1 = spec.second_largest();
  const auto& lk = spec.smallest();
  auto bound = [&](const Number& lam) {
    return lam * Number(size) + (Number(r) - lam) * Number(Rational(size * size, n));
  };

  BoundPair out;
  auto& lower = out.first;
  lower.name = "internal_edges_lower";
  lower.sense = Sense::lower;
  lower.value = bound(lk.number());
  lower.attained = e;
  lower.detail["lambda_k"] = lk.number();
  detail::settle(lower, g, c, tol,
                 [&](const auto& q) { return detail::eigenvalue_matches(quotient_second_eigenvalue(q), lk, spec); });

  auto& upper = out.second;
  upper.name = "internal_edges_upper";
  upper.value = bound(l1.number());
  upper.attained = e;
  upper.detail["lambda_1"] = l1.number();
  detail::settle(upper, g, c, tol,
                 [&](const auto& q) { return detail::eigenvalue_matches(quotient_second_eigenvalue(q), l1, spec); });
  return out;
}

// With a = sigma(S), d = sigma(V\S) and Q = ((a, r-a), (r-d, d)):
// sigma2(S) >= p(Q)_11 and sigma2(V\S) >= p(Q)_22, both equalities exactly when
// {S, V\S} is equitable with quotient Q.
inline BoundPair sigma2_quotient_bounds(const AmplyParams& params, const Graph& g, const VertexSet& s,
                               double tol = default_bound_tolerance) {
  detail::require_params_match(params, g);
  detail::require_proper(g, s, "sigma2_quotient_bounds");
  const auto d2 = distance2_graph(g);
  const auto t = s.complement();
  const Rational r(params.r);
  const auto a = sigma(g, s);
  const auto d = sigma(g, t);
  const auto sq11 = a * a + (r - a) * (r - d);
  const auto sq22 = (r - d) * (r - a) + d * d;

  auto predicted = [&](const QuotientMatrix2& q) {
    return is_integer(a) && is_integer(d) &&
           q == QuotientMatrix2{a.numerator(), params.r - a.numerator(), params.r - d.numerator(), d.numerator()};
  };

  BoundPair out;
  auto fill = [&](BoundReport& rep, const char* name, const Rational& pq, const VertexSet& set) {
    rep.name = name;
    rep.sense = Sense::lower;
    rep.value = pq;
    rep.attained = sigma2_with(d2, set);
    rep.detail["a"] = a;
    rep.detail["d"] = d;
    rep.note = "sigma2 is bounded below by the diagonal entry of p(Q)";
  };
  fill(out.first, "sigma2_quotient_class1", params.p2 * sq11 + params.p1 * a + params.p0, s);
  fill(out.second, "sigma2_quotient_class2", params.p2 * sq22 + params.p1 * d + params.p0, t);
  detail::settle(out.first, g, s, tol, predicted);
  detail::settle(out.second, g, s, tol, predicted);
  return out;
}

// sigma2(S) <= -p2 r (lambda_min + 1) for independent S.
inline BoundReport independent_sigma2_max(const AmplyParams& params, const Spectrum& spec) {
  BoundReport rep;
  rep.name = "independent_sigma2_max";
  rep.value = -Number(params.p2) * Number(params.r) * (spec.smallest().number() + Number(1));
  rep.detail["lambda_min"] = spec.smallest().number();
  rep.verdict = Verdict::not_applicable;
  rep.note = "no subset given";
  return rep;
}

inline BoundReport independent_sigma2_max(const AmplyParams& params, const Spectrum& spec, const Graph& g,
                                          const VertexSet& s, double tol = default_bound_tolerance) {
  detail::require_params_match(params, g);
  detail::require_proper(g, s, "independent_sigma2_max");
  if (edge_count_between(g, s, s) != 0) throw precondition_error("independent_sigma2_max: set is not independent");
  auto rep = independent_sigma2_max(params, spec);
  rep.note.clear();
  rep.attained = sigma2(g, s);
  const auto& lk = spec.smallest();
  detail::settle(rep, g, s, tol,
                 [&](const auto& q) { return detail::eigenvalue_matches(quotient_second_eigenvalue(q), lk, spec); });
  return rep;
}

// |C| <= (beta - p(a)) n / (p2 (r-a)^2 + beta - p(a)) when sigma(C) = a and
// sigma2(C) <= beta; equality forces {C, V\C} to be equitable.
inline BoundReport eppc_size_bound(const AmplyParams& params, const Graph& g, const VertexSet& c, const Rational& beta,
                                   std::optional<Rational> a_given = std::nullopt,
                                   double tol = default_bound_tolerance) {
  detail::require_params_match(params, g);
  detail::require_proper(g, c, "eppc_size_bound");
  const auto a = sigma(g, c);
  if (a_given && *a_given != a)
    throw precondition_error("eppc_size_bound: sigma(C) = " + to_string(a) + " differs from a = " + to_string(*a_given));
  const Rational r(params.r);
  if (a == r) throw precondition_error("eppc_size_bound: a = r is degenerate");
  const auto s2 = sigma2(g, c);
  if (s2 > beta)
    throw precondition_error("eppc_size_bound: sigma2(C) = " + to_string(s2) + " exceeds beta = " + to_string(beta));
  if (params.p2 <= Rational(0)) throw precondition_error("eppc_size_bound: requires p2 > 0");
  const auto excess = beta - params.poly(a);
  if (excess <= Rational(0)) throw precondition_error("eppc_size_bound: beta must exceed p(a) = " + to_string(params.poly(a)));

  const Rational n(static_cast<std::int64_t>(g.order()));
  const auto theta = a - excess / (params.p2 * (r - a));
  const auto rho = Rational(detail::count(c)) / n;

  BoundReport rep;
  rep.name = "eppc_size";
  rep.value = excess * n / (params.p2 * (r - a) * (r - a) + excess);
  rep.attained = Rational(detail::count(c));
  rep.detail["a"] = a;
  rep.detail["beta"] = beta;
  rep.detail["sigma2"] = s2;
  rep.detail["p_a"] = params.poly(a);
  rep.detail["theta"] = theta;
  rep.detail["rho"] = rho;
  rep.detail["theta_chain_rhs"] = (excess / params.p2 + (a - theta) * (a - theta)) / ((r - theta) * (r - theta));
  // Any equitable C with sigma2(C) == beta attains the bound (class-size formula).
  detail::settle(rep, g, c, tol, [](const auto&) { return true; }, s2 == beta);
  return rep;
}

// Independent-set regime: density 1/(1 + p2 r^2/(beta + p2 r)) against the
// Hoffman density -lambda_min/(r - lambda_min).
inline BoundReport compare_new_vs_hoffman(const AmplyParams& params, const Spectrum& spec, const Rational& beta,
                                          double tol = default_bound_tolerance) {
  const auto lmin = spec.smallest().number();
  const Number r(params.r);
  const Number p2(params.p2);
  const auto threshold = -p2 * r * (lmin + Number(1));
  if (compare(Number(beta), threshold, tol) > 0)
    throw precondition_error("compare_new_vs_hoffman: beta above -p2 r (lambda_min + 1) = " + format_human(threshold) +
                             "; regimes coincide or Hoffman binds");
  if (beta + params.p2 * params.r <= Rational(0)) throw precondition_error("compare_new_vs_hoffman: beta + p2 r must be positive");

  BoundReport rep;
  rep.name = "compare_new_vs_hoffman";
  rep.value = -lmin / (r - lmin);
  rep.attained = Rational(1) / (Rational(1) + params.p2 * params.r * params.r / (beta + params.p2 * params.r));
  rep.detail["beta"] = beta;
  rep.detail["threshold"] = threshold;
  rep.detail["lambda_min"] = lmin;
  const int cmp = compare(rep.attained, rep.value, tol);
  rep.holds = cmp <= 0;
  rep.verdict = cmp == 0 ? Verdict::coincident : Verdict::strict;
  return rep;
}

}  // namespace equipart
