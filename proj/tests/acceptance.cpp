// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "equipart/equipart.hpp"
#include "oracle.hpp"

using namespace equipart;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream why;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <class F>
void for_each_proper_subset(const Graph& g, F&& f) {
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << g.order()); ++mask)
    f(VertexSet::from_mask(g.order(), mask));
}

std::vector<oracle::Named> sweep_corpus() {
  return {
      {"petersen", generate_family("petersen", {})},
      {"hypercube3", generate_family("hypercube", {3})},
      {"hypercube4", generate_family("hypercube", {4})},
      {"hamming2_3", generate_family("hamming", {2, 3})},
      {"k33", generate_family("complete_bipartite", {3, 3})},
  };
}

std::optional<AmplyParams> amply(const Graph& g) {
  try {
    return detect_amply_regular(g);
  } catch (const precondition_error&) {
    return std::nullopt;
  }
}

// p(Q) = p2 Q^2 + p1 Q + p0 I, diagonal entries.
std::pair<Rational, Rational> p_of_q_diagonal(const AmplyParams& p, const QuotientMatrix2& q) {
  const Rational a(q.a), b(q.b), c(q.c), d(q.d);
  return {p.p2 * (a * a + b * c) + p.p1 * a + p.p0, p.p2 * (c * b + d * d) + p.p1 * d + p.p0};
}

// 1. Hoffman tightness on Petersen.
Check hoffman_tightness() {
  Check c;
  const auto t0 = Clock::now();
  const auto g = generate_family("petersen", {});
  const auto spec = eigen_decompose(g);
  const VertexSet s(10, {0, 1, 2, 3});
  const auto rep = hoffman_average(g, spec, s, Rational(0));
  c.expect(rep.value.exact() && rep.value.rational() == Rational(4), "bound value is not exactly 4; ");
  SearchConstraints cons;
  cons.objective = Objective::max_independent;
  const auto mis = brute_force_oracle(g, cons);
  c.expect(mis.value == Rational(4), "oracle max independent set is not 4; ");
  c.expect(!mis.all_optima.empty(), "no optima; ");
  for (const auto& opt : mis.all_optima)
    c.expect(verify_two_coloring(g, opt) == QuotientMatrix2{0, 3, 2, 1}, "optimum {" + opt.to_string() + "} not ((0,3),(2,1)); ");
  const double t = seconds_since(t0);
  c.expect(t < 1.0, "took " + std::to_string(t) + " s; ");
  c.why << mis.all_optima.size() << " maximum independent sets";
  return c;
}

// 2. eppc bound: holds for every subset; equality iff equitable.
Check eppc_equivalence() {
  Check c;
  const auto t0 = Clock::now();
  std::size_t subsets = 0, tight = 0;
  for (const auto& [name, g] : sweep_corpus()) {
    const auto params = detect_amply_regular(g);
    for_each_proper_subset(g, [&](const VertexSet& s) {
      ++subsets;
      const auto a = sigma(g, s);
      const auto beta = sigma2(g, s);
      const auto rep = eppc_size_bound(params, g, s, beta, a);
      const auto size = Rational(static_cast<std::int64_t>(s.size()));
      const auto bound = rep.value.rational();
      const bool equitable = verify_two_coloring(g, s).has_value();
      c.expect(size <= bound, std::string(name) + " {" + s.to_string() + "} exceeds bound; ");
      c.expect((size == bound) == equitable, std::string(name) + " {" + s.to_string() + "} equality/equitable mismatch; ");
      c.expect(rep.tight() == equitable, std::string(name) + " {" + s.to_string() + "} verdict mismatch; ");
      tight += equitable ? 1 : 0;
    });
  }
  const double t = seconds_since(t0);
  c.expect(t < 300.0, "took " + std::to_string(t) + " s; ");
  c.why << subsets << " subsets, " << tight << " at equality, " << t << " s";
  return c;
}

// 3. Expander mixing lemma sweep.
Check expander_mixing_sweep() {
  Check c;
  constexpr double tol = 1e-8;
  std::size_t pairs = 0, tight = 0;
  auto run = [&](const char* name, const Graph& g, const Spectrum& spec, const VertexSet& a, const VertexSet& b) {
    ++pairs;
    const auto rep = expander_mixing(g, spec, a, b);
    const double lhs = rep.attained.to_double();
    const double rhs = rep.value.to_double();
    c.expect(lhs <= rhs + tol, std::string(name) + " lhs > rhs; ");
    if (std::abs(lhs - rhs) <= tol) {
      ++tight;
      const bool paired = b == a || b == a.complement();
      const auto q = verify_two_coloring(g, a);
      const auto lam = std::abs(*spec.second_max_modulus().integral);
      c.expect(paired, std::string(name) + " tight with unrelated B; ");
      c.expect(q && std::abs(quotient_second_eigenvalue(*q)) == lam,
               std::string(name) + " tight without an equitable partition at lambda; ");
      c.expect(rep.tight(), std::string(name) + " tight pair not reported tight; ");
    } else {
      c.expect(!rep.tight(), std::string(name) + " strict pair reported tight; ");
    }
  };

  std::mt19937_64 rng(20240611);
  const auto corpus = sweep_corpus();
  std::vector<Spectrum> spectra;
  for (const auto& e : corpus) spectra.push_back(eigen_decompose(e.graph));
  const std::size_t random_pairs = 100000;
  for (std::size_t i = 0; i < random_pairs; ++i) {
    const auto k = i % corpus.size();
    const auto& g = corpus[k].graph;
    const auto a = oracle::random_subset(g.order(), rng);
    // every eighth pair uses B = A or its complement so that equality shows up
    VertexSet b = i % 8 == 0 ? a : i % 8 == 1 ? a.complement() : oracle::random_subset(g.order(), rng);
    run(corpus[k].name, g, spectra[k], a, b);
  }
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const auto& g = corpus[k].graph;
    if (g.order() > 10) continue;
    for_each_proper_subset(g, [&](const VertexSet& a) {
      for_each_proper_subset(g, [&](const VertexSet& b) { run(corpus[k].name, g, spectra[k], a, b); });
    });
  }

  const auto k33 = generate_family("complete_bipartite", {3, 3});
  const auto sides = expander_mixing(k33, eigen_decompose(k33), VertexSet(6, {0, 1, 2}), VertexSet(6, {3, 4, 5}));
  c.expect(sides.attained == Number(Rational(9, 2)) && sides.value == Number(Rational(9, 2)) && sides.tight(),
           "K33 side-vs-side is not exactly 9/2 = 9/2; ");
  c.why << pairs << " pairs, " << tight << " tight";
  return c;
}

// 4. Cut and internal-edge corollaries.
Check cut_corollaries() {
  Check c;
  const auto q3 = generate_family("hypercube", {3});
  const auto spec3 = eigen_decompose(q3);
  const VertexSet parity(8, {0, 3, 5, 6});
  SearchConstraints cons;
  cons.objective = Objective::max_cut;
  const auto best = brute_force_oracle(q3, cons);
  c.expect(best.value == Rational(12), "Q3 max cut is not 12; ");
  c.expect(best.all_optima == std::vector<VertexSet>{parity, parity.complement()}, "Q3 max cut not only at parity; ");
  const auto par = cut_size_bounds(q3, spec3, parity);
  c.expect(par.second.tight() && par.second.value == Number(Rational(12)) &&
               par.second.detail.at("lambda_k") == Number(Rational(-3)),
           "Q3 parity upper bound not tight at 12 with lambda_k = -3; ");
  const auto face = cut_size_bounds(q3, spec3, VertexSet(8, {0, 1, 2, 3}));
  c.expect(face.first.tight() && face.first.value == Number(Rational(4)) &&
               face.first.detail.at("lambda_1") == Number(Rational(1)),
           "Q3 face lower bound not tight at 4 with lambda_1 = 1; ");
  const auto pet = generate_family("petersen", {});
  const auto inner = internal_edge_bounds(pet, eigen_decompose(pet), VertexSet(10, {0, 1, 2, 3}));
  c.expect(inner.first.tight() && inner.first.value == Number(Rational(0)) &&
               inner.first.detail.at("lambda_k") == Number(Rational(-2)),
           "Petersen 4-set internal lower bound not tight at 0 with lambda_k = -2; ");

  std::size_t subsets = 0;
  for (const auto& [name, g] : oracle::corpus()) {
    if (g.order() > 12) continue;
    const auto spec = eigen_decompose(g);
    const auto l1 = *spec.second_largest().integral;
    const auto lk = *spec.smallest().integral;
    for_each_proper_subset(g, [&](const VertexSet& s) {
      ++subsets;
      const auto q = verify_two_coloring(g, s);
      const auto theta = q ? std::optional(quotient_second_eigenvalue(*q)) : std::nullopt;
      const auto cut = cut_size_bounds(g, spec, s);
      const auto edges = internal_edge_bounds(g, spec, s);
      const std::string at = std::string(name) + " {" + s.to_string() + "}";
      for (const auto* rep : {&cut.first, &cut.second, &edges.first, &edges.second}) {
        c.expect(rep->holds, at + " " + rep->name + " violated; ");
        const bool equal = compare(rep->attained, rep->value, 0.0) == 0;
        c.expect(equal == rep->tight(), at + " " + rep->name + " equality without verified tightness; ");
      }
      c.expect(cut.first.tight() == (theta == l1), at + " cut lower tightness mismatch; ");
      c.expect(cut.second.tight() == (theta == lk), at + " cut upper tightness mismatch; ");
      c.expect(edges.first.tight() == (theta == lk), at + " internal lower tightness mismatch; ");
      c.expect(edges.second.tight() == (theta == l1), at + " internal upper tightness mismatch; ");
    });
  }
  c.why << subsets << " subsets swept";
  return c;
}

// 5. sigma2 against p(Q): equality on perfect colorings, strict elsewhere.
Check sigma2_quotient_equality() {
  Check c;
  std::size_t colorings = 0, strict = 0;
  for (const auto& [name, g] : oracle::corpus()) {
    const auto params = amply(g);
    if (!params) continue;
    const auto spec = eigen_decompose(g);
    for (const auto& col : enumerate_perfect_two_colorings(g, spec)) {
      ++colorings;
      const auto [p11, p22] = p_of_q_diagonal(*params, col.quotient);
      const std::string at = std::string(name) + " {" + col.set.to_string() + "}";
      c.expect(sigma2(g, col.set) == p11, at + " sigma2(C1) != p(Q)_11; ");
      c.expect(sigma2(g, col.set.complement()) == p22, at + " sigma2(C2) != p(Q)_22; ");
      const auto rep = sigma2_quotient_bounds(*params, g, col.set);
      c.expect(rep.first.tight() && rep.second.tight(), at + " not reported tight; ");
    }
    if (g.order() > 12) continue;
    for_each_proper_subset(g, [&](const VertexSet& s) {
      if (verify_two_coloring(g, s)) return;
      ++strict;
      const auto rep = sigma2_quotient_bounds(*params, g, s);
      const std::string at = std::string(name) + " {" + s.to_string() + "}";
      c.expect(rep.first.attained.rational() > rep.first.value.rational(), at + " class 1 not strict; ");
      c.expect(rep.second.attained.rational() > rep.second.value.rational(), at + " class 2 not strict; ");
    });
  }
  c.why << colorings << " colorings at equality, " << strict << " non-equitable subsets strict";
  return c;
}

// 6. Class-size formula on every enumerated coloring.
Check size_formula() {
  Check c;
  std::size_t colorings = 0;
  for (const auto& [name, g] : oracle::corpus()) {
    const auto params = amply(g);
    if (!params) continue;
    const auto n = static_cast<std::int64_t>(g.order());
    for (const auto& col : enumerate_perfect_two_colorings(g, eigen_decompose(g))) {
      ++colorings;
      const auto& q = col.quotient;
      const Rational a(q.a);
      const auto beta = params->p2 * (a * a + Rational(q.b * q.c)) + params->p1 * a + params->p0;
      const auto excess = beta - params->poly(a);
      const auto formula = excess * Rational(n) / (params->p2 * (Rational(params->r) - a) * (Rational(params->r) - a) + excess);
      const auto size = Rational(static_cast<std::int64_t>(col.set.size()));
      const std::string at = std::string(name) + " {" + col.set.to_string() + "}";
      c.expect(formula == size, at + " formula " + to_string(formula) + " != |C1|; ");
      c.expect(predicted_class_size(*params, q, n) == size, at + " predicted_class_size mismatch; ");
      c.expect(beta == sigma2(g, col.set), at + " beta != sigma2(C1); ");
    }
  }
  c.why << colorings << " colorings";
  return c;
}

// 7. New density bound against Hoffman on Petersen.
Check comparison_claim() {
  Check c;
  const auto g = generate_family("petersen", {});
  const auto params = detect_amply_regular(g);
  const auto spec = eigen_decompose(g);
  const auto two = compare_new_vs_hoffman(params, spec, Rational(2));
  c.expect(two.attained == Number(Rational(5, 14)), "new density at beta=2 is not 5/14; ");
  c.expect(two.value == Number(Rational(2, 5)), "Hoffman density is not 2/5; ");
  c.expect(two.attained.rational() < two.value.rational() && two.verdict == Verdict::strict, "5/14 < 2/5 not reported; ");
  SearchConstraints cons;
  cons.objective = Objective::max_set_sigma_eq_sigma2_le;
  cons.a = 0;
  cons.beta = 2;
  const auto best = brute_force_oracle(g, cons);
  const auto cap = (Rational(10) * Rational(5, 14)).numerator() / (Rational(10) * Rational(5, 14)).denominator();
  c.expect(best.value == Rational(3), "oracle max is not 3; ");
  c.expect(best.value <= Rational(cap), "oracle max exceeds floor(10 * 5/14); ");
  const auto three = compare_new_vs_hoffman(params, spec, Rational(3));
  c.expect(three.attained == Number(Rational(2, 5)) && three.verdict == Verdict::coincident, "beta=3 does not coincide at 2/5; ");
  c.why << "oracle max " << to_string(best.value) << " <= " << cap;
  return c;
}

// 8. Search completeness against the exhaustive scan.
Check search_completeness() {
  Check c;
  std::size_t total = 0;
  for (const auto& [name, g] : oracle::corpus()) {
    if (g.order() > 14) continue;
    const auto spec = eigen_decompose(g);
    const auto found = enumerate_perfect_two_colorings(g, spec);
    std::vector<PerfectColoring> scan;
    for_each_proper_subset(g, [&](const VertexSet& s) {
      if (const auto q = verify_two_coloring(g, s)) {
        const auto canon = canonical_coloring(s, *q);
        if (canon.set == s) scan.push_back(canon);
      }
    });
    std::sort(scan.begin(), scan.end());
    c.expect(found == scan, std::string(name) + " enumeration differs from scan; ");
    for (const auto& col : found) {
      const auto theta = quotient_second_eigenvalue(col.quotient);
      c.expect(spec.find(static_cast<double>(theta)) != nullptr, std::string(name) + " eigenvalue outside spectrum; ");
    }
    total += found.size();
  }
  c.why << total << " colorings matched";
  return c;
}

// 9. Spectral accuracy, trace and moment identities.
Check spectral_accuracy() {
  Check c;
  const auto pet = eigen_decompose(generate_family("petersen", {}));
  const double want[] = {3.0, 1.0, -2.0};
  const std::size_t mult[] = {1, 5, 4};
  c.expect(pet.spaces().size() == 3, "Petersen does not have 3 distinct eigenvalues; ");
  for (std::size_t i = 0; i < 3 && i < pet.spaces().size(); ++i) {
    c.expect(std::abs(pet.spaces()[i].computed - want[i]) <= 1e-9, "Petersen eigenvalue off by more than 1e-9; ");
    c.expect(pet.spaces()[i].multiplicity == mult[i], "Petersen multiplicity wrong; ");
  }
  double worst_trace = 0.0;
  for (const auto& [name, g] : oracle::corpus()) {
    const auto spec = eigen_decompose(g);
    double t1 = 0.0, t2 = 0.0;
    for (const auto& s : spec.spaces()) {
      t1 += s.computed * static_cast<double>(s.multiplicity);
      t2 += s.computed * s.computed * static_cast<double>(s.multiplicity);
    }
    const double nr = static_cast<double>(g.order() * g.degree(0));
    worst_trace = std::max({worst_trace, std::abs(t1), std::abs(t2 - nr)});
    c.expect(std::abs(t1) <= 1e-8 && std::abs(t2 - nr) <= 1e-8, std::string(name) + " trace identity; ");
  }

  std::mt19937_64 rng(99);
  const auto corpus = oracle::corpus();
  std::vector<Spectrum> spectra;
  for (const auto& e : corpus) spectra.push_back(eigen_decompose(e.graph));
  double worst_moment = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const auto k = static_cast<std::size_t>(trial) % corpus.size();
    const auto& g = corpus[k].graph;
    const auto s = oracle::random_subset(g.order(), rng);
    const auto e = indicator_expansion(g, s, spectra[k]);
    const double n = static_cast<double>(g.order());
    const double size = static_cast<double>(s.size());
    const double r = static_cast<double>(g.degree(0));
    // (I) mass off the top eigenspace; (II) internal degree sum
    const double d1 = std::abs(e.m0 - (size - size * size / n));
    const double d2 = std::abs(r * size * size / n + e.m1 - to_double(sigma(g, s)) * size);
    worst_moment = std::max({worst_moment, d1, d2});
    c.expect(d1 <= 1e-8 && d2 <= 1e-8, std::string(corpus[k].name) + " moment identity; ");
  }
  c.why << "max trace error " << worst_trace << ", max moment error " << worst_moment;
  return c;
}

// 10. graph6 round trip.
Check graph6_round_trip() {
  Check c;
  for (const auto& [name, g] : oracle::corpus()) {
    c.expect(parse_graph6(emit_graph6(g)) == g, std::string(name) + " round trip; ");
  }
  c.expect(parse_graph6("Bw") == generate_family("complete", {3}) && emit_graph6(generate_family("complete", {3})) == "Bw",
           "Bw <-> K3; ");
  c.expect(parse_graph6("A_") == build_graph(2, {{0, 1}}) && emit_graph6(build_graph(2, {{0, 1}})) == "A_", "A_ <-> K2; ");
  c.why << oracle::corpus().size() << " corpus graphs";
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Check()>>> criteria{
      {"Hoffman tightness on Petersen", hoffman_tightness},
      {"eppc bound equality iff equitable", eppc_equivalence},
      {"expander mixing lemma sweep", expander_mixing_sweep},
      {"cut and internal-edge corollaries", cut_corollaries},
      {"sigma2 equality with p(Q)", sigma2_quotient_equality},
      {"class-size formula", size_formula},
      {"new bound vs Hoffman", comparison_claim},
      {"search completeness", search_completeness},
      {"spectral accuracy", spectral_accuracy},
      {"graph6 round trip", graph6_round_trip},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.ok = false;
      c.why << "exception: " << e.what();
    }
    failed += c.ok ? 0 : 1;
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " ("
              << c.why.str() << ") [" << seconds_since(t0) << " s]" << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
