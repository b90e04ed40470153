#pragma once

// Subcommand implementations behind the `equipart` CLI. Each returns a
// ReportDocument; precondition failures of individual bounds are recorded as
// messages rather than aborting the command.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "equipart/bounds.hpp"
#include "equipart/generators.hpp"
#include "equipart/io.hpp"
#include "equipart/report.hpp"
#include "equipart/search.hpp"

namespace equipart {

enum class InputFormat { automatic, graph6, edge_list, family };

struct CliConfig {
  std::string input;  // path, "-" for stdin, or "family:name:p1,p2"
  InputFormat format = InputFormat::automatic;
  std::string set;    // --set
  std::string set2;   // --set2, second set for the mixing lemma
  std::string colors;
  std::optional<Rational> beta;
  std::optional<Rational> a;
  std::string objective = "all";
  std::size_t max_results = SIZE_MAX;
  bool json = false;
  SpectralOptions spectral;
  double bound_tolerance = default_bound_tolerance;
  std::size_t max_n = default_max_vertices;
};

inline InputFormat parse_format(const std::string& s) {
  if (s == "g6" || s == "graph6") return InputFormat::graph6;
  if (s == "el" || s == "edgelist") return InputFormat::edge_list;
  if (s == "family") return InputFormat::family;
  if (s == "auto") return InputFormat::automatic;
  throw parse_error("unknown format '" + s + "' (expected g6, el or family)");
}

// "family:hamming:2,3", "hamming:2,3" with --format family, "family:petersen".
inline Graph graph_from_family_spec(std::string spec, std::size_t max_n) {
  if (spec.starts_with("family:")) spec = spec.substr(7);
  const auto colon = spec.find(':');
  const auto name = spec.substr(0, colon);
  std::vector<std::int64_t> params;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        std::size_t pos = 0;
        params.push_back(std::stoll(tok, &pos));
        if (pos != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw parse_error("bad family parameter '" + tok + "'");
      }
    }
  }
  return generate_family(name, params, max_n);
}

inline Graph load_graph(const CliConfig& cfg) {
  if (cfg.input.empty()) throw parse_error("no input given (use --input)");
  auto format = cfg.format;
  if (format == InputFormat::automatic) {
    if (cfg.input.starts_with("family:"))
      format = InputFormat::family;
    else if (cfg.input.ends_with(".g6"))
      format = InputFormat::graph6;
    else
      format = InputFormat::edge_list;
  }
  if (format == InputFormat::family) return graph_from_family_spec(cfg.input, cfg.max_n);

  std::string text;
  if (cfg.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(cfg.input, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + cfg.input + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    if (format == InputFormat::graph6) {
      auto g = parse_graph6(text);
      if (g.order() > cfg.max_n) throw precondition_error("graph exceeds --max-n");
      return g;
    }
    return parse_edge_list(text, cfg.max_n);
  } catch (const parse_error& e) {
    throw parse_error(cfg.input + ": " + e.what());
  }
}

inline ReportDocument base_document(const Graph& g, const CliConfig& cfg, bool with_spectrum = true) {
  ReportDocument doc;
  doc.tolerance = cfg.spectral.tolerance;
  doc.merge_tolerance = cfg.spectral.merge_tolerance;
  doc.bound_tolerance = cfg.bound_tolerance;
  doc.graph = summarize(g);
  if (with_spectrum) doc.spectrum = spectrum_entries(eigen_decompose(g, cfg.spectral));
  return doc;
}

inline ReportDocument cmd_analyze(const CliConfig& cfg) {
  const auto g = load_graph(cfg);
  auto doc = base_document(g, cfg);
  if (!doc.graph.degree) doc.messages.push_back("not regular; spectral analysis only");
  else if (!doc.graph.connected) doc.messages.push_back("not connected; bounds requiring connectivity are unavailable");
  if (!doc.graph.amply && doc.graph.degree) doc.messages.push_back(doc.graph.amply_reason);
  return doc;
}

namespace detail {

template <typename F>
void try_bound(ReportDocument& doc, const char* name, F&& f) {
  try {
    f();
  } catch (const precondition_error& e) {
    doc.messages.push_back(std::string(name) + ": " + e.what());
  }
}

inline VertexSet require_set(const Graph& g, const std::string& text, const char* flag) {
  if (text.empty()) throw precondition_error(std::string("this command needs ") + flag);
  return parse_vertex_set(text, g.order());
}

}  // namespace detail

inline ReportDocument cmd_bounds(const CliConfig& cfg) {
  const auto g = load_graph(cfg);
  const auto s = detail::require_set(g, cfg.set, "--set");
  const auto r = require_regular(g);
  if (s.empty() || s.size() == g.order()) throw precondition_error("--set must be a nonempty proper subset");
  const auto spec = eigen_decompose(g, cfg.spectral);
  auto doc = base_document(g, cfg, false);
  doc.spectrum = spectrum_entries(spec);
  const auto tol = cfg.bound_tolerance;
  const auto comp = s.complement();

  detail::try_bound(doc, "hamming_type", [&] {
    std::int64_t a = 0;
    std::int64_t d = static_cast<std::int64_t>(r);
    for (Vertex v = 0; v < g.order(); ++v) {
      const auto in_s = static_cast<std::int64_t>(g.neighbors(v).intersection_size(s));
      if (s.contains(v)) a = std::max(a, in_s);
      else d = std::min(d, static_cast<std::int64_t>(r) - in_s);
    }
    doc.bounds.push_back(hamming_type(g, s, a, d, tol));
  });
  detail::try_bound(doc, "hoffman_average",
                    [&] { doc.bounds.push_back(hoffman_average(g, spec, s, cfg.a.value_or(sigma(g, s)), tol)); });
  detail::try_bound(doc, "expander_mixing", [&] {
    if (!cfg.set2.empty()) {
      doc.bounds.push_back(expander_mixing(g, spec, s, parse_vertex_set(cfg.set2, g.order()), tol));
      return;
    }
    auto same = expander_mixing(g, spec, s, s, tol);
    same.name = "expander_mixing_same";
    doc.bounds.push_back(std::move(same));
    auto split = expander_mixing(g, spec, s, comp, tol);
    split.name = "expander_mixing_complement";
    doc.bounds.push_back(std::move(split));
  });
  detail::try_bound(doc, "cut_size", [&] {
    auto pair = cut_size_bounds(g, spec, s, tol);
    doc.bounds.push_back(std::move(pair.first));
    doc.bounds.push_back(std::move(pair.second));
  });
  detail::try_bound(doc, "internal_edges", [&] {
    auto pair = internal_edge_bounds(g, spec, s, tol);
    doc.bounds.push_back(std::move(pair.first));
    doc.bounds.push_back(std::move(pair.second));
  });
  if (!cfg.colors.empty())
    detail::try_bound(doc, "chromatic_corollary", [&] {
      const auto colors = parse_colors(cfg.colors, g.order());
      doc.bounds.push_back(chromatic_corollary_check(g, spec, colors, tol));
    });

  if (doc.graph.amply) {
    const auto& params = *doc.graph.amply;
    detail::try_bound(doc, "sigma2_quotient_bounds", [&] {
      auto pair = sigma2_quotient_bounds(params, g, s, tol);
      doc.bounds.push_back(std::move(pair.first));
      doc.bounds.push_back(std::move(pair.second));
    });
    detail::try_bound(doc, "independent_sigma2_max", [&] {
      if (edge_count_between(g, s, s) == 0)
        doc.bounds.push_back(independent_sigma2_max(params, spec, g, s, tol));
      else
        doc.bounds.push_back(independent_sigma2_max(params, spec));
    });
    detail::try_bound(doc, "eppc_size", [&] {
      doc.bounds.push_back(eppc_size_bound(params, g, s, cfg.beta.value_or(sigma2(g, s)), cfg.a, tol));
    });
  } else {
    doc.messages.push_back("sigma2 bounds skipped: " + doc.graph.amply_reason);
  }
  return doc;
}

inline ReportDocument cmd_verify(const CliConfig& cfg) {
  const auto g = load_graph(cfg);
  auto doc = base_document(g, cfg);
  if (!cfg.colors.empty()) {
    const auto colors = parse_colors(cfg.colors, g.order());
    if (auto q = verify_coloring(g, colors)) {
      std::ostringstream os;
      os << "perfect " << q->size() << "-coloring, quotient";
      for (const auto& row : *q) {
        os << " [";
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << "]";
      }
      doc.messages.push_back(os.str());
    } else {
      doc.messages.push_back("coloring is not perfect");
    }
    return doc;
  }
  const auto s = detail::require_set(g, cfg.set, "--set or --colors");
  if (auto q = verify_two_coloring(g, s)) {
    doc.colorings.push_back({s, *q});
    doc.messages.push_back("perfect 2-coloring with eigenvalue " + std::to_string(quotient_second_eigenvalue(*q)));
  } else {
    doc.messages.push_back("not a perfect 2-coloring");
  }
  if (doc.graph.connected) {
    const auto spec = eigen_decompose(g, cfg.spectral);
    const auto shift = eigenfunction_shift_test(g, s, spec);
    std::ostringstream os;
    if (shift)
      os << "shifted indicator is an eigenvector for " << *shift;
    else
      os << "shifted indicator is not an eigenvector";
    doc.messages.push_back(os.str());
  }
  return doc;
}

inline ReportDocument cmd_search(const CliConfig& cfg) {
  const auto g = load_graph(cfg);
  const auto spec = eigen_decompose(g, cfg.spectral);
  auto doc = base_document(g, cfg, false);
  doc.spectrum = spectrum_entries(spec);
  SearchConstraints cons;
  cons.max_results = cfg.max_results;
  doc.colorings = enumerate_perfect_two_colorings(g, spec, cons);
  doc.messages.push_back(std::to_string(doc.colorings.size()) + " perfect 2-coloring(s)");
  return doc;
}

inline Objective parse_objective(const std::string& s) {
  if (s == "all") return Objective::all_perfect_2colorings;
  if (s == "max_independent") return Objective::max_independent;
  if (s == "max_cut") return Objective::max_cut;
  if (s == "max_sigma") return Objective::max_set_sigma_le;
  if (s == "max_eppc") return Objective::max_set_sigma_eq_sigma2_le;
  throw parse_error("unknown objective '" + s + "' (all, max_independent, max_cut, max_sigma, max_eppc)");
}

inline ReportDocument cmd_oracle(const CliConfig& cfg) {
  const auto g = load_graph(cfg);
  SearchConstraints cons;
  cons.objective = parse_objective(cfg.objective);
  cons.max_results = cfg.max_results;
  if (cons.objective == Objective::max_set_sigma_le || cons.objective == Objective::max_set_sigma_eq_sigma2_le) {
    if (!cfg.a) throw precondition_error("objective " + cfg.objective + " needs --a");
    cons.a = *cfg.a;
  }
  if (cons.objective == Objective::max_set_sigma_eq_sigma2_le) {
    if (!cfg.beta) throw precondition_error("objective max_eppc needs --beta");
    cons.beta = *cfg.beta;
  }
  const auto result = brute_force_oracle(g, cons);
  auto doc = base_document(g, cfg);
  doc.oracle = OracleSection{cfg.objective, result.value, result.all_optima};
  if (!result.best) doc.messages.push_back("no subset satisfies the objective");
  return doc;
}

inline ReportDocument cmd_compare(const CliConfig& cfg) {
  const auto g = load_graph(cfg);
  if (!cfg.beta) throw precondition_error("compare needs --beta");
  const auto params = detect_amply_regular(g);
  const auto spec = eigen_decompose(g, cfg.spectral);
  auto doc = base_document(g, cfg, false);
  doc.spectrum = spectrum_entries(spec);
  doc.bounds.push_back(compare_new_vs_hoffman(params, spec, *cfg.beta, cfg.bound_tolerance));
  return doc;
}

// ---- human-readable rendering --------------------------------------------

inline std::string render_human(const ReportDocument& doc) {
  std::ostringstream os;
  os << "graph: n=" << doc.graph.n << " edges=" << doc.graph.edges;
  if (doc.graph.degree) os << " regular r=" << *doc.graph.degree;
  else os << " not regular";
  os << (doc.graph.connected ? " connected" : " disconnected") << '\n';
  if (doc.graph.amply) {
    const auto& p = *doc.graph.amply;
    os << "amply regular: lambda=" << p.lambda_g << " mu=" << p.mu << " p2=" << format_human(p.p2)
       << " p1=" << format_human(p.p1) << " p0=" << format_human(p.p0) << '\n';
  } else if (!doc.graph.amply_reason.empty()) {
    os << "amply regular: no (" << doc.graph.amply_reason << ")\n";
  }
  if (!doc.spectrum.empty()) {
    os << "spectrum:";
    for (const auto& s : doc.spectrum) {
      os << ' ';
      if (s.integral) os << *s.integral;
      else os << s.value;
      os << '^' << s.multiplicity;
    }
    os << '\n';
  }
  for (const auto& b : doc.bounds) {
    os << b.name << " (" << to_string(b.sense) << "): bound " << format_human(b.value) << ", attained "
       << format_human(b.attained) << ", " << (b.holds ? "holds" : "VIOLATED") << ", " << to_string(b.verdict);
    if (b.witness) os << ", quotient " << b.witness->quotient.to_string();
    os << '\n';
    for (const auto& [k, v] : b.detail) os << "    " << k << " = " << format_human(v) << '\n';
    if (!b.note.empty()) os << "    " << b.note << '\n';
  }
  for (const auto& c : doc.colorings) os << "coloring {" << c.set.to_string() << "} " << c.quotient.to_string() << '\n';
  if (doc.oracle) {
    os << "oracle " << doc.oracle->objective << ": " << format_human(doc.oracle->value) << '\n';
    for (const auto& s : doc.oracle->optima) os << "  {" << s.to_string() << "}\n";
  }
  for (const auto& m : doc.messages) os << "note: " << m << '\n';
  return os.str();
}

}  // namespace equipart
