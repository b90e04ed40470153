#pragma once

// JSON report document. Exact rationals are encoded as {"num": p, "den": q};
// floating values as {"value": x, "approx": true}. See docs/report-schema.md.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "equipart/bounds.hpp"
#include "equipart/graph.hpp"
#include "equipart/search.hpp"
#include "equipart/spectral.hpp"

namespace equipart {

inline constexpr const char* tool_version = "0.1.0";

struct GraphSummary {
  std::size_t n = 0;
  std::size_t edges = 0;
  std::optional<std::int64_t> degree;  // set when regular
  bool connected = false;
  std::optional<AmplyParams> amply;
  std::string amply_reason;  // why `amply` is absent

  friend bool operator==(const GraphSummary&, const GraphSummary&) = default;
};

struct SpectrumEntry {
  double value = 0.0;
  std::size_t multiplicity = 0;
  std::optional<std::int64_t> integral;

  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

struct OracleSection {
  std::string objective;
  Rational value{0};
  std::vector<VertexSet> optima;

  friend bool operator==(const OracleSection&, const OracleSection&) = default;
};

struct ReportDocument {
  std::string version = tool_version;
  double tolerance = 1e-9;
  double merge_tolerance = 1e-6;
  double bound_tolerance = default_bound_tolerance;
  GraphSummary graph;
  std::vector<SpectrumEntry> spectrum;
  std::vector<BoundReport> bounds;
  std::vector<PerfectColoring> colorings;
  std::optional<OracleSection> oracle;
  std::vector<std::string> messages;  // per-bound precondition failures and notes
};

inline GraphSummary summarize(const Graph& g) {
  GraphSummary s;
  s.n = g.order();
  s.edges = g.edge_count();
  if (auto r = is_regular(g)) s.degree = static_cast<std::int64_t>(*r);
  s.connected = is_connected(g);
  try {
    s.amply = detect_amply_regular(g);
  } catch (const precondition_error& e) {
    s.amply_reason = e.what();
  }
  return s;
}

inline std::vector<SpectrumEntry> spectrum_entries(const Spectrum& spec) {
  std::vector<SpectrumEntry> out;
  for (const auto& s : spec.spaces()) out.push_back({s.value, s.multiplicity, s.integral});
  return out;
}

// ---- JSON encoding -------------------------------------------------------

inline nlohmann::ordered_json to_json(const Rational& q) { return {{"num", q.numerator()}, {"den", q.denominator()}}; }

inline nlohmann::ordered_json to_json(const Number& x) {
  if (x.exact()) return to_json(x.rational());
  return {{"value", x.to_double()}, {"approx", true}};
}

inline Rational rational_from_json(const nlohmann::ordered_json& j) {
  return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

inline Number number_from_json(const nlohmann::ordered_json& j) {
  if (j.contains("approx")) return Number::approx(j.at("value").get<double>());
  return rational_from_json(j);
}

inline nlohmann::ordered_json to_json(const QuotientMatrix2& q) { return {{q.a, q.b}, {q.c, q.d}}; }

inline QuotientMatrix2 quotient_from_json(const nlohmann::ordered_json& j) {
  return {j.at(0).at(0).get<std::int64_t>(), j.at(0).at(1).get<std::int64_t>(), j.at(1).at(0).get<std::int64_t>(),
          j.at(1).at(1).get<std::int64_t>()};
}

inline nlohmann::ordered_json to_json(const VertexSet& s) { return s.members(); }

inline VertexSet vertex_set_from_json(const nlohmann::ordered_json& j, std::size_t n) {
  return VertexSet::from_range(n, j.get<std::vector<std::size_t>>());
}

inline nlohmann::ordered_json to_json(const BoundReport& rep) {
  nlohmann::ordered_json j;
  j["name"] = rep.name;
  j["sense"] = to_string(rep.sense);
  j["value"] = to_json(rep.value);
  j["attained"] = to_json(rep.attained);
  j["holds"] = rep.holds;
  j["verdict"] = to_string(rep.verdict);
  if (rep.witness) j["witness"] = {{"set", to_json(rep.witness->set)}, {"quotient", to_json(rep.witness->quotient)}};
  if (rep.color_quotient) j["color_quotient"] = *rep.color_quotient;
  nlohmann::ordered_json detail = nlohmann::ordered_json::object();
  for (const auto& [k, v] : rep.detail) detail[k] = to_json(v);
  j["detail"] = detail;
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

inline Verdict verdict_from_string(const std::string& s) {
  for (auto v : {Verdict::strict, Verdict::tight, Verdict::numerically_tight_unverified, Verdict::inconsistent,
                 Verdict::coincident, Verdict::not_applicable})
    if (s == to_string(v)) return v;
  throw parse_error("unknown verdict '" + s + "'");
}

inline BoundReport bound_from_json(const nlohmann::ordered_json& j, std::size_t n) {
  BoundReport rep;
  rep.name = j.at("name").get<std::string>();
  rep.sense = j.at("sense").get<std::string>() == "lower" ? Sense::lower : Sense::upper;
  rep.value = number_from_json(j.at("value"));
  rep.attained = number_from_json(j.at("attained"));
  rep.holds = j.at("holds").get<bool>();
  rep.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  if (j.contains("witness"))
    rep.witness = Witness{vertex_set_from_json(j["witness"].at("set"), n), quotient_from_json(j["witness"].at("quotient"))};
  if (j.contains("color_quotient")) rep.color_quotient = j["color_quotient"].get<ColorMatrix>();
  for (const auto& [k, v] : j.at("detail").items()) rep.detail[k] = number_from_json(v);
  if (j.contains("note")) rep.note = j["note"].get<std::string>();
  return rep;
}

inline nlohmann::ordered_json to_json(const ReportDocument& doc) {
  nlohmann::ordered_json j;
  j["tool"] = {{"name", "equipart"}, {"version", doc.version}};
  j["tolerances"] = {{"eigen", doc.tolerance}, {"merge", doc.merge_tolerance}, {"bound", doc.bound_tolerance}};

  nlohmann::ordered_json g;
  g["n"] = doc.graph.n;
  g["edges"] = doc.graph.edges;
  g["regular"] = doc.graph.degree.has_value();
  if (doc.graph.degree) g["degree"] = *doc.graph.degree;
  g["connected"] = doc.graph.connected;
  if (doc.graph.amply) {
    const auto& p = *doc.graph.amply;
    g["amply_regular"] = {{"r", p.r},         {"lambda", p.lambda_g}, {"mu", p.mu},
                          {"p2", to_json(p.p2)}, {"p1", to_json(p.p1)},  {"p0", to_json(p.p0)}};
  } else {
    g["amply_regular"] = nullptr;
    g["amply_reason"] = doc.graph.amply_reason;
  }
  j["graph"] = g;

  nlohmann::ordered_json spec = nlohmann::ordered_json::array();
  for (const auto& s : doc.spectrum) {
    nlohmann::ordered_json e{{"value", s.value}, {"multiplicity", s.multiplicity}, {"integral", s.integral.has_value()}};
    if (s.integral) e["exact"] = *s.integral;
    spec.push_back(e);
  }
  j["spectrum"] = spec;

  nlohmann::ordered_json bounds = nlohmann::ordered_json::array();
  for (const auto& b : doc.bounds) bounds.push_back(to_json(b));
  j["bounds"] = bounds;

  nlohmann::ordered_json cols = nlohmann::ordered_json::array();
  for (const auto& c : doc.colorings) cols.push_back({{"set", to_json(c.set)}, {"quotient", to_json(c.quotient)}});
  j["colorings"] = cols;

  if (doc.oracle) {
    nlohmann::ordered_json optima = nlohmann::ordered_json::array();
    for (const auto& s : doc.oracle->optima) optima.push_back(to_json(s));
    j["oracle"] = {{"objective", doc.oracle->objective}, {"value", to_json(doc.oracle->value)}, {"optima", optima}};
  }
  j["messages"] = doc.messages;
  return j;
}

inline ReportDocument report_from_json(const nlohmann::ordered_json& j) {
  ReportDocument doc;
  doc.version = j.at("tool").at("version").get<std::string>();
  doc.tolerance = j.at("tolerances").at("eigen").get<double>();
  doc.merge_tolerance = j.at("tolerances").at("merge").get<double>();
  doc.bound_tolerance = j.at("tolerances").at("bound").get<double>();

  const auto& g = j.at("graph");
  doc.graph.n = g.at("n").get<std::size_t>();
  doc.graph.edges = g.at("edges").get<std::size_t>();
  if (g.contains("degree")) doc.graph.degree = g["degree"].get<std::int64_t>();
  doc.graph.connected = g.at("connected").get<bool>();
  if (!g.at("amply_regular").is_null()) {
    const auto& p = g["amply_regular"];
    doc.graph.amply = AmplyParams{p.at("r").get<std::int64_t>(),  p.at("lambda").get<std::int64_t>(),
                                  p.at("mu").get<std::int64_t>(), rational_from_json(p.at("p2")),
                                  rational_from_json(p.at("p1")), rational_from_json(p.at("p0"))};
  } else {
    doc.graph.amply_reason = g.at("amply_reason").get<std::string>();
  }
  const auto n = doc.graph.n;

  for (const auto& e : j.at("spectrum")) {
    SpectrumEntry s{e.at("value").get<double>(), e.at("multiplicity").get<std::size_t>(), std::nullopt};
    if (e.contains("exact")) s.integral = e["exact"].get<std::int64_t>();
    doc.spectrum.push_back(s);
  }
  for (const auto& b : j.at("bounds")) doc.bounds.push_back(bound_from_json(b, n));
  for (const auto& c : j.at("colorings"))
    doc.colorings.push_back({vertex_set_from_json(c.at("set"), n), quotient_from_json(c.at("quotient"))});
  if (j.contains("oracle")) {
    OracleSection o;
    o.objective = j["oracle"].at("objective").get<std::string>();
    o.value = rational_from_json(j["oracle"].at("value"));
    for (const auto& s : j["oracle"].at("optima")) o.optima.push_back(vertex_set_from_json(s, n));
    doc.oracle = o;
  }
  doc.messages = j.at("messages").get<std::vector<std::string>>();
  return doc;
}

}  // namespace equipart
