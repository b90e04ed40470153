// equipart: spectral bounds and perfect 2-colorings of regular graphs.
//
// Exit codes: 0 success, 1 violated precondition, 2 parse error.

#include <CLI11.hpp>

#include <iostream>

#include "equipart/commands.hpp"
#include "equipart/equipart.hpp"

int main(int argc, char** argv) {
  using namespace equipart;
  CLI::App app{"equipart: equitable partitions and spectral bounds for regular graphs"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  CliConfig cfg;
  std::string format = "auto";
  std::string beta;
  std::string a;
  double tol = -1.0;

  app.add_option("--input", cfg.input, "graph file, '-' for stdin, or family:name:params")->required();
  app.add_option("--format", format, "g6 | el | family (default: guess from input)");
  app.add_flag("--json", cfg.json, "emit the JSON report");
  app.add_option("--tol", tol, "eigenvalue merge / bound tolerance override");
  app.add_option("--max-n", cfg.max_n, "vertex limit");

  auto* analyze = app.add_subcommand("analyze", "regularity, spectrum and amply-regular parameters");
  auto* bounds = app.add_subcommand("bounds", "evaluate every applicable bound on --set");
  auto* verify = app.add_subcommand("verify", "check that --set (or --colors) is a perfect coloring");
  auto* search = app.add_subcommand("search", "enumerate all perfect 2-colorings");
  auto* oracle = app.add_subcommand("oracle", "exhaustive subset scan (n <= 24)");
  auto* compare = app.add_subcommand("compare", "independent-set density bound vs Hoffman at --beta");

  for (auto* sub : {bounds, verify}) {
    sub->add_option("--set", cfg.set, "vertex set: '0,2,5' or a 0/1 string of length n");
    sub->add_option("--colors", cfg.colors, "color per vertex: '0,1,2,...'");
  }
  bounds->add_option("--set2", cfg.set2, "second set B for the mixing lemma");
  for (auto* sub : {bounds, oracle, compare}) {
    sub->add_option("--beta", beta, "rational beta, e.g. 2 or 5/2");
    sub->add_option("--a", a, "rational a");
  }
  oracle->add_option("--objective", cfg.objective, "all | max_independent | max_cut | max_sigma | max_eppc");
  for (auto* sub : {search, oracle}) sub->add_option("--max-results", cfg.max_results, "cap on listed results");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    cfg.format = parse_format(format);
    if (!beta.empty()) cfg.beta = parse_rational(beta);
    if (!a.empty()) cfg.a = parse_rational(a);
    if (tol > 0) {
      cfg.spectral.merge_tolerance = tol;
      cfg.bound_tolerance = tol;
    }

    ReportDocument doc;
    if (analyze->parsed()) doc = cmd_analyze(cfg);
    else if (bounds->parsed()) doc = cmd_bounds(cfg);
    else if (verify->parsed()) doc = cmd_verify(cfg);
    else if (search->parsed()) doc = cmd_search(cfg);
    else if (oracle->parsed()) doc = cmd_oracle(cfg);
    else doc = cmd_compare(cfg);

    if (cfg.json)
      std::cout << to_json(doc).dump(2) << '\n';
    else
      std::cout << render_human(doc);
    return 0;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
