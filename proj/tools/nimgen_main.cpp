// nimgen: nim-numbers of the generation games DNG and GEN on finite groups.
//
// subcommands:
//   nim      compute the nim-number of one game on one group
//   diagram  emit the (simplified) structure diagram as DOT
//   verify   cross-check the engine against the brute-force oracle
//   catalog  sweep group families into a CSV regression table
//   predict  closed-form nim value for a family member
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "nimgen/builders.hpp"
#include "nimgen/catalog.hpp"
#include "nimgen/oracle.hpp"

namespace {

using namespace nimgen;

GameKind parse_game(const std::string& token) {
  if (token == "dng") return GameKind::Avoid;
  if (token == "gen") return GameKind::Achieve;
  throw CLI::ValidationError("--game", "expected 'dng' or 'gen'");
}

std::vector<Family> parse_families(const std::string& csv) {
  std::vector<Family> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    std::string name = csv.substr(start, comma == std::string::npos ? comma : comma - start);
    if (name == "all") {
      return {Family::Cyclic, Family::Dihedral, Family::Abelian, Family::Symmetric,
              Family::Alternating};
    }
    auto family = family_from_name(name);
    if (!family)
      throw CLI::ValidationError("--families", "unknown family '" + name + "'");
    out.push_back(*family);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int cmd_nim(const std::string& game_token, const std::string& group_spec) {
  GameKind game = parse_game(game_token);
  FiniteGroup g = build_group(group_spec);
  int value = game_nim(g, game);
  std::cout << game_name(game) << '(' << group_spec << ") = " << format_nimber(value)
            << '\n';
  return 0;
}

int cmd_diagram(const std::string& game_token, const std::string& group_spec,
                bool simplified, const std::string& format, const std::string& out_path) {
  if (format != "dot")
    throw CLI::ValidationError("--format", "only 'dot' is supported");
  GameKind game = parse_game(game_token);
  FiniteGroup g = build_group(group_spec);
  StructureDigraph digraph = analyze_game(g, game);
  std::string dot = simplified ? export_dot(simplify(digraph)) : export_dot(digraph);
  if (out_path.empty()) {
    std::cout << dot;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << dot;
  }
  return 0;
}

int cmd_verify(int max_order, const std::string& group_spec, int cap) {
  std::vector<std::pair<std::string, FiniteGroup>> targets;
  if (!group_spec.empty()) {
    targets.emplace_back(group_spec, build_group(group_spec));
  } else {
    for (Family f : {Family::Cyclic, Family::Dihedral, Family::Abelian,
                     Family::Symmetric, Family::Alternating})
      for (const FamilyMember& m : enumerate_family(f, max_order))
        targets.emplace_back(m.spec, build_group(m.spec));
  }

  bool all_ok = true;
  int skipped = 0;
  for (const auto& [name, group] : targets) {
    for (GameKind game : {GameKind::Avoid, GameKind::Achieve}) {
      try {
        VerifyReport report = verify_group(group, game, name, cap);
        std::cout << report.summary() << '\n';
        all_ok = all_ok && report.passed;
      } catch (const ResourceLimitError&) {
        std::cout << game_name(game) << '(' << name << "): skipped (above oracle cap "
                  << cap << ")\n";
        ++skipped;
      }
    }
  }
  if (skipped > 0) std::cout << skipped << " game(s) skipped\n";
  std::cout << (all_ok ? "verify: all checks passed" : "verify: MISMATCH detected")
            << '\n';
  return all_ok ? 0 : 2;
}

int cmd_catalog(int max_order, const std::string& families_csv,
                const std::string& out_path, int jobs) {
  CatalogOptions options;
  options.max_order = max_order;
  options.families = parse_families(families_csv);
  options.jobs = jobs;
  std::vector<CatalogRow> rows = run_catalog(options);
  if (out_path.empty() || out_path == "-") {
    write_catalog_csv(std::cout, rows);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    write_catalog_csv(out, rows);
  }
  std::size_t mismatches = 0;
  for (const CatalogRow& row : rows)
    if (row.match == CatalogRow::Match::No || row.match == CatalogRow::Match::Error)
      ++mismatches;
  std::cerr << rows.size() << " rows";
  if (mismatches > 0) std::cerr << ", " << mismatches << " mismatching";
  std::cerr << '\n';
  return mismatches == 0 ? 0 : 2;
}

int cmd_predict(const std::string& game_token, const std::string& family_name_arg,
                int n, const std::string& divisors_csv) {
  FamilyParams params;
  params.game = parse_game(game_token);
  auto family = family_from_name(family_name_arg);
  if (!family)
    throw CLI::ValidationError("--family", "unknown family '" + family_name_arg + "'");
  params.family = *family;
  params.n = n;
  if (!divisors_csv.empty()) {
    std::size_t start = 0;
    while (start <= divisors_csv.size()) {
      std::size_t comma = divisors_csv.find(',', start);
      params.divisors.push_back(
          std::stoll(divisors_csv.substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  auto value = predict_nim(params);
  if (value)
    std::cout << format_nimber(*value) << '\n';
  else
    std::cout << "unknown\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nim-numbers of the generation games DNG and GEN on finite groups"};
  app.require_subcommand(1);

  std::string game = "dng";
  std::string group;
  std::string format = "dot";
  std::string out_path;
  std::string families = "all";
  std::string family;
  std::string divisors;
  bool simplified = false;
  int max_order = 12;
  int cap = oracle_cap_from_env();
  int jobs = 1;
  int n = 0;

  auto* nim_cmd = app.add_subcommand("nim", "nim-number of one game");
  nim_cmd->add_option("--game", game, "dng or gen")->required();
  nim_cmd->add_option("--group", group, "group spec, e.g. Z6, D4, S4, Z6xZ3")->required();

  auto* diagram_cmd = app.add_subcommand("diagram", "structure diagram as DOT");
  diagram_cmd->add_option("--game", game, "dng or gen")->required();
  diagram_cmd->add_option("--group", group, "group spec")->required();
  diagram_cmd->add_flag("--simplified", simplified, "merge type-equivalent classes");
  diagram_cmd->add_option("--format", format, "output format (dot)");
  diagram_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "oracle cross-check");
  verify_cmd->add_option("--max-order", max_order, "check all family groups up to this order");
  verify_cmd->add_option("--group", group, "check a single group spec instead");
  verify_cmd->add_option("--cap", cap, "oracle size cap (also NIMGEN_ORACLE_CAP)");

  auto* catalog_cmd = app.add_subcommand("catalog", "family sweep to CSV");
  catalog_cmd->add_option("--max-order", max_order, "largest group order")->required();
  catalog_cmd->add_option("--families", families,
                          "comma-separated: cyclic,dihedral,abelian,symmetric,alternating or all");
  catalog_cmd->add_option("--out", out_path, "CSV path (default stdout)");
  catalog_cmd->add_option("--jobs", jobs, "worker threads");

  auto* predict_cmd = app.add_subcommand("predict", "closed-form nim value");
  predict_cmd->add_option("--game", game, "dng or gen")->required();
  predict_cmd->add_option("--family", family, "family name")->required();
  predict_cmd->add_option("--n", n, "parameter for Z/D/S/A families");
  predict_cmd->add_option("--divisors", divisors, "abelian elementary divisors, e.g. 2,2,9");

  CLI11_PARSE(app, argc, argv);

  try {
    if (nim_cmd->parsed()) return cmd_nim(game, group);
    if (diagram_cmd->parsed()) return cmd_diagram(game, group, simplified, format, out_path);
    if (verify_cmd->parsed()) return cmd_verify(max_order, group, cap);
    if (catalog_cmd->parsed()) return cmd_catalog(max_order, families, out_path, jobs);
    if (predict_cmd->parsed()) return cmd_predict(game, family, n, divisors);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
