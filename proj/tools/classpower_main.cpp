// classpower command-line front end.
//
// Subcommands:
//   analyze    scan one group or one imported character table
//   chartable  compute and emit a character table
//   suite      run the whole catalogue with oracle/character reconciliation
//
// Exit codes: 0 clean, 2 finding (disagreement, violated conclusion, failed
// validation), 1 operational error (usage, unreadable input, parse failure).

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "classpower/classpower.hpp"

namespace {

constexpr int kExitClean = 0;
constexpr int kExitOperational = 1;
constexpr int kExitFinding = 2;

struct RunConfig {
  std::string group_source;  // "catalogue:NAME" or a file path
  std::string table_source;  // character table JSON path
  unsigned max_n = 6;
  double tolerance = 0.0;  // 0 = per-table default
  std::uint64_t seed = classpower::kDefaultSeed;
  std::string format = "text";
  std::string out_path;
  std::string only = "all";
  std::string verify_against;
};

void validate_config(const RunConfig& cfg) {
  if (cfg.max_n < 2 || cfg.max_n > 16)
    throw CLI::ValidationError("--max-n must lie in [2, 16]");
  if (cfg.tolerance != 0.0 && !(cfg.tolerance > 0.0 && cfg.tolerance <= 1e-3))
    throw CLI::ValidationError("--tolerance must lie in (0, 1e-3]");
  if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "text")
    throw CLI::ValidationError("--format must be json, csv or text");
}

struct LoadedGroup {
  std::string name;
  classpower::FiniteGroup group;
  classpower::ClassDecomposition dec;
};

LoadedGroup load_group(const std::string& source) {
  using namespace classpower;
  LoadedGroup out;
  if (source.rfind("catalogue:", 0) == 0) {
    const std::string name = source.substr(std::string("catalogue:").size());
    const auto cat = build_catalogue();
    const CatalogueEntry& entry = find_catalogue_entry(cat, name);
    BuiltEntry built = build_entry(entry);
    auto failures = check_expected_facts(entry, built);
    if (!failures.empty()) {
      std::string msg = "catalogue fixture failed its expected facts:";
      for (const auto& f : failures) msg += " [" + f + "]";
      throw ValidationFailed(msg);
    }
    out.name = entry.name;
    out.group = std::move(built.group);
    out.dec = std::move(built.dec);
    return out;
  }
  GroupInput in = load_group_input(source);
  out.name = in.name;
  out.group = build_group_input(in);
  out.dec = conjugacy_classes(out.group);
  return out;
}

classpower::CharacterTable make_table(const LoadedGroup& g, const RunConfig& cfg) {
  using namespace classpower;
  StructureConstants sc = structure_constants(g.group, g.dec);
  CharacterTable t = compute_character_table(g.group, g.dec, sc, cfg.seed);
  t.name = g.name;
  if (cfg.tolerance != 0.0) t.tolerance = cfg.tolerance;
  return t;
}

void emit_reports(const std::vector<classpower::CriterionReport>& reports,
                  const RunConfig& cfg) {
  using namespace classpower;
  std::string payload;
  if (cfg.format == "json")
    payload = reports_to_json(reports).dump(2) + "\n";
  else if (cfg.format == "csv")
    payload = reports_to_csv(reports);
  else
    payload = reports_to_text(reports);

  if (!cfg.out_path.empty()) {
    std::ofstream f(cfg.out_path);
    if (!f) throw classpower::Error("cannot write " + cfg.out_path);
    f << payload;
    std::cout << reports_to_text(reports);
  } else {
    std::cout << payload;
  }
}

int reports_exit_code(const std::vector<classpower::CriterionReport>& reports) {
  for (const auto& r : reports)
    if (r.is_finding()) return kExitFinding;
  return kExitClean;
}

int cmd_analyze(const RunConfig& cfg) {
  using namespace classpower;
  if (cfg.group_source.empty() == cfg.table_source.empty())
    throw CLI::ValidationError("analyze needs exactly one of --group / --table");

  std::vector<CriterionReport> reports;
  ScanOptions opts;
  opts.n_hi = cfg.max_n;
  if (!cfg.group_source.empty()) {
    LoadedGroup g = load_group(cfg.group_source);
    CharacterTable table = make_table(g, cfg);
    reports = scan_group(g.group, g.dec, table, opts, g.name);
  } else {
    CharacterTable table = import_table(cfg.table_source);
    if (cfg.tolerance != 0.0) table.tolerance = cfg.tolerance;
    reports = scan_table(table, opts, table.name);
  }
  emit_reports(reports, cfg);
  return reports_exit_code(reports);
}

int cmd_chartable(const RunConfig& cfg) {
  using namespace classpower;
  if (cfg.group_source.empty()) throw CLI::ValidationError("chartable needs --group");
  LoadedGroup g = load_group(cfg.group_source);
  CharacterTable table = make_table(g, cfg);

  const std::string payload = export_table_to_string(table);
  if (!cfg.out_path.empty()) {
    std::ofstream f(cfg.out_path);
    if (!f) throw Error("cannot write " + cfg.out_path);
    f << payload;
  } else {
    std::cout << payload;
  }

  if (!cfg.verify_against.empty()) {
    CharacterTable reference = import_table(cfg.verify_against);
    const double tol = cfg.tolerance != 0.0 ? cfg.tolerance : reference.tolerance;
    if (!tables_match(table, reference, tol)) {
      std::cerr << "verify-against: tables do not match up to row permutation (tolerance "
                << tol << ")\n";
      return kExitFinding;
    }
    std::cout << "verify-against: tables match up to row permutation\n";
  }
  return kExitClean;
}

int cmd_suite(const RunConfig& cfg) {
  using namespace classpower;
  const auto cat = build_catalogue();
  std::vector<CriterionReport> all_reports;
  std::map<std::string, std::map<std::string, int>> census;

  for (const CatalogueEntry& entry : cat) {
    ScanOptions opts;
    opts.n_hi = cfg.max_n;
    std::vector<CriterionReport> reports;
    if (entry.is_table_fixture()) {
      CharacterTable table =
          fixture_table(std::get<TableFixtureConstruction>(entry.construction).fixture);
      if (cfg.tolerance != 0.0) table.tolerance = cfg.tolerance;
      reports = scan_table(table, opts, entry.name);
    } else {
      BuiltEntry built = build_entry(entry);
      auto failures = check_expected_facts(entry, built);
      if (!failures.empty()) {
        for (const auto& f : failures) std::cerr << "expected-fact failure: " << f << "\n";
        std::cerr << "suite aborted: catalogue fixture '" << entry.name << "' is broken\n";
        return kExitFinding;
      }
      StructureConstants sc = structure_constants(built.group, built.dec);
      CharacterTable table = compute_character_table(built.group, built.dec, sc, cfg.seed);
      table.name = entry.name;
      if (cfg.tolerance != 0.0) table.tolerance = cfg.tolerance;
      reports = scan_group(built.group, built.dec, table, opts, entry.name);
    }
    for (const auto& r : reports) {
      const bool hit = r.oracle_available ? r.is_hit() : table_scan_hit(r);
      if (hit) census[r.group][r.oracle_available ? shape_name(r.shape) : "TableOnly"]++;
    }
    all_reports.insert(all_reports.end(), reports.begin(), reports.end());
  }

  if (cfg.only == "conjectures") {
    std::cout << "conjecture-hit census (group, shape, count):\n";
    for (const auto& [group, shapes] : census)
      for (const auto& [shape, count] : shapes)
        std::cout << "  " << group << " " << shape << " " << count << "\n";
    if (census.empty()) std::cout << "  (no hits)\n";
    int code = kExitClean;
    for (const auto& r : all_reports)
      if (!r.agreement) code = kExitFinding;
    return code;
  }

  emit_reports(all_reports, cfg);
  return reports_exit_code(all_reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"class-power analysis of small finite groups"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&cfg](CLI::App* sub, bool with_table) {
    sub->add_option("--group", cfg.group_source,
                    "group source: catalogue:NAME or a group JSON file");
    if (with_table)
      sub->add_option("--table", cfg.table_source, "character table JSON file");
    sub->add_option("--max-n", cfg.max_n, "largest power to scan (2..16)");
    sub->add_option("--tolerance", cfg.tolerance, "numeric tolerance override (0, 1e-3]");
    sub->add_option("--seed", cfg.seed, "RNG seed for the table eigendecomposition");
    sub->add_option("--format", cfg.format, "report format: json, csv or text");
    sub->add_option("--out", cfg.out_path, "write the report/table to this file");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "scan one group or table");
  add_common(analyze, true);

  CLI::App* chartable = app.add_subcommand("chartable", "compute a character table");
  add_common(chartable, false);
  chartable->add_option("--verify-against", cfg.verify_against,
                        "compare against an imported table (row permutation + tolerance)");

  CLI::App* suite = app.add_subcommand("suite", "run the full catalogue");
  add_common(suite, false);
  suite->add_option("--only", cfg.only, "all (default) or conjectures (hit census)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitClean : kExitOperational;
  }

  try {
    validate_config(cfg);
    if (app.got_subcommand(analyze)) return cmd_analyze(cfg);
    if (app.got_subcommand(chartable)) return cmd_chartable(cfg);
    if (app.got_subcommand(suite)) return cmd_suite(cfg);
    std::cerr << "no subcommand\n";
    return kExitOperational;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitOperational;
  } catch (const classpower::ValidationFailed& e) {
    std::cerr << "validation failed: " << e.what() << "\n";
    return kExitFinding;
  } catch (const classpower::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOperational;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOperational;
  }
}
