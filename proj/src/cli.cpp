#include "sumset/cli.hpp"

#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "sumset/bounds.hpp"
#include "sumset/error.hpp"
#include "sumset/integer_set.hpp"
#include "sumset/inverse_analysis.hpp"
#include "sumset/report_io.hpp"
#include "sumset/search_harness.hpp"
#include "sumset/sumset_engine.hpp"

namespace sumset {

namespace {

enum class OutputFormat { Human, Json, Csv };

const std::map<std::string, OutputFormat> kFormats = {
    {"human", OutputFormat::Human}, {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InfeasibleH:
    case ErrorCode::InapplicableBound:
    case ErrorCode::InvalidDilation:
    case ErrorCode::OracleTooLarge:
    case ErrorCode::RangeTooLarge:
    case ErrorCode::Overflow:
    case ErrorCode::NoCanonicalForm:
    case ErrorCode::WouldBeEmpty:
    case ErrorCode::ElementNotFound:
    case ErrorCode::InvalidInterval:
      return kExitInfeasible;
    default:
      return kExitUsage;
  }
}

std::string braced(const IntegerSet& set) { return "{" + format_set(set) + "}"; }

struct Options {
  std::string set_literal;
  int h = 0;
  std::size_t k = 0;
  std::string kind;
  Int max_element = 0;
  std::string constraint = "zero";
  std::string mode = "direct";
  unsigned jobs = 1;
  OutputFormat format = OutputFormat::Human;
  std::string checkpoint;
  std::uint64_t limit = 0;
  bool oracle = false;
  bool all_sets = false;
};

int cmd_compute(const Options& opt, std::ostream& out) {
  const IntegerSet set = parse_set(opt.set_literal);
  SumsetKind kind = SumsetKind::RestrictedSigned;
  if (!opt.kind.empty()) {
    const auto parsed = parse_sumset_kind(opt.kind);
    if (!parsed) throw SumsetError(ErrorCode::Parse, "unknown sumset kind '" + opt.kind + "'");
    kind = *parsed;
  }
  if (opt.oracle && kind != SumsetKind::RestrictedSigned) {
    throw SumsetError(ErrorCode::InvalidConfig, "--oracle is only available for restricted-signed");
  }
  const SumsetResult result = opt.oracle
                                  ? restricted_signed_sumset_oracle(set, opt.h, oracle_budget_from_env())
                                  : compute_sumset(kind, set, opt.h);
  switch (opt.format) {
    case OutputFormat::Json: {
      auto doc = to_json(result);
      doc["set"] = format_set(set);
      out << doc.dump() << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "set,kind,h,k,cardinality,sumset\n"
          << '"' << format_set(set) << "\"," << to_string(result.kind) << ',' << result.h << ','
          << result.source_cardinality << ',' << result.sums.size() << ",\""
          << format_set(result.sums) << "\"\n";
      break;
    case OutputFormat::Human:
      out << "set:         " << braced(set) << '\n'
          << "kind:        " << to_string(result.kind) << '\n'
          << "h:           " << result.h << '\n'
          << "cardinality: " << result.sums.size() << '\n'
          << "sumset:      " << braced(result.sums) << '\n';
      break;
  }
  return kExitOk;
}

int cmd_bound(const Options& opt, std::ostream& out) {
  const auto kind = parse_bound_kind(opt.kind);
  if (!kind) throw SumsetError(ErrorCode::Parse, "unknown bound kind '" + opt.kind + "'");
  const Int value = lower_bound(*kind, opt.h, opt.k);
  if (opt.format == OutputFormat::Json) {
    nlohmann::json doc = {{"kind", to_string(*kind)}, {"h", opt.h}, {"k", opt.k}, {"value", value}};
    out << doc.dump() << '\n';
  } else if (opt.format == OutputFormat::Csv) {
    out << "kind,h,k,value\n" << to_string(*kind) << ',' << opt.h << ',' << opt.k << ',' << value << '\n';
  } else {
    out << value << '\n';
  }
  return kExitOk;
}

int cmd_check(const Options& opt, std::ostream& out) {
  const BoundReport report = check_bounds(parse_set(opt.set_literal), opt.h);
  bool bug = false;
  for (const BoundRow& row : report.rows) bug = bug || row.is_engine_bug();
  if (opt.format == OutputFormat::Json) {
    out << to_json(report).dump() << '\n';
  } else if (opt.format == OutputFormat::Csv) {
    out << "kind,bound,actual,satisfied,equality\n";
    for (const BoundRow& row : report.rows) {
      out << to_string(row.kind) << ',' << row.bound << ',' << row.actual << ','
          << (row.satisfied ? "true" : "false") << ',' << (row.is_equality ? "true" : "false") << '\n';
    }
  } else {
    out << "set " << braced(report.set) << ", h = " << report.h;
    if (report.abs_reduced) out << " (via A_abs = " << braced(report.analyzed) << ")";
    out << '\n';
    if (report.rows.empty()) out << "  no bound applies\n";
    for (const BoundRow& row : report.rows) {
      out << "  " << to_string(row.kind) << ": bound " << row.bound << ", actual " << row.actual
          << (row.is_equality ? " (equality)" : "") << (row.satisfied ? "" : "  VIOLATED") << '\n';
    }
  }
  return bug ? kExitViolation : kExitOk;
}

int cmd_classify(const Options& opt, std::ostream& out) {
  const IntegerSet set = parse_set(opt.set_literal);
  const auto classes = classify(set);
  if (opt.format == OutputFormat::Json) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& cls : classes) list.push_back(to_string(cls));
    out << nlohmann::json{{"set", format_set(set)}, {"classes", list}}.dump() << '\n';
  } else {
    for (std::size_t i = 0; i < classes.size(); ++i) {
      out << (i ? (opt.format == OutputFormat::Csv ? ";" : ", ") : "") << to_string(classes[i]);
    }
    out << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  SearchConfig config;
  config.k = opt.k;
  config.h = opt.h;
  config.max_element = opt.max_element;
  const auto constraint = parse_constraint(opt.constraint);
  if (!constraint) throw SumsetError(ErrorCode::InvalidConfig, "unknown constraint '" + opt.constraint + "'");
  config.constraint = *constraint;
  config.canonical_only = !opt.all_sets;
  config.parallelism = opt.jobs;
  if (!opt.kind.empty()) {
    const auto kind = parse_bound_kind(opt.kind);
    if (!kind) throw SumsetError(ErrorCode::InvalidConfig, "unknown bound kind '" + opt.kind + "'");
    config.target = *kind;
  }
  if (opt.limit > 0) config.max_sets = opt.limit;
  if (opt.mode != "direct" && opt.mode != "inverse") {
    throw SumsetError(ErrorCode::InvalidConfig, "mode must be direct or inverse");
  }
  validate(config);

  std::uint64_t previously_checked = 0;
  if (!opt.checkpoint.empty() && std::filesystem::exists(opt.checkpoint)) {
    const Checkpoint cp = load_checkpoint(opt.checkpoint);
    apply_checkpoint(cp, config);
    previously_checked = cp.sets_checked;
  }

  const VerificationReport report =
      run_search(config, opt.mode == "direct" ? SearchMode::Direct : SearchMode::Inverse);

  if (!opt.checkpoint.empty()) {
    save_checkpoint(opt.checkpoint, checkpoint_from(report, previously_checked));
  }

  switch (opt.format) {
    case OutputFormat::Json: out << to_json(report).dump() << '\n'; break;
    case OutputFormat::Csv: out << to_csv(report); break;
    case OutputFormat::Human: {
      out << to_string(report.mode) << " verification of " << to_string(report.target)
          << " (h = " << config.h << ", k = " << config.k << ", M = " << config.max_element
          << ", constraint = " << to_string(config.constraint) << ")\n"
          << "sets checked:   " << report.sets_checked << (report.partial ? " (partial)" : "") << '\n'
          << "violations:     " << report.violations.size() << '\n'
          << "equality cases: " << report.equality_cases.size() << '\n';
      if (report.min_cardinality) out << "min cardinality: " << *report.min_cardinality << '\n';
      for (const Violation& v : report.violations) {
        out << "  VIOLATION " << to_string(v.type) << ' ' << braced(v.set) << ' ' << to_string(v.kind)
            << " bound " << v.bound << " actual " << v.actual << '\n';
      }
      for (const EqualityCase& e : report.equality_cases) {
        out << "  equality " << braced(e.set) << " =";
        for (const auto& cls : e.classes) out << ' ' << to_string(cls);
        if (e.prediction_matched) out << (*e.prediction_matched ? " [predicted]" : " [UNPREDICTED]");
        out << '\n';
      }
      break;
    }
  }
  if (report.partial) err << "note: run stopped at the --limit budget; resume with --checkpoint\n";
  return report.violations.empty() ? kExitOk : kExitViolation;
}

int cmd_fixtures(const Options& opt, std::ostream& out) {
  const FixtureReport report = fixture_suite();
  if (opt.format == OutputFormat::Json) {
    out << to_json(report).dump() << '\n';
  } else {
    if (opt.format == OutputFormat::Csv) out << "name,h,expected,actual,pass\n";
    for (const FixtureRow& row : report.rows) {
      if (opt.format == OutputFormat::Csv) {
        out << '"' << row.name << "\"," << row.h << ',' << row.expected << ',' << row.actual << ','
            << (row.pass ? "true" : "false") << '\n';
      } else {
        const char* rel = row.relation == FixtureRelation::AtLeast ? ">=" : "==";
        out << (row.pass ? "PASS  " : "FAIL  ") << row.name << ": " << row.actual << ' ' << rel << ' '
            << row.expected << '\n';
      }
    }
  }
  return report.all_passed() ? kExitOk : kExitViolation;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sumset calculator and exhaustive verifier for restricted signed sumsets", "sumset"};
  app.require_subcommand(1);
  // "-h" would collide with the --h option; subcommands inherit this.
  app.set_help_flag("--help", "Print this help message and exit");
  Options opt;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  };

  auto* compute = app.add_subcommand("compute", "Compute a sumset of a set");
  compute->add_option("--set", opt.set_literal, "Set literal, e.g. 0,1,2,4,6")->required();
  compute->add_option("--h", opt.h, "Number of summands")->required();
  compute->add_option("--kind", opt.kind, "ordinary | restricted | signed | restricted-signed");
  compute->add_flag("--oracle", opt.oracle, "Use the brute-force oracle (restricted-signed only)");
  add_format(compute);

  auto* bound = app.add_subcommand("bound", "Evaluate a lower-bound formula");
  bound->add_option("--kind", opt.kind, "Bound kind, e.g. NonnegMidRange")->required();
  bound->add_option("--h", opt.h)->required();
  bound->add_option("--k", opt.k)->required();
  add_format(bound);

  auto* check = app.add_subcommand("check", "Check a set against every applicable bound");
  check->add_option("--set", opt.set_literal)->required();
  check->add_option("--h", opt.h)->required();
  add_format(check);

  auto* classify_cmd = app.add_subcommand("classify", "List the structural families of a set");
  classify_cmd->add_option("--set", opt.set_literal)->required();
  add_format(classify_cmd);

  auto* verify = app.add_subcommand("verify", "Exhaustively verify a bound over a window");
  verify->add_option("--h", opt.h)->required();
  verify->add_option("--k", opt.k)->required();
  verify->add_option("--max", opt.max_element, "Largest admissible element M")->required();
  verify->add_option("--constraint", opt.constraint, "zero | positive | absdisjoint");
  verify->add_option("--mode", opt.mode, "direct | inverse");
  verify->add_option("--kind", opt.kind, "Target bound kind (default: sharpest applicable)");
  verify->add_option("--jobs", opt.jobs, "Worker threads");
  verify->add_option("--limit", opt.limit, "Stop after this many sets");
  verify->add_option("--checkpoint", opt.checkpoint, "Resume from / write an enumeration cursor");
  verify->add_flag("--all-sets", opt.all_sets, "Include sets with gcd > 1");
  add_format(verify);

  auto* fixtures = app.add_subcommand("fixtures", "Run the numeric fixture suite");
  add_format(fixtures);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(opt, out);
    if (bound->parsed()) return cmd_bound(opt, out);
    if (check->parsed()) return cmd_check(opt, out);
    if (classify_cmd->parsed()) return cmd_classify(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out, err);
    if (fixtures->parsed()) return cmd_fixtures(opt, out);
  } catch (const SumsetError& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kExitUsage;
}

}  // namespace sumset
