#include "sumset/report_io.hpp"

#include <fstream>
#include <sstream>

#include "sumset/error.hpp"

namespace sumset {

using nlohmann::json;

namespace {

json classes_json(const std::vector<StructureClass>& classes) {
  json out = json::array();
  for (const StructureClass& cls : classes) out.push_back(to_string(cls));
  return out;
}

json sets_json(const std::vector<IntegerSet>& sets) {
  json out = json::array();
  for (const IntegerSet& set : sets) out.push_back(format_set(set));
  return out;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

json to_json(const SumsetResult& result) {
  return {
      {"kind", to_string(result.kind)},
      {"h", result.h},
      {"k", result.source_cardinality},
      {"cardinality", result.sums.size()},
      {"sumset", format_set(result.sums)},
  };
}

json to_json(const BoundReport& report) {
  json rows = json::array();
  for (const BoundRow& row : report.rows) {
    rows.push_back({
        {"kind", to_string(row.kind)},
        {"bound", row.bound},
        {"actual", row.actual},
        {"satisfied", row.satisfied},
        {"equality", row.is_equality},
        {"status", row.status == BoundStatus::Proved ? "proved" : "conjectured"},
    });
  }
  return {
      {"set", format_set(report.set)},
      {"analyzed", format_set(report.analyzed)},
      {"abs_reduced", report.abs_reduced},
      {"h", report.h},
      {"bounds", std::move(rows)},
  };
}

json to_json(const FixtureReport& report) {
  json rows = json::array();
  for (const FixtureRow& row : report.rows) {
    std::string relation = row.relation == FixtureRelation::Equals    ? "equals"
                           : row.relation == FixtureRelation::AtLeast ? "at_least"
                                                                      : "set_equals";
    rows.push_back({
        {"name", row.name},
        {"set", format_set(row.set)},
        {"h", row.h},
        {"relation", relation},
        {"expected", row.expected},
        {"actual", row.actual},
        {"pass", row.pass},
    });
  }
  return {{"all_passed", report.all_passed()}, {"fixtures", std::move(rows)}};
}

json to_json(const VerificationReport& report, bool include_elapsed) {
  const SearchConfig& c = report.config;
  json config = {
      {"k", c.k},
      {"h", c.h},
      {"max", c.max_element},
      {"constraint", to_string(c.constraint)},
      {"canonical_only", c.canonical_only},
      {"mode", to_string(report.mode)},
      {"target", to_string(report.target)},
  };
  if (c.resume_after) config["resume_after"] = format_set(*c.resume_after);
  if (c.max_sets) config["max_sets"] = *c.max_sets;

  json violations = json::array();
  for (const Violation& v : report.violations) {
    violations.push_back({
        {"set", format_set(v.set)},
        {"kind", to_string(v.kind)},
        {"bound", v.bound},
        {"actual", v.actual},
        {"type", to_string(v.type)},
    });
  }
  json equality = json::array();
  for (const EqualityCase& e : report.equality_cases) {
    equality.push_back({
        {"set", format_set(e.set)},
        {"kind", to_string(e.kind)},
        {"bound", e.bound},
        {"actual", e.actual},
        {"classes", classes_json(e.classes)},
        {"prediction_matched",
         e.prediction_matched ? json(*e.prediction_matched) : json(nullptr)},
    });
  }

  json out = {
      {"config", std::move(config)},
      {"sets_checked", report.sets_checked},
      {"violations", std::move(violations)},
      {"equality_cases", std::move(equality)},
      {"min_cardinality", report.min_cardinality ? json(*report.min_cardinality) : json(nullptr)},
      {"minimizers", sets_json(report.minimizers)},
      {"partial", report.partial},
      {"last_set", report.last_set ? json(format_set(*report.last_set)) : json(nullptr)},
  };
  if (include_elapsed) out["elapsed_ms"] = report.elapsed.count();
  return out;
}

std::string to_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "set,h,bound,actual,classes,prediction_matched\n";
  for (const EqualityCase& e : report.equality_cases) {
    std::string classes;
    for (const StructureClass& cls : e.classes) {
      if (!classes.empty()) classes += ';';
      classes += to_string(cls);
    }
    const std::string matched =
        e.prediction_matched ? (*e.prediction_matched ? "true" : "false") : "";
    out << csv_quote(format_set(e.set)) << ',' << report.config.h << ',' << e.bound << ','
        << e.actual << ',' << csv_quote(classes) << ',' << matched << '\n';
  }
  return out.str();
}

Checkpoint checkpoint_from(const VerificationReport& report, std::uint64_t previously_checked) {
  const SearchConfig& c = report.config;
  Checkpoint cp{c.k, c.h, c.max_element, c.constraint, c.canonical_only,
                report.last_set ? report.last_set : c.resume_after,
                previously_checked + report.sets_checked, !report.partial};
  return cp;
}

json to_json(const Checkpoint& cp) {
  return {
      {"k", cp.k},
      {"h", cp.h},
      {"max", cp.max_element},
      {"constraint", to_string(cp.constraint)},
      {"canonical_only", cp.canonical_only},
      {"last_set", cp.last_set ? json(format_set(*cp.last_set)) : json(nullptr)},
      {"sets_checked", cp.sets_checked},
      {"complete", cp.complete},
  };
}

Checkpoint checkpoint_from_json(const json& doc) {
  try {
    Checkpoint cp;
    cp.k = doc.at("k").get<std::size_t>();
    cp.h = doc.at("h").get<int>();
    cp.max_element = doc.at("max").get<Int>();
    const auto constraint = parse_constraint(doc.at("constraint").get<std::string>());
    if (!constraint) throw SumsetError(ErrorCode::Checkpoint, "unknown constraint in checkpoint");
    cp.constraint = *constraint;
    cp.canonical_only = doc.at("canonical_only").get<bool>();
    if (!doc.at("last_set").is_null()) cp.last_set = parse_set(doc.at("last_set").get<std::string>());
    cp.sets_checked = doc.at("sets_checked").get<std::uint64_t>();
    cp.complete = doc.at("complete").get<bool>();
    return cp;
  } catch (const json::exception& e) {
    throw SumsetError(ErrorCode::Checkpoint, std::string("malformed checkpoint: ") + e.what());
  } catch (const SumsetError& e) {
    if (e.code() == ErrorCode::Checkpoint) throw;
    throw SumsetError(ErrorCode::Checkpoint, std::string("bad cursor in checkpoint: ") + e.what());
  }
}

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& checkpoint) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw SumsetError(ErrorCode::Checkpoint, "cannot write checkpoint " + tmp.string());
    out << to_json(checkpoint).dump(2) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SumsetError(ErrorCode::Checkpoint, "cannot read checkpoint " + path.string());
  try {
    return checkpoint_from_json(json::parse(in));
  } catch (const json::parse_error& e) {
    throw SumsetError(ErrorCode::Checkpoint, std::string("malformed checkpoint: ") + e.what());
  }
}

void apply_checkpoint(const Checkpoint& cp, SearchConfig& config) {
  if (cp.k != config.k || cp.h != config.h || cp.max_element != config.max_element ||
      cp.constraint != config.constraint || cp.canonical_only != config.canonical_only) {
    throw SumsetError(ErrorCode::Checkpoint, "checkpoint was written for a different search");
  }
  config.resume_after = cp.last_set;
}

}  // namespace sumset
