#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

#include "sumset/bounds.hpp"
#include "sumset/search_harness.hpp"
#include "sumset/sumset_engine.hpp"

namespace sumset {

nlohmann::json to_json(const SumsetResult& result);
nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const FixtureReport& report);

/// Worker count is never serialized, so reports for any --jobs compare equal
/// once elapsed_ms is dropped.
nlohmann::json to_json(const VerificationReport& report, bool include_elapsed = true);

/// One row per equality case: set,h,bound,actual,classes,prediction_matched.
std::string to_csv(const VerificationReport& report);

/// Resumable enumeration cursor.
struct Checkpoint {
  std::size_t k = 0;
  int h = 0;
  Int max_element = 0;
  SetConstraint constraint = SetConstraint::ContainsZero;
  bool canonical_only = true;
  std::optional<IntegerSet> last_set;
  std::uint64_t sets_checked = 0;
  bool complete = false;
};

Checkpoint checkpoint_from(const VerificationReport& report, std::uint64_t previously_checked = 0);
nlohmann::json to_json(const Checkpoint& checkpoint);
Checkpoint checkpoint_from_json(const nlohmann::json& doc);

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& checkpoint);
Checkpoint load_checkpoint(const std::filesystem::path& path);

/// Throws Checkpoint when the cursor belongs to a different enumeration.
void apply_checkpoint(const Checkpoint& checkpoint, SearchConfig& config);

}  // namespace sumset
