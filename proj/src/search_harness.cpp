#include "sumset/search_harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "sumset/error.hpp"
#include "sumset/sumset_engine.hpp"

namespace sumset {

std::string_view to_string(SetConstraint constraint) {
  switch (constraint) {
    case SetConstraint::ContainsZero: return "zero";
    case SetConstraint::AllPositive: return "positive";
    case SetConstraint::AbsDisjoint: return "absdisjoint";
  }
  return "unknown";
}

std::optional<SetConstraint> parse_constraint(std::string_view name) {
  std::string key;
  for (char c : name) {
    if (c == '-' || c == '_') continue;
    key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  if (key == "zero" || key == "containszero") return SetConstraint::ContainsZero;
  if (key == "positive" || key == "allpositive") return SetConstraint::AllPositive;
  if (key == "absdisjoint") return SetConstraint::AbsDisjoint;
  return std::nullopt;
}

std::string_view to_string(SearchMode mode) {
  return mode == SearchMode::Direct ? "direct" : "inverse";
}

std::string_view to_string(ViolationType type) {
  return type == ViolationType::BoundViolated ? "bound-violated" : "inverse-mismatch";
}

namespace {

bool constraint_allows(SetConstraint constraint, const Hypothesis& hyp) {
  if (hyp.requires_zero) return constraint != SetConstraint::AllPositive;
  if (hyp.requires_positive) return constraint == SetConstraint::AllPositive;
  return true;
}

}  // namespace

void validate(const SearchConfig& config) {
  auto fail = [](const std::string& why) { throw SumsetError(ErrorCode::InvalidConfig, why); };
  if (config.k < 1) fail("k must be at least 1");
  if (config.max_element < static_cast<Int>(config.k) - 1) fail("max element M must be at least k - 1");
  if (config.max_element > (Int{1} << 20)) fail("max element M is beyond the enumerable range");
  if (config.h < 1 || static_cast<std::size_t>(config.h) > config.k) fail("h must satisfy 1 <= h <= k");
  if (config.parallelism < 1) fail("parallelism must be at least 1");
  if (config.target) {
    const Hypothesis& hyp = hypothesis(*config.target);
    if (!hyp.admits(config.h, config.k)) {
      fail(std::string(to_string(*config.target)) + " does not apply to h = " +
           std::to_string(config.h) + ", k = " + std::to_string(config.k));
    }
    if (!constraint_allows(config.constraint, hyp)) {
      fail(std::string(to_string(*config.target)) + " cannot hold under constraint " +
           std::string(to_string(config.constraint)));
    }
  }
  if (config.resume_after && config.resume_after->size() != config.k) {
    fail("resume cursor has the wrong cardinality");
  }
}

BoundKind resolve_target(const SearchConfig& config) {
  if (config.target) return *config.target;
  static constexpr BoundKind kPriority[] = {
      BoundKind::NonnegMidRange, BoundKind::PositiveMidRange,    BoundKind::HPlusOneCase,
      BoundKind::NonnegFullK,    BoundKind::PositiveFullK,       BoundKind::SignedNonnegGeneral,
      BoundKind::SignedPositiveGeneral, BoundKind::RestrictedDirect,
  };
  for (BoundKind kind : kPriority) {
    const Hypothesis& hyp = hypothesis(kind);
    if (hyp.admits(config.h, config.k) && constraint_allows(config.constraint, hyp)) return kind;
  }
  throw SumsetError(ErrorCode::InvalidConfig, "no bound applies to this configuration");
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

std::vector<Int> make_pool(const SearchConfig& config) {
  const Int lo = config.constraint == SetConstraint::AllPositive   ? 1
                 : config.constraint == SetConstraint::AbsDisjoint ? -config.max_element
                                                                   : 0;
  std::vector<Int> pool;
  for (Int v = lo; v <= config.max_element; ++v) pool.push_back(v);
  return pool;
}

std::size_t index_of(const std::vector<Int>& pool, Int value) {
  const auto it = std::lower_bound(pool.begin(), pool.end(), value);
  if (it == pool.end() || *it != value) {
    throw SumsetError(ErrorCode::InvalidConfig, "prefix value outside the enumeration window");
  }
  return static_cast<std::size_t>(it - pool.begin());
}

}  // namespace

SetEnumerator::SetEnumerator(const SearchConfig& config) : config_(config), pool_(make_pool(config)) {
  validate(config_);
  if (config_.constraint == SetConstraint::ContainsZero) {
    index_.push_back(0);
    fixed_ = 1;
  }
}

SetEnumerator::SetEnumerator(const SearchConfig& config, std::vector<Int> prefix)
    : config_(config), pool_(make_pool(config)) {
  validate(config_);
  if (prefix.size() > config_.k) {
    throw SumsetError(ErrorCode::InvalidConfig, "prefix longer than k");
  }
  for (Int v : prefix) index_.push_back(index_of(pool_, v));
  for (std::size_t i = 1; i < index_.size(); ++i) {
    if (index_[i] <= index_[i - 1]) throw SumsetError(ErrorCode::InvalidConfig, "prefix not increasing");
  }
  fixed_ = index_.size();
}

bool SetEnumerator::advance() {
  const std::size_t n = pool_.size();
  const std::size_t k = config_.k;
  if (!started_) {
    started_ = true;
    std::size_t next = fixed_ == 0 ? 0 : index_[fixed_ - 1] + 1;
    index_.resize(fixed_);
    for (std::size_t p = fixed_; p < k; ++p) index_.push_back(next++);
    return index_.empty() || index_.back() < n;
  }
  std::size_t p = k;
  while (p > fixed_) {
    --p;
    if (index_[p] < n - k + p) {
      ++index_[p];
      for (std::size_t q = p + 1; q < k; ++q) index_[q] = index_[q - 1] + 1;
      return true;
    }
  }
  return false;
}

bool SetEnumerator::accept(const std::vector<Int>& values) const {
  if (config_.constraint == SetConstraint::ContainsZero && values.front() != 0) return false;
  if (config_.constraint == SetConstraint::AbsDisjoint) {
    if (!std::binary_search(values.begin(), values.end(), Int{0})) return false;
    for (Int v : values) {
      if (v > 0 && std::binary_search(values.begin(), values.end(), -v)) return false;
    }
  }
  if (config_.canonical_only) {
    Int g = 0;
    for (Int v : values) g = std::gcd(g, v);
    if (g != 1) return false;
  }
  return true;
}

std::optional<IntegerSet> SetEnumerator::next() {
  std::vector<Int> values(config_.k);
  while (!done_) {
    if (!advance()) {
      done_ = true;
      break;
    }
    for (std::size_t i = 0; i < config_.k; ++i) values[i] = pool_[index_[i]];
    if (!accept(values)) continue;
    if (config_.resume_after && values <= config_.resume_after->values()) continue;
    return IntegerSet(values);
  }
  return std::nullopt;
}

std::vector<std::vector<Int>> SetEnumerator::prefixes(const SearchConfig& config) {
  validate(config);
  const std::vector<Int> pool = make_pool(config);
  const std::size_t n = pool.size();
  const std::size_t k = config.k;
  std::vector<std::vector<Int>> out;

  const std::size_t first_end = config.constraint == SetConstraint::ContainsZero ? 1 : n;
  for (std::size_t i = 0; i < first_end; ++i) {
    if (config.constraint == SetConstraint::AbsDisjoint && pool[i] > 0) break;
    if (k == 1) {
      out.push_back({pool[i]});
      continue;
    }
    for (std::size_t j = i + 1; j + (k - 2) < n; ++j) {
      if (config.constraint == SetConstraint::AbsDisjoint && pool[i] == -pool[j]) continue;
      out.push_back({pool[i], pool[j]});
    }
  }
  return out;
}

std::vector<IntegerSet> enumerate_canonical_sets(const SearchConfig& config) {
  std::vector<IntegerSet> out;
  SetEnumerator it(config);
  while (auto set = it.next()) out.push_back(*std::move(set));
  return out;
}

// ---------------------------------------------------------------------------
// Verification runs

namespace {

struct SetRecord {
  IntegerSet set;
  Int target_actual = 0;
  bool has_target = false;
  std::vector<Violation> violations;
  std::optional<EqualityCase> equality;
};

SetRecord examine(const IntegerSet& set, int h, BoundKind target, SearchMode mode) {
  SetRecord record{set, 0, false, {}, std::nullopt};
  const BoundReport report = check_bounds(set, h);
  for (const BoundRow& row : report.rows) {
    if (!row.satisfied) {
      record.violations.push_back({set, row.kind, row.bound, row.actual, ViolationType::BoundViolated});
    }
  }
  const BoundRow* row = report.find(target);
  if (row == nullptr) return record;
  record.has_target = true;
  record.target_actual = row->actual;
  if (!row->is_equality) return record;

  InverseOutcome outcome = evaluate_inverse(report, target);
  record.equality = EqualityCase{set,          target, outcome.bound, outcome.actual,
                                 outcome.classes, outcome.prediction_matched};
  if (mode == SearchMode::Inverse && !outcome.holds()) {
    record.violations.push_back(
        {set, target, outcome.bound, outcome.actual, ViolationType::InverseMismatch});
  }
  return record;
}

}  // namespace

VerificationReport run_search(const SearchConfig& config, SearchMode mode) {
  const auto started = std::chrono::steady_clock::now();
  validate(config);
  const BoundKind target = resolve_target(config);

  std::vector<std::vector<Int>> tasks = SetEnumerator::prefixes(config);
  if (config.resume_after) {
    const auto& cursor = config.resume_after->values();
    const std::vector<Int> head(cursor.begin(),
                                cursor.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(2, cursor.size())));
    std::erase_if(tasks, [&](const std::vector<Int>& prefix) { return prefix < head; });
  }

  std::vector<std::vector<SetRecord>> results(tasks.size());
  std::vector<char> ran(tasks.size(), 0);
  std::atomic<std::size_t> next_task{0};
  std::atomic<std::uint64_t> finished_sets{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  // Tasks are claimed in order, so once the finished tasks alone cover the
  // budget every unclaimed task lies past the cutoff.
  auto worker = [&] {
    try {
      while (true) {
        if (config.max_sets && finished_sets.load() >= *config.max_sets) return;
        const std::size_t t = next_task.fetch_add(1);
        if (t >= tasks.size()) return;
        SetEnumerator it(config, tasks[t]);
        std::uint64_t count = 0;
        while (auto set = it.next()) {
          results[t].push_back(examine(*set, config.h, target, mode));
          ++count;
        }
        ran[t] = 1;
        finished_sets.fetch_add(count);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  const unsigned workers = std::max(1U, std::min<unsigned>(config.parallelism,
                                                           static_cast<unsigned>(tasks.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  VerificationReport report;
  report.config = config;
  report.mode = mode;
  report.target = target;

  bool stopped = false;
  for (std::size_t t = 0; t < tasks.size() && !stopped; ++t) {
    if (!ran[t]) {
      stopped = true;
      break;
    }
    for (SetRecord& record : results[t]) {
      if (config.max_sets && report.sets_checked >= *config.max_sets) {
        stopped = true;
        break;
      }
      ++report.sets_checked;
      report.last_set = record.set;
      for (Violation& v : record.violations) report.violations.push_back(std::move(v));
      if (record.equality) report.equality_cases.push_back(*std::move(record.equality));
      if (record.has_target) {
        if (!report.min_cardinality || record.target_actual < *report.min_cardinality) {
          report.min_cardinality = record.target_actual;
          report.minimizers.clear();
        }
        if (record.target_actual == *report.min_cardinality) report.minimizers.push_back(record.set);
      }
    }
  }
  report.partial = stopped;
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  return report;
}

VerificationReport verify_direct(const SearchConfig& config) {
  return run_search(config, SearchMode::Direct);
}

VerificationReport verify_inverse(const SearchConfig& config) {
  return run_search(config, SearchMode::Inverse);
}

// ---------------------------------------------------------------------------
// Reduction lemma and fixtures

LemmaReduction lemma_reduction(const IntegerSet& set, int h) {
  const auto k = static_cast<Int>(set.size());
  if (h < 3 || h > k - 1 || k < 5 || set.min() != 0) {
    throw SumsetError(ErrorCode::InapplicableBound,
                      "reduction requires 3 <= h <= k - 1, k >= 5 and 0 = min(A)");
  }
  const std::vector<Int> head(set.begin(), set.begin() + h + 1);
  LemmaReduction out;
  out.base_size = static_cast<Int>(restricted_signed_sumset(IntegerSet(head), h).sums.size());
  out.full_size = static_cast<Int>(restricted_signed_sumset(set, h).sums.size());
  const Int hh = h;
  out.t = out.base_size - (hh * hh + hh + 1);
  out.required = 2 * hh * k - hh * hh - hh + 1 + out.t;
  out.vacuous = out.t < 0;
  out.holds = out.vacuous || out.full_size >= out.required;
  return out;
}

bool lemma_reduction_check(const IntegerSet& set, int h) { return lemma_reduction(set, h).holds; }

bool FixtureReport::all_passed() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const FixtureRow& r) { return r.pass; });
}

FixtureReport fixture_suite() {
  FixtureReport report;
  auto add = [&](std::string name, IntegerSet set, int h, FixtureRelation relation, Int expected,
                 std::optional<IntegerSet> expected_set = std::nullopt) {
    const IntegerSet sums = restricted_signed_sumset(set, h).sums;
    FixtureRow row{std::move(name), std::move(set), h, relation, expected, std::move(expected_set),
                   static_cast<Int>(sums.size()), false};
    switch (relation) {
      case FixtureRelation::Equals: row.pass = row.actual == expected; break;
      case FixtureRelation::AtLeast: row.pass = row.actual >= expected; break;
      case FixtureRelation::SetEquals:
        row.pass = row.actual == expected && row.expected_set && sums == *row.expected_set;
        break;
    }
    report.rows.push_back(std::move(row));
  };

  add("4-signed {0,1,2,3,4}", {0, 1, 2, 3, 4}, 4, FixtureRelation::Equals, 21);
  add("4-signed {0,1,2,3,5}", {0, 1, 2, 3, 5}, 4, FixtureRelation::Equals, 23);
  add("4-signed {0,1,2,3,6}", {0, 1, 2, 3, 6}, 4, FixtureRelation::Equals, 25);
  add("4-signed {0,1,2,4,6}", {0, 1, 2, 4, 6}, 4, FixtureRelation::Equals, 21);
  add("4-signed {0,1,2,4,5}", {0, 1, 2, 4, 5}, 4, FixtureRelation::Equals, 23);
  add("5-signed {0,1,2,4,5,6}", {0, 1, 2, 4, 5, 6}, 5, FixtureRelation::AtLeast, 32);
  add("5-signed {0,1,2,3,5,7}", {0, 1, 2, 3, 5, 7}, 5, FixtureRelation::AtLeast, 32);
  add("4-signed {0,1,2,4,6,7}", {0, 1, 2, 4, 6, 7}, 4, FixtureRelation::AtLeast, 30);
  for (int h = 5; h <= 10; ++h) {
    const Int half = Int{h} * (h + 1) / 2;
    add("interval [0," + std::to_string(h) + "], h=" + std::to_string(h), interval(0, h), h,
        FixtureRelation::SetEquals, Int{h} * h + h + 1, interval(-half, half));
  }
  for (const auto& [h, k] : {std::pair{3, 5}, std::pair{4, 6}, std::pair{5, 7}}) {
    const Int hh = h;
    const Int kk = k;
    add("interval [0," + std::to_string(k - 1) + "], h=" + std::to_string(h), interval(0, k - 1), h,
        FixtureRelation::Equals, 2 * hh * kk - hh * hh - hh + 1);
  }
  return report;
}

}  // namespace sumset
