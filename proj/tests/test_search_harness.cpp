#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "sumset/error.hpp"
#include "sumset/report_io.hpp"
#include "sumset/search_harness.hpp"

using namespace sumset;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const SumsetError& e) {
    return e.code();
  }
  FAIL("expected a SumsetError");
  return ErrorCode::Parse;
}

SearchConfig zero_config(std::size_t k, int h, Int max_element) {
  SearchConfig config;
  config.k = k;
  config.h = h;
  config.max_element = max_element;
  config.constraint = SetConstraint::ContainsZero;
  return config;
}

std::vector<IntegerSet> equality_sets(const VerificationReport& report) {
  std::vector<IntegerSet> out;
  for (const auto& eq : report.equality_cases) out.push_back(eq.set);
  return out;
}

}  // namespace

TEST_CASE("enumeration examples") {
  CHECK(enumerate_canonical_sets(zero_config(3, 1, 4)) ==
        std::vector<IntegerSet>{{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 3, 4}});
  SearchConfig positive = zero_config(2, 1, 2);
  positive.constraint = SetConstraint::AllPositive;
  CHECK(enumerate_canonical_sets(positive) == std::vector<IntegerSet>{{1, 2}});
  CHECK(enumerate_canonical_sets(zero_config(5, 1, 4)) == std::vector<IntegerSet>{{0, 1, 2, 3, 4}});

  SearchConfig all = zero_config(3, 1, 4);
  all.canonical_only = false;
  CHECK(enumerate_canonical_sets(all).size() == 6);

  SearchConfig abs = zero_config(2, 1, 2);
  abs.constraint = SetConstraint::AbsDisjoint;
  CHECK(enumerate_canonical_sets(abs) == std::vector<IntegerSet>{{-1, 0}, {0, 1}});
  abs.k = 3;
  // {-1,0,1} breaks abs-disjointness; {-2,0,2} and friends have gcd 2.
  CHECK(enumerate_canonical_sets(abs) ==
        std::vector<IntegerSet>{{-2, -1, 0}, {-2, 0, 1}, {-1, 0, 2}, {0, 1, 2}});
}

TEST_CASE("enumeration is complete, sorted and duplicate free") {
  for (std::size_t k = 1; k <= 4; ++k) {
    for (Int m = std::max<Int>(1, static_cast<Int>(k) - 1); m <= 12; ++m) {
      // {0} alone has no gcd, so the zero family starts at k = 2.
      const auto zero = enumerate_canonical_sets(zero_config(k, 1, m));
      if (k >= 2) CHECK(static_cast<Int>(zero.size()) == oracle::canonical_zero_count(static_cast<Int>(k), m));
      CHECK(std::is_sorted(zero.begin(), zero.end()));
      CHECK(std::adjacent_find(zero.begin(), zero.end()) == zero.end());

      if (m >= static_cast<Int>(k)) {
        SearchConfig positive = zero_config(k, 1, m);
        positive.constraint = SetConstraint::AllPositive;
        const auto pos = enumerate_canonical_sets(positive);
        CHECK(static_cast<Int>(pos.size()) == oracle::canonical_positive_count(static_cast<Int>(k), m));
        CHECK(std::is_sorted(pos.begin(), pos.end()));
      }
    }
  }
}

TEST_CASE("prefix partition covers the stream exactly") {
  const SearchConfig config = zero_config(4, 3, 11);
  std::vector<IntegerSet> joined;
  for (const auto& prefix : SetEnumerator::prefixes(config)) {
    SetEnumerator it(config, prefix);
    while (auto set = it.next()) joined.push_back(*set);
  }
  CHECK(joined == enumerate_canonical_sets(config));
}

TEST_CASE("config validation") {
  CHECK(code_of([] { validate(zero_config(0, 1, 3)); }) == ErrorCode::InvalidConfig);
  CHECK(code_of([] { validate(zero_config(5, 3, 3)); }) == ErrorCode::InvalidConfig);
  CHECK(code_of([] { validate(zero_config(5, 6, 10)); }) == ErrorCode::InvalidConfig);
  SearchConfig bad_target = zero_config(5, 4, 10);
  bad_target.target = BoundKind::PositiveMidRange;
  CHECK(code_of([&] { validate(bad_target); }) == ErrorCode::InvalidConfig);
  bad_target.target = BoundKind::NonnegFullK;
  CHECK(code_of([&] { validate(bad_target); }) == ErrorCode::InvalidConfig);
  SearchConfig no_workers = zero_config(5, 4, 10);
  no_workers.parallelism = 0;
  CHECK(code_of([&] { validate(no_workers); }) == ErrorCode::InvalidConfig);
  SearchConfig cursor = zero_config(5, 4, 10);
  cursor.resume_after = IntegerSet{0, 1};
  CHECK(code_of([&] { validate(cursor); }) == ErrorCode::InvalidConfig);

  CHECK(resolve_target(zero_config(5, 4, 10)) == BoundKind::NonnegMidRange);
  CHECK(resolve_target(zero_config(4, 3, 10)) == BoundKind::HPlusOneCase);
  CHECK(resolve_target(zero_config(4, 4, 10)) == BoundKind::NonnegFullK);
  CHECK(resolve_target(zero_config(6, 2, 10)) == BoundKind::SignedNonnegGeneral);
}

TEST_CASE("direct sweep (h=3, k=5, M=12)") {
  const auto report = verify_direct(zero_config(5, 3, 12));
  CHECK(report.violations.empty());
  CHECK(report.sets_checked == static_cast<std::uint64_t>(oracle::canonical_zero_count(5, 12)));
  REQUIRE_FALSE(report.equality_cases.empty());
  for (const auto& eq : report.equality_cases) {
    CHECK(eq.bound == 19);
    CHECK(std::find(eq.classes.begin(), eq.classes.end(), StructureClass{StructureKind::DilatedInterval, 1}) !=
          eq.classes.end());
  }
  CHECK_FALSE(report.partial);
}

TEST_CASE("direct sweep (h=4, k=5, M=12) has exactly two extremal sets") {
  const auto report = verify_direct(zero_config(5, 4, 12));
  CHECK(report.violations.empty());
  CHECK(equality_sets(report) == std::vector<IntegerSet>{{0, 1, 2, 3, 4}, {0, 1, 2, 4, 6}});
  CHECK(report.min_cardinality == 21);
}

TEST_CASE("positive sweep (h=3, k=4, M=10)") {
  SearchConfig config = zero_config(4, 3, 10);
  config.constraint = SetConstraint::AllPositive;
  const auto report = verify_direct(config);
  CHECK(report.target == BoundKind::PositiveMidRange);
  CHECK(report.violations.empty());
  REQUIRE_FALSE(report.equality_cases.empty());
  for (const auto& eq : report.equality_cases) {
    CHECK(eq.bound == 16);
    CHECK(eq.set == IntegerSet{1, 3, 5, 7});
  }
}

TEST_CASE("inverse sweep (h=5, k=6, M=14): only the interval is extremal") {
  const auto report = verify_inverse(zero_config(6, 5, 14));
  CHECK(report.violations.empty());
  CHECK(equality_sets(report) == std::vector<IntegerSet>{interval(0, 5)});
}

TEST_CASE("restricted sweep (h=2, k=6, M=10): equality cases are APs") {
  SearchConfig config = zero_config(6, 2, 10);
  config.target = BoundKind::RestrictedDirect;
  const auto report = verify_inverse(config);
  CHECK(report.violations.empty());
  REQUIRE_FALSE(report.equality_cases.empty());
  for (const auto& eq : report.equality_cases) {
    CHECK(is_ap(eq.set).has_value());
    CHECK(eq.prediction_matched == true);
  }
}

TEST_CASE("abs-disjoint sweep reduces to the nonnegative bound") {
  SearchConfig config = zero_config(5, 4, 6);
  config.constraint = SetConstraint::AbsDisjoint;
  const auto report = verify_inverse(config);
  CHECK(report.violations.empty());
  CHECK(report.target == BoundKind::NonnegMidRange);
  for (const auto& eq : report.equality_cases) CHECK(eq.actual == 21);
  // {−4,−3,0,1,2} reduces to {0,1,2,3,4}.
  const auto sets = equality_sets(report);
  CHECK(std::find(sets.begin(), sets.end(), IntegerSet{-4, -3, 0, 1, 2}) != sets.end());
}

TEST_CASE("reports do not depend on the worker count") {
  for (auto mode : {SearchMode::Direct, SearchMode::Inverse}) {
    SearchConfig one = zero_config(5, 3, 13);
    SearchConfig four = one;
    four.parallelism = 4;
    const auto a = to_json(run_search(one, mode), false);
    const auto b = to_json(run_search(four, mode), false);
    CHECK(a.dump() == b.dump());
  }
}

TEST_CASE("budget and resume neither skip nor duplicate sets") {
  const SearchConfig base = zero_config(5, 4, 12);
  const auto full = verify_direct(base);
  for (unsigned jobs : {1U, 3U}) {
    for (std::uint64_t chunk : {1ULL, 17ULL, 250ULL}) {
      SearchConfig config = base;
      config.parallelism = jobs;
      config.max_sets = chunk;
      std::uint64_t checked = 0;
      std::vector<IntegerSet> seen_eq;
      int rounds = 0;
      while (true) {
        const auto part = verify_direct(config);
        checked += part.sets_checked;
        for (const auto& s : equality_sets(part)) seen_eq.push_back(s);
        ++rounds;
        if (!part.partial) break;
        REQUIRE(part.last_set.has_value());
        CHECK(part.sets_checked == chunk);
        config.resume_after = part.last_set;
        REQUIRE(rounds < 5000);
      }
      CHECK(checked == full.sets_checked);
      CHECK(seen_eq == equality_sets(full));
    }
  }
}

TEST_CASE("reduction lemma") {
  const auto a = lemma_reduction({0, 1, 2, 3, 4, 7}, 3);
  CHECK(a.t == 0);
  CHECK(a.full_size == 29);
  CHECK(a.required == 25);
  CHECK(a.holds);
  CHECK_FALSE(a.vacuous);

  const auto b = lemma_reduction({0, 2, 3, 5, 8, 9}, 4);
  CHECK(b.t == 14);
  CHECK(b.full_size == 47);
  CHECK(b.required == 43);
  CHECK(lemma_reduction_check({0, 2, 3, 5, 8, 9}, 4));

  CHECK(lemma_reduction_check({0, 1, 2, 3, 4}, 3));
  // k = h + 1: B is all of A and both sides agree.
  const auto c = lemma_reduction({0, 1, 2, 3, 4}, 4);
  CHECK(c.t == 0);
  CHECK(c.full_size == c.required);
  CHECK(code_of([] { lemma_reduction({0, 1, 2, 3, 4}, 5); }) == ErrorCode::InapplicableBound);
  CHECK(code_of([] { lemma_reduction({0, 1, 2, 3}, 3); }) == ErrorCode::InapplicableBound);
  CHECK(code_of([] { lemma_reduction({1, 2, 3, 4, 5}, 3); }) == ErrorCode::InapplicableBound);

  // Exhaustive over a small window.
  for (const auto& set : enumerate_canonical_sets(zero_config(6, 3, 10))) {
    for (int h = 3; h <= 5; ++h) CHECK(lemma_reduction_check(set, h));
  }
}

TEST_CASE("fixture suite") {
  const auto report = fixture_suite();
  CHECK(report.all_passed());
  CHECK(report.rows.size() == 17);
  for (const auto& row : report.rows) {
    INFO(row.name);
    CHECK(row.pass);
  }
  const auto it = std::find_if(report.rows.begin(), report.rows.end(),
                               [](const FixtureRow& r) { return r.set == interval(0, 5) && r.h == 5; });
  REQUIRE(it != report.rows.end());
  CHECK(it->actual == 31);
  CHECK(it->expected_set == interval(-15, 15));
}
