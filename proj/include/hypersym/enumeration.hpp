#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypersym/monoid.hpp"
#include "hypersym/symmetrize.hpp"

namespace hypersym {

/// All commutative monoids of the given order with identity 0, one per
/// isomorphism class (the class representative is the lexicographically
/// least table over relabelings), in ascending table order. Orders 1..4 run
/// freely; order 5 sits behind allow_order_5; anything larger throws
/// OrderTooLarge.
std::vector<FiniteCommutativeMonoid> enumerate_monoids(int order, bool allow_order_5 = false);

/// One monoid's verdicts under the predicates of interest, with a
/// certificate for every failing flag. s_is_group is present only when the
/// splitting condition holds (otherwise there is no hypergroup to ask).
struct ClassificationRecord {
  std::string id;
  bool total = false;
  bool splitting = false;
  bool cancellative = false;
  bool idempotent = false;
  std::optional<bool> s_is_group;

  std::optional<std::pair<int, int>> total_counterexample;
  std::optional<SplitCounterexample> splitting_counterexample;
  std::optional<std::array<int, 3>> cancellation_counterexample;
  std::optional<int> idempotence_counterexample;
};

ClassificationRecord classify(const FiniteCommutativeMonoid& m);

struct Survey {
  int order = 0;
  std::vector<ClassificationRecord> records;
};

Survey survey(int order, bool allow_order_5 = false);

/// Counts per flag combination, keyed by a canonical comma-joined flag list.
std::map<std::string, int> flag_combination_counts(const Survey& s);

/// One CSV row per isomorphism class: flags plus certificate summaries.
void write_survey_csv(std::ostream& out, const Survey& s);

}  // namespace hypersym
