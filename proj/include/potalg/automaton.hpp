#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "potalg/word.hpp"

namespace potalg {

/// Recognizer for words avoiding every forbidden word as a factor, built by
/// the standard failure-function (Aho-Corasick) construction.  Live states
/// are the proper prefixes of forbidden words that do not themselves end in
/// a forbidden factor.
class FactorAvoidanceAutomaton {
 public:
  FactorAvoidanceAutomaton(const std::vector<Word>& forbidden, int alphabet);

  int alphabet() const { return alphabet_; }
  /// Number of live states (0 when the empty word is forbidden).
  int state_count() const { return static_cast<int>(next_.size()); }

  /// Count of avoiding words per degree 0..max_degree.
  std::vector<mpz_class> census(int max_degree) const;

  /// True iff only finitely many words avoid the forbidden set.
  bool language_is_finite() const;
  /// Total count when finite.
  std::optional<mpz_class> total_count() const;

  /// next()[s][a] = successor state or -1 (word becomes forbidden).
  const std::vector<std::vector<int>>& next() const { return next_; }

 private:
  int alphabet_;
  std::vector<std::vector<int>> next_;  // live-state transitions, -1 = dead
};

}  // namespace potalg
