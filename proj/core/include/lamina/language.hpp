#ifndef LAMINA_LANGUAGE_HPP
#define LAMINA_LANGUAGE_HPP

#include <cmath>
#include <optional>
#include <unordered_set>
#include <vector>

#include "lamina/word.hpp"

namespace lamina {

/// A horizon-truncated language of reduced words: symmetric (closed under
/// inversion) and factorial (closed under subwords) by construction, every
/// word nonempty of length <= horizon.
///
/// The `exact` flag records that the word set is precisely the truncation at
/// this horizon of the full language of a well-defined lamination.  It is set
/// only by the generators and by horizon-safe operations, and it gates the
/// metric and minimality queries: at a finite horizon nothing else is sound.
class FactorLanguage {
 public:
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  int horizon() const noexcept { return horizon_; }
  bool exact() const noexcept { return exact_; }

  bool contains(const Word& w) const { return members_.contains(w); }
  std::size_t word_count() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  /// Words of one length, sorted by the letter order; empty span for lengths
  /// above the horizon.
  const std::vector<Word>& words_of_length(int length) const;

  /// Longest length with any word, 0 when empty.
  int max_word_length() const noexcept;

  template <typename Fn>
  void for_each_word(Fn&& fn) const {
    for (const auto& bucket : by_length_)
      for (const Word& w : bucket) fn(w);
  }

 private:
  friend class LanguageBuilder;
  FactorLanguage(Alphabet alphabet, int horizon, bool exact,
                 std::vector<std::vector<Word>> by_length,
                 std::unordered_set<Word, WordHash> members);

  Alphabet alphabet_{1};
  int horizon_ = 1;
  bool exact_ = false;
  std::vector<std::vector<Word>> by_length_;  // index = length, [0] unused
  std::unordered_set<Word, WordHash> members_;
  std::size_t count_ = 0;
};

/// Accumulates seed words and produces their symmetric factor closure at a
/// fixed horizon.  Seeds longer than the horizon contribute their windows.
class LanguageBuilder {
 public:
  LanguageBuilder(Alphabet alphabet, int horizon);

  /// Adds all factors of w and of w^-1 up to the horizon.
  void add(const Word& w);

  FactorLanguage build(bool exact) &&;

 private:
  void add_one_sided(const Word& w);

  Alphabet alphabet_;
  int horizon_;
  std::vector<std::unordered_set<Word, WordHash>> buckets_;
};

/// Smallest symmetric factorial set containing the length <= horizon factors
/// of the seeds and their inverses.  Not exact: no lamination semantics are
/// asserted for an arbitrary seed set.
FactorLanguage close(const Alphabet& alphabet, const std::vector<Word>& seeds,
                     int horizon);

/// Replace every word by its chop (k letters off each end, empty if the word
/// has length <= 2k), then close under factors.  Horizon drops by 2k.  An
/// exact truncation of a lamination chops to the exact truncation of the same
/// lamination at the smaller horizon.
FactorLanguage chop(const FactorLanguage& language, int k);

/// Restriction to words of length <= horizon (exactness survives).
FactorLanguage truncate(const FactorLanguage& language, int horizon);

/// Symmetric, factorial, and every word shorter than the horizon extends by
/// one letter on each side within the language.
bool is_laminary_at(const FactorLanguage& language);

/// Set equality of the truncations at m.
bool equal_at(const FactorLanguage& a, const FactorLanguage& b, int m);

bool same_words(const FactorLanguage& a, const FactorLanguage& b);

/// exp(-level) where level is the largest n whose odd truncations at 2n+1
/// agree, observable only up to the shared horizon: when every comparable
/// level agrees the result is the capped bound "distance <= value".
struct LanguageDistance {
  int level = 0;
  bool capped = false;
  double value() const noexcept { return std::exp(-static_cast<double>(level)); }
};
LanguageDistance distance(const FactorLanguage& a, const FactorLanguage& b);

/// Least K <= horizon such that every length-K word contains every word of
/// length <= m up to inversion; nullopt when no K is witnessed at this
/// horizon.  A nullopt refutes nothing: minimality is undecided, never denied.
std::optional<int> gap_bound(const FactorLanguage& language, int m);

/// True iff no word mixes generator letters and inverse letters, i.e. the
/// language splits as P u P^-1 with P over the generators only.
bool is_positive(const FactorLanguage& language);

/// Setwise union/intersection on the shared truncation, factor-closed.  The
/// exactness flag is dropped; recheck with is_laminary_at.
FactorLanguage unite(const FactorLanguage& a, const FactorLanguage& b);
FactorLanguage intersect(const FactorLanguage& a, const FactorLanguage& b);

}  // namespace lamina

#endif
