#ifndef LAMINA_GENERATE_HPP
#define LAMINA_GENERATE_HPP

#include <cstdint>

#include "lamina/boundary.hpp"
#include "lamina/language.hpp"
#include "lamina/morphism.hpp"

namespace lamina {

/// An eventually periodic biinfinite reduced word
///   ... left_period left_period . center . right_period right_period ...
/// indexed so that letter 1 is the first letter of the center (of the right
/// period when the center is empty); letter 0 is the last letter of the left
/// period.  Periods are stored primitive with their phase significant.
///
/// Only this centering is representable; consumers that need recentred data
/// use window().  The factor language is centering independent anyway.
class BiinfiniteWord {
 public:
  BiinfiniteWord(Word left_period, Word center, Word right_period);

  const Word& left_period() const noexcept { return left_period_; }
  const Word& center() const noexcept { return center_; }
  const Word& right_period() const noexcept { return right_period_; }

  Letter letter_at(std::int64_t i) const noexcept;

  /// Letters lo..hi inclusive, as a word.
  Word window(std::int64_t lo, std::int64_t hi) const;

  /// The central subword of length 2n+1: letters -n..n.
  Word central_word(int n) const { return window(-n, n); }

  /// The inverse biinfinite word (factor language mirror).
  BiinfiniteWord inverted() const;

  bool operator==(const BiinfiniteWord&) const = default;

 private:
  Word left_period_;
  Word center_;
  Word right_period_;
};

/// Exact truncation of the rational lamination of a nontrivial w: the factors
/// of the periodic word on its cyclic core, plus inverses.  Depends only on
/// the conjugacy class of w, and is invariant under inverting w.
FactorLanguage rational(const Alphabet& alphabet, const Word& w, int horizon);

/// Exact truncation of the lamination generated by one eventually periodic
/// leaf; the two periodic leaves come along automatically as factor sources.
FactorLanguage from_ends(const Alphabet& alphabet, const BiinfiniteWord& leaf,
                         int horizon);

/// Exact truncation of the lamination of the one-sided fixed word of a
/// positive prolongable substitution: iterate on the seed until the factor
/// sets of two consecutive iterates coincide (they are monotone and bounded,
/// so this is a sound fixed point).
FactorLanguage from_substitution(const Endomorphism& phi, Letter seed,
                                 int horizon);

/// The biinfinite word with the two given ends: inverted x-tail on the left,
/// y-tail on the right, the common prefix stripped.  Requires x != y.
BiinfiniteWord rho(const BoundaryPoint& x, const BoundaryPoint& y);

/// A cyclically reduced v' whose rational language agrees with the given
/// language up to level m, built from a gap-bound witness: with u the least
/// length-m word, v = w1 w2 w3 the least word of length 3K, and u located in
/// w1 = w1' u w1'' and w3 = w3' u w3'', returns u w1'' w2 w3'.  Falls back to
/// u^-1 when only it occurs in both w1 and w3; anything else is an error,
/// never a silent fallback.  Requires gap_bound(language, m) = K with
/// 3K <= horizon.
CyclicWord rational_approximant(const FactorLanguage& language, int m);

}  // namespace lamina

#endif
