#ifndef LAMINA_WORD_HPP
#define LAMINA_WORD_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lamina/alphabet.hpp"

namespace lamina {

/// A freely reduced word over an involutive alphabet; the empty word is the
/// identity.  Reducedness (no adjacent letter/inverse pair) is an invariant of
/// the type: every constructor path either reduces or checks.
class Word {
 public:
  Word() = default;

  /// Free reduction of a raw letter sequence.
  static Word reduced(std::span<const Letter> raw);
  static Word reduced(std::initializer_list<Letter> raw) {
    return reduced(std::span<const Letter>(raw.begin(), raw.size()));
  }

  /// Wraps a sequence that must already be reduced.
  static Word from_letters(std::vector<Letter> letters);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const noexcept { return letters_[i]; }
  Letter front() const noexcept { return letters_.front(); }
  Letter back() const noexcept { return letters_.back(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  Word inverse() const;

  /// Subwords of a reduced word are reduced; no re-check needed.
  Word subword(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return subword(0, len); }
  Word suffix(std::size_t len) const { return subword(size() - len, len); }

  /// Substring search (occurrence as a factor).
  bool contains(const Word& needle) const;
  /// Index of the first occurrence of needle, or npos.
  std::size_t find(const Word& needle) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  bool operator==(const Word&) const = default;
  /// Shortlex: by length first, then by the canonical letter order.
  std::strong_ordering operator<=>(const Word& other) const {
    if (auto c = letters_.size() <=> other.letters_.size(); c != 0) return c;
    if (auto c = letters_ <=> other.letters_; c != 0) return c;
    return std::strong_ordering::equal;
  }

 private:
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  std::vector<Letter> letters_;
};

/// Plain lexicographic order (prefix-aware), used where prefix structure
/// matters more than length.
bool lex_less(const Word& a, const Word& b);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Reduced product together with the number of letter pairs cancelled at the
/// junction: cancelled = (|u| + |v| - |uv|) / 2.
struct Product {
  Word word;
  int cancelled = 0;
};
Product concat(const Word& u, const Word& v);

/// Decomposition w = conjugator . core . conjugator^-1 with both products
/// reduced and the core cyclically reduced.  radius() = |conjugator|.
struct CyclicReduction {
  Word core;
  Word conjugator;
  int radius() const noexcept { return static_cast<int>(conjugator.size()); }
};
CyclicReduction cyclic_reduce(const Word& w);

bool is_cyclically_reduced(const Word& w);

/// Left rotation by k of a cyclically reduced word (result is again one).
Word rotate_left(const Word& w, std::size_t k);

/// Shortest q with w = q^k; w itself when primitive.  Requires w nonempty.
Word primitive_root(const Word& w);

/// A conjugacy class of a nontrivial element: a nonempty cyclically reduced
/// word up to rotation.  Stored as the least rotation under the letter order.
class CyclicWord {
 public:
  explicit CyclicWord(const Word& cyclically_reduced);

  const Word& representative() const noexcept { return rep_; }
  std::size_t size() const noexcept { return rep_.size(); }

  /// The lesser of this class's representative and the inverse class's; the
  /// canonical form of the conjugacy class up to inversion.
  Word representative_up_to_inversion() const;

  bool operator==(const CyclicWord&) const = default;

 private:
  Word rep_;
};

Word parse_word(const Alphabet& alphabet, std::string_view text);
std::string to_string(const Word& w);

}  // namespace lamina

#endif
