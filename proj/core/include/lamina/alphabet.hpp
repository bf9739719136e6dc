#ifndef LAMINA_ALPHABET_HPP
#define LAMINA_ALPHABET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lamina/error.hpp"

namespace lamina {

/// A letter is an index into the involutive alphabet 'a' < 'A' < 'b' < 'B' < ...
/// Generator g has index 2g, its formal inverse 2g+1, so inversion is XOR 1
/// and the numeric order realizes the canonical letter order.
using Letter = std::uint8_t;

constexpr Letter inverse_letter(Letter x) noexcept { return x ^ 1u; }
constexpr bool is_generator_letter(Letter x) noexcept { return (x & 1u) == 0; }

/// Basis of a free group of finite rank, with the fixed-point-free involution
/// generator <-> formal inverse baked into the letter encoding.
class Alphabet {
 public:
  explicit Alphabet(int rank) : rank_(rank) {
    if (rank < 1 || rank > 26)
      throw invalid_input("alphabet rank must be between 1 and 26");
  }

  int rank() const noexcept { return rank_; }
  int letter_count() const noexcept { return 2 * rank_; }

  bool contains(Letter x) const noexcept { return x < 2 * rank_; }

  char letter_char(Letter x) const {
    if (!contains(x)) throw invalid_input("letter outside alphabet");
    const char base = is_generator_letter(x) ? 'a' : 'A';
    return static_cast<char>(base + x / 2);
  }

  Letter letter_from_char(char c) const {
    if (c >= 'a' && c < 'a' + rank_)
      return static_cast<Letter>(2 * (c - 'a'));
    if (c >= 'A' && c < 'A' + rank_)
      return static_cast<Letter>(2 * (c - 'A') + 1);
    throw invalid_input(std::string("unknown symbol '") + c + "'");
  }

  std::vector<std::string> generator_names() const {
    std::vector<std::string> names;
    names.reserve(rank_);
    for (int g = 0; g < rank_; ++g)
      names.emplace_back(1, static_cast<char>('a' + g));
    return names;
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  int rank_;
};

}  // namespace lamina

#endif
