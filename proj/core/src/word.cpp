#include "lamina/word.hpp"

#include <algorithm>

namespace lamina {

Word Word::reduced(std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter x : raw) {
    if (!out.empty() && out.back() == inverse_letter(x))
      out.pop_back();
    else
      out.push_back(x);
  }
  return Word(std::move(out));
}

Word Word::from_letters(std::vector<Letter> letters) {
  for (std::size_t i = 0; i + 1 < letters.size(); ++i)
    if (letters[i + 1] == inverse_letter(letters[i]))
      throw invalid_input("letter sequence is not reduced");
  return Word(std::move(letters));
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back(inverse_letter(*it));
  return Word(std::move(out));
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  if (pos + len > letters_.size()) throw invalid_input("subword out of range");
  return Word(std::vector<Letter>(letters_.begin() + pos,
                                  letters_.begin() + pos + len));
}

bool Word::contains(const Word& needle) const {
  return find(needle) != npos;
}

std::size_t Word::find(const Word& needle) const {
  if (needle.empty()) return 0;
  if (needle.size() > size()) return npos;
  auto it = std::search(letters_.begin(), letters_.end(),
                        needle.letters_.begin(), needle.letters_.end());
  return it == letters_.end() ? npos
                              : static_cast<std::size_t>(it - letters_.begin());
}

bool lex_less(const Word& a, const Word& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a over the letter bytes.
  std::size_t h = 14695981039346656037ull;
  for (Letter x : w) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

Product concat(const Word& u, const Word& v) {
  std::size_t i = u.size(), j = 0;
  while (i > 0 && j < v.size() && u[i - 1] == inverse_letter(v[j])) {
    --i;
    ++j;
  }
  std::vector<Letter> out;
  out.reserve(i + v.size() - j);
  out.insert(out.end(), u.begin(), u.begin() + i);
  out.insert(out.end(), v.begin() + j, v.end());
  return Product{Word::from_letters(std::move(out)), static_cast<int>(j)};
}

CyclicReduction cyclic_reduce(const Word& w) {
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == inverse_letter(w[hi - 1])) {
    ++lo;
    --hi;
  }
  return CyclicReduction{w.subword(lo, hi - lo), w.prefix(lo)};
}

bool is_cyclically_reduced(const Word& w) {
  return w.size() < 2 || w.front() != inverse_letter(w.back());
}

Word rotate_left(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  if (k == 0) return w;
  std::vector<Letter> out;
  out.reserve(w.size());
  out.insert(out.end(), w.begin() + k, w.end());
  out.insert(out.end(), w.begin(), w.begin() + k);
  return Word::from_letters(std::move(out));
}

Word primitive_root(const Word& w) {
  if (w.empty()) throw invalid_input("primitive root of the empty word");
  const std::size_t n = w.size();
  for (std::size_t p = 1; p <= n / 2; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i)
      periodic = (w[i] == w[i - p]);
    if (periodic) return w.prefix(p);
  }
  return w;
}

CyclicWord::CyclicWord(const Word& w) {
  if (w.empty()) throw invalid_input("cyclic word must be nonempty");
  if (!is_cyclically_reduced(w))
    throw invalid_input("cyclic word must be cyclically reduced");
  rep_ = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    Word rot = rotate_left(w, k);
    if (lex_less(rot, rep_)) rep_ = std::move(rot);
  }
}

Word CyclicWord::representative_up_to_inversion() const {
  Word other = CyclicWord(rep_.inverse()).representative();
  return lex_less(other, rep_) ? other : rep_;
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  std::vector<Letter> raw;
  raw.reserve(text.size());
  for (char c : text) raw.push_back(alphabet.letter_from_char(c));
  return Word::reduced(raw);
}

std::string to_string(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (Letter x : w) {
    const char base = is_generator_letter(x) ? 'a' : 'A';
    out.push_back(static_cast<char>(base + x / 2));
  }
  return out;
}

}  // namespace lamina
