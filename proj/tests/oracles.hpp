// Independent string-level oracles the tests check the library against.
// Deliberately naive: sets of std::string, no shared code with the library.

#ifndef LAMINA_TESTS_ORACLES_HPP
#define LAMINA_TESTS_ORACLES_HPP

#include <cctype>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lamina/language.hpp"

namespace oracle {

inline char flip_case(char c) {
  return std::isupper(static_cast<unsigned char>(c))
             ? static_cast<char>(std::tolower(static_cast<unsigned char>(c)))
             : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
}

inline std::string inverse(const std::string& w) {
  std::string out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(flip_case(*it));
  return out;
}

inline std::string free_reduce(const std::string& w) {
  std::string out;
  for (char c : w) {
    if (!out.empty() && out.back() == flip_case(c))
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

/// All nonempty factors of length <= n of w and of w^-1.
inline std::set<std::string> symmetric_factors(const std::string& w, int n) {
  std::set<std::string> out;
  for (const std::string& s : {w, inverse(w)})
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t len = 1; len <= static_cast<std::size_t>(n) &&
                                i + len <= s.size();
           ++len)
        out.insert(s.substr(i, len));
  return out;
}

/// Factors of the periodic biinfinite word on y, with inverses.
inline std::set<std::string> periodic_factors(const std::string& y, int n) {
  std::string power;
  while (power.size() < y.size() + 2 * static_cast<std::size_t>(n))
    power += y;
  return symmetric_factors(power, n);
}

/// Apply a positive substitution to a string, `times` times.
inline std::string substitute(const std::map<char, std::string>& rules,
                              std::string w, int times) {
  for (int t = 0; t < times; ++t) {
    std::string next;
    for (char c : w) next += rules.at(c);
    w = std::move(next);
  }
  return w;
}

inline std::set<std::string> words_in(const lamina::FactorLanguage& language) {
  std::set<std::string> out;
  language.for_each_word(
      [&](const lamina::Word& w) { out.insert(lamina::to_string(w)); });
  return out;
}

/// All reduced words of length exactly len over rank 2, as strings.
inline std::vector<std::string> reduced_words_rank2(int len) {
  std::vector<std::string> current{""};
  const std::string letters = "aAbB";
  for (int i = 0; i < len; ++i) {
    std::vector<std::string> next;
    for (const std::string& w : current)
      for (char c : letters) {
        if (!w.empty() && w.back() == flip_case(c)) continue;
        next.push_back(w + c);
      }
    current = std::move(next);
  }
  return current;
}

}  // namespace oracle

#endif
