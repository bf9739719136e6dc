#include "lamina/language.hpp"

#include <algorithm>
#include <string>

namespace lamina {

namespace {

const std::vector<Word>& empty_bucket() {
  static const std::vector<Word> none;
  return none;
}

void require_same_alphabet(const FactorLanguage& a, const FactorLanguage& b) {
  if (a.alphabet() != b.alphabet())
    throw invalid_input("alphabet mismatch between languages");
}

}  // namespace

FactorLanguage::FactorLanguage(Alphabet alphabet, int horizon, bool exact,
                               std::vector<std::vector<Word>> by_length,
                               std::unordered_set<Word, WordHash> members)
    : alphabet_(alphabet),
      horizon_(horizon),
      exact_(exact),
      by_length_(std::move(by_length)),
      members_(std::move(members)),
      count_(members_.size()) {}

const std::vector<Word>& FactorLanguage::words_of_length(int length) const {
  if (length < 1 || length >= static_cast<int>(by_length_.size()))
    return empty_bucket();
  return by_length_[length];
}

int FactorLanguage::max_word_length() const noexcept {
  for (int len = static_cast<int>(by_length_.size()) - 1; len >= 1; --len)
    if (!by_length_[len].empty()) return len;
  return 0;
}

LanguageBuilder::LanguageBuilder(Alphabet alphabet, int horizon)
    : alphabet_(alphabet), horizon_(horizon) {
  if (horizon < 1) throw horizon_error("horizon must be at least 1");
  buckets_.resize(horizon_ + 1);
}

void LanguageBuilder::add_one_sided(const Word& w) {
  for (Letter x : w)
    if (!alphabet_.contains(x))
      throw invalid_input("seed word uses a letter outside the alphabet");
  const int h = horizon_;
  if (static_cast<int>(w.size()) <= h) {
    if (!w.empty()) buckets_[w.size()].insert(w);
    return;
  }
  for (std::size_t i = 0; i + h <= w.size(); ++i)
    buckets_[h].insert(w.subword(i, h));
}

void LanguageBuilder::add(const Word& w) {
  add_one_sided(w);
  add_one_sided(w.inverse());
}

FactorLanguage LanguageBuilder::build(bool exact) && {
  // Downward closure: the (len-1)-factors of the seeds are exactly the
  // prefixes and suffixes of their len-factors, plus the seeds of that length.
  for (int len = horizon_; len >= 2; --len)
    for (const Word& w : buckets_[len]) {
      buckets_[len - 1].insert(w.prefix(len - 1));
      buckets_[len - 1].insert(w.suffix(len - 1));
    }
  std::vector<std::vector<Word>> by_length(horizon_ + 1);
  std::unordered_set<Word, WordHash> members;
  for (int len = 1; len <= horizon_; ++len) {
    auto& sorted = by_length[len];
    sorted.assign(buckets_[len].begin(), buckets_[len].end());
    std::sort(sorted.begin(), sorted.end());
    members.insert(sorted.begin(), sorted.end());
  }
  return FactorLanguage(alphabet_, horizon_, exact, std::move(by_length),
                        std::move(members));
}

FactorLanguage close(const Alphabet& alphabet, const std::vector<Word>& seeds,
                     int horizon) {
  if (alphabet.rank() < 2)
    throw invalid_input("languages need an alphabet of rank at least 2");
  if (seeds.empty()) throw invalid_input("empty seed set");
  LanguageBuilder builder(alphabet, horizon);
  for (const Word& w : seeds) builder.add(w);
  FactorLanguage out = std::move(builder).build(false);
  if (out.empty()) throw invalid_input("empty seed set");
  return out;
}

FactorLanguage chop(const FactorLanguage& language, int k) {
  if (k < 0) throw invalid_input("chop depth must be nonnegative");
  const int horizon = language.horizon() - 2 * k;
  if (horizon < 1)
    throw horizon_error("horizon exhausted: cannot chop " +
                        std::to_string(k) + " from horizon " +
                        std::to_string(language.horizon()));
  LanguageBuilder builder(language.alphabet(), horizon);
  language.for_each_word([&](const Word& w) {
    const int len = static_cast<int>(w.size());
    if (len > 2 * k) builder.add(w.subword(k, len - 2 * k));
  });
  return std::move(builder).build(language.exact());
}

FactorLanguage truncate(const FactorLanguage& language, int horizon) {
  if (horizon < 1) throw horizon_error("horizon must be at least 1");
  const int h = std::min(horizon, language.horizon());
  LanguageBuilder builder(language.alphabet(), h);
  for (int len = 1; len <= h; ++len)
    for (const Word& w : language.words_of_length(len)) builder.add(w);
  return std::move(builder).build(language.exact());
}

bool is_laminary_at(const FactorLanguage& language) {
  const int h = language.horizon();
  const int letters = language.alphabet().letter_count();
  bool ok = !language.empty();
  language.for_each_word([&](const Word& w) {
    if (!ok) return;
    if (!language.contains(w.inverse())) ok = false;  // symmetric
    const int len = static_cast<int>(w.size());
    if (len >= 2 && (!language.contains(w.prefix(len - 1)) ||
                     !language.contains(w.suffix(len - 1))))
      ok = false;  // factorial
    if (len >= h) return;
    bool left = false, right = false;
    for (Letter x = 0; x < letters; ++x) {
      if (!left && x != inverse_letter(w.front())) {
        std::vector<Letter> ext{x};
        ext.insert(ext.end(), w.begin(), w.end());
        left = language.contains(Word::from_letters(std::move(ext)));
      }
      if (!right && inverse_letter(x) != w.back()) {
        std::vector<Letter> ext(w.begin(), w.end());
        ext.push_back(x);
        right = language.contains(Word::from_letters(std::move(ext)));
      }
    }
    if (!left || !right) ok = false;  // bi-extendable within horizon
  });
  return ok;
}

bool equal_at(const FactorLanguage& a, const FactorLanguage& b, int m) {
  require_same_alphabet(a, b);
  if (m < 1 || m > a.horizon() || m > b.horizon())
    throw horizon_error("truncation level " + std::to_string(m) +
                        " exceeds a horizon");
  for (int len = 1; len <= m; ++len)
    if (a.words_of_length(len) != b.words_of_length(len)) return false;
  return true;
}

bool same_words(const FactorLanguage& a, const FactorLanguage& b) {
  if (a.word_count() != b.word_count()) return false;
  const int top = std::max(a.max_word_length(), b.max_word_length());
  for (int len = 1; len <= top; ++len)
    if (a.words_of_length(len) != b.words_of_length(len)) return false;
  return true;
}

LanguageDistance distance(const FactorLanguage& a, const FactorLanguage& b) {
  require_same_alphabet(a, b);
  if (!a.exact() || !b.exact())
    throw invalid_input("distance needs exact truncations");
  const int shared = std::min(a.horizon(), b.horizon());
  int first_differing = 0;
  for (int len = 1; len <= shared; ++len)
    if (a.words_of_length(len) != b.words_of_length(len)) {
      first_differing = len;
      break;
    }
  if (first_differing == 0)
    return LanguageDistance{(shared - 1) / 2, true};
  return LanguageDistance{std::max(0, (first_differing - 2) / 2), false};
}

std::optional<int> gap_bound(const FactorLanguage& language, int m) {
  if (!language.exact()) throw invalid_input("gap bound needs an exact truncation");
  if (m < 1 || m > language.horizon())
    throw horizon_error("gap bound level exceeds the horizon");
  // One representative per inversion pair is enough: contains-u-or-u^-1 is
  // inversion invariant.
  std::vector<Word> targets;
  for (int len = 1; len <= m; ++len)
    for (const Word& u : language.words_of_length(len)) {
      Word v = u.inverse();
      if (!(v < u)) targets.push_back(u);
    }
  for (int k = m; k <= language.horizon(); ++k) {
    const auto& level = language.words_of_length(k);
    if (level.empty()) continue;
    bool all = true;
    for (const Word& w : level) {
      for (const Word& u : targets)
        if (!w.contains(u) && !w.contains(u.inverse())) {
          all = false;
          break;
        }
      if (!all) break;
    }
    if (all) return k;
  }
  return std::nullopt;
}

bool is_positive(const FactorLanguage& language) {
  bool ok = !language.empty();
  language.for_each_word([&](const Word& w) {
    if (!ok) return;
    bool any_generator = false, any_inverse = false;
    for (Letter x : w)
      (is_generator_letter(x) ? any_generator : any_inverse) = true;
    if (any_generator && any_inverse) ok = false;
  });
  return ok;
}

FactorLanguage unite(const FactorLanguage& a, const FactorLanguage& b) {
  require_same_alphabet(a, b);
  const int h = std::min(a.horizon(), b.horizon());
  LanguageBuilder builder(a.alphabet(), h);
  auto feed = [&](const FactorLanguage& lang) {
    lang.for_each_word([&](const Word& w) {
      if (static_cast<int>(w.size()) <= h) builder.add(w);
    });
  };
  feed(a);
  feed(b);
  return std::move(builder).build(false);
}

FactorLanguage intersect(const FactorLanguage& a, const FactorLanguage& b) {
  require_same_alphabet(a, b);
  const int h = std::min(a.horizon(), b.horizon());
  LanguageBuilder builder(a.alphabet(), h);
  a.for_each_word([&](const Word& w) {
    if (static_cast<int>(w.size()) <= h && b.contains(w)) builder.add(w);
  });
  return std::move(builder).build(false);
}

}  // namespace lamina
