#include "lamina/generate.hpp"

#include <algorithm>
#include <string>

namespace lamina {

namespace {

// Euclidean remainder for phase arithmetic on negative indices.
std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

Word power_word(const Word& base, int copies) {
  std::vector<Letter> out;
  out.reserve(base.size() * copies);
  for (int i = 0; i < copies; ++i)
    out.insert(out.end(), base.begin(), base.end());
  return Word::from_letters(std::move(out));
}

void require_lamination_rank(const Alphabet& alphabet) {
  if (alphabet.rank() < 2)
    throw invalid_input("laminations need an alphabet of rank at least 2");
}

}  // namespace

BiinfiniteWord::BiinfiniteWord(Word left_period, Word center, Word right_period)
    : left_period_(std::move(left_period)),
      center_(std::move(center)),
      right_period_(std::move(right_period)) {
  if (left_period_.empty() || right_period_.empty())
    throw invalid_input("biinfinite word needs nonempty periods");
  if (!is_cyclically_reduced(left_period_) ||
      !is_cyclically_reduced(right_period_))
    throw invalid_input("periods must be cyclically reduced");
  left_period_ = primitive_root(left_period_);
  right_period_ = primitive_root(right_period_);
  const Letter before = center_.empty() ? left_period_.back() : center_.back();
  if (before == inverse_letter(right_period_.front()))
    throw invalid_input("junction into the right period is not reduced");
  if (!center_.empty() &&
      left_period_.back() == inverse_letter(center_.front()))
    throw invalid_input("junction out of the left period is not reduced");
}

Letter BiinfiniteWord::letter_at(std::int64_t i) const noexcept {
  const auto c = static_cast<std::int64_t>(center_.size());
  if (i <= 0) {
    // ... left left | with letter 0 the period's last letter.
    const auto n = static_cast<std::int64_t>(left_period_.size());
    return left_period_[static_cast<std::size_t>(mod(i - 1, n))];
  }
  if (i <= c) return center_[static_cast<std::size_t>(i - 1)];
  const auto n = static_cast<std::int64_t>(right_period_.size());
  return right_period_[static_cast<std::size_t>(mod(i - c - 1, n))];
}

Word BiinfiniteWord::window(std::int64_t lo, std::int64_t hi) const {
  if (lo > hi) throw invalid_input("empty window");
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t i = lo; i <= hi; ++i) out.push_back(letter_at(i));
  return Word::from_letters(std::move(out));
}

BiinfiniteWord BiinfiniteWord::inverted() const {
  return BiinfiniteWord(right_period_.inverse(), center_.inverse(),
                        left_period_.inverse());
}

FactorLanguage rational(const Alphabet& alphabet, const Word& w, int horizon) {
  require_lamination_rank(alphabet);
  if (w.empty())
    throw invalid_input("rational lamination of the trivial word");
  const Word core = cyclic_reduce(w).core;
  const int copies = horizon / static_cast<int>(core.size()) + 2;
  LanguageBuilder builder(alphabet, horizon);
  builder.add(power_word(core, copies));
  return std::move(builder).build(true);
}

FactorLanguage from_ends(const Alphabet& alphabet, const BiinfiniteWord& leaf,
                         int horizon) {
  require_lamination_rank(alphabet);
  // A window long enough that every length <= horizon factor of the leaf
  // shows up: one full period of slack on each side beyond the horizon.
  const auto h = static_cast<std::int64_t>(horizon);
  const auto lo = -(h + 2 * static_cast<std::int64_t>(leaf.left_period().size()));
  const auto hi = static_cast<std::int64_t>(leaf.center().size()) + h +
                  2 * static_cast<std::int64_t>(leaf.right_period().size());
  LanguageBuilder builder(alphabet, horizon);
  builder.add(leaf.window(lo, hi));
  return std::move(builder).build(true);
}

FactorLanguage from_substitution(const Endomorphism& phi, Letter seed,
                                 int horizon) {
  require_lamination_rank(phi.alphabet());
  if (!phi.alphabet().contains(seed) || !is_generator_letter(seed))
    throw invalid_input("seed must be a generator letter");
  if (!phi.positive())
    throw invalid_input("substitution must have positive generator images");
  const Word seed_word = Word::reduced({seed});
  const Word first = apply(phi, seed_word);
  if (first.size() < 2 || first.front() != seed)
    throw invalid_input("seed is not prolongable under this substitution");

  auto factor_set = [&](const Word& w) {
    LanguageBuilder builder(phi.alphabet(), horizon);
    builder.add(w);
    return std::move(builder).build(true);
  };

  Word current = seed_word;
  FactorLanguage current_factors = factor_set(current);
  for (int iteration = 0;; ++iteration) {
    if (iteration > 64 || current.size() > (1u << 24))
      throw consistency_error("substitution iteration did not stabilize");
    Word next = apply(phi, current);
    if (next.size() <= current.size())
      throw invalid_input("substitution iteration must strictly grow");
    FactorLanguage next_factors = factor_set(next);
    if (same_words(current_factors, next_factors)) return next_factors;
    current = std::move(next);
    current_factors = std::move(next_factors);
  }
}

BiinfiniteWord rho(const BoundaryPoint& x, const BoundaryPoint& y) {
  const auto k = common_prefix_length(x, y);
  if (!k) throw invalid_input("the two boundary points coincide");

  // Tail of a point after position k, as remainder . period-rotation.
  auto tail = [](const BoundaryPoint& p, std::size_t from) {
    const std::size_t pre = p.prefix().size();
    if (from < pre)
      return std::pair<Word, Word>(p.prefix().subword(from, pre - from),
                                   p.period());
    const std::size_t phase = (from - pre) % p.period().size();
    return std::pair<Word, Word>(Word(), rotate_left(p.period(), phase));
  };

  const auto [sx, qx] = tail(x, *k);
  const auto [sy, qy] = tail(y, *k);
  // Left side: the x-tail read backwards and inverted.
  const Product center = concat(sx.inverse(), sy);
  if (center.cancelled != 0)
    throw consistency_error("maximal common prefix left a cancelling junction");
  return BiinfiniteWord(qx.inverse(), center.word, qy);
}

CyclicWord rational_approximant(const FactorLanguage& language, int m) {
  const auto gap = gap_bound(language, m);
  if (!gap)
    throw horizon_error("gap bound not witnessed at this horizon; "
                        "regenerate the language at a larger horizon");
  const int K = *gap;
  if (3 * K > language.horizon())
    throw horizon_error("horizon below 3x the gap bound (" +
                        std::to_string(3 * K) + " needed)");

  if (language.words_of_length(m).empty() ||
      language.words_of_length(3 * K).empty())
    throw consistency_error("exact language missing a whole length level");
  const Word u = language.words_of_length(m).front();
  const Word v = language.words_of_length(3 * K).front();
  const Word w1 = v.subword(0, K);
  const Word w2 = v.subword(K, K);
  const Word w3 = v.subword(2 * K, K);

  // The same occurrence word must be used at both ends; prefer u, fall back
  // to u^-1 wholesale.
  Word t = u;
  std::size_t pos1 = w1.find(t), pos3 = w3.find(t);
  if (pos1 == Word::npos || pos3 == Word::npos) {
    t = u.inverse();
    pos1 = w1.find(t);
    pos3 = w3.find(t);
    if (pos1 == Word::npos || pos3 == Word::npos)
      throw horizon_error("no common occurrence of the target word in both "
                          "outer thirds; horizon too small");
  }

  std::vector<Letter> letters;
  letters.insert(letters.end(), t.begin(), t.end());
  const Word w1_tail = w1.subword(pos1 + t.size(), K - pos1 - t.size());
  letters.insert(letters.end(), w1_tail.begin(), w1_tail.end());
  letters.insert(letters.end(), w2.begin(), w2.end());
  const Word w3_head = w3.prefix(pos3);
  letters.insert(letters.end(), w3_head.begin(), w3_head.end());
  const Word approximant = Word::from_letters(std::move(letters));

  if (!equal_at(rational(language.alphabet(), approximant, m),
                truncate(language, m), m))
    throw consistency_error("approximant failed its certification");
  return CyclicWord(approximant);
}

}  // namespace lamina
