#include "lamina/repro.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lamina/io.hpp"

namespace lamina {

namespace {

using json = nlohmann::ordered_json;

struct NielsenMove {
  const char* images;
  const char* inverse;
};

// Elementary moves on F({a,b}) with their inverses, so products verify.
constexpr NielsenMove kMoves[] = {
    {"ab,b", "aB,b"},  // a -> ab
    {"aB,b", "ab,b"},
    {"ba,b", "Ba,b"},  // a -> ba
    {"Ba,b", "ba,b"},
    {"A,b", "A,b"},    // a -> a^-1
    {"b,a", "b,a"},    // swap
};

Endomorphism move_endo(const Alphabet& alphabet, const char* spec) {
  // "xy,z" maps a -> xy, b -> z.
  std::string text(spec);
  const auto comma = text.find(',');
  std::vector<Word> images{parse_word(alphabet, text.substr(0, comma)),
                           parse_word(alphabet, text.substr(comma + 1))};
  return Endomorphism(alphabet, std::move(images));
}

}  // namespace

Automorphism random_nielsen_automorphism(std::mt19937_64& rng, int max_moves) {
  const Alphabet alphabet(2);
  std::uniform_int_distribution<int> count_dist(1, std::max(max_moves, 1));
  std::uniform_int_distribution<std::size_t> move_dist(0, std::size(kMoves) - 1);
  Endomorphism forward = Endomorphism::identity(alphabet);
  Endomorphism backward = Endomorphism::identity(alphabet);
  const int count = count_dist(rng);
  for (int i = 0; i < count; ++i) {
    const NielsenMove& move = kMoves[move_dist(rng)];
    forward = compose(forward, move_endo(alphabet, move.images));
    backward = compose(move_endo(alphabet, move.inverse), backward);
  }
  return Automorphism(std::move(forward), std::move(backward));
}

std::vector<Word> cyclic_words_up_to(const Alphabet& alphabet, int max_len) {
  std::set<Word> canonical;
  std::vector<Letter> stack;
  auto emit = [&]() {
    const Word w = Word::from_letters(stack);
    if (!is_cyclically_reduced(w)) return;
    canonical.insert(CyclicWord(w).representative_up_to_inversion());
  };
  std::function<void(int)> grow = [&](int remaining) {
    if (!stack.empty()) emit();
    if (remaining == 0) return;
    for (Letter x = 0; x < alphabet.letter_count(); ++x) {
      if (!stack.empty() && x == inverse_letter(stack.back())) continue;
      stack.push_back(x);
      grow(remaining - 1);
      stack.pop_back();
    }
  };
  grow(max_len);
  return std::vector<Word>(canonical.begin(), canonical.end());
}

NotDenseReport repro_not_dense(int n, int max_len) {
  if (n < 2) throw invalid_input("mismatch level must be at least 2");
  const Alphabet alphabet(2);
  const Letter a = alphabet.letter_from_char('a');
  const Letter b = alphabet.letter_from_char('b');
  const FactorLanguage ends = from_ends(
      alphabet,
      BiinfiniteWord(Word::reduced({a}), Word(), Word::reduced({b})), n);

  NotDenseReport report;
  report.horizon = n;
  report.max_len = max_len;
  report.all_fail = true;

  const std::vector<Word> words = cyclic_words_up_to(alphabet, max_len);
  for (const Word& w : words) {
    const FactorLanguage rat = rational(alphabet, w, n);
    if (equal_at(rat, ends, n)) {
      report.all_fail = false;
      continue;
    }
    const bool pure = std::all_of(w.begin(), w.end(), [&](Letter x) {
                        return x / 2 == a / 2;
                      }) ||
                      std::all_of(w.begin(), w.end(),
                                  [&](Letter x) { return x / 2 == b / 2; });
    NotDenseRow row;
    row.cyclic_word = w;
    if (pure) {
      // Pure powers never see the crossing word "ab".
      row.separator = Word::from_letters({a, b});
      row.separator_in_rational = false;
      if (rat.contains(row.separator) || !ends.contains(row.separator))
        throw consistency_error("pure-power separator check failed");
    } else {
      // A mixed cyclic word always yields a junction b followed by a letter
      // other than b, absent from the two-ended language.
      const Word ba = Word::from_letters({b, a});
      const Word bA = Word::from_letters({b, inverse_letter(a)});
      if (rat.contains(ba))
        row.separator = ba;
      else if (rat.contains(bA))
        row.separator = bA;
      else
        throw consistency_error("mixed word without a b-junction separator");
      row.separator_in_rational = true;
      if (ends.contains(row.separator))
        throw consistency_error("separator unexpectedly present in both");
    }
    report.rows.push_back(std::move(row));
  }
  report.all_fail = report.rows.size() == words.size();
  return report;
}

LimitSetReport repro_limit_set(
    const std::function<FactorLanguage(int horizon)>& generator, int m_max) {
  LimitSetReport report;
  report.all_certified = true;
  int horizon = std::max(8, 3 * m_max);
  FactorLanguage language = generator(horizon);
  for (int m = 1; m <= m_max; ++m) {
    std::optional<int> gap;
    for (;;) {
      gap = gap_bound(language, m);
      if (gap && 3 * *gap <= language.horizon()) break;
      const int needed = gap ? 3 * *gap : 2 * horizon;
      horizon = std::max(needed, horizon + 1);
      if (horizon > 4096)
        throw horizon_error("gap bound still unwitnessed at horizon 4096");
      language = generator(horizon);
    }
    LimitSetRow row;
    row.m = m;
    row.gap = *gap;
    const CyclicWord approximant = rational_approximant(language, m);
    row.approximant = approximant.representative();
    row.certified =
        equal_at(rational(language.alphabet(), row.approximant, m),
                 truncate(language, m), m);
    row.certified_level = (m - 1) / 2;
    report.all_certified = report.all_certified && row.certified;
    report.rows.push_back(std::move(row));
  }
  report.horizon_used = horizon;
  return report;
}

FixedPointReport repro_fixed_point(int trials, int nielsen_len,
                                   std::uint64_t seed) {
  const Alphabet alphabet(2);
  const Word commutator = parse_word(alphabet, "ABab");
  const CyclicWord commutator_class(commutator);
  const Word commutator_canonical =
      commutator_class.representative_up_to_inversion();

  std::mt19937_64 rng(seed);
  FixedPointReport report;
  report.trials = trials;

  for (int t = 0; t < trials; ++t) {
    FixedPointRow row{random_nielsen_automorphism(rng, nielsen_len)};
    const Word image = apply(row.alpha, commutator);
    const Word core = cyclic_reduce(image).core;
    row.commutator_fixed =
        !core.empty() && is_cyclically_reduced(core) &&
        CyclicWord(core).representative_up_to_inversion() ==
            commutator_canonical;

    const int source_horizon = act_required_horizon(row.alpha, 2);
    const FactorLanguage moved =
        act(row.alpha, rational(alphabet, commutator, source_horizon), 2);
    // The image language keeps a two-letter word xy with y distinct from x
    // and x^-1, which generator powers never have.
    bool has_crossing = false;
    for (const Word& w : moved.words_of_length(2))
      if (w[1] / 2 != w[0] / 2) has_crossing = true;
    const FactorLanguage generator_power =
        rational(alphabet, Word::reduced({alphabet.letter_from_char('a')}), 2);
    bool has_crossing_power = false;
    for (const Word& w : generator_power.words_of_length(2))
      if (w[1] / 2 != w[0] / 2) has_crossing_power = true;
    const LanguageDistance d = distance(generator_power, moved);
    row.separated = has_crossing && !has_crossing_power && !d.capped &&
                    d.level == 0;

    if (!row.commutator_fixed || !row.separated) ++report.failures;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string rauzy_dot(const FactorLanguage& language, int k) {
  if (k < 1 || k >= language.horizon())
    throw horizon_error("rauzy level must satisfy 1 <= k < horizon");
  std::ostringstream out;
  out << "digraph rauzy {\n";
  for (const Word& node : language.words_of_length(k))
    out << "  \"" << to_string(node) << "\";\n";
  for (const Word& w : language.words_of_length(k + 1))
    out << "  \"" << to_string(w.prefix(k)) << "\" -> \""
        << to_string(w.suffix(k)) << "\";\n";
  out << "}\n";
  return out.str();
}

std::optional<std::size_t> converge_index(
    std::span<const FactorLanguage> sequence, const FactorLanguage& target,
    int n) {
  if (!target.exact())
    throw invalid_input("convergence target must be exact");
  for (const FactorLanguage& language : sequence)
    if (!language.exact())
      throw invalid_input("every language in the sequence must be exact");
  std::optional<std::size_t> first;
  for (std::size_t i = sequence.size(); i-- > 0;) {
    if (equal_at(sequence[i], target, n))
      first = i;
    else
      break;
  }
  return first;
}

std::string to_json(const NotDenseReport& report) {
  json out;
  out["horizon"] = report.horizon;
  out["max_len"] = report.max_len;
  out["all_fail"] = report.all_fail;
  json rows = json::array();
  for (const NotDenseRow& row : report.rows) {
    json r;
    r["word"] = to_string(row.cyclic_word);
    r["separator"] = to_string(row.separator);
    r["separator_side"] = row.separator_in_rational ? "rational" : "ends";
    rows.push_back(std::move(r));
  }
  out["rows"] = std::move(rows);
  return out.dump();
}

std::string to_json(const LimitSetReport& report) {
  json out;
  out["all_certified"] = report.all_certified;
  out["horizon_used"] = report.horizon_used;
  json rows = json::array();
  for (const LimitSetRow& row : report.rows) {
    json r;
    r["m"] = row.m;
    r["gap"] = row.gap;
    r["approximant"] = to_string(row.approximant);
    r["approximant_len"] = row.approximant.size();
    r["certified"] = row.certified;
    r["certified_level"] = row.certified_level;
    rows.push_back(std::move(r));
  }
  out["rows"] = std::move(rows);
  return out.dump();
}

std::string to_json(const FixedPointReport& report) {
  json out;
  out["trials"] = report.trials;
  out["failures"] = report.failures;
  json rows = json::array();
  for (const FixedPointRow& row : report.rows) {
    json r;
    r["images"] = json::parse(lamina::to_json(row.alpha))["images"];
    r["commutator_fixed"] = row.commutator_fixed;
    r["separated"] = row.separated;
    rows.push_back(std::move(r));
  }
  out["rows"] = std::move(rows);
  return out.dump();
}

}  // namespace lamina
