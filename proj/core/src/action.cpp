#include "lamina/action.hpp"

#include <algorithm>
#include <string>

namespace lamina {

namespace {

// Image language, factor-closed, then chopped through the full margin: the
// result is the truncation of image-language-chop-margin, which equals the
// laminary core once the margin passes the true cancellation depth.  The
// truncation sequence can pause on the way down, so stopping at the first
// plateau is unsound; instead the whole margin is spent and the tail of the
// sequence must have gone quiet, else the margin was too small.
FactorLanguage image_core(const Automorphism& alpha,
                          const FactorLanguage& source, int n, int margin) {
  const int image_horizon = n + 2 * margin;
  LanguageBuilder builder(source.alphabet(), image_horizon);
  const int top = source.max_word_length();
  for (const Word& w : source.words_of_length(top))
    builder.add(apply(alpha, w));
  FactorLanguage current = std::move(builder).build(false);

  FactorLanguage previous = truncate(current, n);
  int last_move = 0;
  for (int k = 1; k <= margin; ++k) {
    current = chop(current, 1);
    FactorLanguage candidate = truncate(current, n);
    if (!same_words(candidate, previous)) last_move = k;
    previous = std::move(candidate);
  }
  if (last_move >= margin)
    throw consistency_error(
        "image chops were still shrinking at the full margin; "
        "retry with a doubled margin");

  LanguageBuilder exact(source.alphabet(), n);
  previous.for_each_word([&](const Word& w) { exact.add(w); });
  FactorLanguage result = std::move(exact).build(true);
  if (!is_laminary_at(result))
    throw consistency_error("chopped image failed the laminarity check");
  return result;
}

}  // namespace

int action_chop_margin(const Automorphism& alpha) {
  // The margin only has to reach the chop stabilization point; the pipeline
  // cross-checks catch a shortfall, so the radius is capped for speed.
  const int k_max = std::min(default_bbt_kmax(alpha.forward()), 12);
  const BbtEstimate estimate = bbt_estimate(alpha.forward(), k_max, 3);
  return 2 * estimate.lower + 2;
}

int act_required_horizon(const Automorphism& alpha, int n, int margin) {
  if (margin <= 0) margin = action_chop_margin(alpha);
  return alpha.conorm() * (n + 2 * margin) + 2;
}

FactorLanguage act(const Automorphism& alpha, const FactorLanguage& language,
                   int n, int margin) {
  if (n < 1) throw horizon_error("target horizon must be at least 1");
  if (!language.exact())
    throw invalid_input("the action is defined on exact truncations only");
  if (alpha.alphabet() != language.alphabet())
    throw invalid_input("alphabet mismatch between automorphism and language");

  if (margin <= 0) margin = action_chop_margin(alpha);
  const int core_horizon = alpha.conorm() * (n + 2 * margin);
  if (language.horizon() < core_horizon + 2)
    throw horizon_error(
        "source horizon " + std::to_string(language.horizon()) +
        " is too small; regenerate the language at horizon >= " +
        std::to_string(core_horizon + 2));

  FactorLanguage result =
      image_core(alpha, truncate(language, core_horizon), n, margin);
  FactorLanguage deeper =
      image_core(alpha, truncate(language, core_horizon + 2), n, margin);
  if (!same_words(result, deeper))
    throw consistency_error(
        "action result changed when recomputed from a deeper source horizon");
  return result;
}

bool verify_composition(const Automorphism& alpha, const Automorphism& beta,
                        const FactorLanguage& language, int n) {
  const Automorphism composed = compose(alpha, beta);
  const FactorLanguage lhs =
      act(composed, language, n, action_chop_margin(composed));
  const int alpha_margin = action_chop_margin(alpha);
  const int intermediate = act_required_horizon(alpha, n, alpha_margin);
  const FactorLanguage mid =
      act(beta, language, intermediate, action_chop_margin(beta));
  const FactorLanguage rhs = act(alpha, mid, n, alpha_margin);
  return same_words(lhs, rhs);
}

}  // namespace lamina
