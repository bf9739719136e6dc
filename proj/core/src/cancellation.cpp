#include "lamina/cancellation.hpp"

#include <algorithm>

namespace lamina {

int defect(const Endomorphism& phi, const Word& u, const Word& v) {
  if (!u.empty() && !v.empty() && u.back() == inverse_letter(v.front()))
    throw invalid_input("defect needs a reduced juxtaposition uv");
  return concat(apply(phi, u), apply(phi, v)).cancelled;
}

int default_bbt_kmax(const Endomorphism& phi) {
  return 4 * std::max(phi.norm(), 1);
}

namespace {

// One enumerated word together with its image; `label` is the word's first
// letter.  Pairs (u, v) with uv reduced correspond to pairs (x, y) = (u^-1, v)
// with distinct labels, and defect(u, v) = lcp(phi(x), phi(y)).
struct Entry {
  Word source;  // x
  Word image;   // phi(x)
  Letter label;
};

std::size_t lcp_length(const Word& a, const Word& b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return i;
}

}  // namespace

BbtEstimate bbt_estimate(const Endomorphism& phi, int k_max, int window,
                         int min_radius) {
  if (k_max < 1) throw invalid_input("search radius must be at least 1");
  const int letters = phi.alphabet().letter_count();

  BbtEstimate estimate;
  estimate.window = window;

  std::vector<Entry> entries;            // all words of length <= current radius
  std::vector<Entry> frontier;           // words of the previous length
  int last_increase_radius = 0;

  for (int k = 1; k <= k_max; ++k) {
    std::vector<Entry> next;
    if (k == 1) {
      for (Letter x = 0; x < letters; ++x)
        next.push_back(Entry{Word::reduced({x}), phi.letter_image(x),
                             static_cast<Letter>(x)});
    } else {
      for (const Entry& e : frontier)
        for (Letter x = 0; x < letters; ++x) {
          if (x == inverse_letter(e.source.back())) continue;
          Product extended = concat(e.source, Word::reduced({x}));
          Product image = concat(e.image, phi.letter_image(x));
          next.push_back(
              Entry{std::move(extended.word), std::move(image.word), e.label});
        }
    }
    entries.insert(entries.end(), next.begin(), next.end());
    frontier = std::move(next);

    // Max cross-label lcp in a sorted list is realized by an adjacent pair
    // with distinct labels.
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) {
                if (a.image.letters() != b.image.letters())
                  return a.image.letters() < b.image.letters();
                return a.source < b.source;
              });
    for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
      const Entry& a = entries[i];
      const Entry& b = entries[i + 1];
      if (a.label == b.label) continue;
      const int d = static_cast<int>(lcp_length(a.image, b.image));
      if (d > estimate.lower) {
        estimate.lower = d;
        estimate.witness_u = a.source.inverse();
        estimate.witness_v = b.source;
        last_increase_radius = k;
      }
    }

    estimate.search_radius = k;
    estimate.stabilized = (k - last_increase_radius >= window);
    if (estimate.stabilized && k >= min_radius) break;
  }
  return estimate;
}

int almost_cyclic_radius(const Endomorphism& phi, const Word& w) {
  if (!is_cyclically_reduced(w))
    throw invalid_input("almost-cyclic radius needs a cyclically reduced word");
  return cyclic_reduce(apply(phi, w)).radius();
}

}  // namespace lamina
