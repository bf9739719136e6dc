#include "lamina/boundary.hpp"

#include <cmath>
#include <numeric>
#include <vector>

namespace lamina {

BoundaryPoint::BoundaryPoint(Word prefix, Word period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
  if (period_.empty())
    throw invalid_input("boundary point needs a nonempty period");
  if (!is_cyclically_reduced(period_))
    throw invalid_input("period must be cyclically reduced");
  if (!prefix_.empty() && prefix_.back() == inverse_letter(period_.front()))
    throw invalid_input("prefix.period junction is not reduced");
  period_ = primitive_root(period_);
  // Shortest prefix: a trailing prefix letter equal to the period's last
  // letter can be absorbed by rotating the period one step to the right.
  while (!prefix_.empty() && prefix_.back() == period_.back()) {
    period_ = rotate_left(period_, period_.size() - 1);
    prefix_ = prefix_.prefix(prefix_.size() - 1);
  }
}

Word BoundaryPoint::head(std::size_t length) const {
  std::vector<Letter> out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) out.push_back(letter_at(i));
  return Word::from_letters(std::move(out));
}

BoundaryPoint infinity_word(const Word& w, Sign sign) {
  if (w.empty()) throw invalid_input("trivial word has no endpoint at infinity");
  const CyclicReduction d = cyclic_reduce(w);
  Word period = sign == Sign::plus ? d.core : d.core.inverse();
  return BoundaryPoint(d.conjugator, std::move(period));
}

std::optional<std::size_t> common_prefix_length(const BoundaryPoint& x,
                                                const BoundaryPoint& y) {
  if (x == y) return std::nullopt;
  // Two eventually periodic words agreeing beyond both preperiods for a full
  // lcm window agree everywhere, so a mismatch occurs within this bound.
  const std::size_t bound =
      std::max(x.prefix().size(), y.prefix().size()) +
      std::lcm(x.period().size(), y.period().size());
  for (std::size_t i = 0; i < bound; ++i)
    if (x.letter_at(i) != y.letter_at(i)) return i;
  throw consistency_error("distinct boundary points without a mismatch");
}

double boundary_distance(const BoundaryPoint& x, const BoundaryPoint& y) {
  const auto k = common_prefix_length(x, y);
  if (!k) return 0.0;
  return std::exp(-static_cast<double>(*k));
}

}  // namespace lamina
