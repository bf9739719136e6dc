#ifndef LAMINA_BOUNDARY_HPP
#define LAMINA_BOUNDARY_HPP

#include <cstdint>
#include <optional>

#include "lamina/word.hpp"

namespace lamina {

/// An eventually periodic point of the boundary: the one-sided infinite
/// reduced word prefix . period . period ...  Canonical form: the period is
/// primitive and the prefix is the shortest one realizing the point, so two
/// points are equal iff their canonical fields are.
class BoundaryPoint {
 public:
  BoundaryPoint(Word prefix, Word period);

  const Word& prefix() const noexcept { return prefix_; }
  const Word& period() const noexcept { return period_; }

  /// 0-based letter of the infinite word.
  Letter letter_at(std::size_t i) const noexcept {
    if (i < prefix_.size()) return prefix_[i];
    return period_[(i - prefix_.size()) % period_.size()];
  }

  Word head(std::size_t length) const;

  bool operator==(const BoundaryPoint&) const = default;

 private:
  Word prefix_;
  Word period_;
};

enum class Sign { plus, minus };

/// The attracting (plus) or repelling (minus) endpoint of the sequence of
/// powers of a nontrivial w.
BoundaryPoint infinity_word(const Word& w, Sign sign);

/// Length of the longest common prefix, or nullopt when the points coincide.
std::optional<std::size_t> common_prefix_length(const BoundaryPoint& x,
                                                const BoundaryPoint& y);

/// exp(-|common prefix|), and 0 for equal points.
double boundary_distance(const BoundaryPoint& x, const BoundaryPoint& y);

}  // namespace lamina

#endif
