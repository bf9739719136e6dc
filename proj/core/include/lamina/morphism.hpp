#ifndef LAMINA_MORPHISM_HPP
#define LAMINA_MORPHISM_HPP

#include <vector>

#include "lamina/word.hpp"

namespace lamina {

/// An endomorphism of the free group, given by one reduced word per
/// generator; the image of an inverse letter is the formal inverse of the
/// generator's image.
class Endomorphism {
 public:
  Endomorphism(Alphabet alphabet, std::vector<Word> generator_images);

  static Endomorphism identity(const Alphabet& alphabet);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const Word& generator_image(int g) const { return images_.at(g); }
  Word letter_image(Letter x) const;

  /// max over generators of the image length.
  int norm() const noexcept;

  /// All generator images nonempty and over generator letters only.
  bool positive() const noexcept;

  bool operator==(const Endomorphism&) const = default;

 private:
  Alphabet alphabet_;
  std::vector<Word> images_;
};

Word apply(const Endomorphism& phi, const Word& w);

/// compose(phi, psi) applies phi after psi.
Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi);

/// True iff both compositions fix every generator.
bool verify_inverse(const Endomorphism& phi, const Endomorphism& psi);

/// An automorphism: an endomorphism bundled with its inverse, verified at
/// construction.  Carries |alpha| and |alpha^-1| for horizon bookkeeping.
class Automorphism {
 public:
  Automorphism(Endomorphism forward, Endomorphism backward);

  static Automorphism identity(const Alphabet& alphabet);

  const Endomorphism& forward() const noexcept { return forward_; }
  const Endomorphism& backward() const noexcept { return backward_; }
  const Alphabet& alphabet() const noexcept { return forward_.alphabet(); }

  int norm() const noexcept { return forward_.norm(); }
  int conorm() const noexcept { return backward_.norm(); }

  Automorphism inverse() const { return Automorphism(backward_, forward_); }

  bool operator==(const Automorphism&) const = default;

 private:
  Endomorphism forward_;
  Endomorphism backward_;
};

Word apply(const Automorphism& alpha, const Word& w);
Automorphism compose(const Automorphism& alpha, const Automorphism& beta);

}  // namespace lamina

#endif
