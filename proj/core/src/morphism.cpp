#include "lamina/morphism.hpp"

#include <algorithm>

namespace lamina {

Endomorphism::Endomorphism(Alphabet alphabet, std::vector<Word> images)
    : alphabet_(alphabet), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != alphabet_.rank())
    throw invalid_input("endomorphism needs one image per generator");
  for (const Word& w : images_)
    for (Letter x : w)
      if (!alphabet_.contains(x))
        throw invalid_input("generator image uses a letter outside the alphabet");
}

Endomorphism Endomorphism::identity(const Alphabet& alphabet) {
  std::vector<Word> images;
  images.reserve(alphabet.rank());
  for (int g = 0; g < alphabet.rank(); ++g)
    images.push_back(Word::reduced({static_cast<Letter>(2 * g)}));
  return Endomorphism(alphabet, std::move(images));
}

Word Endomorphism::letter_image(Letter x) const {
  if (!alphabet_.contains(x)) throw invalid_input("letter outside the alphabet");
  const Word& img = images_[x / 2];
  return is_generator_letter(x) ? img : img.inverse();
}

int Endomorphism::norm() const noexcept {
  std::size_t n = 0;
  for (const Word& w : images_) n = std::max(n, w.size());
  return static_cast<int>(n);
}

bool Endomorphism::positive() const noexcept {
  for (const Word& w : images_) {
    if (w.empty()) return false;
    for (Letter x : w)
      if (!is_generator_letter(x)) return false;
  }
  return true;
}

Word apply(const Endomorphism& phi, const Word& w) {
  std::vector<Letter> raw;
  raw.reserve(w.size() * static_cast<std::size_t>(std::max(phi.norm(), 1)));
  for (Letter x : w) {
    const Word img = phi.letter_image(x);
    raw.insert(raw.end(), img.begin(), img.end());
  }
  return Word::reduced(raw);
}

Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi) {
  if (phi.alphabet() != psi.alphabet())
    throw invalid_input("alphabet mismatch in composition");
  std::vector<Word> images;
  images.reserve(phi.alphabet().rank());
  for (int g = 0; g < phi.alphabet().rank(); ++g)
    images.push_back(apply(phi, psi.generator_image(g)));
  return Endomorphism(phi.alphabet(), std::move(images));
}

bool verify_inverse(const Endomorphism& phi, const Endomorphism& psi) {
  if (phi.alphabet() != psi.alphabet()) return false;
  for (int g = 0; g < phi.alphabet().rank(); ++g) {
    const Word gen = Word::reduced({static_cast<Letter>(2 * g)});
    if (apply(phi, psi.generator_image(g)) != gen) return false;
    if (apply(psi, phi.generator_image(g)) != gen) return false;
  }
  return true;
}

Automorphism::Automorphism(Endomorphism forward, Endomorphism backward)
    : forward_(std::move(forward)), backward_(std::move(backward)) {
  if (!verify_inverse(forward_, backward_))
    throw invalid_input("supplied maps are not mutually inverse");
}

Automorphism Automorphism::identity(const Alphabet& alphabet) {
  return Automorphism(Endomorphism::identity(alphabet),
                      Endomorphism::identity(alphabet));
}

Word apply(const Automorphism& alpha, const Word& w) {
  return apply(alpha.forward(), w);
}

Automorphism compose(const Automorphism& alpha, const Automorphism& beta) {
  return Automorphism(compose(alpha.forward(), beta.forward()),
                      compose(beta.backward(), alpha.backward()));
}

}  // namespace lamina
