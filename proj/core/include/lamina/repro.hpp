#ifndef LAMINA_REPRO_HPP
#define LAMINA_REPRO_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "lamina/action.hpp"
#include "lamina/generate.hpp"

namespace lamina {

/// Random product of at most max_moves elementary Nielsen moves
/// (a -> ab, a -> ba, a -> a^-1, swap a/b, and their inverses), the inverse
/// tracked symbolically move by move so the result verifies at construction.
/// Rank 2 only.
Automorphism random_nielsen_automorphism(std::mt19937_64& rng, int max_moves);

/// All cyclically reduced words over rank 2 of length 1..max_len, one
/// canonical representative per rotation-and-inversion class, sorted.
std::vector<Word> cyclic_words_up_to(const Alphabet& alphabet, int max_len);

// ---------------------------------------------------------------------------
// Rational languages never match the two-ended language ...aaa.bbb...
// ---------------------------------------------------------------------------

struct NotDenseRow {
  Word cyclic_word;
  Word separator;        // word witnessing the truncation mismatch
  bool separator_in_rational;  // else it lies in the two-ended language
};

struct NotDenseReport {
  int horizon = 0;
  int max_len = 0;
  bool all_fail = false;
  std::vector<NotDenseRow> rows;
};

/// For every cyclic word up to max_len, certifies that its rational language
/// differs from the two-ended language at level n and exhibits a separator:
/// "ab" for pure generator powers, a word b. (second letter not b) otherwise.
NotDenseReport repro_not_dense(int n, int max_len);

// ---------------------------------------------------------------------------
// Rational approximation of a minimal lamination at every level
// ---------------------------------------------------------------------------

struct LimitSetRow {
  int m = 0;
  int gap = 0;           // witnessed gap bound K(m)
  Word approximant;      // v'(m)
  int certified_level = 0;  // distance(L(v'), L) <= exp(-certified_level)
  bool certified = false;
};

struct LimitSetReport {
  std::vector<LimitSetRow> rows;
  bool all_certified = false;
  int horizon_used = 0;
};

/// Runs the approximant construction for m = 1..m_max against a generator
/// that can rebuild the language at any horizon; the horizon grows until the
/// gap bounds are witnessed.
LimitSetReport repro_limit_set(
    const std::function<FactorLanguage(int horizon)>& generator, int m_max);

// ---------------------------------------------------------------------------
// The commutator lamination is fixed; powers of a generator stay far from it
// ---------------------------------------------------------------------------

struct FixedPointRow {
  Automorphism alpha;
  bool commutator_fixed = false;   // alpha([a,b]) ~ [a,b]^(+-1)
  bool separated = false;          // distance(L(a), alpha-image of L([a,b])) = 1
};

struct FixedPointReport {
  int trials = 0;
  int failures = 0;
  std::vector<FixedPointRow> rows;
};

FixedPointReport repro_fixed_point(int trials, int nielsen_len,
                                   std::uint64_t seed);

// ---------------------------------------------------------------------------

/// Rauzy graph of the level-k words: an edge u -> v whenever u and v overlap
/// in k-1 letters and the joined word of length k+1 lies in the language.
/// DOT format, deterministically ordered.
std::string rauzy_dot(const FactorLanguage& language, int k);

/// Least index K such that every language from K on agrees with the target at
/// level n; nullopt when the last one still differs.
std::optional<std::size_t> converge_index(
    std::span<const FactorLanguage> sequence, const FactorLanguage& target,
    int n);

std::string to_json(const NotDenseReport& report);
std::string to_json(const LimitSetReport& report);
std::string to_json(const FixedPointReport& report);

}  // namespace lamina

#endif
