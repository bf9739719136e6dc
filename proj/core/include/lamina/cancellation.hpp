#ifndef LAMINA_CANCELLATION_HPP
#define LAMINA_CANCELLATION_HPP

#include "lamina/morphism.hpp"

namespace lamina {

/// Cancellation introduced by phi at a reduced junction:
/// (|phi(u)| + |phi(v)| - |phi(uv)|) / 2.  Requires uv reduced.
int defect(const Endomorphism& phi, const Word& u, const Word& v);

/// A certified lower bound for the cancellation constant of phi, with the
/// witness pair realizing it.  The bound is nondecreasing in the search
/// radius; `stabilized` records that it did not move over the last `window`
/// radii.  The true constant is finite and >= lower; it is never claimed
/// exactly.
struct BbtEstimate {
  int lower = 0;
  Word witness_u;
  Word witness_v;
  int search_radius = 0;
  bool stabilized = false;
  int window = 0;
};

/// Maximum defect over reduced pairs with |u|, |v| <= radius, scanned radius
/// by radius up to k_max.  The scan may stop once stabilized, but never
/// before min_radius, so callers needing the max over a specific radius can
/// force it.  The search orders image prefixes instead of enumerating pairs:
/// the defect of (u, v) is the longest common prefix of phi(u^-1) and phi(v).
BbtEstimate bbt_estimate(const Endomorphism& phi, int k_max, int window,
                         int min_radius = 0);

int default_bbt_kmax(const Endomorphism& phi);

/// Conjugation radius of the image of a cyclically reduced word:
/// (|phi(w)| - |cyclic core of phi(w)|) / 2.  Equals the defect of (w, w), so
/// it never exceeds the cancellation constant.  The radius depends on the
/// chosen rotation, hence the word argument.
int almost_cyclic_radius(const Endomorphism& phi, const Word& w);

}  // namespace lamina

#endif
