#ifndef LAMINA_ACTION_HPP
#define LAMINA_ACTION_HPP

#include "lamina/cancellation.hpp"
#include "lamina/language.hpp"

namespace lamina {

/// Chop margin used by act: twice the certified cancellation lower bound plus
/// a safety term.  The result of act does not depend on this being the true
/// constant: any margin at or beyond the stabilization point of the iterated
/// chops yields the identical truncation.
int action_chop_margin(const Automorphism& alpha);

/// Source horizon act() requires for an exact target truncation at n,
/// including the two extra levels consumed by the deepened recomputation:
/// |alpha^-1| * (n + 2 * margin) + 2.  margin <= 0 selects the default.
int act_required_horizon(const Automorphism& alpha, int n, int margin = 0);

/// The induced action on laminations, at truncation level: apply alpha to the
/// maximal words, close under factors, and chop through the full margin --
/// the chops are decreasing and constant once the depth passes the
/// cancellation bound, so the final truncation is the image language's
/// laminary core without knowing that bound exactly.  The run errors out
/// unless the truncation sequence went quiet before the margin ran out, the
/// result is laminary, and a recomputation from a source horizon deepened by
/// 2 agrees.
///
/// Requires an exact input language with horizon >= act_required_horizon().
/// Any margin at or beyond the default gives the same words (the chops have
/// already stabilized); margin <= 0 selects the default.
FactorLanguage act(const Automorphism& alpha, const FactorLanguage& language,
                   int n, int margin = 0);

/// Checks act(alpha . beta, L, n) == act(alpha, act(beta, L, n'), n) with n'
/// the source horizon act needs for alpha at n.
bool verify_composition(const Automorphism& alpha, const Automorphism& beta,
                        const FactorLanguage& language, int n);

}  // namespace lamina

#endif
