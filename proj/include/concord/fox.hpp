#pragma once

#include "concord/errors.hpp"
#include "concord/ring.hpp"
#include "concord/word.hpp"

namespace concord {

// Conjugated (right) Fox derivative over Z[F]:
//   fox(x_j, i) = delta_ij,  fox(e, i) = 0,  fox(gh, i) = fox(g,i) + fox(h,i)·g^{-1}.
// The inverse rule fox(g^{-1}, i) = −fox(g, i)·g follows from fox(e, i) = 0.
GroupRingElement fox(const Word& w, int i);

// Classical left Fox derivative: d(gh) = d(g) + g·d(h).
GroupRingElement fox_classical(const Word& w, int i);

// Evaluates the commutator closed form
//   d([g,h]) = dg + (dh)g^{-1} − (dg)gh^{-1}g^{-1} − (dh)hgh^{-1}g^{-1}
// by substituting the recursive derivatives; an oracle for fox([g,h], i).
GroupRingElement commutator_fox_closed_form(const Word& g, const Word& h, int i);

// Right factor with fox([w, w^x], j) = fox(w, j)·p_factor(w, x) whenever
// fox(x, j) = 0:  p = 1 + x·w^{-1} − (w^x)^{-1}[w^x, w] − x[w^x, w].
GroupRingElement p_factor(const Word& w, const Word& x);

// Right factor with fox([w_i, w_1], j) = fox(w_i, j)·q + fox(w_1, j)·(w_i^{-1} − [w_1, w_i]):
//   q = 1 − w_1^{-1}[w_1, w_i].
GroupRingElement q_factor(const Word& w_i, const Word& w_1);

// True iff w lies in the k-th derived subgroup F^(k).  Uses the Fox
// criterion: w ∈ F^(k+1) iff every fox(w, i) maps to zero in Z[F/F^(k)],
// bottoming out at the abelianization.  Memoized; budgeted.
bool derived_membership(const Word& w, int k, Budget* budget = nullptr);

} // namespace concord
