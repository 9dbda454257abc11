// Evaluation homomorphisms into the coefficient group and Fox free
// differential calculus on the free group pi_1 of the punctured surface.
// The pi_1 alphabet is the k=1 fiber alphabet: z_1..z_n, a_1..a_g, b_1..b_g.
//
// phi sends z_j -> q, a_r -> m_r, b_r -> l_r and s_i -> t; psi extends it to
// the intertwining alphabet by _s_i -> 1, _a_r -> mbar_r, _b_r -> lbar_r.

#pragma once

#include "braidrep/hgroup.hpp"
#include "braidrep/presentations.hpp"

namespace braidrep {

// Image of a single generator under psi (covers the phi letters as well).
HElem psi_image(RingMode mode, GenSym gen);

// Product of letter images; rejects barred letters.
HElem phi_eval(const Word& w, RingMode mode);

// Product of letter images over the full intertwining alphabet.
HElem psi_eval(const Word& w, RingMode mode);

// phi-image of the Fox derivative dw/dx, computed directly in Z[H]:
//   d(x)/dx = 1,  d(x^-1)/dx = -phi(x)^-1,  d(y^e)/dx = 0,
//   d(uv)/dx = du/dx + phi(u) dv/dx.
// w must be freely reduced over the pi_1 alphabet; x a pi_1 generator.
RingElem fox_phi(const Word& w, GenSym x, RingMode mode);

// psi(beta)^-1 h psi(beta) where beta is a braid word over the B0N alphabet
// read through the barred embedding.  h must lie in the unbarred subgroup.
HElem sharp_conjugate(const HElem& h, const Word& beta);

}  // namespace braidrep
