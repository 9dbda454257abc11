// Mapping-class action of the surface braid group B0N on the free group
// pi_1 of the punctured surface: tabulated generator actions, their
// precomputed inverses, word composition, and the lifting equivariance check
// phi(beta_*(w)) = psi(beta)^-1 phi(w) psi(beta).

#pragma once

#include "braidrep/freecalc.hpp"
#include "braidrep/presentations.hpp"

namespace braidrep {

// Endomorphism of the free pi_1 group given by generator images; the ones
// built here are automorphisms.
class FreeAuto {
public:
  explicit FreeAuto(Alphabet pi);

  static FreeAuto identity_auto(Alphabet pi) { return FreeAuto(pi); }

  const Alphabet& base() const { return pi_; }
  const Word& image(GenSym gen) const;
  void set_image(GenSym gen, Word w);

  // Homomorphic extension to words, freely reduced.
  Word apply(const Word& w) const;

  // Composite "this first, then next".
  FreeAuto then(const FreeAuto& next) const;

  bool operator==(const FreeAuto& o) const;

private:
  std::size_t slot(GenSym gen) const;

  Alphabet pi_;
  std::vector<Word> images_;
};

// Tabulated action of a single B0N generator (families Sigma/A/B) on pi_1;
// sign -1 selects the precomputed inverse table.
FreeAuto generator_action(const Alphabet& pi, GenSym gen, int sign);

// Composite action of a braid word over the B0N alphabet.  Letters act in
// word order: (b1 b2)_* = (b2)_* o (b1)_*, the order forced by the
// conjugation relations x^-1 y x = x_*(y) of the intertwining presentation.
FreeAuto braid_action(const Alphabet& pi, const Word& beta);

// Equivariance of the lifting criterion for a single B0N generator.
bool lifting_identity_check(GenSym gen, const Word& w, RingMode mode);

}  // namespace braidrep
