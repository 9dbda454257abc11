#include "braidrep/freecalc.hpp"

#include <stdexcept>

namespace braidrep {

namespace {

void require_genus(const Word& w, RingMode mode, const char* op) {
  if (mode.genus != w.alphabet().g)
    throw std::invalid_argument(std::string(op) + ": mode genus does not match alphabet");
}

}  // namespace

HElem psi_image(RingMode mode, GenSym gen) {
  switch (gen.family) {
    case GenFamily::Sigma: return HElem::generator(mode, HGen::T, 0,
                                                   mode.k_class == KClass::K1 ? 0 : 1);
    case GenFamily::Zeta: return HElem::generator(mode, HGen::Q);
    case GenFamily::A: return HElem::generator(mode, HGen::M, gen.index);
    case GenFamily::B: return HElem::generator(mode, HGen::L, gen.index);
    case GenFamily::BarSigma: return HElem::identity(mode);
    case GenFamily::BarA: return HElem::generator(mode, HGen::MBar, gen.index);
    case GenFamily::BarB: return HElem::generator(mode, HGen::LBar, gen.index);
  }
  throw std::logic_error("psi_image: bad generator");
}

HElem phi_eval(const Word& w, RingMode mode) {
  require_genus(w, mode, "phi_eval");
  HElem acc = HElem::identity(mode);
  for (const Letter& l : w.letters()) {
    switch (l.gen.family) {
      case GenFamily::BarSigma:
      case GenFamily::BarA:
      case GenFamily::BarB:
        throw std::invalid_argument("phi_eval: barred generator " + gen_name(l.gen) +
                                    " (use psi_eval)");
      default: break;
    }
    HElem img = psi_image(mode, l.gen);
    acc = h_mul(acc, l.sign > 0 ? img : h_inv(img));
  }
  return acc;
}

HElem psi_eval(const Word& w, RingMode mode) {
  require_genus(w, mode, "psi_eval");
  HElem acc = HElem::identity(mode);
  for (const Letter& l : w.letters()) {
    HElem img = psi_image(mode, l.gen);
    acc = h_mul(acc, l.sign > 0 ? img : h_inv(img));
  }
  return acc;
}

RingElem fox_phi(const Word& w, GenSym x, RingMode mode) {
  require_genus(w, mode, "fox_phi");
  if (x.family != GenFamily::Zeta && x.family != GenFamily::A && x.family != GenFamily::B)
    throw std::invalid_argument("fox_phi: derivative variable must be a pi_1 generator");
  RingElem d(mode);
  HElem prefix = HElem::identity(mode);
  for (const Letter& l : w.letters()) {
    HElem img = psi_image(mode, l.gen);
    if (l.gen == x) {
      if (l.sign > 0) {
        d.add_term(prefix, 1);
      } else {
        d.add_term(h_mul(prefix, h_inv(img)), -1);
      }
    }
    prefix = h_mul(prefix, l.sign > 0 ? img : h_inv(img));
  }
  return d;
}

HElem sharp_conjugate(const HElem& h, const Word& beta) {
  if (!h.in_unbarred())
    throw std::invalid_argument("sharp_conjugate: element has barred exponents");
  const RingMode mode = h.mode();
  if (mode.genus != beta.alphabet().g)
    throw std::invalid_argument("sharp_conjugate: genus mismatch");
  HElem p = HElem::identity(mode);
  for (const Letter& l : beta.letters()) {
    HElem img = HElem::identity(mode);
    switch (l.gen.family) {
      case GenFamily::Sigma: img = HElem::identity(mode); break;  // psi(_s) = 1
      case GenFamily::A: img = HElem::generator(mode, HGen::MBar, l.gen.index); break;
      case GenFamily::B: img = HElem::generator(mode, HGen::LBar, l.gen.index); break;
      default:
        throw std::invalid_argument("sharp_conjugate: beta must be a B0N word");
    }
    p = h_mul(p, l.sign > 0 ? img : h_inv(img));
  }
  return h_mul(h_mul(h_inv(p), h), p);
}

}  // namespace braidrep
