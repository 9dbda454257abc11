#include "braidrep/action.hpp"

#include <stdexcept>

namespace braidrep {

FreeAuto::FreeAuto(Alphabet pi) : pi_(pi) {
  if (pi.kind != AlphabetKind::BNK || pi.k != 1)
    throw std::invalid_argument("FreeAuto: base must be the k=1 pi_1 alphabet");
  for (GenSym g : pi_.generators()) {
    Word w(pi_);
    w.append(g, 1);
    images_.push_back(std::move(w));
  }
}

std::size_t FreeAuto::slot(GenSym gen) const {
  // Generator order of the pi_1 alphabet: z_1..z_n, a_1..a_g, b_1..b_g.
  switch (gen.family) {
    case GenFamily::Zeta: return static_cast<std::size_t>(gen.index - 1);
    case GenFamily::A: return static_cast<std::size_t>(pi_.n + gen.index - 1);
    case GenFamily::B: return static_cast<std::size_t>(pi_.n + pi_.g + gen.index - 1);
    default:
      throw std::invalid_argument("FreeAuto: " + gen_name(gen) + " not a pi_1 generator");
  }
}

const Word& FreeAuto::image(GenSym gen) const { return images_[slot(gen)]; }

void FreeAuto::set_image(GenSym gen, Word w) {
  if (!(w.alphabet() == pi_)) throw std::invalid_argument("FreeAuto: alphabet mismatch");
  images_[slot(gen)] = std::move(w);
}

Word FreeAuto::apply(const Word& w) const {
  Word out(pi_);
  for (const Letter& l : w.letters()) {
    const Word& img = images_[slot(l.gen)];
    out.append(l.sign > 0 ? img : img.inverse());
  }
  return out;
}

FreeAuto FreeAuto::then(const FreeAuto& next) const {
  FreeAuto r(pi_);
  for (GenSym g : pi_.generators()) r.set_image(g, next.apply(image(g)));
  return r;
}

bool FreeAuto::operator==(const FreeAuto& o) const {
  return pi_ == o.pi_ && images_ == o.images_;
}

namespace {

Word make_word(const Alphabet& pi, std::initializer_list<Letter> ls) {
  Word w(pi);
  for (const Letter& l : ls) w.append(l.gen, l.sign);
  return w;
}

// Conjugate x -> c x c^-1 at the word level.
Word conj(const Word& c, GenSym x) {
  Word w = c;
  w.append(x, 1);
  w.append(c.inverse());
  return w;
}

}  // namespace

FreeAuto generator_action(const Alphabet& pi, GenSym gen, int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("generator_action: sign must be +-1");
  FreeAuto f(pi);
  const int n = pi.n;
  const int g = pi.g;

  if (gen.family == GenFamily::Sigma) {
    if (gen.index < 1 || gen.index > n - 1)
      throw std::invalid_argument("generator_action: sigma index out of range");
    GenSym zi{GenFamily::Zeta, gen.index};
    GenSym zj{GenFamily::Zeta, gen.index + 1};
    if (sign > 0) {
      f.set_image(zi, make_word(pi, {{zi, 1}, {zj, 1}, {zi, -1}}));
      f.set_image(zj, make_word(pi, {{zi, 1}}));
    } else {
      f.set_image(zi, make_word(pi, {{zj, 1}}));
      f.set_image(zj, make_word(pi, {{zj, -1}, {zi, 1}, {zj, 1}}));
    }
    return f;
  }

  if (gen.index < 1 || gen.index > g)
    throw std::invalid_argument("generator_action: handle index out of range");
  const GenSym z{GenFamily::Zeta, 1};
  const GenSym m{GenFamily::A, gen.index};
  const GenSym l{GenFamily::B, gen.index};

  if (gen.family == GenFamily::A) {
    if (sign > 0) {
      f.set_image(z, make_word(pi, {{m, 1}, {z, 1}, {m, -1}}));
      f.set_image(m, make_word(pi, {{m, 1}, {z, 1}, {m, 1}, {z, -1}, {m, -1}}));
      f.set_image(l, make_word(pi, {{l, 1}, {m, 1}, {z, -1}, {m, -1}}));
      const Word c = make_word(pi, {{m, 1}, {z, 1}, {m, -1}, {z, -1}});
      for (int s = gen.index + 1; s <= g; ++s) {
        f.set_image({GenFamily::A, s}, conj(c, {GenFamily::A, s}));
        f.set_image({GenFamily::B, s}, conj(c, {GenFamily::B, s}));
      }
    } else {
      f.set_image(z, make_word(pi, {{z, -1}, {m, -1}, {z, 1}, {m, 1}, {z, 1}}));
      f.set_image(m, make_word(pi, {{z, -1}, {m, 1}, {z, 1}}));
      f.set_image(l, make_word(pi, {{l, 1}, {z, 1}}));
      const Word cinv = make_word(pi, {{z, -1}, {m, -1}, {z, 1}, {m, 1}});
      for (int s = gen.index + 1; s <= g; ++s) {
        f.set_image({GenFamily::A, s}, conj(cinv, {GenFamily::A, s}));
        f.set_image({GenFamily::B, s}, conj(cinv, {GenFamily::B, s}));
      }
    }
    return f;
  }

  if (gen.family == GenFamily::B) {
    if (sign > 0) {
      f.set_image(z, make_word(pi, {{l, 1}, {z, 1}, {l, -1}}));
      f.set_image(m, make_word(pi, {{l, 1}, {z, 1}, {l, -1}, {m, 1}, {z, 1}, {l, 1}, {z, -1}, {l, -1}}));
      f.set_image(l, make_word(pi, {{l, 1}, {z, 1}, {l, 1}, {z, -1}, {l, -1}}));
      const Word d = make_word(pi, {{l, 1}, {z, 1}, {l, -1}, {z, -1}});
      for (int s = gen.index + 1; s <= g; ++s) {
        f.set_image({GenFamily::A, s}, conj(d, {GenFamily::A, s}));
        f.set_image({GenFamily::B, s}, conj(d, {GenFamily::B, s}));
      }
    } else {
      f.set_image(z, make_word(pi, {{z, -1}, {l, -1}, {z, 1}, {l, 1}, {z, 1}}));
      f.set_image(m, make_word(pi, {{z, -1}, {m, 1}, {l, -1}, {z, -1}, {l, 1}, {z, 1}}));
      f.set_image(l, make_word(pi, {{z, -1}, {l, 1}, {z, 1}}));
      const Word dinv = make_word(pi, {{z, -1}, {l, -1}, {z, 1}, {l, 1}});
      for (int s = gen.index + 1; s <= g; ++s) {
        f.set_image({GenFamily::A, s}, conj(dinv, {GenFamily::A, s}));
        f.set_image({GenFamily::B, s}, conj(dinv, {GenFamily::B, s}));
      }
    }
    return f;
  }

  throw std::invalid_argument("generator_action: " + gen_name(gen) +
                              " is not a B0N generator");
}

FreeAuto braid_action(const Alphabet& pi, const Word& beta) {
  FreeAuto acc(pi);
  for (const Letter& l : beta.letters())
    acc = acc.then(generator_action(pi, l.gen, l.sign));
  return acc;
}

bool lifting_identity_check(GenSym gen, const Word& w, RingMode mode) {
  const Alphabet& pi = w.alphabet();
  Word beta(alphabet(pi.g, pi.n, 1, AlphabetKind::B0N_SURFACE));
  beta.append(gen, 1);
  const HElem lhs = phi_eval(generator_action(pi, gen, 1).apply(w), mode);
  const HElem rhs = sharp_conjugate(phi_eval(w, mode), beta);
  return lhs == rhs;
}

}  // namespace braidrep
