#include <doctest.h>

#include <random>

#include "braidrep/action.hpp"

using namespace braidrep;

namespace {
const Alphabet pi23 = alphabet(2, 3, 1, AlphabetKind::BNK);
const Alphabet b23 = alphabet(2, 3, 1, AlphabetKind::B0N_SURFACE);

Word piw(const char* text) { return parse_word(pi23, text); }
}  // namespace

TEST_CASE("tabulated generator actions") {
  FreeAuto s1 = generator_action(pi23, {GenFamily::Sigma, 1}, 1);
  CHECK(format_word(s1.image({GenFamily::Zeta, 1})) == "z1 z2 z1^-1");
  CHECK(format_word(s1.image({GenFamily::Zeta, 2})) == "z1");
  CHECK(format_word(s1.image({GenFamily::Zeta, 3})) == "z3");
  CHECK(format_word(s1.image({GenFamily::A, 1})) == "a1");

  FreeAuto s1i = generator_action(pi23, {GenFamily::Sigma, 1}, -1);
  CHECK(format_word(s1i.image({GenFamily::Zeta, 1})) == "z2");
  CHECK(format_word(s1i.image({GenFamily::Zeta, 2})) == "z2^-1 z1 z2");

  // a2 fixes z2, z3 and the index-1 handle generators.
  FreeAuto a2 = generator_action(pi23, {GenFamily::A, 2}, 1);
  CHECK(format_word(a2.image({GenFamily::Zeta, 2})) == "z2");
  CHECK(format_word(a2.image({GenFamily::Zeta, 3})) == "z3");
  CHECK(format_word(a2.image({GenFamily::A, 1})) == "a1");
  CHECK(format_word(a2.image({GenFamily::B, 1})) == "b1");
  CHECK(format_word(a2.image({GenFamily::Zeta, 1})) == "a2 z1 a2^-1");
  CHECK(format_word(a2.image({GenFamily::B, 2})) == "b2 a2 z1^-1 a2^-1");

  // a1 conjugates the higher-index handles by [a1, z1].
  FreeAuto a1 = generator_action(pi23, {GenFamily::A, 1}, 1);
  CHECK(format_word(a1.image({GenFamily::A, 2})) == "a1 z1 a1^-1 z1^-1 a2 z1 a1 z1^-1 a1^-1");
  CHECK(format_word(a1.image({GenFamily::A, 1})) == "a1 z1 a1 z1^-1 a1^-1");

  FreeAuto b1 = generator_action(pi23, {GenFamily::B, 1}, 1);
  CHECK(format_word(b1.image({GenFamily::A, 1})) == "b1 z1 b1^-1 a1 z1 b1 z1^-1 b1^-1");
  CHECK(format_word(b1.image({GenFamily::B, 1})) == "b1 z1 b1 z1^-1 b1^-1");
  CHECK(format_word(b1.image({GenFamily::Zeta, 1})) == "b1 z1 b1^-1");
}

TEST_CASE("generator composed with its inverse is the identity") {
  FreeAuto ident(pi23);
  for (GenSym g : b23.generators()) {
    CHECK(generator_action(pi23, g, 1).then(generator_action(pi23, g, -1)) == ident);
    CHECK(generator_action(pi23, g, -1).then(generator_action(pi23, g, 1)) == ident);
  }
}

TEST_CASE("braid_action basics") {
  CHECK(braid_action(pi23, Word(b23)) == FreeAuto(pi23));
  CHECK(braid_action(pi23, parse_word(b23, "s1 s1^-1")) == FreeAuto(pi23));
  CHECK(braid_action(pi23, parse_word(b23, "s1 s2 s1")) ==
        braid_action(pi23, parse_word(b23, "s2 s1 s2")));
}

TEST_CASE("braid_action satisfies every defining relation") {
  for (auto [g, n] : {std::pair{1, 2}, {1, 3}, {2, 2}, {2, 3}}) {
    Alphabet pi = alphabet(g, n, 1, AlphabetKind::BNK);
    for (const Relation& rel : relations(g, n, 1, AlphabetKind::B0N_SURFACE))
      CHECK(braid_action(pi, rel.lhs) == braid_action(pi, rel.rhs));
  }
}

TEST_CASE("lifting equivariance examples") {
  const RingMode mode{KClass::KGE2, 2};
  // sigma case: both sides are q.
  CHECK(phi_eval(braid_action(pi23, parse_word(b23, "s1")).apply(piw("z1")), mode) ==
        HElem::generator(mode, HGen::Q));
  CHECK(lifting_identity_check({GenFamily::Sigma, 1}, piw("z1"), mode));

  // a1 on b1: both sides q^-1 l1.
  HElem lhs = phi_eval(braid_action(pi23, parse_word(b23, "a1")).apply(piw("b1")), mode);
  CHECK(lhs == h_mul(HElem::generator(mode, HGen::Q, 0, -1),
                     HElem::generator(mode, HGen::L, 1)));
  CHECK(lifting_identity_check({GenFamily::A, 1}, piw("b1"), mode));

  // b1 on a1: both sides q m1.
  HElem lhs2 = phi_eval(braid_action(pi23, parse_word(b23, "b1")).apply(piw("a1")), mode);
  CHECK(lhs2 == h_mul(HElem::generator(mode, HGen::Q),
                      HElem::generator(mode, HGen::M, 1)));
  CHECK(lifting_identity_check({GenFamily::B, 1}, piw("a1"), mode));
}

TEST_CASE("lifting equivariance on random words") {
  std::mt19937_64 rng(31);
  auto gens = pi23.generators();
  for (int trial = 0; trial < 60; ++trial) {
    Word w(pi23);
    for (int i = 0, len = static_cast<int>(rng() % 21); i < len; ++i)
      w.append(gens[rng() % gens.size()], rng() % 2 ? 1 : -1);
    for (GenSym g : b23.generators()) {
      CHECK(lifting_identity_check(g, w, RingMode{KClass::KGE2, 2}));
      CHECK(lifting_identity_check(g, w, RingMode{KClass::K1, 2}));
    }
  }
}
