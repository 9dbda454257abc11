#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "braidrep/freecalc.hpp"
#include "braidrep/presentations.hpp"

using namespace braidrep;

TEST_CASE("alphabets") {
  Alphabet surf = alphabet(2, 3, 1, AlphabetKind::B0N_SURFACE);
  auto gens = surf.generators();
  REQUIRE(gens.size() == 6);
  CHECK(gens[0] == GenSym{GenFamily::Sigma, 1});
  CHECK(gens[1] == GenSym{GenFamily::Sigma, 2});
  CHECK(gens[2] == GenSym{GenFamily::A, 1});
  CHECK(gens[5] == GenSym{GenFamily::B, 2});
  CHECK(!surf.contains({GenFamily::Zeta, 1}));

  Alphabet disk = alphabet(0, 4, 3, AlphabetKind::BNK);
  auto dg = disk.generators();
  REQUIRE(dg.size() == 6);  // s1 s2 z1..z4
  CHECK(dg[0] == GenSym{GenFamily::Sigma, 1});
  CHECK(dg[2] == GenSym{GenFamily::Zeta, 1});

  Alphabet inter = alphabet(1, 3, 2, AlphabetKind::INTERTWINING);
  auto ig = inter.generators();
  // X1 = {_s1,_s2,_a1,_b1}, X2 = {s1, z1..z3, a1, b1}
  REQUIRE(ig.size() == 10);
  CHECK(ig[0] == GenSym{GenFamily::BarSigma, 1});
  CHECK(ig[3] == GenSym{GenFamily::BarB, 1});
  CHECK(ig[4] == GenSym{GenFamily::Sigma, 1});

  CHECK_THROWS_AS(alphabet(-1, 3, 1, AlphabetKind::BNK), std::invalid_argument);
  CHECK_THROWS_AS(alphabet(0, 0, 1, AlphabetKind::BNK), std::invalid_argument);
}

TEST_CASE("relation census for the surface braid group") {
  auto rels = relations(2, 3, 1, AlphabetKind::B0N_SURFACE);
  CHECK(rels.size() == 15);
  std::map<RelLabel, int> count;
  std::set<std::string> names;
  for (const auto& r : rels) {
    count[r.label]++;
    names.insert(r.name);
  }
  CHECK(count[RelLabel::BR1] == 0);  // vacuous for n = 3
  CHECK(count[RelLabel::BR2] == 1);
  CHECK(count[RelLabel::CR1] == 4);
  CHECK(count[RelLabel::CR2] == 4);
  CHECK(count[RelLabel::CR3] == 4);
  CHECK(count[RelLabel::SCR] == 2);
  CHECK(names.size() == rels.size());  // duplicate-free

  // Classical 3-braid group: a single braid relation.
  auto classical = relations(0, 3, 1, AlphabetKind::B0N_SURFACE);
  REQUIRE(classical.size() == 1);
  CHECK(classical[0].label == RelLabel::BR2);
  CHECK(format_word(classical[0].lhs) == "s1 s2 s1");
  CHECK(format_word(classical[0].rhs) == "s2 s1 s2");

  // n = 1: free group on the handle generators.
  CHECK(relations(2, 1, 1, AlphabetKind::B0N_SURFACE).empty());
}

TEST_CASE("intertwining relations include the tabulated conjugations") {
  auto rels = relations(1, 2, 1, AlphabetKind::INTERTWINING);
  // 3 barred relations (CR2 x2, SCR) + 12 semidirect.
  CHECK(rels.size() == 15);
  bool found = false;
  for (const auto& r : rels) {
    if (r.name != "SD[_a1,b1]") continue;
    found = true;
    CHECK(format_word(r.lhs) == "_a1^-1 b1 _a1");
    CHECK(format_word(r.rhs) == "b1 a1 z1^-1 a1^-1");
  }
  CHECK(found);
}

TEST_CASE("psi is well defined on every emitted presentation") {
  for (auto [g, n, k] : {std::tuple{1, 2, 1}, {2, 3, 1}, {1, 3, 2}, {0, 3, 2}}) {
    RingMode mode{k == 1 ? KClass::K1 : KClass::KGE2, g};
    for (const auto& rel : relations(g, n, k, AlphabetKind::BNK))
      CHECK(psi_eval(rel.lhs, mode) == psi_eval(rel.rhs, mode));
    for (const auto& rel : relations(g, n, k, AlphabetKind::INTERTWINING))
      CHECK(psi_eval(rel.lhs, mode) == psi_eval(rel.rhs, mode));
  }
  // The acting copy, read through the barred embedding.
  Alphabet inter = alphabet(2, 3, 1, AlphabetKind::INTERTWINING);
  RingMode mode{KClass::K1, 2};
  for (const auto& rel : relations(2, 3, 1, AlphabetKind::B0N_SURFACE)) {
    CHECK(psi_eval(embed_word(rel.lhs, inter, true), mode) ==
          psi_eval(embed_word(rel.rhs, inter, true), mode));
  }
}

TEST_CASE("word parsing") {
  Alphabet surf = alphabet(2, 3, 1, AlphabetKind::B0N_SURFACE);
  Word w = parse_word(surf, "s1 s2^-1 a1");
  CHECK(w.size() == 3);
  CHECK(format_word(w) == "s1 s2^-1 a1");

  CHECK(parse_word(surf, "s1 s1^-1").is_empty());
  CHECK(parse_word(surf, "").is_empty());
  CHECK(format_word(parse_word(surf, "a1 a1 a1")) == "a1^3");
  CHECK(parse_word(surf, "a1^-2").size() == 2);

  Alphabet pi = alphabet(2, 3, 1, AlphabetKind::BNK);
  CHECK_THROWS_AS(parse_word(pi, "z4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(surf, "z1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(surf, "q"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(surf, "s1^x"), std::invalid_argument);
}

TEST_CASE("parse after format is the identity on random words") {
  std::mt19937_64 rng(11);
  Alphabet inter = alphabet(2, 3, 2, AlphabetKind::INTERTWINING);
  auto gens = inter.generators();
  for (int trial = 0; trial < 200; ++trial) {
    Word w(inter);
    for (int i = 0, len = static_cast<int>(rng() % 15); i < len; ++i)
      w.append(gens[rng() % gens.size()], rng() % 2 ? 1 : -1);
    CHECK(parse_word(inter, format_word(w)) == w);
  }
}

TEST_CASE("free reduction and inverses") {
  Alphabet surf = alphabet(1, 3, 1, AlphabetKind::B0N_SURFACE);
  Word w = parse_word(surf, "s1 a1 b1^-1");
  CHECK((w * w.inverse()).is_empty());
  CHECK((w.inverse() * w).is_empty());
  Word u = parse_word(surf, "s1 s2");
  CHECK(format_word(u * u.inverse() * w) == "s1 a1 b1^-1");
}
