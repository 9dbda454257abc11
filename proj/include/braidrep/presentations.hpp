// Generator alphabets and defining relations for the braid groups on a
// genus-g surface with one boundary component, in Bellingeri's presentation:
// the n-punctured k-strand group (BNK), the no-puncture surface braid group
// on n strands (B0N_SURFACE), and the intertwining group generated by both a
// barred copy of the latter and the former (INTERTWINING).  Also the braid
// word grammar shared by the CLI and the verification suites.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace braidrep {

enum class GenFamily { Sigma, Zeta, A, B, BarSigma, BarA, BarB };

struct GenSym {
  GenFamily family;
  int index;

  auto operator<=>(const GenSym&) const = default;
};

std::string gen_name(GenSym g);

enum class AlphabetKind { BNK, B0N_SURFACE, INTERTWINING };

struct Alphabet {
  AlphabetKind kind;
  int g = 0;
  int n = 1;
  int k = 1;

  bool contains(GenSym s) const;
  std::vector<GenSym> generators() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

Alphabet alphabet(int g, int n, int k, AlphabetKind kind);

struct Letter {
  GenSym gen;
  int sign;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

// Freely reduced word over a declared alphabet.
class Word {
public:
  explicit Word(Alphabet a) : alphabet_(a) {}

  static Word empty(Alphabet a) { return Word(a); }

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool is_empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  // Appends with free reduction; throws if gen is not in the alphabet.
  void append(GenSym gen, int sign);
  void append(const Word& w);

  Word inverse() const;

  friend Word operator*(const Word& u, const Word& v);
  friend bool operator==(const Word&, const Word&) = default;

private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

Word word_of(Alphabet a, std::initializer_list<Letter> letters);

enum class RelLabel { BR1, BR2, CR1, CR2, CR3, SCR, SEMIDIRECT };

std::string rel_label_name(RelLabel l);

struct Relation {
  Word lhs;
  Word rhs;
  RelLabel label;
  std::string name;
};

// Complete, deterministic, duplicate-free list of defining relations.
// Commutator relations [u,v] are emitted as the pair (uv, vu); SCR as
// (s1 b_r s1 a_r s1, a_r s1 b_r).  For INTERTWINING the semidirect relations
// (x^-1 y x, x_*(y)) are expanded through the mapping-class action tables.
std::vector<Relation> relations(int g, int n, int k, AlphabetKind kind);

// Braid word grammar: whitespace-separated tokens s<i>, z<j>, a<r>, b<r> and
// barred _s<i>, _a<r>, _b<r>, each optionally suffixed ^<signed int>
// (expanded to repeated letters).  The empty string is the identity.
Word parse_word(const Alphabet& a, std::string_view text);
std::string format_word(const Word& w);

// Re-declare the letters of w over another alphabet; with bar=true the
// unbarred Sigma/A/B families map to their barred counterparts.
Word embed_word(const Word& w, const Alphabet& target, bool bar = false);

}  // namespace braidrep
