#include "braidrep/presentations.hpp"

#include <charconv>
#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "braidrep/action.hpp"

namespace braidrep {

std::string gen_name(GenSym g) {
  std::string s;
  switch (g.family) {
    case GenFamily::Sigma: s = "s"; break;
    case GenFamily::Zeta: s = "z"; break;
    case GenFamily::A: s = "a"; break;
    case GenFamily::B: s = "b"; break;
    case GenFamily::BarSigma: s = "_s"; break;
    case GenFamily::BarA: s = "_a"; break;
    case GenFamily::BarB: s = "_b"; break;
  }
  return s + std::to_string(g.index);
}

bool Alphabet::contains(GenSym s) const {
  auto in = [&](int lo, int hi) { return s.index >= lo && s.index <= hi; };
  switch (s.family) {
    case GenFamily::Sigma:
      if (kind == AlphabetKind::B0N_SURFACE) return in(1, n - 1);
      return in(1, k - 1);
    case GenFamily::Zeta:
      return kind != AlphabetKind::B0N_SURFACE && in(1, n);
    case GenFamily::A:
    case GenFamily::B:
      return in(1, g);
    case GenFamily::BarSigma:
      return kind == AlphabetKind::INTERTWINING && in(1, n - 1);
    case GenFamily::BarA:
    case GenFamily::BarB:
      return kind == AlphabetKind::INTERTWINING && in(1, g);
  }
  return false;
}

std::vector<GenSym> Alphabet::generators() const {
  std::vector<GenSym> out;
  auto push = [&](GenFamily f, int lo, int hi) {
    for (int i = lo; i <= hi; ++i) out.push_back({f, i});
  };
  if (kind == AlphabetKind::INTERTWINING) {
    push(GenFamily::BarSigma, 1, n - 1);
    push(GenFamily::BarA, 1, g);
    push(GenFamily::BarB, 1, g);
  }
  if (kind == AlphabetKind::B0N_SURFACE) {
    push(GenFamily::Sigma, 1, n - 1);
  } else {
    push(GenFamily::Sigma, 1, k - 1);
    push(GenFamily::Zeta, 1, n);
  }
  push(GenFamily::A, 1, g);
  push(GenFamily::B, 1, g);
  return out;
}

Alphabet alphabet(int g, int n, int k, AlphabetKind kind) {
  if (g < 0 || n < 1 || k < 1)
    throw std::invalid_argument("alphabet: need g >= 0, n >= 1, k >= 1");
  return Alphabet{kind, g, n, k};
}

void Word::append(GenSym gen, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("Word: sign must be +-1");
  if (!alphabet_.contains(gen))
    throw std::invalid_argument("Word: generator " + gen_name(gen) + " not in alphabet");
  if (!letters_.empty() && letters_.back().gen == gen && letters_.back().sign == -sign)
    letters_.pop_back();
  else
    letters_.push_back({gen, sign});
}

void Word::append(const Word& w) {
  if (!(w.alphabet_ == alphabet_))
    throw std::invalid_argument("Word: alphabet mismatch in concatenation");
  for (const Letter& l : w.letters_) append(l.gen, l.sign);
}

Word Word::inverse() const {
  Word r(alphabet_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    r.append(it->gen, -it->sign);
  return r;
}

Word operator*(const Word& u, const Word& v) {
  Word r = u;
  r.append(v);
  return r;
}

Word word_of(Alphabet a, std::initializer_list<Letter> letters) {
  Word w(a);
  for (const Letter& l : letters) w.append(l.gen, l.sign);
  return w;
}

std::string rel_label_name(RelLabel l) {
  switch (l) {
    case RelLabel::BR1: return "BR1";
    case RelLabel::BR2: return "BR2";
    case RelLabel::CR1: return "CR1";
    case RelLabel::CR2: return "CR2";
    case RelLabel::CR3: return "CR3";
    case RelLabel::SCR: return "SCR";
    case RelLabel::SEMIDIRECT: return "SD";
  }
  return "?";
}

namespace {

// Bellingeri relation schema shared by the braided families of B0N, BNK and
// both halves of the intertwining group.  sig is the braided family with
// indices 1..nsig; fa/fb the handle families; fz the puncture family when
// present (indices 1..nz).
void braid_surface_relations(std::vector<Relation>& out, const Alphabet& A,
                             GenFamily sig, GenFamily fa, GenFamily fb,
                             std::optional<GenFamily> fz, int nsig, int g, int nz) {
  auto W = [&](std::initializer_list<Letter> ls) { return word_of(A, ls); };
  auto commutator = [&](RelLabel label, const Word& u, const Word& v,
                        const std::string& name) {
    out.push_back({u * v, v * u, label, name});
  };
  auto nm = [&](RelLabel label, GenSym x, GenSym y) {
    return rel_label_name(label) + "[" + gen_name(x) + "," + gen_name(y) + "]";
  };

  // BR1: [s_i, s_j] for |i-j| >= 2.
  for (int i = 1; i <= nsig; ++i)
    for (int j = i + 2; j <= nsig; ++j) {
      GenSym si{sig, i}, sj{sig, j};
      commutator(RelLabel::BR1, W({{si, 1}}), W({{sj, 1}}), nm(RelLabel::BR1, si, sj));
    }
  // BR2: s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}.
  for (int i = 1; i + 1 <= nsig; ++i) {
    GenSym si{sig, i}, sj{sig, i + 1};
    out.push_back({W({{si, 1}, {sj, 1}, {si, 1}}), W({{sj, 1}, {si, 1}, {sj, 1}}),
                   RelLabel::BR2, nm(RelLabel::BR2, si, sj)});
  }
  // CR1: handle and puncture generators commute with s_i for i > 1.
  for (int i = 2; i <= nsig; ++i) {
    GenSym si{sig, i};
    for (int r = 1; r <= g; ++r) {
      commutator(RelLabel::CR1, W({{{fa, r}, 1}}), W({{si, 1}}), nm(RelLabel::CR1, {fa, r}, si));
      commutator(RelLabel::CR1, W({{{fb, r}, 1}}), W({{si, 1}}), nm(RelLabel::CR1, {fb, r}, si));
    }
    if (fz)
      for (int t = 1; t <= nz; ++t)
        commutator(RelLabel::CR1, W({{{*fz, t}, 1}}), W({{si, 1}}),
                   nm(RelLabel::CR1, {*fz, t}, si));
  }
  if (nsig >= 1) {
    GenSym s1{sig, 1};
    // CR2: [x, s1 x s1] for x in each handle/puncture generator.
    auto cr2 = [&](GenSym x) {
      commutator(RelLabel::CR2, W({{x, 1}}), W({{s1, 1}, {x, 1}, {s1, 1}}),
                 rel_label_name(RelLabel::CR2) + "[" + gen_name(x) + "]");
    };
    for (int r = 1; r <= g; ++r) cr2({fa, r});
    for (int r = 1; r <= g; ++r) cr2({fb, r});
    if (fz)
      for (int t = 1; t <= nz; ++t) cr2({*fz, t});
    // CR3: [x, s1^-1 y s1] for the index-ordered pairs.
    auto cr3 = [&](GenSym x, GenSym y) {
      commutator(RelLabel::CR3, W({{x, 1}}), W({{s1, -1}, {y, 1}, {s1, 1}}),
                 nm(RelLabel::CR3, x, y));
    };
    for (int r = 1; r <= g; ++r)
      for (int s = r + 1; s <= g; ++s) {
        cr3({fa, r}, {fa, s});
        cr3({fa, r}, {fb, s});
        cr3({fb, r}, {fa, s});
        cr3({fb, r}, {fb, s});
      }
    if (fz) {
      for (int r = 1; r <= g; ++r)
        for (int u = 1; u <= nz; ++u) {
          cr3({fa, r}, {*fz, u});
          cr3({fb, r}, {*fz, u});
        }
      for (int t = 1; t <= nz; ++t)
        for (int u = t + 1; u <= nz; ++u) cr3({*fz, t}, {*fz, u});
    }
    // SCR: s1 b_r s1 a_r s1 = a_r s1 b_r.
    for (int r = 1; r <= g; ++r) {
      GenSym ar{fa, r}, br{fb, r};
      out.push_back({W({{s1, 1}, {br, 1}, {s1, 1}, {ar, 1}, {s1, 1}}),
                     W({{ar, 1}, {s1, 1}, {br, 1}}), RelLabel::SCR,
                     nm(RelLabel::SCR, ar, br)});
    }
  }
}

}  // namespace

std::vector<Relation> relations(int g, int n, int k, AlphabetKind kind) {
  Alphabet A = alphabet(g, n, k, kind);
  std::vector<Relation> out;
  switch (kind) {
    case AlphabetKind::B0N_SURFACE:
      braid_surface_relations(out, A, GenFamily::Sigma, GenFamily::A, GenFamily::B,
                              std::nullopt, n - 1, g, 0);
      break;
    case AlphabetKind::BNK:
      braid_surface_relations(out, A, GenFamily::Sigma, GenFamily::A, GenFamily::B,
                              GenFamily::Zeta, k - 1, g, n);
      break;
    case AlphabetKind::INTERTWINING: {
      braid_surface_relations(out, A, GenFamily::BarSigma, GenFamily::BarA,
                              GenFamily::BarB, std::nullopt, n - 1, g, 0);
      braid_surface_relations(out, A, GenFamily::Sigma, GenFamily::A, GenFamily::B,
                              GenFamily::Zeta, k - 1, g, n);
      // Semidirect relations x^-1 y x = x_*(y) for x in the barred copy and
      // y in the fiber generators, with x_* from the mapping-class tables.
      Alphabet pi = alphabet(g, n, 1, AlphabetKind::BNK);
      std::vector<GenSym> x1;
      for (int i = 1; i <= n - 1; ++i) x1.push_back({GenFamily::BarSigma, i});
      for (int r = 1; r <= g; ++r) x1.push_back({GenFamily::BarA, r});
      for (int r = 1; r <= g; ++r) x1.push_back({GenFamily::BarB, r});
      for (GenSym xbar : x1) {
        GenFamily unbarred = xbar.family == GenFamily::BarSigma ? GenFamily::Sigma
                             : xbar.family == GenFamily::BarA   ? GenFamily::A
                                                                : GenFamily::B;
        FreeAuto act = generator_action(pi, {unbarred, xbar.index}, 1);
        for (GenSym y : A.generators()) {
          bool in_x2 = y.family == GenFamily::Sigma || y.family == GenFamily::Zeta ||
                       y.family == GenFamily::A || y.family == GenFamily::B;
          if (!in_x2) continue;
          Word lhs(A);
          lhs.append(xbar, -1);
          lhs.append(y, 1);
          lhs.append(xbar, 1);
          Word rhs(A);
          if (y.family == GenFamily::Sigma) {
            rhs.append(y, 1);  // braided fiber strands are untouched
          } else {
            rhs = embed_word(act.image(y), A, false);
          }
          out.push_back({lhs, rhs, RelLabel::SEMIDIRECT,
                         "SD[" + gen_name(xbar) + "," + gen_name(y) + "]"});
        }
      }
      break;
    }
  }
  return out;
}

Word embed_word(const Word& w, const Alphabet& target, bool bar) {
  Word r(target);
  for (const Letter& l : w.letters()) {
    GenFamily f = l.gen.family;
    if (bar) {
      if (f == GenFamily::Sigma) f = GenFamily::BarSigma;
      else if (f == GenFamily::A) f = GenFamily::BarA;
      else if (f == GenFamily::B) f = GenFamily::BarB;
      else throw std::invalid_argument("embed_word: cannot bar " + gen_name(l.gen));
    }
    r.append({f, l.gen.index}, l.sign);
  }
  return r;
}

Word parse_word(const Alphabet& a, std::string_view text) {
  Word w(a);
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) {
    std::string name = tok;
    std::int64_t exp = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      name = tok.substr(0, caret);
      const std::string es = tok.substr(caret + 1);
      auto [p, ec] = std::from_chars(es.data(), es.data() + es.size(), exp);
      if (ec != std::errc() || p != es.data() + es.size())
        throw std::invalid_argument("parse_word: bad exponent in '" + tok + "'");
    }
    bool barred = false;
    std::size_t pos = 0;
    if (!name.empty() && name[0] == '_') {
      barred = true;
      pos = 1;
    }
    if (pos >= name.size())
      throw std::invalid_argument("parse_word: bad token '" + tok + "'");
    GenFamily fam;
    switch (name[pos]) {
      case 's': fam = barred ? GenFamily::BarSigma : GenFamily::Sigma; break;
      case 'z':
        if (barred) throw std::invalid_argument("parse_word: bad token '" + tok + "'");
        fam = GenFamily::Zeta;
        break;
      case 'a': fam = barred ? GenFamily::BarA : GenFamily::A; break;
      case 'b': fam = barred ? GenFamily::BarB : GenFamily::B; break;
      default:
        throw std::invalid_argument("parse_word: unknown token '" + tok + "'");
    }
    const std::string idx = name.substr(pos + 1);
    int i = 0;
    auto [p, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), i);
    if (idx.empty() || ec != std::errc() || p != idx.data() + idx.size())
      throw std::invalid_argument("parse_word: bad index in '" + tok + "'");
    GenSym gen{fam, i};
    if (!a.contains(gen))
      throw std::invalid_argument("parse_word: " + gen_name(gen) + " out of range");
    const int sign = exp < 0 ? -1 : 1;
    for (std::int64_t c = exp < 0 ? -exp : exp; c > 0; --c) w.append(gen, sign);
  }
  return w;
}

std::string format_word(const Word& w) {
  std::ostringstream os;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const std::int64_t run = static_cast<std::int64_t>(j - i) * ls[i].sign;
    if (i > 0) os << ' ';
    os << gen_name(ls[i].gen);
    if (run != 1) os << '^' << run;
    i = j;
  }
  return os.str();
}

}  // namespace braidrep
