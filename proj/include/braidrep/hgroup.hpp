// Exact arithmetic in the coefficient group H and its integral group ring.
//
// H is generated by q, t (central) and, per handle index r, the four
// generators m_r, l_r, mbar_r, lbar_r.  All generator pairs commute except
//   [m_r, l_r]    = t^2
//   [mbar_r, l_r] = [m_r, lbar_r] = q
// with the commutator convention [x,y] = x y x^-1 y^-1, so
//   m_r l_r    = t^2 l_r m_r
//   mbar_r l_r = q   l_r mbar_r
//   m_r lbar_r = q   lbar_r m_r.
// In K1 mode the group is the quotient by t = 1.
//
// Every element has the unique normal form
//   q^c t^d prod_r m_r^{a_r} l_r^{b_r} mbar_r^{abar_r} lbar_r^{bbar_r}
// and HElem stores exactly that exponent record.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace braidrep {

// Whether t survives (k >= 2) or is killed (k = 1).
enum class KClass { K1, KGE2 };

struct RingMode {
  KClass k_class = KClass::KGE2;
  int genus = 0;

  friend bool operator==(const RingMode&, const RingMode&) = default;
};

// Generator families in canonical normal-form order: q, t, then per handle
// block r the sequence m_r, l_r, mbar_r, lbar_r.
enum class HGen { Q, T, M, L, MBar, LBar };

class HElem {
public:
  explicit HElem(RingMode mode);

  static HElem identity(RingMode mode) { return HElem(mode); }
  // q^e or t^e or (m_r/l_r/mbar_r/lbar_r)^e; r is 1-based and ignored for q, t.
  static HElem generator(RingMode mode, HGen gen, int r = 0, std::int64_t e = 1);

  const RingMode& mode() const { return mode_; }
  int genus() const { return mode_.genus; }

  std::int64_t q_exp() const { return e_[0]; }
  std::int64_t t_exp() const { return e_[1]; }
  std::int64_t exp(HGen gen, int r = 0) const { return e_[slot(gen, r)]; }
  void set_exp(HGen gen, int r, std::int64_t e);

  bool is_identity() const;
  // Only q and t exponents may be nonzero.
  bool is_central() const;
  // Lies in the unbarred subgroup G (all mbar/lbar exponents zero).
  bool in_unbarred() const;

  // Lexicographic on the exponent record; total order used for ring terms.
  std::strong_ordering operator<=>(const HElem& o) const;
  bool operator==(const HElem& o) const { return e_ == o.e_ && mode_ == o.mode_; }

private:
  friend HElem h_mul(const HElem&, const HElem&);
  friend HElem h_inv(const HElem&);

  static int slot(HGen gen, int r);

  RingMode mode_;
  std::vector<std::int64_t> e_;  // [q, t, m_1, l_1, mbar_1, lbar_1, m_2, ...]
};

// Normal form of a*b via closed-form central corrections.
HElem h_mul(const HElem& a, const HElem& b);
HElem h_inv(const HElem& a);

// Strict canonical-order grammar: space-separated factors "name[^exp]" with
// names q, t, m<r>, l<r>, M<r> (= mbar), L<r> (= lbar); identity is "1".
// Factors must appear in canonical order with no repeats.
HElem h_parse(RingMode mode, std::string_view text);
// Lenient product grammar: factors in any order, repeats allowed; the result
// is the collected product.  Used by the hmul command.
HElem h_parse_product(RingMode mode, std::string_view text);
std::string h_format(const HElem& h);

// Element of the integral group ring Z[H]: finite sum of integer-coefficient
// monomials.  No stored coefficient is zero.
class RingElem {
public:
  explicit RingElem(RingMode mode) : mode_(mode) {}

  static RingElem zero(RingMode mode) { return RingElem(mode); }
  static RingElem one(RingMode mode);
  static RingElem monomial(const HElem& h, mpz_class coeff = 1);

  const RingMode& mode() const { return mode_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<HElem, mpz_class>& terms() const { return terms_; }
  mpz_class coeff(const HElem& h) const;

  // True when the element is c*h for a single monomial h with c = +-1.
  bool is_unit_monomial() const;
  // Requires is_unit_monomial().
  RingElem unit_inverse() const;

  void add_term(const HElem& h, const mpz_class& c);

  bool operator==(const RingElem& o) const;

  RingElem operator-() const;
  // Flips the sign of every monomial with odd t-exponent (t -> -t).
  RingElem substitute_t_negation() const;

  std::string format() const;

private:
  RingMode mode_;
  std::map<HElem, mpz_class> terms_;
};

RingElem ring_add(const RingElem& x, const RingElem& y);
RingElem ring_sub(const RingElem& x, const RingElem& y);
RingElem ring_neg(const RingElem& x);
// Bilinear convolution; the left factor's monomials multiply on the left.
RingElem ring_mul(const RingElem& x, const RingElem& y);
RingElem ring_scalar_mul(const mpz_class& c, const RingElem& x);

RingElem operator+(const RingElem& x, const RingElem& y);
RingElem operator-(const RingElem& x, const RingElem& y);
RingElem operator*(const RingElem& x, const RingElem& y);
RingElem operator*(const HElem& h, const RingElem& x);
RingElem operator*(const RingElem& x, const HElem& h);
RingElem operator*(const mpz_class& c, const RingElem& x);

}  // namespace braidrep
