#include "braidrep/hgroup.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace braidrep {

namespace {

void require_same_mode(const RingMode& a, const RingMode& b, const char* op) {
  if (!(a == b))
    throw std::invalid_argument(std::string(op) + ": mode mismatch");
}

}  // namespace

HElem::HElem(RingMode mode) : mode_(mode) {
  if (mode.genus < 0) throw std::invalid_argument("HElem: genus must be >= 0");
  e_.assign(2 + 4 * static_cast<std::size_t>(mode.genus), 0);
}

int HElem::slot(HGen gen, int r) {
  switch (gen) {
    case HGen::Q: return 0;
    case HGen::T: return 1;
    case HGen::M: return 2 + 4 * (r - 1);
    case HGen::L: return 3 + 4 * (r - 1);
    case HGen::MBar: return 4 + 4 * (r - 1);
    case HGen::LBar: return 5 + 4 * (r - 1);
  }
  throw std::logic_error("HElem::slot: bad generator");
}

void HElem::set_exp(HGen gen, int r, std::int64_t e) {
  if (gen != HGen::Q && gen != HGen::T && (r < 1 || r > mode_.genus))
    throw std::invalid_argument("HElem: handle index out of range 1..g");
  if (gen == HGen::T && mode_.k_class == KClass::K1 && e != 0)
    throw std::invalid_argument("HElem: t is trivial in K1 mode");
  e_[slot(gen, r)] = e;
}

HElem HElem::generator(RingMode mode, HGen gen, int r, std::int64_t e) {
  HElem h(mode);
  h.set_exp(gen, r, e);
  return h;
}

bool HElem::is_identity() const {
  return std::all_of(e_.begin(), e_.end(), [](std::int64_t v) { return v == 0; });
}

bool HElem::is_central() const {
  return std::all_of(e_.begin() + 2, e_.end(), [](std::int64_t v) { return v == 0; });
}

bool HElem::in_unbarred() const {
  for (int r = 1; r <= mode_.genus; ++r)
    if (exp(HGen::MBar, r) != 0 || exp(HGen::LBar, r) != 0) return false;
  return true;
}

std::strong_ordering HElem::operator<=>(const HElem& o) const {
  return std::lexicographical_compare_three_way(e_.begin(), e_.end(),
                                                o.e_.begin(), o.e_.end());
}

HElem h_mul(const HElem& a, const HElem& b) {
  require_same_mode(a.mode_, b.mode_, "h_mul");
  HElem r(a.mode_);
  const int g = a.mode_.genus;
  std::int64_t dq = 0, dt = 0;
  for (int i = 0; i < g; ++i) {
    const std::size_t base = 2 + 4 * static_cast<std::size_t>(i);
    const std::int64_t al = a.e_[base + 1];
    const std::int64_t amb = a.e_[base + 2], alb = a.e_[base + 3];
    const std::int64_t bm = b.e_[base], bl = b.e_[base + 1];
    // Moving b's block past a's tail: a's l over b's m costs t^-2 per pair,
    // a's mbar over b's l costs q, a's lbar over b's m costs q^-1.
    dq += amb * bl - alb * bm;
    dt += -2 * al * bm;
  }
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
  r.e_[0] += dq;
  r.e_[1] += dt;
  if (a.mode_.k_class == KClass::K1) r.e_[1] = 0;
  return r;
}

HElem h_inv(const HElem& a) {
  HElem r(a.mode_);
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = -a.e_[i];
  // Negating exponents is wrong only in the central part; fix it so that
  // a * r = 1 exactly.
  HElem probe = h_mul(a, r);
  r.e_[0] -= probe.e_[0];
  r.e_[1] -= probe.e_[1];
  if (a.mode_.k_class == KClass::K1) r.e_[1] = 0;
  return r;
}

namespace {

struct Factor {
  HGen gen;
  int index;  // 0 for q, t
  std::int64_t exp;
};

// Canonical position of a factor in the normal form, for order checking.
int canon_pos(const Factor& f) {
  switch (f.gen) {
    case HGen::Q: return 0;
    case HGen::T: return 1;
    case HGen::M: return 2 + 4 * (f.index - 1);
    case HGen::L: return 3 + 4 * (f.index - 1);
    case HGen::MBar: return 4 + 4 * (f.index - 1);
    case HGen::LBar: return 5 + 4 * (f.index - 1);
  }
  return -1;
}

std::vector<std::string> split_ws(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

Factor parse_factor(RingMode mode, const std::string& tok) {
  std::string name = tok;
  std::int64_t exp = 1;
  if (auto caret = tok.find('^'); caret != std::string::npos) {
    name = tok.substr(0, caret);
    const std::string es = tok.substr(caret + 1);
    auto [p, ec] = std::from_chars(es.data(), es.data() + es.size(), exp);
    if (ec != std::errc() || p != es.data() + es.size())
      throw std::invalid_argument("h_parse: bad exponent in '" + tok + "'");
  }
  if (name.empty()) throw std::invalid_argument("h_parse: empty factor");
  Factor f{HGen::Q, 0, exp};
  char head = name[0];
  std::string idx = name.substr(1);
  auto need_index = [&](HGen g) {
    f.gen = g;
    int r = 0;
    auto [p, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), r);
    if (idx.empty() || ec != std::errc() || p != idx.data() + idx.size())
      throw std::invalid_argument("h_parse: bad generator '" + tok + "'");
    if (r < 1 || r > mode.genus)
      throw std::invalid_argument("h_parse: index out of range 1..g in '" + tok + "'");
    f.index = r;
  };
  switch (head) {
    case 'q':
      if (!idx.empty()) throw std::invalid_argument("h_parse: bad generator '" + tok + "'");
      f.gen = HGen::Q;
      break;
    case 't':
      if (!idx.empty()) throw std::invalid_argument("h_parse: bad generator '" + tok + "'");
      if (mode.k_class == KClass::K1)
        throw std::invalid_argument("h_parse: t not available in K1 mode");
      f.gen = HGen::T;
      break;
    case 'm': need_index(HGen::M); break;
    case 'l': need_index(HGen::L); break;
    case 'M': need_index(HGen::MBar); break;
    case 'L': need_index(HGen::LBar); break;
    default:
      throw std::invalid_argument("h_parse: unknown generator '" + tok + "'");
  }
  return f;
}

}  // namespace

HElem h_parse(RingMode mode, std::string_view text) {
  auto toks = split_ws(text);
  if (toks.empty()) throw std::invalid_argument("h_parse: empty input");
  if (toks.size() == 1 && toks[0] == "1") return HElem::identity(mode);
  HElem h(mode);
  int last_pos = -1;
  for (const auto& tok : toks) {
    if (tok == "1") throw std::invalid_argument("h_parse: '1' must stand alone");
    Factor f = parse_factor(mode, tok);
    int pos = canon_pos(f);
    if (pos <= last_pos)
      throw std::invalid_argument("h_parse: factors out of canonical order at '" + tok + "'");
    last_pos = pos;
    if (f.exp != 0) h.set_exp(f.gen, f.index, f.exp);
  }
  return h;
}

HElem h_parse_product(RingMode mode, std::string_view text) {
  auto toks = split_ws(text);
  HElem acc = HElem::identity(mode);
  for (const auto& tok : toks) {
    if (tok == "1") continue;
    Factor f = parse_factor(mode, tok);
    acc = h_mul(acc, HElem::generator(mode, f.gen, f.index, f.exp));
  }
  return acc;
}

std::string h_format(const HElem& h) {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const char* name, int idx, std::int64_t e) {
    if (e == 0) return;
    if (!first) os << ' ';
    first = false;
    os << name;
    if (idx > 0) os << idx;
    if (e != 1) os << '^' << e;
  };
  emit("q", 0, h.q_exp());
  emit("t", 0, h.t_exp());
  for (int r = 1; r <= h.genus(); ++r) {
    emit("m", r, h.exp(HGen::M, r));
    emit("l", r, h.exp(HGen::L, r));
    emit("M", r, h.exp(HGen::MBar, r));
    emit("L", r, h.exp(HGen::LBar, r));
  }
  if (first) return "1";
  return os.str();
}

RingElem RingElem::one(RingMode mode) {
  return monomial(HElem::identity(mode));
}

RingElem RingElem::monomial(const HElem& h, mpz_class coeff) {
  RingElem r(h.mode());
  if (coeff != 0) r.terms_.emplace(h, std::move(coeff));
  return r;
}

mpz_class RingElem::coeff(const HElem& h) const {
  auto it = terms_.find(h);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

bool RingElem::is_unit_monomial() const {
  if (terms_.size() != 1) return false;
  const auto& c = terms_.begin()->second;
  return c == 1 || c == -1;
}

RingElem RingElem::unit_inverse() const {
  if (!is_unit_monomial())
    throw std::invalid_argument("unit_inverse: not a unit monomial");
  const auto& [h, c] = *terms_.begin();
  return monomial(h_inv(h), c);
}

void RingElem::add_term(const HElem& h, const mpz_class& c) {
  if (!(h.mode() == mode_)) throw std::invalid_argument("add_term: mode mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(h, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool RingElem::operator==(const RingElem& o) const {
  return mode_ == o.mode_ && terms_ == o.terms_;
}

RingElem RingElem::operator-() const {
  RingElem r(mode_);
  for (const auto& [h, c] : terms_) r.terms_.emplace(h, -c);
  return r;
}

RingElem RingElem::substitute_t_negation() const {
  RingElem r(mode_);
  for (const auto& [h, c] : terms_)
    r.terms_.emplace(h, (h.t_exp() % 2 != 0) ? mpz_class(-c) : c);
  return r;
}

RingElem ring_add(const RingElem& x, const RingElem& y) {
  require_same_mode(x.mode(), y.mode(), "ring_add");
  RingElem r = x;
  for (const auto& [h, c] : y.terms()) r.add_term(h, c);
  return r;
}

RingElem ring_sub(const RingElem& x, const RingElem& y) {
  require_same_mode(x.mode(), y.mode(), "ring_sub");
  RingElem r = x;
  for (const auto& [h, c] : y.terms()) r.add_term(h, -c);
  return r;
}

RingElem ring_neg(const RingElem& x) { return -x; }

RingElem ring_mul(const RingElem& x, const RingElem& y) {
  require_same_mode(x.mode(), y.mode(), "ring_mul");
  RingElem r(x.mode());
  for (const auto& [hx, cx] : x.terms())
    for (const auto& [hy, cy] : y.terms())
      r.add_term(h_mul(hx, hy), cx * cy);
  return r;
}

RingElem ring_scalar_mul(const mpz_class& c, const RingElem& x) {
  RingElem r(x.mode());
  if (c == 0) return r;
  for (const auto& [h, cx] : x.terms()) r.add_term(h, c * cx);
  return r;
}

RingElem operator+(const RingElem& x, const RingElem& y) { return ring_add(x, y); }
RingElem operator-(const RingElem& x, const RingElem& y) { return ring_sub(x, y); }
RingElem operator*(const RingElem& x, const RingElem& y) { return ring_mul(x, y); }

RingElem operator*(const HElem& h, const RingElem& x) {
  RingElem r(x.mode());
  for (const auto& [hx, cx] : x.terms()) r.add_term(h_mul(h, hx), cx);
  return r;
}

RingElem operator*(const RingElem& x, const HElem& h) {
  RingElem r(x.mode());
  for (const auto& [hx, cx] : x.terms()) r.add_term(h_mul(hx, h), cx);
  return r;
}

RingElem operator*(const mpz_class& c, const RingElem& x) {
  return ring_scalar_mul(c, x);
}

std::string RingElem::format() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [h, c] : terms_) {
    const bool neg = c < 0;
    mpz_class mag = neg ? mpz_class(-c) : c;
    if (first) {
      if (neg) os << '-';
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    const std::string mono = h_format(h);
    if (mono == "1") {
      os << mag.get_str();
    } else if (mag == 1) {
      os << mono;
    } else {
      os << mag.get_str() << ' ' << mono;
    }
  }
  return os.str();
}

}  // namespace braidrep
