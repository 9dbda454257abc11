#include "braidrep/rep.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace braidrep {

std::vector<BasisLabel> k1_basis(int g, int n) {
  std::vector<BasisLabel> out;
  for (int j = 1; j <= n - 1; ++j) out.push_back({"g" + std::to_string(j)});
  for (int r = 1; r <= g; ++r) out.push_back({"a" + std::to_string(r)});
  for (int r = 1; r <= g; ++r) out.push_back({"b" + std::to_string(r)});
  return out;
}

std::vector<BasisLabel> phi2_basis() {
  return {{"w11"}, {"w12"}, {"w22"}, {"a00"}, {"a01"},
          {"a02"}, {"b00"}, {"b01"}, {"b02"}, {"z"}};
}

mpz_class rank(int g, int n, int k) {
  if (g < 0 || n < 1 || k < 1)
    throw std::invalid_argument("rank: need g >= 0, n >= 1, k >= 1");
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(2 * g + n + k - 2),
               static_cast<unsigned long>(k));
  return r;
}

RepMatrix::RepMatrix(RingMode mode, std::vector<BasisLabel> row_labels,
                     std::vector<BasisLabel> col_labels)
    : mode_(mode), row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)) {
  entries_.assign(row_labels_.size() * col_labels_.size(), RingElem::zero(mode_));
}

RepMatrix RepMatrix::identity(RingMode mode, std::vector<BasisLabel> labels) {
  RepMatrix m(mode, labels, labels);
  for (int i = 0; i < m.rows(); ++i) m.at(i, i) = RingElem::one(mode);
  return m;
}

RepMatrix RepMatrix::scaled_left(const HElem& h) const {
  RepMatrix r = *this;
  for (auto& e : r.entries_) e = h * e;
  return r;
}

RepMatrix RepMatrix::substitute_t_negation() const {
  RepMatrix r = *this;
  for (auto& e : r.entries_) e = e.substitute_t_negation();
  return r;
}

bool mat_eq(const RepMatrix& a, const RepMatrix& b) {
  if (!(a.mode() == b.mode()) || a.rows() != b.rows() || a.cols() != b.cols())
    return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!(a.at(i, j) == b.at(i, j))) return false;
  return true;
}

RepMatrix mat_mul_serial(const RepMatrix& a, const RepMatrix& b) {
  if (!(a.mode() == b.mode())) throw std::invalid_argument("mat_mul: mode mismatch");
  if (a.cols() != b.rows() || !(a.col_labels() == b.row_labels()))
    throw std::invalid_argument("mat_mul: shape mismatch");
  RepMatrix c(a.mode(), a.row_labels(), b.col_labels());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      RingElem acc(a.mode());
      for (int k = 0; k < a.cols(); ++k)
        acc = acc + ring_mul(a.at(i, k), b.at(k, j));
      c.at(i, j) = std::move(acc);
    }
  return c;
}

RepMatrix mat_mul(const RepMatrix& a, const RepMatrix& b) {
  if (!(a.mode() == b.mode())) throw std::invalid_argument("mat_mul: mode mismatch");
  if (a.cols() != b.rows() || !(a.col_labels() == b.row_labels()))
    throw std::invalid_argument("mat_mul: shape mismatch");
  const int cells = a.rows() * b.cols();
  if (cells < 32) return mat_mul_serial(a, b);
  RepMatrix c(a.mode(), a.row_labels(), b.col_labels());
#pragma omp parallel for collapse(2) schedule(dynamic)
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      RingElem acc(a.mode());
      for (int k = 0; k < a.cols(); ++k)
        acc = acc + ring_mul(a.at(i, k), b.at(k, j));
      c.at(i, j) = std::move(acc);
    }
  return c;
}

RepMatrix rep_compose_serial(const RepMatrix& after, const RepMatrix& before) {
  if (!(after.mode() == before.mode()))
    throw std::invalid_argument("rep_compose: mode mismatch");
  if (after.cols() != before.rows() || !(after.col_labels() == before.row_labels()))
    throw std::invalid_argument("rep_compose: shape mismatch");
  RepMatrix c(after.mode(), after.row_labels(), before.col_labels());
  for (int i = 0; i < after.rows(); ++i)
    for (int j = 0; j < before.cols(); ++j) {
      RingElem acc(after.mode());
      for (int k = 0; k < after.cols(); ++k)
        acc = acc + ring_mul(before.at(k, j), after.at(i, k));
      c.at(i, j) = std::move(acc);
    }
  return c;
}

RepMatrix rep_compose(const RepMatrix& after, const RepMatrix& before) {
  if (!(after.mode() == before.mode()))
    throw std::invalid_argument("rep_compose: mode mismatch");
  if (after.cols() != before.rows() || !(after.col_labels() == before.row_labels()))
    throw std::invalid_argument("rep_compose: shape mismatch");
  const int cells = after.rows() * before.cols();
  if (cells < 32) return rep_compose_serial(after, before);
  RepMatrix c(after.mode(), after.row_labels(), before.col_labels());
#pragma omp parallel for collapse(2) schedule(dynamic)
  for (int i = 0; i < after.rows(); ++i)
    for (int j = 0; j < before.cols(); ++j) {
      RingElem acc(after.mode());
      for (int k = 0; k < after.cols(); ++k)
        acc = acc + ring_mul(before.at(k, j), after.at(i, k));
      c.at(i, j) = std::move(acc);
    }
  return c;
}

RepMatrix mat_inverse(const RepMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("mat_inverse: not square");
  const int m = a.rows();
  RepMatrix work = a;
  RepMatrix inv = RepMatrix::identity(a.mode(), a.row_labels());
  for (int col = 0; col < m; ++col) {
    int pivot = -1;
    for (int r = col; r < m; ++r)
      if (work.at(r, col).is_unit_monomial()) {
        pivot = r;
        break;
      }
    if (pivot < 0)
      throw NotInvertibleByElimination("mat_inverse: no unit pivot in column " +
                                       std::to_string(col));
    if (pivot != col)
      for (int j = 0; j < m; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    // Normalize the pivot row from the left by the inverse of the unit.
    const RingElem u = work.at(col, col).unit_inverse();
    for (int j = 0; j < m; ++j) {
      work.at(col, j) = ring_mul(u, work.at(col, j));
      inv.at(col, j) = ring_mul(u, inv.at(col, j));
    }
    for (int r = 0; r < m; ++r) {
      if (r == col || work.at(r, col).is_zero()) continue;
      const RingElem f = work.at(r, col);
      for (int j = 0; j < m; ++j) {
        work.at(r, j) = work.at(r, j) - ring_mul(f, work.at(col, j));
        inv.at(r, j) = inv.at(r, j) - ring_mul(f, inv.at(col, j));
      }
    }
  }
  // Elimination yields a left inverse; confirm it is two-sided.
  RepMatrix ident = RepMatrix::identity(a.mode(), a.row_labels());
  if (!mat_eq(mat_mul_serial(a, inv), ident) || !mat_eq(mat_mul_serial(inv, a), ident))
    throw NotInvertibleByElimination("mat_inverse: candidate is not a two-sided inverse");
  return inv;
}

namespace {

struct K1Index {
  int g, n;
  int gamma(int j) const { return j - 1; }
  int alpha(int r) const { return n - 1 + r - 1; }
  int beta(int r) const { return n - 1 + g + r - 1; }
};


// q^qe * x_r - q^qe, the recurring staircase entry.
RingElem staircase(RingMode mode, HGen gen, int r, std::int64_t qe) {
  HElem h = HElem::generator(mode, HGen::Q, 0, qe);
  h.set_exp(gen, r, 1);
  RingElem e = RingElem::monomial(h);
  e.add_term(HElem::generator(mode, HGen::Q, 0, qe), -1);
  return e;
}

}  // namespace

RepMatrix phi1_generator(int g, int n, GenSym gen, int sign) {
  if (g < 0 || n < 1) throw std::invalid_argument("phi1_generator: bad (g, n)");
  if (sign == -1) return mat_inverse(phi1_generator(g, n, gen, 1));
  if (sign != 1) throw std::invalid_argument("phi1_generator: sign must be +-1");
  const RingMode mode{KClass::K1, g};
  const K1Index ix{g, n};
  RepMatrix m = RepMatrix::identity(mode, k1_basis(g, n));
  const HElem q = HElem::generator(mode, HGen::Q);

  switch (gen.family) {
    case GenFamily::Sigma: {
      const int i = gen.index;
      if (i < 1 || i > n - 1)
        throw std::invalid_argument("phi1_generator: sigma index out of range");
      // Reduced Burau block on the gamma span.
      m.at(ix.gamma(i), ix.gamma(i)) = RingElem::monomial(q, -1);
      if (i >= 2) m.at(ix.gamma(i), ix.gamma(i - 1)) = RingElem::monomial(q);
      if (i <= n - 2) m.at(ix.gamma(i), ix.gamma(i + 1)) = RingElem::one(mode);
      // Only sigma_1 couples into the handle columns.
      if (i == 1) {
        for (int s = 1; s <= g; ++s) {
          m.at(ix.gamma(1), ix.alpha(s)) = -staircase(mode, HGen::M, s, 1);
          m.at(ix.gamma(1), ix.beta(s)) = -staircase(mode, HGen::L, s, 1);
        }
      }
      return m;
    }
    case GenFamily::A: {
      const int r = gen.index;
      if (r < 1 || r > g)
        throw std::invalid_argument("phi1_generator: handle index out of range");
      if (n >= 2) m.at(ix.alpha(r), ix.gamma(1)) = RingElem::one(mode);
      for (int s = 1; s <= g; ++s) {
        if (s == r) {
          HElem mq = HElem::generator(mode, HGen::Q);
          mq.set_exp(HGen::M, r, 1);
          m.at(ix.alpha(r), ix.alpha(r)) = RingElem::monomial(mq);
        } else {
          m.at(ix.alpha(r), ix.alpha(s)) = staircase(mode, HGen::M, s, s > r ? 1 : 0);
        }
        m.at(ix.alpha(r), ix.beta(s)) = staircase(mode, HGen::L, s, s > r ? 1 : 0);
      }
      return m.scaled_left(HElem::generator(mode, HGen::MBar, r));
    }
    case GenFamily::B: {
      const int r = gen.index;
      if (r < 1 || r > g)
        throw std::invalid_argument("phi1_generator: handle index out of range");
      if (n >= 2) m.at(ix.beta(r), ix.gamma(1)) = RingElem::one(mode);
      m.at(ix.alpha(r), ix.alpha(r)) = RingElem::monomial(q);
      for (int s = 1; s <= g; ++s) {
        if (s == r) {
          // q (m_r q - 1) at the alpha_r column, l_r q on the diagonal.
          HElem mq2 = HElem::generator(mode, HGen::Q, 0, 2);
          mq2.set_exp(HGen::M, r, 1);
          RingElem e = RingElem::monomial(mq2);
          e.add_term(q, -1);
          m.at(ix.beta(r), ix.alpha(r)) = e;
          HElem lq = HElem::generator(mode, HGen::Q);
          lq.set_exp(HGen::L, r, 1);
          m.at(ix.beta(r), ix.beta(r)) = RingElem::monomial(lq);
        } else {
          m.at(ix.beta(r), ix.alpha(s)) = staircase(mode, HGen::M, s, s > r ? 1 : 0);
          m.at(ix.beta(r), ix.beta(s)) = staircase(mode, HGen::L, s, s > r ? 1 : 0);
        }
      }
      return m.scaled_left(HElem::generator(mode, HGen::LBar, r));
    }
    default:
      throw std::invalid_argument("phi1_generator: " + gen_name(gen) +
                                  " is not a B0N generator");
  }
}

RepMatrix phi1_word(int g, int n, const Word& w) {
  const RingMode mode{KClass::K1, g};
  RepMatrix acc = RepMatrix::identity(mode, k1_basis(g, n));
  // Letters act in word order, matching the action module's convention
  // (b1 b2)_* = (b2)_* o (b1)_*.  This pairing of composition order and
  // entry order is the unique one that passes the SCR/CR2/CR3 suites.
  for (const Letter& l : w.letters())
    acc = rep_compose(phi1_generator(g, n, l.gen, l.sign), acc);
  return acc;
}

namespace {

// Rebuilds a pure q-power element in another mode.
RingElem remap_q(const RingElem& x, RingMode out_mode) {
  RingElem r(out_mode);
  for (const auto& [h, c] : x.terms()) {
    if (!h.is_central() || h.t_exp() != 0)
      throw std::logic_error("remap_q: entry not a q-Laurent polynomial");
    r.add_term(HElem::generator(out_mode, HGen::Q, 0, h.q_exp()), c);
  }
  return r;
}

}  // namespace

RepMatrix fox_oracle_sigma_block(int n, const Word& w, RingMode out_mode) {
  for (const Letter& l : w.letters())
    if (l.gen.family != GenFamily::Sigma)
      throw std::invalid_argument("fox_oracle_sigma_block: non-sigma letter " +
                                  gen_name(l.gen));
  const int g = w.alphabet().g;
  const RingMode inner{KClass::K1, g};
  const Alphabet pi = alphabet(g, n, 1, AlphabetKind::BNK);
  const FreeAuto act = braid_action(pi, embed_word(w, alphabet(g, n, 1, AlphabetKind::B0N_SURFACE)));

  // Fox Jacobian J[s][t] = phi(d act(z_s) / d z_t), an n x n matrix over <q>.
  std::vector<std::vector<RingElem>> jac(n, std::vector<RingElem>(n, RingElem::zero(inner)));
  for (int s = 1; s <= n; ++s) {
    const Word img = act.image({GenFamily::Zeta, s});
    for (int t = 1; t <= n; ++t)
      jac[s - 1][t - 1] = fox_phi(img, {GenFamily::Zeta, t}, inner);
  }

  // Reduce to the gamma basis gamma_j = e_j - e_{j+1}: the gamma-coordinates
  // of the image of gamma_j are prefix sums of row differences.
  std::vector<BasisLabel> labels;
  for (int j = 1; j <= n - 1; ++j) labels.push_back({"g" + std::to_string(j)});
  RepMatrix block(out_mode, labels, labels);
  for (int j = 1; j <= n - 1; ++j) {
    RingElem prefix(inner);
    for (int u = 1; u <= n - 1; ++u) {
      prefix = prefix + jac[j - 1][u - 1] - jac[j][u - 1];
      block.at(u - 1, j - 1) = remap_q(prefix, out_mode);
    }
  }
  return block;
}

RepMatrix classical_block(const RepMatrix& m, int n) {
  if (m.rows() != m.cols() || m.rows() < n - 1)
    throw std::invalid_argument("classical_block: bad shape");
  for (int i = n - 1; i < m.rows(); ++i)
    for (int j = 0; j < n - 1; ++j)
      if (!m.at(i, j).is_zero())
        throw BlockInvarianceViolation("classical_block: gamma span not invariant at (" +
                                       std::to_string(i) + "," + std::to_string(j) + ")");
  std::vector<BasisLabel> labels(m.row_labels().begin(), m.row_labels().begin() + (n - 1));
  RepMatrix block(m.mode(), labels, labels);
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n - 1; ++j) block.at(i, j) = m.at(i, j);
  return block;
}

namespace {

// Expression helpers for the curated tables.
RingElem mono(RingMode mode, std::int64_t qe, std::int64_t te, HGen gen, int r,
              std::int64_t ge, mpz_class c = 1) {
  HElem h = HElem::generator(mode, HGen::Q, 0, qe);
  if (te != 0) h.set_exp(HGen::T, 0, te);
  if (ge != 0) h.set_exp(gen, r, ge);
  return RingElem::monomial(h, std::move(c));
}

RingElem qt(RingMode mode, std::int64_t qe, std::int64_t te, mpz_class c = 1) {
  return mono(mode, qe, te, HGen::M, 1, 0, std::move(c));
}

}  // namespace

RepMatrix phi2_curated(GenSym gen) {
  if (!(gen == GenSym{GenFamily::Sigma, 1}))
    throw std::invalid_argument("phi2_curated: generator " + gen_name(gen) +
                                " not provided by source data");
  const RingMode mode{KClass::KGE2, 1};
  const auto basis = phi2_basis();
  RepMatrix m(mode, basis, basis);
  auto pos = [&](const char* name) {
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i].name == name) return static_cast<int>(i);
    throw std::logic_error("phi2_curated: bad label");
  };
  auto set = [&](const char* row, const char* col, const RingElem& e) {
    m.at(pos(row), pos(col)) = e;
  };
  const RingElem one = RingElem::one(mode);

  // Column = image of the column label.
  set("w11", "w11", qt(mode, 2, 1));

  set("w11", "w12", qt(mode, 1, 1, -1));
  set("w12", "w12", qt(mode, 1, 0, -1));

  set("w11", "w22", one);
  set("w12", "w22", qt(mode, 0, 0) + qt(mode, 0, -1));
  set("w22", "w22", one);

  // a-family columns, coupling through m_1.
  set("a00", "a00", one);
  set("a01", "a00", qt(mode, 1, 0) + qt(mode, 1, -1) + mono(mode, 1, 1, HGen::M, 1, 1, -1) +
                        mono(mode, 1, 0, HGen::M, 1, 1, -1));
  set("w11", "a00", qt(mode, 2, 0) + mono(mode, 2, 0, HGen::M, 1, 2) +
                        mono(mode, 2, 0, HGen::M, 1, 1, -1) +
                        mono(mode, 2, 1, HGen::M, 1, 1, -1));

  set("a01", "a01", qt(mode, 1, 0, -1));
  set("w11", "a01", mono(mode, 2, 1, HGen::M, 1, 1) + qt(mode, 2, 1, -1));

  set("a01", "a02", one);
  set("a02", "a02", one);
  set("w11", "a02", qt(mode, 1, 1) + mono(mode, 1, 1, HGen::M, 1, 1, -1));
  set("w12", "a02", qt(mode, 1, 0) + mono(mode, 1, 0, HGen::M, 1, 1, -1));

  // b-family columns, same shape through l_1.
  set("b00", "b00", one);
  set("b01", "b00", qt(mode, 1, 0) + qt(mode, 1, -1) + mono(mode, 1, 1, HGen::L, 1, 1, -1) +
                        mono(mode, 1, 0, HGen::L, 1, 1, -1));
  set("w11", "b00", qt(mode, 2, 0) + mono(mode, 2, 0, HGen::L, 1, 2) +
                        mono(mode, 2, 0, HGen::L, 1, 1, -1) +
                        mono(mode, 2, 1, HGen::L, 1, 1, -1));

  set("b01", "b01", qt(mode, 1, 0, -1));
  set("w11", "b01", mono(mode, 2, 1, HGen::L, 1, 1) + qt(mode, 2, 1, -1));

  set("b01", "b02", one);
  set("b02", "b02", one);
  set("w11", "b02", qt(mode, 1, 1) + mono(mode, 1, 1, HGen::L, 1, 1, -1));
  set("w12", "b02", qt(mode, 1, 0) + mono(mode, 1, 0, HGen::L, 1, 1, -1));

  // z column.
  set("a01", "z", qt(mode, 1, -1) + mono(mode, 1, 1, HGen::L, 1, 1, -1));
  set("b01", "z", qt(mode, 1, 0) + mono(mode, 1, 0, HGen::M, 1, 1, -1));
  {
    HElem ml = HElem::generator(mode, HGen::Q, 0, 2);
    ml.set_exp(HGen::M, 1, 1);
    ml.set_exp(HGen::L, 1, 1);
    RingElem e = qt(mode, 2, 0) + RingElem::monomial(ml) +
                 mono(mode, 2, 0, HGen::M, 1, 1, -1) + mono(mode, 2, 1, HGen::L, 1, 1, -1);
    set("w11", "z", e);
  }
  set("z", "z", one);

  return m;
}

RepMatrix v_basis_change() {
  const RingMode mode{KClass::KGE2, 1};
  std::vector<BasisLabel> wl = {{"w11"}, {"w12"}, {"w22"}};
  std::vector<BasisLabel> vl = {{"v12"}, {"v13"}, {"v23"}};
  RepMatrix p(mode, wl, vl);
  p.at(0, 0) = qt(mode, -4, 1, -1);
  p.at(0, 1) = qt(mode, -4, 1, -1);
  p.at(1, 1) = qt(mode, -3, 1, -1) + qt(mode, -3, 0, -1);
  p.at(2, 1) = qt(mode, -2, 1, -1);
  p.at(2, 2) = qt(mode, -2, 1, -1);
  return p;
}

RepMatrix lkb_sigma(int n, int i, RingMode mode) {
  if (n < 2 || i < 1 || i > n - 1) throw std::invalid_argument("lkb_sigma: bad (n, i)");
  std::vector<BasisLabel> labels;
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) {
      labels.push_back({"v" + std::to_string(j) + std::to_string(k)});
      pairs.emplace_back(j, k);
    }
  auto pos = [&](int j, int k) {
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (pairs[p] == std::make_pair(j, k)) return static_cast<int>(p);
    throw std::logic_error("lkb_sigma: bad pair");
  };
  RepMatrix m(mode, labels, labels);
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    const auto [j, k] = pairs[c];
    const int col = static_cast<int>(c);
    if (i == j && i == k - 1) {
      m.at(col, col) = qt(mode, 2, 1, -1);
    } else if (i == j - 1) {
      m.at(pos(i, k), col) = qt(mode, 1, 0);
      m.at(pos(i, j), col) = qt(mode, 2, 0) + qt(mode, 1, 0, -1);
      m.at(col, col) = qt(mode, 0, 0) + qt(mode, 1, 0, -1);
    } else if (i == j) {
      m.at(pos(j + 1, k), col) = RingElem::one(mode);
    } else if (i == k - 1) {
      m.at(pos(j, i), col) = qt(mode, 1, 0);
      m.at(col, col) = qt(mode, 0, 0) + qt(mode, 1, 0, -1);
      m.at(pos(i, k), col) = qt(mode, 2, 1, -1) + qt(mode, 1, 1);
    } else if (i == k) {
      m.at(pos(j, k + 1), col) = RingElem::one(mode);
    } else {
      m.at(col, col) = RingElem::one(mode);
    }
  }
  return m;
}

LkbComparison lkb_compare_sigma1(bool substitute_t) {
  const RepMatrix f = phi2_curated({GenFamily::Sigma, 1});
  // The w span must be invariant before the block makes sense.
  for (int i = 3; i < f.rows(); ++i)
    for (int j = 0; j < 3; ++j)
      if (!f.at(i, j).is_zero())
        throw std::logic_error("lkb_compare_sigma1: w span not invariant");
  std::vector<BasisLabel> wl = {{"w11"}, {"w12"}, {"w22"}};
  RepMatrix wblock(f.mode(), wl, wl);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) wblock.at(i, j) = f.at(i, j);

  // The basis change has determinant -q^-9 t^2 (t+1), a non-unit, so its
  // inverse only exists after localizing; compare fraction-free instead:
  // the action equals L on the v basis iff  W P = P L'  with L' the
  // reference matrix carried back through t -> -t.
  const RepMatrix p = v_basis_change();
  RepMatrix ref = lkb_sigma(3, 1, f.mode());
  if (substitute_t) ref = ref.substitute_t_negation();
  const RepMatrix lhs = mat_mul(wblock, p);
  const RepMatrix rhs = mat_mul(p, ref);

  LkbComparison out;
  out.equal = true;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!(lhs.at(i, j) == rhs.at(i, j))) {
        out.equal = false;
        out.mismatches.push_back({i, j, rhs.at(i, j).format(), lhs.at(i, j).format()});
      }
  return out;
}

SpecAssignment SpecAssignment::ones(int genus) {
  SpecAssignment a;
  a.handles.assign(static_cast<std::size_t>(genus), {1, 1, 1, 1});
  return a;
}

SpecializationCheck validate_specialization(RingMode mode, const SpecAssignment& a) {
  SpecializationCheck out;
  auto fail = [&](std::string msg) {
    out.ok = false;
    out.violations.push_back(std::move(msg));
  };
  if (static_cast<int>(a.handles.size()) != mode.genus)
    fail("assignment covers " + std::to_string(a.handles.size()) + " handles, genus is " +
         std::to_string(mode.genus));
  if (a.q == 0) fail("q must be a nonzero unit");
  if (a.t == 0) fail("t must be a nonzero unit");
  static const char* names[4] = {"m", "l", "M", "L"};
  for (std::size_t r = 0; r < a.handles.size(); ++r)
    for (int c = 0; c < 4; ++c)
      if (a.handles[r][c] == 0)
        fail(std::string(names[c]) + std::to_string(r + 1) + " must be a nonzero unit");
  if (!out.ok) return out;

  if (mode.k_class == KClass::K1 && a.t != 1) fail("t=1 in K1 mode");
  // In a commutative target every commutator collapses, so the noncentral
  // relations become conditions on q and t.
  for (int r = 1; r <= mode.genus; ++r) {
    const std::string rs = std::to_string(r);
    if (mode.k_class == KClass::KGE2 && a.t * a.t != 1)
      fail("[m" + rs + ",l" + rs + "]=t^2 requires t^2=1");
    if (a.q != 1) {
      fail("[M" + rs + ",l" + rs + "]=q requires q=1");
      fail("[m" + rs + ",L" + rs + "]=q requires q=1");
    }
  }
  return out;
}

namespace {

mpq_class mpq_pow(const mpq_class& base, std::int64_t e) {
  if (e == 0) return 1;
  mpq_class b = base;
  if (e < 0) {
    b = 1 / b;
    e = -e;
  }
  mpq_class acc = 1;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

}  // namespace

mpq_class specialize_elem(const RingElem& x, const SpecAssignment& a) {
  mpq_class acc = 0;
  for (const auto& [h, c] : x.terms()) {
    mpq_class v = mpq_class(c);
    v *= mpq_pow(a.q, h.q_exp());
    v *= mpq_pow(a.t, h.t_exp());
    for (int r = 1; r <= h.genus(); ++r) {
      const auto& hr = a.handles[static_cast<std::size_t>(r - 1)];
      v *= mpq_pow(hr[0], h.exp(HGen::M, r));
      v *= mpq_pow(hr[1], h.exp(HGen::L, r));
      v *= mpq_pow(hr[2], h.exp(HGen::MBar, r));
      v *= mpq_pow(hr[3], h.exp(HGen::LBar, r));
    }
    acc += v;
  }
  acc.canonicalize();
  return acc;
}

std::vector<std::vector<mpq_class>> specialize(const RepMatrix& m, const SpecAssignment& a) {
  const auto check = validate_specialization(m.mode(), a);
  if (!check.ok) {
    std::string msg = "specialize: invalid assignment:";
    for (const auto& v : check.violations) msg += " " + v + ";";
    throw std::invalid_argument(msg);
  }
  std::vector<std::vector<mpq_class>> out(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) {
    out[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(m.cols()));
    for (int j = 0; j < m.cols(); ++j)
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          specialize_elem(m.at(i, j), a);
  }
  return out;
}

CharacterCheck validate_character(int g, int n, const Character& chi) {
  CharacterCheck out;
  if (static_cast<int>(chi.a.size()) != g || static_cast<int>(chi.b.size()) != g) {
    out.ok = false;
    out.violations.push_back("character must assign one central image per handle generator");
    return out;
  }
  auto image = [&](GenSym gen) -> CentralMono {
    switch (gen.family) {
      case GenFamily::Sigma: return chi.sigma;
      case GenFamily::A: return chi.a[static_cast<std::size_t>(gen.index - 1)];
      case GenFamily::B: return chi.b[static_cast<std::size_t>(gen.index - 1)];
      default: throw std::logic_error("validate_character: bad generator");
    }
  };
  auto side = [&](const Word& w) {
    CentralMono s;
    for (const Letter& l : w.letters()) {
      const CentralMono im = image(l.gen);
      s.q_exp += l.sign * im.q_exp;
      s.t_exp += l.sign * im.t_exp;
    }
    return s;
  };
  for (const Relation& rel : relations(g, n, 1, AlphabetKind::B0N_SURFACE)) {
    const CentralMono lh = side(rel.lhs), rh = side(rel.rhs);
    if (lh.q_exp != rh.q_exp || lh.t_exp != rh.t_exp) {
      out.ok = false;
      out.violations.push_back(rel.name + " not respected by the character");
    }
  }
  return out;
}

HElem character_eval(const Character& chi, const Word& w, RingMode mode) {
  std::int64_t qe = 0, te = 0;
  for (const Letter& l : w.letters()) {
    CentralMono im;
    switch (l.gen.family) {
      case GenFamily::Sigma: im = chi.sigma; break;
      case GenFamily::A: im = chi.a[static_cast<std::size_t>(l.gen.index - 1)]; break;
      case GenFamily::B: im = chi.b[static_cast<std::size_t>(l.gen.index - 1)]; break;
      default: throw std::invalid_argument("character_eval: not a B0N word");
    }
    qe += l.sign * im.q_exp;
    te += l.sign * im.t_exp;
  }
  HElem h = HElem::generator(mode, HGen::Q, 0, qe);
  if (mode.k_class == KClass::KGE2) h.set_exp(HGen::T, 0, te);
  return h;
}

RepMatrix twist(const Character& chi, const RepMatrix& m, const Word& w) {
  const Alphabet& a = w.alphabet();
  const auto check = validate_character(a.g, a.n, chi);
  if (!check.ok) {
    std::string msg = "twist: invalid character:";
    for (const auto& v : check.violations) msg += " " + v + ";";
    throw std::invalid_argument(msg);
  }
  return m.scaled_left(character_eval(chi, w, m.mode()));
}

std::vector<RelationReport> verify_relations(
    int g, int n, const std::function<RepMatrix(const Word&)>& eval) {
  const std::vector<Relation> rels = relations(g, n, 1, AlphabetKind::B0N_SURFACE);
  std::vector<RelationReport> reports(rels.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < rels.size(); ++i) {
    RelationReport rep;
    rep.name = rels[i].name;
    rep.label = rels[i].label;
    try {
      const RepMatrix lhs = eval(rels[i].lhs);
      const RepMatrix rhs = eval(rels[i].rhs);
      rep.pass = true;
      for (int r = 0; r < lhs.rows() && rep.pass; ++r)
        for (int c = 0; c < lhs.cols() && rep.pass; ++c)
          if (!(lhs.at(r, c) == rhs.at(r, c))) {
            rep.pass = false;
            rep.row = r;
            rep.col = c;
            rep.lhs_entry = lhs.at(r, c).format();
            rep.rhs_entry = rhs.at(r, c).format();
          }
    } catch (const std::exception& e) {
      rep.pass = false;
      rep.lhs_entry = std::string("evaluator error: ") + e.what();
    }
    reports[i] = std::move(rep);
  }
  return reports;
}

}  // namespace braidrep
