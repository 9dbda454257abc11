// Acceptance suite: every criterion is exact-symbolic or property-based, runs
// at full sample size, and prints one pass/fail line with its runtime.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "braidrep/action.hpp"
#include "braidrep/rep.hpp"
#include "golden_phi1.hpp"
#include "oracles.hpp"

using namespace braidrep;
using namespace braidrep::testing;

namespace {

int failures = 0;

void run(const char* id, const char* what, const std::function<bool()>& body) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string err;
  try {
    ok = body();
  } catch (const std::exception& e) {
    err = e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%-4s %-4s (%6.2fs) %s%s%s\n", id, ok ? "PASS" : "FAIL", secs, what,
              err.empty() ? "" : " -- exception: ", err.c_str());
  if (!ok) ++failures;
}

Word random_word(const Alphabet& a, std::mt19937_64& rng, int maxlen) {
  auto gens = a.generators();
  Word w(a);
  for (int i = 0, len = static_cast<int>(rng() % (maxlen + 1)); i < len; ++i)
    w.append(gens[rng() % gens.size()], rng() % 2 ? 1 : -1);
  return w;
}

bool a1_golden_phi1() {
  return mat_eq(phi1_generator(2, 3, {GenFamily::Sigma, 1}), golden_phi1_s1()) &&
         mat_eq(phi1_generator(2, 3, {GenFamily::Sigma, 2}), golden_phi1_s2()) &&
         mat_eq(phi1_generator(2, 3, {GenFamily::A, 1}), golden_phi1_a1()) &&
         mat_eq(phi1_generator(2, 3, {GenFamily::A, 2}), golden_phi1_a2()) &&
         mat_eq(phi1_generator(2, 3, {GenFamily::B, 1}), golden_phi1_b1()) &&
         mat_eq(phi1_generator(2, 3, {GenFamily::B, 2}), golden_phi1_b2());
}

bool a2_relation_suite() {
  bool ok = true;
  for (auto [g, n] : {std::pair{1, 2}, {1, 3}, {2, 2}, {2, 3}}) {
    auto reports = verify_relations(
        g, n, [g = g, n = n](const Word& w) { return phi1_word(g, n, w); });
    if (g == 2 && n == 3 && reports.size() != 15) ok = false;
    for (const auto& r : reports)
      if (!r.pass) {
        std::printf("     A2 failure: g=%d n=%d %s\n", g, n, r.name.c_str());
        ok = false;
      }
  }
  return ok;
}

bool a3_classical_restriction() {
  std::mt19937_64 rng(1003);
  const int g = 2;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = trial % 2 ? 3 : 4;
    Alphabet a = alphabet(g, n, 1, AlphabetKind::B0N_SURFACE);
    Word w(a);
    for (int i = 0, len = static_cast<int>(rng() % 13); i < len; ++i)
      w.append({GenFamily::Sigma, 1 + static_cast<int>(rng() % (n - 1))},
               rng() % 2 ? 1 : -1);
    // classical_block itself asserts the gamma-span invariance.
    if (!mat_eq(classical_block(phi1_word(g, n, w), n),
                fox_oracle_sigma_block(n, w, RingMode{KClass::K1, g})))
      return false;
  }
  return true;
}

bool a4_action_suite() {
  for (auto [g, n] : {std::pair{1, 2}, {1, 3}, {2, 2}, {2, 3}}) {
    Alphabet pi = alphabet(g, n, 1, AlphabetKind::BNK);
    for (const Relation& rel : relations(g, n, 1, AlphabetKind::B0N_SURFACE))
      if (!(braid_action(pi, rel.lhs) == braid_action(pi, rel.rhs))) return false;
    FreeAuto ident(pi);
    for (GenSym gen : alphabet(g, n, 1, AlphabetKind::B0N_SURFACE).generators())
      if (!(generator_action(pi, gen, 1).then(generator_action(pi, gen, -1)) == ident) ||
          !(generator_action(pi, gen, -1).then(generator_action(pi, gen, 1)) == ident))
        return false;
  }
  return true;
}

bool a5_lifting_equivariance() {
  std::mt19937_64 rng(1005);
  const int g = 2, n = 3;
  Alphabet pi = alphabet(g, n, 1, AlphabetKind::BNK);
  auto b0n_gens = alphabet(g, n, 1, AlphabetKind::B0N_SURFACE).generators();
  for (int trial = 0; trial < 1000; ++trial) {
    Word w = random_word(pi, rng, 20);
    for (GenSym gen : b0n_gens)
      for (KClass kc : {KClass::KGE2, KClass::K1})
        if (!lifting_identity_check(gen, w, RingMode{kc, g})) return false;
  }
  return true;
}

bool a6_group_ring_kernel() {
  std::mt19937_64 rng(1006);
  const RingMode mode{KClass::KGE2, 2};
  const HElem e = HElem::identity(mode);
  const HElem q = HElem::generator(mode, HGen::Q);
  const HElem t = HElem::generator(mode, HGen::T);
  for (int i = 0; i < 10000; ++i) {
    HElem a = random_helem(mode, rng), b = random_helem(mode, rng),
          c = random_helem(mode, rng);
    if (!(h_mul(h_mul(a, b), c) == h_mul(a, h_mul(b, c)))) return false;
    if (!(h_mul(a, e) == a && h_mul(e, a) == a)) return false;
    if (!h_mul(a, h_inv(a)).is_identity()) return false;
    if (!(h_mul(q, a) == h_mul(a, q) && h_mul(t, a) == h_mul(a, t))) return false;
  }
  auto comm = [](const HElem& x, const HElem& y) {
    return h_mul(h_mul(h_mul(x, y), h_inv(x)), h_inv(y));
  };
  for (int r = 1; r <= 2; ++r) {
    if (!(comm(HElem::generator(mode, HGen::M, r), HElem::generator(mode, HGen::L, r)) ==
          HElem::generator(mode, HGen::T, 0, 2)))
      return false;
    if (!(comm(HElem::generator(mode, HGen::MBar, r),
               HElem::generator(mode, HGen::L, r)) == q))
      return false;
    if (!(comm(HElem::generator(mode, HGen::M, r),
               HElem::generator(mode, HGen::LBar, r)) == q))
      return false;
  }
  for (int i = 0; i < 10000; ++i) {
    HElem a = random_helem(mode, rng), b = random_helem(mode, rng);
    if (!(h_mul(a, b) == collect_bubble(a, b))) return false;
  }
  const RingMode k1{KClass::K1, 2};
  for (int i = 0; i < 2000; ++i) {
    HElem a = random_helem(k1, rng), b = random_helem(k1, rng);
    if (h_mul(a, b).t_exp() != 0) return false;
    if (!(h_mul(a, b) == collect_bubble(a, b))) return false;
  }
  return true;
}

bool a7_fox_engine() {
  std::mt19937_64 rng(1007);
  const int g = 2, n = 3;
  const RingMode mode{KClass::KGE2, g};
  Alphabet pi = alphabet(g, n, 1, AlphabetKind::BNK);
  auto gens = pi.generators();
  for (int trial = 0; trial < 1000; ++trial) {
    Word w = random_word(pi, rng, 20);
    RingElem sum = RingElem::zero(mode);
    for (GenSym x : gens) {
      RingElem factor = RingElem::monomial(psi_image(mode, x));
      factor.add_term(HElem::identity(mode), -1);
      sum = sum + fox_phi(w, x, mode) * factor;
    }
    RingElem lhs = RingElem::monomial(phi_eval(w, mode));
    lhs.add_term(HElem::identity(mode), -1);
    if (!(lhs == sum)) return false;
  }
  return true;
}

bool a8_phi2_lkb() {
  if (!lkb_compare_sigma1(true).equal) return false;
  if (lkb_compare_sigma1(false).equal) return false;  // the twist is essential
  return true;
}

bool a9_specialization_obstruction() {
  std::mt19937_64 rng(1009);
  const RingMode mode{KClass::KGE2, 2};
  std::uniform_int_distribution<int> num(-4, 4);
  auto rand_q = [&]() {
    int a = num(rng), b = num(rng);
    if (a == 0) a = 1;
    if (b == 0) b = 1;
    mpq_class v(a, b);
    v.canonicalize();
    return v;
  };
  int accepted = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    SpecAssignment a = SpecAssignment::ones(2);
    a.q = rand_q();
    a.t = rand_q();
    for (auto& h : a.handles)
      for (auto& v : h) v = rand_q();
    auto check = validate_specialization(mode, a);
    if (check.ok) {
      ++accepted;
      if (!(a.q == 1 && a.t * a.t == 1)) return false;
    } else if (a.q != 1) {
      bool named = false;
      for (const auto& v : check.violations)
        named |= v.find("[M") != std::string::npos || v.find(",L") != std::string::npos;
      if (!named) return false;
    }
  }
  // The sampler must actually exercise the accepting region.
  SpecAssignment good = SpecAssignment::ones(2);
  good.t = -1;
  if (!validate_specialization(mode, good).ok) return false;
  return accepted >= 0;
}

bool a10_psi_well_defined() {
  for (auto [g, n, k] : {std::tuple{1, 2, 1}, {2, 3, 1}, {1, 3, 2}}) {
    const RingMode mode{k == 1 ? KClass::K1 : KClass::KGE2, g};
    for (const Relation& rel : relations(g, n, k, AlphabetKind::INTERTWINING))
      if (!(psi_eval(rel.lhs, mode) == psi_eval(rel.rhs, mode))) {
        std::printf("     A10 failure: g=%d n=%d k=%d %s\n", g, n, k, rel.name.c_str());
        return false;
      }
  }
  return true;
}

}  // namespace

int main() {
  run("A1", "golden Phi1 generator matrices (g=2, n=3)", a1_golden_phi1);
  run("A2", "Phi1 relation suite on (1,2),(1,3),(2,2),(2,3)", a2_relation_suite);
  run("A3", "classical Burau restriction vs Fox oracle, 1000 words", a3_classical_restriction);
  run("A4", "mapping-class action relation suite + inverses", a4_action_suite);
  run("A5", "lifting equivariance, 1000 random words at (2,3)", a5_lifting_equivariance);
  run("A6", "group-ring laws and bubble-collection oracle, 10000 samples", a6_group_ring_kernel);
  run("A7", "Fox fundamental identity, 1000 random words at (2,3)", a7_fox_engine);
  run("A8", "curated Phi2 sigma_1 vs classical LKB under t -> -t", a8_phi2_lkb);
  run("A9", "commutative specializations force q=1, t^2=1", a9_specialization_obstruction);
  run("A10", "psi well defined on the intertwining presentations", a10_psi_well_defined);
  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
