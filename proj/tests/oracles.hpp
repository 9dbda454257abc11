// Test-only oracles, independent of the library's closed-form paths.

#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "braidrep/hgroup.hpp"

namespace braidrep::testing {

// Naive collector: expands both operands into unit-exponent letters and
// bubbles them into canonical order one adjacent swap at a time, applying a
// single defining swap rule per step:
//   l_r m_r -> t^-2 m_r l_r,  mbar_r l_r -> q l_r mbar_r,
//   lbar_r m_r -> q^-1 m_r lbar_r,  everything else commutes.
inline HElem collect_bubble(const HElem& a, const HElem& b) {
  const RingMode mode = a.mode();
  const int g = mode.genus;
  struct Slot {
    HGen gen;
    int r;
    int pos;
  };
  std::vector<Slot> slots;
  slots.push_back({HGen::Q, 0, 0});
  slots.push_back({HGen::T, 0, 1});
  for (int r = 1; r <= g; ++r) {
    slots.push_back({HGen::M, r, 2 + 4 * (r - 1)});
    slots.push_back({HGen::L, r, 3 + 4 * (r - 1)});
    slots.push_back({HGen::MBar, r, 4 + 4 * (r - 1)});
    slots.push_back({HGen::LBar, r, 5 + 4 * (r - 1)});
  }

  std::vector<std::pair<int, int>> letters;  // (slot index, +-1)
  auto expand = [&](const HElem& h) {
    for (std::size_t s = 0; s < slots.size(); ++s) {
      std::int64_t e = h.exp(slots[s].gen, slots[s].r);
      for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i)
        letters.emplace_back(static_cast<int>(s), e < 0 ? -1 : 1);
    }
  };
  expand(a);
  expand(b);

  std::int64_t dq = 0, dt = 0;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      auto [su, eu] = letters[i];
      auto [sv, ev] = letters[i + 1];
      if (su <= sv) continue;
      const Slot& u = slots[static_cast<std::size_t>(su)];
      const Slot& v = slots[static_cast<std::size_t>(sv)];
      if (u.r == v.r) {
        if (u.gen == HGen::L && v.gen == HGen::M) dt += -2 * eu * ev;
        else if (u.gen == HGen::MBar && v.gen == HGen::L) dq += eu * ev;
        else if (u.gen == HGen::LBar && v.gen == HGen::M) dq += -eu * ev;
      }
      std::swap(letters[i], letters[i + 1]);
      moved = true;
    }
  }

  std::vector<std::int64_t> total(slots.size(), 0);
  for (auto [s, e] : letters) total[static_cast<std::size_t>(s)] += e;
  total[0] += dq;
  total[1] += dt;
  if (mode.k_class == KClass::K1) total[1] = 0;
  HElem out(mode);
  for (std::size_t s = 0; s < slots.size(); ++s)
    if (total[s] != 0) out.set_exp(slots[s].gen, slots[s].r, total[s]);
  return out;
}

inline HElem random_helem(RingMode mode, std::mt19937_64& rng, int bound = 5) {
  std::uniform_int_distribution<std::int64_t> d(-bound, bound);
  HElem h(mode);
  h.set_exp(HGen::Q, 0, d(rng));
  if (mode.k_class == KClass::KGE2) h.set_exp(HGen::T, 0, d(rng));
  for (int r = 1; r <= mode.genus; ++r) {
    h.set_exp(HGen::M, r, d(rng));
    h.set_exp(HGen::L, r, d(rng));
    h.set_exp(HGen::MBar, r, d(rng));
    h.set_exp(HGen::LBar, r, d(rng));
  }
  return h;
}

inline RingElem random_ring_elem(RingMode mode, std::mt19937_64& rng, int terms = 3,
                                 int bound = 3) {
  RingElem x(mode);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int i = 0; i < terms; ++i) x.add_term(random_helem(mode, rng, bound), c(rng));
  return x;
}

}  // namespace braidrep::testing
