// Benchmark: serial reference kernels vs the OpenMP kernels on
// representation-sized workloads.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "braidrep/rep.hpp"

using namespace braidrep;

namespace {

template <typename F>
double time_it(F&& f, int reps) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count() / reps;
}

Word random_word(const Alphabet& a, std::mt19937_64& rng, int len) {
  auto gens = a.generators();
  Word w(a);
  for (int i = 0; i < len; ++i) w.append(gens[rng() % gens.size()], rng() % 2 ? 1 : -1);
  return w;
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::mt19937_64 rng(2718);

  // Squaring the image of a moderately long braid word; entry density grows
  // quickly with word length, so the kernels chew on real group-ring sums.
  for (int g : {2, 3, 4}) {
    const int n = 4;
    Alphabet a = alphabet(g, n, 1, AlphabetKind::B0N_SURFACE);
    RepMatrix m = phi1_word(g, n, random_word(a, rng, 14));
    std::size_t terms = 0;
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) terms += m.at(i, j).term_count();
    const double ts = time_it([&] { rep_compose_serial(m, m); }, 3);
    const double tp = time_it([&] { rep_compose(m, m); }, 3);
    std::printf(
        "compose dim %2d (%6zu terms): serial %8.4fs  omp %8.4fs  speedup %.2fx\n",
        m.rows(), terms, ts, tp, ts / tp);
  }

  // The relation verification engine against a serial loop.
  {
    const int g = 3, n = 4;
    auto eval = [&](const Word& w) { return phi1_word(g, n, w); };
    auto rels = relations(g, n, 1, AlphabetKind::B0N_SURFACE);
    const double ts = time_it(
        [&] {
          for (const auto& rel : rels) {
            volatile bool ok = mat_eq(eval(rel.lhs), eval(rel.rhs));
            (void)ok;
          }
        },
        3);
    const double tp = time_it([&] { verify_relations(g, n, eval); }, 3);
    std::printf("relation suite g=%d n=%d (%zu relations): serial %.4fs  omp %.4fs  speedup %.2fx\n",
                g, n, rels.size(), ts, tp, ts / tp);
  }
  return 0;
}
