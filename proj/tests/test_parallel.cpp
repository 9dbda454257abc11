// The OpenMP kernels must agree with the serial reference implementations.

#include <doctest.h>

#include <random>

#include "braidrep/rep.hpp"
#include "oracles.hpp"

using namespace braidrep;
using braidrep::testing::random_ring_elem;

namespace {

RepMatrix random_matrix(RingMode mode, int dim, std::mt19937_64& rng) {
  std::vector<BasisLabel> labels;
  for (int i = 0; i < dim; ++i) labels.push_back({"e" + std::to_string(i)});
  RepMatrix m(mode, labels, labels);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m.at(i, j) = random_ring_elem(mode, rng, 2, 2);
  return m;
}

}  // namespace

TEST_CASE("parallel kernels match the serial reference") {
  std::mt19937_64 rng(51);
  const RingMode mode{KClass::KGE2, 2};
  for (int trial = 0; trial < 10; ++trial) {
    const int dim = 6 + static_cast<int>(rng() % 7);
    RepMatrix a = random_matrix(mode, dim, rng);
    RepMatrix b = random_matrix(mode, dim, rng);
    CHECK(mat_eq(mat_mul(a, b), mat_mul_serial(a, b)));
    CHECK(mat_eq(rep_compose(a, b), rep_compose_serial(a, b)));
  }
}

TEST_CASE("entry products keep the left factor on the left") {
  const RingMode mode{KClass::KGE2, 1};
  std::vector<BasisLabel> l1 = {{"x"}};
  RepMatrix a(mode, l1, l1), b(mode, l1, l1);
  a.at(0, 0) = RingElem::monomial(HElem::generator(mode, HGen::MBar, 1));
  b.at(0, 0) = RingElem::monomial(HElem::generator(mode, HGen::L, 1));
  // mbar * l collects to q l mbar; the opposite order has no q.
  HElem expect = h_mul(HElem::generator(mode, HGen::MBar, 1),
                       HElem::generator(mode, HGen::L, 1));
  CHECK(mat_mul(a, b).at(0, 0) == RingElem::monomial(expect));
  CHECK(rep_compose(b, a).at(0, 0) == RingElem::monomial(expect));
  HElem opposite = h_mul(HElem::generator(mode, HGen::L, 1),
                         HElem::generator(mode, HGen::MBar, 1));
  CHECK(mat_mul(b, a).at(0, 0) == RingElem::monomial(opposite));
}
