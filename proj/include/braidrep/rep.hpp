// Matrices over the group ring Z[H]: the Phi_1 builder for arbitrary (g, n),
// the curated Phi_2 tables for g=1, n=3, classical Burau/LKB restrictions,
// commutative specializations, central character twists, and the relation
// verification engine.

#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "braidrep/action.hpp"
#include "braidrep/freecalc.hpp"
#include "braidrep/hgroup.hpp"
#include "braidrep/presentations.hpp"

namespace braidrep {

struct BasisLabel {
  std::string name;

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

// k=1 fork basis order: g1..g_{n-1}, a1..ag, b1..bg.
std::vector<BasisLabel> k1_basis(int g, int n);
// Curated k=2 basis for g=1, n=3.
std::vector<BasisLabel> phi2_basis();

// Rank of the k-th homology module: binomial(2g + n + k - 2, k).
mpz_class rank(int g, int n, int k);

// Rectangular matrix over Z[H] with labeled bases; columns are images.
class RepMatrix {
public:
  RepMatrix(RingMode mode, std::vector<BasisLabel> row_labels,
            std::vector<BasisLabel> col_labels);

  static RepMatrix identity(RingMode mode, std::vector<BasisLabel> labels);

  const RingMode& mode() const { return mode_; }
  int rows() const { return static_cast<int>(row_labels_.size()); }
  int cols() const { return static_cast<int>(col_labels_.size()); }
  const std::vector<BasisLabel>& row_labels() const { return row_labels_; }
  const std::vector<BasisLabel>& col_labels() const { return col_labels_; }

  const RingElem& at(int i, int j) const { return entries_[idx(i, j)]; }
  RingElem& at(int i, int j) { return entries_[idx(i, j)]; }

  // Left-multiplies every entry by the monomial h.
  RepMatrix scaled_left(const HElem& h) const;
  RepMatrix substitute_t_negation() const;

private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * col_labels_.size() + static_cast<std::size_t>(j);
  }

  RingMode mode_;
  std::vector<BasisLabel> row_labels_, col_labels_;
  std::vector<RingElem> entries_;
};

bool mat_eq(const RepMatrix& a, const RepMatrix& b);
// Exact product; A's entries multiply on the left.  Parallelizes over output
// cells with OpenMP when the work is large enough.
RepMatrix mat_mul(const RepMatrix& a, const RepMatrix& b);
// Serial reference kernel, kept for testing and benchmarking.
RepMatrix mat_mul_serial(const RepMatrix& a, const RepMatrix& b);

// Composite of module maps (columns are images, coefficients act from the
// left): the earlier map's entries multiply on the left,
//   compose(after, before)[k][j] = sum_i before[i][j] * after[k][i].
// Over a commutative entry set this coincides with mat_mul(after, before).
RepMatrix rep_compose(const RepMatrix& after, const RepMatrix& before);
RepMatrix rep_compose_serial(const RepMatrix& after, const RepMatrix& before);

// Two-sided inverse by Gauss-Jordan elimination with unit pivots (the units
// of Z[H] are the +-monomials).  Throws NotInvertibleByElimination when no
// unit pivot is available; that is distinct from proven non-invertibility.
struct NotInvertibleByElimination : std::runtime_error {
  using std::runtime_error::runtime_error;
};
RepMatrix mat_inverse(const RepMatrix& a);

// Phi_1 generator matrix in the fork basis (K1 mode); gen is a B0N
// generator, sign -1 takes the inverse.
RepMatrix phi1_generator(int g, int n, GenSym gen, int sign = 1);
// Image of a braid word over the B0N alphabet.
RepMatrix phi1_word(int g, int n, const Word& w);

// Independent reduced-Burau oracle for sigma-only words: the Fox Jacobian of
// the mapping-class action on the z-letters, pushed through phi and reduced
// to the gamma basis.  Entries are built in out_mode.
RepMatrix fox_oracle_sigma_block(int n, const Word& w, RingMode out_mode);

// Top-left (n-1)x(n-1) gamma block of a Phi_1 image of a sigma-only word;
// throws if the handle rows of the gamma columns are nonzero.
struct BlockInvarianceViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
RepMatrix classical_block(const RepMatrix& m, int n);

// Curated Phi_2 data for g=1, n=3 (KGE2 mode): only sigma_1 is provided by
// the source tables.
RepMatrix phi2_curated(GenSym gen);
// 3x3 transform whose columns express v12, v13, v23 in the w basis.
RepMatrix v_basis_change();
// Classical Lawrence-Krammer-Bigelow generator matrix on the v_{j,k} basis
// (lexicographic), built from the standard generator formulas.
RepMatrix lkb_sigma(int n, int i, RingMode mode);

struct EntryMismatch {
  int row, col;
  std::string expected, actual;
};
struct LkbComparison {
  bool equal = false;
  std::vector<EntryMismatch> mismatches;
};
// Conjugates the w block of Phi_2(sigma_1) into the v basis, substitutes
// t -> -t (unless disabled), and compares with the LKB oracle for n=3.
LkbComparison lkb_compare_sigma1(bool substitute_t = true);

// Commutative specialization: one nonzero rational per generator.
struct SpecAssignment {
  mpq_class q = 1;
  mpq_class t = 1;
  std::vector<std::array<mpq_class, 4>> handles;  // m_r, l_r, mbar_r, lbar_r

  static SpecAssignment ones(int genus);
};
struct SpecializationCheck {
  bool ok = true;
  std::vector<std::string> violations;
};
SpecializationCheck validate_specialization(RingMode mode, const SpecAssignment& a);
mpq_class specialize_elem(const RingElem& x, const SpecAssignment& a);
std::vector<std::vector<mpq_class>> specialize(const RepMatrix& m, const SpecAssignment& a);

// Character into the central subgroup <q> + <t>: one image for the sigma
// family and one per handle generator.
struct CentralMono {
  std::int64_t q_exp = 0;
  std::int64_t t_exp = 0;
};
struct Character {
  CentralMono sigma;
  std::vector<CentralMono> a, b;  // indexed by handle, size g
};
struct CharacterCheck {
  bool ok = true;
  std::vector<std::string> violations;
};
// A character must send both sides of every B0N relation to equal central
// elements; SCR forces the sigma image to be trivial.
CharacterCheck validate_character(int g, int n, const Character& chi);
HElem character_eval(const Character& chi, const Word& w, RingMode mode);
// chi(w) * M.
RepMatrix twist(const Character& chi, const RepMatrix& m, const Word& w);

struct RelationReport {
  std::string name;
  RelLabel label;
  bool pass = false;
  int row = -1, col = -1;          // first differing entry on failure
  std::string lhs_entry, rhs_entry;
};
// Evaluates both sides of every B0N relation through the given evaluator and
// compares exactly.  Relations are checked in parallel.
std::vector<RelationReport> verify_relations(
    int g, int n, const std::function<RepMatrix(const Word&)>& eval);

}  // namespace braidrep
