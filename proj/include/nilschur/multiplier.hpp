#ifndef NILSCHUR_MULTIPLIER_HPP
#define NILSCHUR_MULTIPLIER_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "nilschur/liealg.hpp"

/// Schur multiplier via the s-symbol central extension: every bracket
/// [x_i, x_j] (i < j) gets a central symbol s_ij, the Jacobi identity on all
/// basis triples cuts the symbols down, and one symbol per basis vector of L²
/// is absorbed into a redefined generator.
namespace nilschur::multiplier {

using liealg::LieAlgebra;
using liealg::Matrix;
using liealg::Rational;
using liealg::StructureReport;
using liealg::Subspace;
using liealg::Vector;

using Pair = std::pair<std::size_t, std::size_t>;  // 0-based, first < second

/// Lexicographic index of (i, j), i < j, among the C(n,2) pairs.
std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j);
std::vector<Pair> all_pairs(std::size_t n);

/// C(n,3) x C(n,2): row (i<j<k) holds the s-part of the Jacobi sum in the
/// extension where [x_p, x_q] = value + s_pq, s_qp = -s_pq, s_pp = 0.
Matrix jacobi_relation_matrix(const LieAlgebra& L);

struct MultiplierResult {
  std::size_t dim_M = 0;
  std::size_t dim_wedge = 0;  // dim L∧L = dim M + dim L²
  StructureReport report;
};

MultiplierResult schur_multiplier_dim(const LieAlgebra& L);

struct CoverPresentation {
  LieAlgebra base;
  std::vector<Pair> pairs;
  Matrix relation_matrix;
  std::size_t relation_rank = 0;
  Subspace relations;                  // row space of relation_matrix
  std::vector<Pair> absorbed_pairs;    // values form a basis of L²
  std::vector<Pair> multiplier_basis;  // surviving symbols
  std::size_t multiplier_dim = 0;
  std::size_t s_space_dim = 0;  // C(n,2) - relation_rank
};

CoverPresentation cover_presentation(const LieAlgebra& L);

/// Text form: one line per bracket, "[x1, x2] = x4 + s1", then the relations
/// and the surviving symbols. Symbols are numbered 1..C(n,2) in lexicographic
/// pair order; s_k for pair (p, q) always means [x_p, x_q] with p < q.
void print_cover(std::ostream& out, const CoverPresentation& cover);

/// dim M(L) + dim L².
std::size_t exterior_square_dim(const LieAlgebra& L);

class NotCentral : public InputError {
 public:
  explicit NotCentral(const std::string& what) : InputError("NotCentral", what) {}
};

class NotInsideDerived : public InputError {
 public:
  explicit NotInsideDerived(const std::string& what) : InputError("NotInsideDerived", what) {}
};

/// dim I∧L for a central ideal I ⊆ L², which is dim I * dim L/L².
std::size_t central_wedge_dim(const LieAlgebra& L, const Subspace& I);

struct DirectSumCheck {
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  bool ok = false;
};

/// dim M(A⊕B) against dim M(A) + dim M(B) + dim A^ab * dim B^ab.
DirectSumCheck direct_sum_multiplier_check(const LieAlgebra& A, const LieAlgebra& B);

struct QuotientInequality {
  std::size_t dim_M_L = 0;
  std::size_t dim_L2_cap_K = 0;
  std::size_t dim_M_H = 0;
  std::size_t dim_M_K = 0;
  std::size_t dim_tensor = 0;  // dim H^ab * dim K^ab
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  bool ok = false;
};

/// dim M(L) + dim(L² ∩ K) <= dim M(L/K) + dim M(K) + dim(L/K)^ab * dim K^ab.
QuotientInequality quotient_inequality_check(const LieAlgebra& L, const Subspace& K);

class NotClassTwo : public PreconditionFailed {
 public:
  explicit NotClassTwo(std::size_t nil_class)
      : PreconditionFailed("g-map analysis needs class exactly 2, got " + std::to_string(nil_class)) {}
};

struct GMapAnalysis {
  std::size_t dim_M = 0;              // from dim(S ∩ E²), explicit linear algebra
  std::size_t dim_M_abelianization = 0;
  std::size_t tensor_dim = 0;  // dim L² * dim L^ab
  std::size_t dim_im_g = 0;
  std::size_t dim_ker_g = 0;
  bool exactness_ok = false;
  bool K_in_kernel_ok = false;
};

/// g: L² ⊗ L^ab -> M(L), x ⊗ z̄ -> [x̃, z̃] inside the s-symbol cover.
/// `representatives` (optional) replaces the canonical lifts of a basis of L/L².
GMapAnalysis g_map_analysis(const LieAlgebra& L, const std::vector<Vector>* representatives = nullptr);

}  // namespace nilschur::multiplier

#endif  // NILSCHUR_MULTIPLIER_HPP
