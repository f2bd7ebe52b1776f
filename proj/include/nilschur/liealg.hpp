#ifndef NILSCHUR_LIEALG_HPP
#define NILSCHUR_LIEALG_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nilschur/exactla.hpp"

namespace nilschur::liealg {

using exactla::Matrix;
using exactla::Rational;
using exactla::Subspace;
using exactla::Vector;

/// One row of an input bracket table: [x_i, x_j] = value, 0-based, i < j.
struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  Vector value;
};

class JacobiViolation : public InputError {
 public:
  JacobiViolation(std::array<std::size_t, 3> triple, Vector defect);
  const std::array<std::size_t, 3>& triple() const noexcept { return triple_; }
  const Vector& defect() const noexcept { return defect_; }

 private:
  std::array<std::size_t, 3> triple_;
  Vector defect_;
};

class NotNilpotent : public InputError {
 public:
  explicit NotNilpotent(Subspace stable_term);
  const Subspace& stable_term() const noexcept { return stable_; }

 private:
  Subspace stable_;
};

class NotAnIdeal : public InputError {
 public:
  explicit NotAnIdeal(Vector witness);
  const Vector& witness() const noexcept { return witness_; }

 private:
  Vector witness_;
};

class NotClosed : public InputError {
 public:
  NotClosed(std::size_t a, std::size_t b);
  std::pair<std::size_t, std::size_t> pair() const noexcept { return {a_, b_}; }

 private:
  std::size_t a_;
  std::size_t b_;
};

/// A finite-dimensional nilpotent Lie algebra over Q given by structure
/// constants. Only validate() builds one, so every instance satisfies Jacobi
/// and is nilpotent.
class LieAlgebra {
 public:
  static LieAlgebra validate(std::size_t dim, std::vector<std::string> labels,
                             const std::vector<BracketEntry>& brackets);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// [x_i, x_j] in the basis; antisymmetric, zero on the diagonal.
  const Vector& basis_bracket(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  Vector bracket(std::span<const Rational> u, std::span<const Rational> v) const;

  /// The nonzero entries of the upper-triangular bracket table.
  std::vector<BracketEntry> brackets() const;

  /// Trivial zero-dimensional algebra.
  static LieAlgebra trivial();

 private:
  LieAlgebra() = default;

  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Vector> table_;  // dim * dim
};

struct StructureReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t nil_class = 0;
  std::vector<std::size_t> lcs_dims;  // dim L^i, i = 1..class+1
  std::size_t z_dim = 0;
  std::size_t t = 0;  // dim Z / (Z ∩ L²)
  std::size_t d = 0;  // dim L / (Z + L²)
  bool is_stem = false;
  bool is_generalized_heisenberg = false;
  std::optional<std::size_t> heisenberg_rank;

  friend bool operator==(const StructureReport&, const StructureReport&) = default;
};

Subspace product_subspace(const LieAlgebra& L, const Subspace& U, const Subspace& V);
/// L^1 = L, ..., ending with the first zero term.
std::vector<Subspace> lower_central_series(const LieAlgebra& L);
Subspace derived(const LieAlgebra& L);
Subspace center(const LieAlgebra& L);
std::size_t nilpotency_class(const LieAlgebra& L);

struct QuotientResult {
  LieAlgebra algebra;
  Matrix projection;  // (n - dim K) x n
};

QuotientResult quotient(const LieAlgebra& L, const Subspace& ideal);
/// Throws NotAnIdeal with a witness [x_j, k] outside K.
void require_ideal(const LieAlgebra& L, const Subspace& K);
LieAlgebra subalgebra_on(const LieAlgebra& L, const Subspace& U);
LieAlgebra direct_sum(const LieAlgebra& A, const LieAlgebra& B);
/// Rows of P are the new basis vectors in old coordinates.
LieAlgebra change_basis(const LieAlgebra& L, const Matrix& P);

StructureReport structure_report(const LieAlgebra& L);

}  // namespace nilschur::liealg

#endif  // NILSCHUR_LIEALG_HPP
