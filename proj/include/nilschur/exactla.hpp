#ifndef NILSCHUR_EXACTLA_HPP
#define NILSCHUR_EXACTLA_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nilschur/errors.hpp"

/// Exact linear algebra over Q. Every dimension computed anywhere in the
/// library bottoms out in rref() below.
namespace nilschur::exactla {

/// GMP rational, always kept in canonical form (positive denominator, reduced).
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Parses "p" or "p/q" (optional leading '-'); throws InputError on junk or q = 0.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);
/// "(a, b, c)" with canonical rational literals.
std::string format_vector(std::span<const Rational> v);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t index);
bool is_zero(std::span<const Rational> v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  /// Stacks equal-length rows; `cols` is needed when `rows` may be empty.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  std::vector<Vector> row_vectors() const;

  const std::vector<Rational>& entries() const noexcept { return entries_; }

  Matrix transpose() const;
  Vector apply(std::span<const Rational> v) const;  // this * v
  Matrix operator*(const Matrix& other) const;

  /// Rows of `below` appended under this matrix.
  Matrix stacked(const Matrix& below) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct RrefResult {
  Matrix reduced;                   // same shape as the input, zero rows last
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // strictly increasing, one per nonzero row
};

/// Reduced row-echelon form by fraction-free (Bareiss) forward elimination on
/// row-scaled integer copies, followed by a rational back-substitution pass.
/// The pivot in each column is the first remaining row with a nonzero entry.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Inverse of a square matrix; throws SingularMatrix.
Matrix inverse(const Matrix& m);

class SingularMatrix : public InputError {
 public:
  explicit SingularMatrix(const std::string& what) : InputError("SingularMatrix", what) {}
};

/// A subspace of Q^ambient_dim stored as the RREF of any spanning set.
/// Two subspaces are equal exactly when their basis matrices are identical.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim);
  static Subspace row_space(const Matrix& m);

  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }

  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }

  /// v minus its projection along the basis; zero at every pivot column.
  Vector reduce(std::span<const Rational> v) const;
  /// Coordinates of v in the RREF basis (v assumed inside; read off pivots).
  Vector coordinates(std::span<const Rational> v) const;
  /// Unit vectors at the non-pivot columns: the canonical complement.
  std::vector<std::size_t> free_columns() const;

  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}; asserts rank-nullity.
Subspace kernel_basis(const Matrix& m);
Subspace span_sum(const Subspace& a, const Subspace& b);
/// Zassenhaus: row-reduce [[A, A], [B, 0]]; rows with vanishing left half span A ∩ B.
Subspace span_intersect(const Subspace& a, const Subspace& b);
bool in_span(std::span<const Rational> v, const Subspace& s);

/// Coordinates on a quotient A/B. The complement representatives default to
/// the canonical choice: non-pivot unit vectors when A is the whole space,
/// otherwise A's basis rows greedily extending B's basis.
class QuotientCoordinates {
 public:
  QuotientCoordinates(const Subspace& whole, const Subspace& sub);
  /// Explicit representatives; they must complete `sub` to a basis of `whole`.
  QuotientCoordinates(const Subspace& whole, const Subspace& sub, std::vector<Vector> representatives);

  std::size_t dim() const noexcept { return reps_.size(); }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  const std::vector<Vector>& representatives() const noexcept { return reps_; }
  /// Coordinates of v + sub in the representative basis; v must lie in `whole`.
  Vector operator()(std::span<const Rational> v) const;

 private:
  void build_solver(const Subspace& whole, const Subspace& sub);

  std::size_t ambient_ = 0;
  std::size_t sub_dim_ = 0;
  std::vector<Vector> reps_;
  Matrix solver_;  // (sub_dim + reps) x ambient left inverse of [sub basis; reps]^T
};

/// Flattened outer product a ⊗ b (row-major, a index slow).
Vector outer(std::span<const Rational> a, std::span<const Rational> b);

void add_scaled(Vector& target, std::span<const Rational> v, const Rational& scale);

}  // namespace nilschur::exactla

#endif  // NILSCHUR_EXACTLA_HPP
