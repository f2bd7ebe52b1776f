#include "nilschur/exactla.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <utility>

namespace nilschur::exactla {

Rational parse_rational(std::string_view text) {
  auto bad = [&](const char* why) {
    return InputError("BadRational", "'" + std::string(text) + "': " + why);
  };
  if (text.empty()) throw bad("empty literal");
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') pos = 1;
  const auto slash = text.find('/');
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    return std::all_of(text.begin() + static_cast<std::ptrdiff_t>(from),
                       text.begin() + static_cast<std::ptrdiff_t>(to),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
  };
  const std::size_t num_end = slash == std::string_view::npos ? text.size() : slash;
  if (!digits(pos, num_end)) throw bad("numerator is not an integer");
  std::string body(text);
  if (body[0] == '+') body.erase(0, 1);
  if (slash != std::string_view::npos) {
    if (!digits(slash + 1, text.size())) throw bad("denominator is not a positive integer");
    mpz_class den(std::string(text.substr(slash + 1)));
    if (den == 0) throw bad("zero denominator");
  }
  Rational value(body, 10);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string format_vector(std::span<const Rational> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += v[i].get_str();
  }
  return out + ")";
}

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t index) {
  Vector v = zero_vector(n);
  v.at(index) = 1;
  return v;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

void add_scaled(Vector& target, std::span<const Rational> v, const Rational& scale) {
  assert(target.size() == v.size());
  if (sgn(scale) == 0) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) target[i] += scale * v[i];
  }
}

Vector outer(std::span<const Rational> a, std::span<const Rational> b) {
  Vector out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(x * y);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionMismatch("matrix entries length " + std::to_string(entries_.size()) +
                            " != " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw DimensionMismatch("row " + std::to_string(r) + " has length " +
                              std::to_string(rows[r].size()) + ", expected " + std::to_string(cols));
    }
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto view = row(r);
  return Vector(view.begin(), view.end());
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Vector Matrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) {
    throw DimensionMismatch("vector length " + std::to_string(v.size()) + " != " + std::to_string(cols_));
  }
  Vector out = zero_vector(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn(v[c]) != 0 && sgn((*this)(r, c)) != 0) acc += (*this)(r, c) * v[c];
    }
    out[r] = acc;
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += a * other(k, c);
    }
  }
  return out;
}

Matrix Matrix::stacked(const Matrix& below) const {
  if (rows_ == 0) return Matrix(below.rows_, cols_, below.rows_ == 0 ? std::vector<Rational>{} : below.entries_);
  if (below.rows_ == 0) return *this;
  if (below.cols_ != cols_) throw DimensionMismatch("stacking matrices with different column counts");
  std::vector<Rational> entries = entries_;
  entries.insert(entries.end(), below.entries_.begin(), below.entries_.end());
  return Matrix(rows_ + below.rows_, cols_, std::move(entries));
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

using IntRow = std::vector<mpz_class>;

// Clears denominators row by row; row scaling leaves the row space unchanged.
// Zero rows are dropped.
std::vector<IntRow> integer_rows(const Matrix& m) {
  std::vector<IntRow> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (is_zero(m.row(r))) continue;
    mpz_class scale = 1;
    for (const auto& x : m.row(r)) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
    IntRow row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& x = m(r, c);
      row[c] = x.get_num() * (scale / x.get_den());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// Fraction-free forward elimination. Returns pivot columns; rows[0..rank) is
// an integer echelon form and rows[rank..) are zero.
std::vector<std::size_t> bareiss_echelon(std::vector<IntRow>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  mpz_class previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const mpz_class pivot = rows[r][c];
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      const mpz_class factor = rows[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (sgn(rows[i][j]) == 0 && sgn(rows[r][j]) == 0) continue;
        mpz_class value = pivot * rows[i][j] - factor * rows[r][j];
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
        rows[i][j] = std::move(value);
      }
      rows[i][c] = 0;
    }
    previous = pivot;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RrefResult rref(const Matrix& m) {
  auto rows = integer_rows(m);
  RrefResult result;
  result.pivots = bareiss_echelon(rows, m.cols());
  result.rank = result.pivots.size();
  result.reduced = Matrix(m.rows(), m.cols());
  Matrix& out = result.reduced;

  // Normalize pivots to 1, then clear above each pivot working bottom-up.
  for (std::size_t r = 0; r < result.rank; ++r) {
    const std::size_t pc = result.pivots[r];
    const mpz_class& lead = rows[r][pc];
    for (std::size_t c = pc; c < m.cols(); ++c) {
      if (rows[r][c] != 0) out(r, c) = Rational(rows[r][c], lead);
      out(r, c).canonicalize();
    }
  }
  for (std::size_t r = result.rank; r-- > 0;) {
    const std::size_t pc = result.pivots[r];
    for (std::size_t above = 0; above < r; ++above) {
      const Rational factor = out(above, pc);
      if (sgn(factor) == 0) continue;
      for (std::size_t c = pc; c < m.cols(); ++c) {
        if (sgn(out(r, c)) != 0) out(above, c) -= factor * out(r, c);
      }
    }
  }
  return result;
}

std::size_t rank(const Matrix& m) {
  auto rows = integer_rows(m);
  return bareiss_echelon(rows, m.cols()).size();
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw SingularMatrix("matrix is not square");
  const std::size_t n = m.rows();
  Matrix augmented(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = m(r, c);
    augmented(r, n + r) = 1;
  }
  const auto reduced = rref(augmented);
  if (reduced.rank < n || (n > 0 && reduced.pivots[n - 1] != n - 1)) {
    throw SingularMatrix("matrix has rank below " + std::to_string(n));
  }
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = reduced.reduced(r, n + c);
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::zero(std::size_t ambient_dim) {
  Subspace s;
  s.basis_ = Matrix(0, ambient_dim);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) { return row_space(Matrix::identity(ambient_dim)); }

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
  return row_space(Matrix::from_rows(vectors, ambient_dim));
}

Subspace Subspace::row_space(const Matrix& m) {
  const auto reduced = rref(m);
  Subspace s;
  std::vector<Rational> entries(reduced.reduced.entries().begin(),
                                reduced.reduced.entries().begin() +
                                    static_cast<std::ptrdiff_t>(reduced.rank * m.cols()));
  s.basis_ = Matrix(reduced.rank, m.cols(), std::move(entries));
  s.pivots_ = reduced.pivots;
  return s;
}

Vector Subspace::reduce(std::span<const Rational> v) const {
  if (v.size() != ambient_dim()) {
    throw DimensionMismatch("vector length " + std::to_string(v.size()) + " != ambient dimension " +
                            std::to_string(ambient_dim()));
  }
  Vector out(v.begin(), v.end());
  for (std::size_t r = 0; r < dim(); ++r) {
    const Rational factor = out[pivots_[r]];
    if (sgn(factor) != 0) add_scaled(out, basis_.row(r), -factor);
  }
  return out;
}

Vector Subspace::coordinates(std::span<const Rational> v) const {
  Vector coords;
  coords.reserve(dim());
  for (const auto p : pivots_) coords.push_back(v[p]);
  return coords;
}

std::vector<std::size_t> Subspace::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_dim(); ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) throw DimensionMismatch("ambient dimension mismatch");
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!exactla::is_zero(reduce(other.basis().row(r)))) return false;
  }
  return true;
}

Subspace kernel_basis(const Matrix& m) {
  const auto reduced = rref(m);
  const std::size_t n = m.cols();
  std::vector<Vector> generators;
  std::size_t k = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (k < reduced.pivots.size() && reduced.pivots[k] == free) {
      ++k;
      continue;
    }
    Vector v = unit_vector(n, free);
    for (std::size_t r = 0; r < reduced.rank; ++r) v[reduced.pivots[r]] = -reduced.reduced(r, free);
    generators.push_back(std::move(v));
  }
  auto kernel = Subspace::span(generators, n);
  if (kernel.dim() + reduced.rank != n) {
    throw InternalInconsistency("rank-nullity failed: kernel " + std::to_string(kernel.dim()) + " + rank " +
                                std::to_string(reduced.rank) + " != " + std::to_string(n));
  }
  return kernel;
}

Subspace span_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("span_sum: ambient dimension mismatch");
  return Subspace::row_space(a.basis().stacked(b.basis()));
}

Subspace span_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionMismatch("span_intersect: ambient dimension mismatch");
  }
  const std::size_t n = a.ambient_dim();
  Matrix block(a.dim() + b.dim(), 2 * n);
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      block(r, c) = a.basis()(r, c);
      block(r, n + c) = a.basis()(r, c);
    }
  }
  for (std::size_t r = 0; r < b.dim(); ++r) {
    for (std::size_t c = 0; c < n; ++c) block(a.dim() + r, c) = b.basis()(r, c);
  }
  const auto reduced = rref(block);
  std::vector<Vector> common;
  for (std::size_t r = 0; r < reduced.rank; ++r) {
    if (reduced.pivots[r] < n) continue;
    auto row = reduced.reduced.row(r);
    common.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
  }
  return Subspace::span(common, n);
}

bool in_span(std::span<const Rational> v, const Subspace& s) { return is_zero(s.reduce(v)); }

// ---------------------------------------------------------------------------
// QuotientCoordinates

QuotientCoordinates::QuotientCoordinates(const Subspace& whole, const Subspace& sub)
    : ambient_(whole.ambient_dim()), sub_dim_(sub.dim()) {
  if (!whole.contains(sub)) throw PreconditionFailed("quotient: subspace is not contained in the whole");
  if (whole.dim() == ambient_) {
    for (const auto c : sub.free_columns()) reps_.push_back(unit_vector(ambient_, c));
  } else {
    Subspace current = sub;
    for (std::size_t r = 0; r < whole.dim() && current.dim() < whole.dim(); ++r) {
      auto v = whole.basis().row_vector(r);
      if (in_span(v, current)) continue;
      current = span_sum(current, Subspace::span({v}, ambient_));
      reps_.push_back(std::move(v));
    }
  }
  build_solver(whole, sub);
}

QuotientCoordinates::QuotientCoordinates(const Subspace& whole, const Subspace& sub,
                                         std::vector<Vector> representatives)
    : ambient_(whole.ambient_dim()), sub_dim_(sub.dim()), reps_(std::move(representatives)) {
  if (!whole.contains(sub)) throw PreconditionFailed("quotient: subspace is not contained in the whole");
  for (const auto& v : reps_) {
    if (!in_span(v, whole)) throw PreconditionFailed("quotient representative lies outside the whole space");
  }
  build_solver(whole, sub);
}

void QuotientCoordinates::build_solver(const Subspace& whole, const Subspace& sub) {
  const std::size_t r = sub_dim_ + reps_.size();
  if (r != whole.dim()) {
    throw PreconditionFailed("quotient representatives do not complete the subspace to a basis");
  }
  Matrix augmented(ambient_, r + ambient_);
  for (std::size_t i = 0; i < sub_dim_; ++i) {
    for (std::size_t c = 0; c < ambient_; ++c) augmented(c, i) = sub.basis()(i, c);
  }
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    for (std::size_t c = 0; c < ambient_; ++c) augmented(c, sub_dim_ + i) = reps_[i][c];
  }
  for (std::size_t c = 0; c < ambient_; ++c) augmented(c, r + c) = 1;
  const auto reduced = rref(augmented);
  if (reduced.rank < r || (r > 0 && reduced.pivots[r - 1] != r - 1)) {
    throw PreconditionFailed("quotient representatives are linearly dependent modulo the subspace");
  }
  solver_ = Matrix(reps_.size(), ambient_);
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    for (std::size_t c = 0; c < ambient_; ++c) solver_(i, c) = reduced.reduced(sub_dim_ + i, r + c);
  }
}

Vector QuotientCoordinates::operator()(std::span<const Rational> v) const { return solver_.apply(v); }

}  // namespace nilschur::exactla
