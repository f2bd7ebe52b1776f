#include "nilschur/liealg.hpp"

#include <map>
#include <utility>

namespace nilschur::liealg {

using exactla::format_vector;
using exactla::in_span;
using exactla::is_zero;
using exactla::unit_vector;
using exactla::zero_vector;

JacobiViolation::JacobiViolation(std::array<std::size_t, 3> triple, Vector defect)
    : InputError("JacobiViolation", "Jacobi identity fails on basis triple (" + std::to_string(triple[0] + 1) +
                                        ", " + std::to_string(triple[1] + 1) + ", " +
                                        std::to_string(triple[2] + 1) + ") with defect " +
                                        format_vector(defect)),
      triple_(triple),
      defect_(std::move(defect)) {}

NotNilpotent::NotNilpotent(Subspace stable_term)
    : InputError("NotNilpotent", "lower central series stabilizes at a nonzero term of dimension " +
                                     std::to_string(stable_term.dim())),
      stable_(std::move(stable_term)) {}

NotAnIdeal::NotAnIdeal(Vector witness)
    : InputError("NotAnIdeal", "bracket " + format_vector(witness) + " leaves the subspace"),
      witness_(std::move(witness)) {}

NotClosed::NotClosed(std::size_t a, std::size_t b)
    : InputError("NotClosed", "bracket of subspace basis vectors " + std::to_string(a + 1) + " and " +
                                  std::to_string(b + 1) + " leaves the subspace"),
      a_(a),
      b_(b) {}

// ---------------------------------------------------------------------------

namespace {

Vector jacobi_defect(const LieAlgebra& L, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t n = L.dim();
  Vector total = zero_vector(n);
  const auto e = [&](std::size_t idx) { return unit_vector(n, idx); };
  auto acc = [&](std::size_t a, std::size_t b, std::size_t c) {
    const Vector inner = L.basis_bracket(a, b);
    exactla::add_scaled(total, L.bracket(inner, e(c)), 1);
  };
  acc(i, j, k);
  acc(k, i, j);
  acc(j, k, i);
  return total;
}

}  // namespace

LieAlgebra LieAlgebra::trivial() { return LieAlgebra{}; }

LieAlgebra LieAlgebra::validate(std::size_t dim, std::vector<std::string> labels,
                                const std::vector<BracketEntry>& brackets) {
  LieAlgebra L;
  L.dim_ = dim;
  if (labels.empty()) {
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("x" + std::to_string(i + 1));
  }
  if (labels.size() != dim) {
    throw DimensionMismatch(std::to_string(labels.size()) + " labels for dimension " + std::to_string(dim));
  }
  L.labels_ = std::move(labels);
  L.table_.assign(dim * dim, zero_vector(dim));

  std::map<std::pair<std::size_t, std::size_t>, bool> seen;
  for (const auto& entry : brackets) {
    if (entry.i >= entry.j || entry.j >= dim) {
      throw InputError("BadBracket", "pair (" + std::to_string(entry.i + 1) + ", " + std::to_string(entry.j + 1) +
                                         ") must satisfy 1 <= i < j <= " + std::to_string(dim));
    }
    if (entry.value.size() != dim) {
      throw DimensionMismatch("bracket value for pair (" + std::to_string(entry.i + 1) + ", " +
                              std::to_string(entry.j + 1) + ") has length " + std::to_string(entry.value.size()));
    }
    if (!seen.emplace(std::make_pair(entry.i, entry.j), true).second) {
      throw InputError("BadBracket", "pair (" + std::to_string(entry.i + 1) + ", " + std::to_string(entry.j + 1) +
                                         ") given twice");
    }
    L.table_[entry.i * dim + entry.j] = entry.value;
    Vector negated = entry.value;
    for (auto& x : negated) x = -x;
    L.table_[entry.j * dim + entry.i] = std::move(negated);
  }

  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      for (std::size_t k = j + 1; k < dim; ++k) {
        auto defect = jacobi_defect(L, i, j, k);
        if (!is_zero(defect)) throw JacobiViolation({i, j, k}, std::move(defect));
      }
    }
  }

  Subspace term = Subspace::full(dim);
  const Subspace all = term;
  while (!term.is_zero()) {
    Subspace next = product_subspace(L, term, all);
    if (next.dim() == term.dim()) throw NotNilpotent(std::move(next));
    term = std::move(next);
  }

  if (dim > 1) {
    const std::size_t m = derived(L).dim();
    if (dim - m < 2) {
      throw InternalInconsistency("nilpotent algebra with dim L/L^2 = " + std::to_string(dim - m) +
                                  " < 2 (Frattini argument)");
    }
  }
  return L;
}

Vector LieAlgebra::bracket(std::span<const Rational> u, std::span<const Rational> v) const {
  if (u.size() != dim_ || v.size() != dim_) {
    throw DimensionMismatch("bracket arguments must have length " + std::to_string(dim_));
  }
  Vector out = zero_vector(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(u[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i == j || sgn(v[j]) == 0) continue;
      exactla::add_scaled(out, table_[i * dim_ + j], u[i] * v[j]);
    }
  }
  return out;
}

std::vector<BracketEntry> LieAlgebra::brackets() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const auto& value = table_[i * dim_ + j];
      if (!is_zero(value)) out.push_back({i, j, value});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Subspace product_subspace(const LieAlgebra& L, const Subspace& U, const Subspace& V) {
  if (U.ambient_dim() != L.dim() || V.ambient_dim() != L.dim()) {
    throw DimensionMismatch("product_subspace: subspaces must live in the algebra");
  }
  std::vector<Vector> products;
  for (std::size_t a = 0; a < U.dim(); ++a) {
    for (std::size_t b = 0; b < V.dim(); ++b) {
      auto w = L.bracket(U.basis().row(a), V.basis().row(b));
      if (!is_zero(w)) products.push_back(std::move(w));
    }
  }
  return Subspace::span(products, L.dim());
}

std::vector<Subspace> lower_central_series(const LieAlgebra& L) {
  std::vector<Subspace> series{Subspace::full(L.dim())};
  while (!series.back().is_zero()) {
    series.push_back(product_subspace(L, series.back(), series.front()));
  }
  return series;
}

Subspace derived(const LieAlgebra& L) {
  const auto all = Subspace::full(L.dim());
  return product_subspace(L, all, all);
}

std::size_t nilpotency_class(const LieAlgebra& L) {
  // series holds L^1..L^{c+1}; the trivial algebra gets class 0.
  return lower_central_series(L).size() - 1;
}

Subspace center(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  // Row block j holds the matrix of v -> [v, x_j].
  Matrix stacked(n * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& value = L.basis_bracket(i, j);
      for (std::size_t k = 0; k < n; ++k) stacked(j * n + k, i) = value[k];
    }
  }
  return exactla::kernel_basis(stacked);
}

void require_ideal(const LieAlgebra& L, const Subspace& K) {
  if (K.ambient_dim() != L.dim()) throw DimensionMismatch("ideal must live in the algebra");
  for (std::size_t r = 0; r < K.dim(); ++r) {
    for (std::size_t j = 0; j < L.dim(); ++j) {
      auto w = L.bracket(K.basis().row(r), unit_vector(L.dim(), j));
      if (!in_span(w, K)) throw NotAnIdeal(std::move(w));
    }
  }
}

namespace {

std::string barred(const std::string& label) {
  if (label.empty()) return label;
  // combining macron after the leading character: x4 -> x̄4
  return label.substr(0, 1) + "̄" + label.substr(1);
}

}  // namespace

QuotientResult quotient(const LieAlgebra& L, const Subspace& ideal) {
  require_ideal(L, ideal);
  const std::size_t n = L.dim();
  const auto complement = ideal.free_columns();
  const std::size_t q = complement.size();

  Matrix projection(q, n);
  for (std::size_t c = 0; c < n; ++c) {
    const auto reduced = ideal.reduce(unit_vector(n, c));
    for (std::size_t a = 0; a < q; ++a) projection(a, c) = reduced[complement[a]];
  }

  std::vector<std::string> labels;
  for (const auto c : complement) labels.push_back(barred(L.labels()[c]));
  std::vector<BracketEntry> entries;
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = a + 1; b < q; ++b) {
      auto value = projection.apply(L.basis_bracket(complement[a], complement[b]));
      if (!is_zero(value)) entries.push_back({a, b, std::move(value)});
    }
  }
  return {LieAlgebra::validate(q, std::move(labels), entries), std::move(projection)};
}

LieAlgebra subalgebra_on(const LieAlgebra& L, const Subspace& U) {
  if (U.ambient_dim() != L.dim()) throw DimensionMismatch("subspace must live in the algebra");
  const std::size_t k = U.dim();
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < k; ++r) {
    // Keep the original label when the basis vector is a coordinate vector.
    const auto row = U.basis().row(r);
    std::size_t nonzero = 0;
    for (const auto& x : row) nonzero += sgn(x) != 0 ? 1 : 0;
    labels.push_back(nonzero == 1 ? L.labels()[U.pivots()[r]] : "u" + std::to_string(r + 1));
  }
  std::vector<BracketEntry> entries;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      const auto w = L.bracket(U.basis().row(a), U.basis().row(b));
      if (!in_span(w, U)) throw NotClosed(a, b);
      auto coords = U.coordinates(w);
      if (!is_zero(coords)) entries.push_back({a, b, std::move(coords)});
    }
  }
  return LieAlgebra::validate(k, std::move(labels), entries);
}

LieAlgebra direct_sum(const LieAlgebra& A, const LieAlgebra& B) {
  const std::size_t na = A.dim();
  const std::size_t n = na + B.dim();
  std::vector<std::string> labels = A.labels();
  labels.insert(labels.end(), B.labels().begin(), B.labels().end());
  // Disambiguate clashing names so the sum still prints unambiguously.
  std::map<std::string, int> counts;
  for (const auto& l : labels) ++counts[l];
  bool clash = false;
  for (const auto& [_, count] : counts) clash = clash || count > 1;
  if (clash) {
    labels.clear();
    for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
  }

  std::vector<BracketEntry> entries;
  for (const auto& e : A.brackets()) {
    Vector value = zero_vector(n);
    std::copy(e.value.begin(), e.value.end(), value.begin());
    entries.push_back({e.i, e.j, std::move(value)});
  }
  for (const auto& e : B.brackets()) {
    Vector value = zero_vector(n);
    std::copy(e.value.begin(), e.value.end(), value.begin() + static_cast<std::ptrdiff_t>(na));
    entries.push_back({na + e.i, na + e.j, std::move(value)});
  }
  return LieAlgebra::validate(n, std::move(labels), entries);
}

LieAlgebra change_basis(const LieAlgebra& L, const Matrix& P) {
  const std::size_t n = L.dim();
  if (P.rows() != n || P.cols() != n) throw DimensionMismatch("change of basis must be n x n");
  const Matrix inv = exactla::inverse(P);
  const Matrix inv_t = inv.transpose();
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // value = c P  =>  c = value P^{-1}, i.e. c^T = (P^{-1})^T value^T
      auto coords = inv_t.apply(L.bracket(P.row(i), P.row(j)));
      if (!is_zero(coords)) entries.push_back({i, j, std::move(coords)});
    }
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("y" + std::to_string(i + 1));
  return LieAlgebra::validate(n, std::move(labels), entries);
}

StructureReport structure_report(const LieAlgebra& L) {
  StructureReport report;
  const auto series = lower_central_series(L);
  report.n = L.dim();
  report.nil_class = series.size() - 1;
  for (const auto& term : series) report.lcs_dims.push_back(term.dim());
  const Subspace l2 = series.size() > 1 ? series[1] : Subspace::zero(L.dim());
  report.m = l2.dim();
  const Subspace z = center(L);
  report.z_dim = z.dim();
  report.t = z.dim() - exactla::span_intersect(z, l2).dim();
  report.d = L.dim() - exactla::span_sum(z, l2).dim();
  report.is_stem = report.t == 0;
  report.is_generalized_heisenberg = report.m > 0 && z == l2;
  if (report.is_generalized_heisenberg) report.heisenberg_rank = report.m;
  return report;
}

}  // namespace nilschur::liealg
