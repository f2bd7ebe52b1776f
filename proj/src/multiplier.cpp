#include "nilschur/multiplier.hpp"

#include <ostream>
#include <sstream>

namespace nilschur::multiplier {

using exactla::in_span;
using exactla::is_zero;
using exactla::span_intersect;
using exactla::span_sum;
using exactla::unit_vector;
using exactla::zero_vector;

namespace {

std::size_t choose2(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

// s-part of [ũ, w̃] in the extension: Σ u_p w_q s_pq with s_qp = -s_pq.
Vector s_part(std::size_t n, std::span<const Rational> u, std::span<const Rational> w) {
  Vector out = zero_vector(choose2(n));
  for (std::size_t p = 0; p < n; ++p) {
    if (sgn(u[p]) == 0) continue;
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q || sgn(w[q]) == 0) continue;
      const Rational coeff = u[p] * w[q];
      if (p < q) {
        out[pair_index(n, p, q)] += coeff;
      } else {
        out[pair_index(n, q, p)] -= coeff;
      }
    }
  }
  return out;
}

std::string format_combination(std::span<const Rational> coeffs, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Rational& c = coeffs[k];
    if (sgn(c) == 0) continue;
    const Rational mag = abs(c);
    if (out.empty()) {
      out += sgn(c) < 0 ? "-" : "";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (mag != 1) out += mag.get_str() + " ";
    out += names[k];
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  // pairs before row i: (n-1) + (n-2) + ... + (n-i)
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::vector<Pair> all_pairs(std::size_t n) {
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

Matrix jacobi_relation_matrix(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto ei = unit_vector(n, i);
        const auto ej = unit_vector(n, j);
        const auto ek = unit_vector(n, k);
        const auto& vij = L.basis_bracket(i, j);
        const auto& vki = L.basis_bracket(k, i);
        const auto& vjk = L.basis_bracket(j, k);

        Vector x_part = L.bracket(vij, ek);
        exactla::add_scaled(x_part, L.bracket(vki, ej), 1);
        exactla::add_scaled(x_part, L.bracket(vjk, ei), 1);
        if (!is_zero(x_part)) {
          throw InternalInconsistency("Jacobi relation row has a nonzero algebra part on a validated algebra");
        }

        Vector row = s_part(n, vij, ek);
        exactla::add_scaled(row, s_part(n, vki, ej), 1);
        exactla::add_scaled(row, s_part(n, vjk, ei), 1);
        rows.push_back(std::move(row));
      }
    }
  }
  return Matrix::from_rows(rows, choose2(n));
}

MultiplierResult schur_multiplier_dim(const LieAlgebra& L) {
  MultiplierResult result;
  result.report = liealg::structure_report(L);
  const std::size_t relation_rank = exactla::rank(jacobi_relation_matrix(L));
  const std::size_t symbols = choose2(L.dim());
  if (symbols < relation_rank + result.report.m) {
    throw InternalInconsistency("negative multiplier dimension");
  }
  result.dim_M = symbols - relation_rank - result.report.m;
  result.dim_wedge = result.dim_M + result.report.m;
  return result;
}

CoverPresentation cover_presentation(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  const std::size_t symbols = choose2(n);
  CoverPresentation cover{L, all_pairs(n), jacobi_relation_matrix(L), 0, {}, {}, {}, 0, 0};
  cover.relations = Subspace::row_space(cover.relation_matrix);
  cover.relation_rank = cover.relations.dim();
  cover.s_space_dim = symbols - cover.relation_rank;

  Subspace absorbed_values = Subspace::zero(n);
  std::vector<Vector> absorbed_symbols;
  for (const auto& [i, j] : cover.pairs) {
    const auto& value = L.basis_bracket(i, j);
    if (in_span(value, absorbed_values)) continue;
    absorbed_values = span_sum(absorbed_values, Subspace::span({value}, n));
    cover.absorbed_pairs.emplace_back(i, j);
    absorbed_symbols.push_back(unit_vector(symbols, pair_index(n, i, j)));
  }
  const std::size_t m = liealg::derived(L).dim();
  if (cover.absorbed_pairs.size() != m) {
    throw InternalInconsistency("absorbed " + std::to_string(cover.absorbed_pairs.size()) +
                                " pairs but dim L^2 = " + std::to_string(m));
  }

  const Subspace killed = span_sum(cover.relations, Subspace::span(absorbed_symbols, symbols));
  if (killed.dim() != cover.relation_rank + m) {
    throw InternalInconsistency("absorbed symbols are dependent modulo the Jacobi relations");
  }
  for (const auto c : killed.free_columns()) cover.multiplier_basis.push_back(cover.pairs[c]);
  cover.multiplier_dim = cover.multiplier_basis.size();
  return cover;
}

void print_cover(std::ostream& out, const CoverPresentation& cover) {
  const auto& L = cover.base;
  const std::size_t n = L.dim();
  const auto& labels = L.labels();
  std::vector<std::string> symbol_names;
  for (std::size_t k = 0; k < cover.pairs.size(); ++k) symbol_names.push_back("s" + std::to_string(k + 1));

  out << "cover presentation (s_k central, s_k = [x_p, x_q] part with p < q)\n";
  for (std::size_t k = 0; k < cover.pairs.size(); ++k) {
    const auto [i, j] = cover.pairs[k];
    const auto& value = L.basis_bracket(i, j);
    out << "  [" << labels[i] << ", " << labels[j] << "] = ";
    if (!is_zero(value)) out << format_combination(value, labels) << " + ";
    out << symbol_names[k] << "\n";
  }
  out << "relations (rank " << cover.relation_rank << "):\n";
  for (std::size_t r = 0; r < cover.relations.dim(); ++r) {
    out << "  " << format_combination(cover.relations.basis().row(r), symbol_names) << " = 0\n";
  }
  out << "absorbed:";
  for (const auto& [i, j] : cover.absorbed_pairs) out << " s" << pair_index(n, i, j) + 1;
  out << "\nmultiplier basis (dim " << cover.multiplier_dim << "):";
  for (const auto& [i, j] : cover.multiplier_basis) out << " s" << pair_index(n, i, j) + 1;
  out << "\n";
}

std::size_t exterior_square_dim(const LieAlgebra& L) { return schur_multiplier_dim(L).dim_wedge; }

std::size_t central_wedge_dim(const LieAlgebra& L, const Subspace& I) {
  if (I.ambient_dim() != L.dim()) throw DimensionMismatch("ideal must live in the algebra");
  if (!liealg::center(L).contains(I)) throw NotCentral("subspace is not contained in Z(L)");
  const Subspace l2 = liealg::derived(L);
  if (!l2.contains(I)) throw NotInsideDerived("subspace is not contained in L^2");
  return I.dim() * (L.dim() - l2.dim());
}

DirectSumCheck direct_sum_multiplier_check(const LieAlgebra& A, const LieAlgebra& B) {
  const auto sum = schur_multiplier_dim(liealg::direct_sum(A, B));
  const auto a = schur_multiplier_dim(A);
  const auto b = schur_multiplier_dim(B);
  DirectSumCheck check;
  check.lhs = sum.dim_M;
  check.rhs = a.dim_M + b.dim_M + (a.report.n - a.report.m) * (b.report.n - b.report.m);
  check.ok = check.lhs == check.rhs;
  return check;
}

QuotientInequality quotient_inequality_check(const LieAlgebra& L, const Subspace& K) {
  const auto H = liealg::quotient(L, K).algebra;
  const auto K_alg = liealg::subalgebra_on(L, K);
  const auto mL = schur_multiplier_dim(L);
  const auto mH = schur_multiplier_dim(H);
  const auto mK = schur_multiplier_dim(K_alg);

  QuotientInequality q;
  q.dim_M_L = mL.dim_M;
  q.dim_L2_cap_K = span_intersect(liealg::derived(L), K).dim();
  q.dim_M_H = mH.dim_M;
  q.dim_M_K = mK.dim_M;
  q.dim_tensor = (mH.report.n - mH.report.m) * (mK.report.n - mK.report.m);
  q.lhs = q.dim_M_L + q.dim_L2_cap_K;
  q.rhs = q.dim_M_H + q.dim_M_K + q.dim_tensor;
  q.ok = q.lhs <= q.rhs;
  return q;
}

GMapAnalysis g_map_analysis(const LieAlgebra& L, const std::vector<Vector>* representatives) {
  const std::size_t nil_class = liealg::nilpotency_class(L);
  if (nil_class != 2) throw NotClassTwo(nil_class);

  const std::size_t n = L.dim();
  const std::size_t symbols = choose2(n);
  const std::size_t ambient = n + symbols;
  const Subspace relations = Subspace::row_space(jacobi_relation_matrix(L));

  // E² inside L ⊕ (s-space mod relations), modelled in L ⊕ s-space with the
  // relation subspace added; S is the s-coordinate block.
  std::vector<Vector> generators;
  const auto pairs = all_pairs(n);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    Vector g = zero_vector(ambient);
    const auto& value = L.basis_bracket(pairs[k].first, pairs[k].second);
    std::copy(value.begin(), value.end(), g.begin());
    g[n + k] = 1;
    generators.push_back(std::move(g));
  }
  const auto lift = [&](std::span<const Rational> s) {
    Vector g = zero_vector(ambient);
    std::copy(s.begin(), s.end(), g.begin() + static_cast<std::ptrdiff_t>(n));
    return g;
  };
  for (std::size_t r = 0; r < relations.dim(); ++r) generators.push_back(lift(relations.basis().row(r)));
  const Subspace e2 = Subspace::span(generators, ambient);
  std::vector<Vector> s_units;
  for (std::size_t k = 0; k < symbols; ++k) s_units.push_back(unit_vector(ambient, n + k));
  const Subspace kernel_part = span_intersect(e2, Subspace::span(s_units, ambient));

  const Subspace l2 = liealg::derived(L);
  const std::size_t m = l2.dim();
  GMapAnalysis g;
  g.dim_M = kernel_part.dim() - relations.dim();
  const std::size_t counted = symbols - relations.dim() - m;
  if (g.dim_M != counted) {
    throw InternalInconsistency("dim(S ∩ E²) = " + std::to_string(g.dim_M) + " but the relation count gives " +
                                std::to_string(counted));
  }

  const Subspace all = Subspace::full(n);
  const auto ab = representatives != nullptr ? exactla::QuotientCoordinates(all, l2, *representatives)
                                             : exactla::QuotientCoordinates(all, l2);
  const auto& reps = ab.representatives();
  const std::size_t ab_dim = reps.size();
  g.tensor_dim = m * ab_dim;
  g.dim_M_abelianization = choose2(ab_dim);

  // Column (a, b) of g: s-part of [x̃_a, z̃_b]; the algebra part vanishes in class 2.
  std::vector<Vector> columns;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < ab_dim; ++b) {
      const auto x = l2.basis().row(a);
      if (!is_zero(L.bracket(x, reps[b]))) throw InternalInconsistency("L^2 is not central in a class-2 algebra");
      auto column = s_part(n, x, reps[b]);
      if (!in_span(lift(column), kernel_part)) {
        throw InternalInconsistency("g lands outside S ∩ E²");
      }
      columns.push_back(std::move(column));
    }
  }
  const Subspace image = span_sum(Subspace::span(columns, symbols), relations);
  g.dim_im_g = image.dim() - relations.dim();
  g.dim_ker_g = g.tensor_dim - g.dim_im_g;

  const long long alternating = static_cast<long long>(g.dim_ker_g) - static_cast<long long>(g.tensor_dim) +
                                static_cast<long long>(g.dim_M) - static_cast<long long>(g.dim_M_abelianization) +
                                static_cast<long long>(m);
  g.exactness_ok = alternating == 0;

  g.K_in_kernel_ok = true;
  const auto apply_g = [&](std::span<const Rational> tensor) {
    Vector out = zero_vector(symbols);
    for (std::size_t idx = 0; idx < tensor.size(); ++idx) exactla::add_scaled(out, columns[idx], tensor[idx]);
    return out;
  };
  for (std::size_t a = 0; a < n && g.K_in_kernel_ok; ++a) {
    for (std::size_t b = a + 1; b < n && g.K_in_kernel_ok; ++b) {
      for (std::size_t c = b + 1; c < n && g.K_in_kernel_ok; ++c) {
        const auto ea = unit_vector(n, a);
        const auto eb = unit_vector(n, b);
        const auto ec = unit_vector(n, c);
        Vector tensor = exactla::outer(l2.coordinates(L.basis_bracket(a, b)), ab(ec));
        exactla::add_scaled(tensor, exactla::outer(l2.coordinates(L.basis_bracket(c, a)), ab(eb)), 1);
        exactla::add_scaled(tensor, exactla::outer(l2.coordinates(L.basis_bracket(b, c)), ab(ea)), 1);
        g.K_in_kernel_ok = in_span(apply_g(tensor), relations);
      }
    }
  }
  return g;
}

}  // namespace nilschur::multiplier
