#include "nilschur/gammamaps.hpp"

#include "nilschur/multiplier.hpp"

namespace nilschur::gammamaps {

using exactla::QuotientCoordinates;
using exactla::add_scaled;
using exactla::outer;
using exactla::span_intersect;
using exactla::span_sum;

namespace {

std::size_t choose2(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

struct Frames {
  const LieAlgebra& L;
  std::vector<Subspace> series;  // L^1 .. L^{c+1}
  Subspace l2, l3, l4, z, zl;
  QuotientCoordinates l2_mod_l3;
  QuotientCoordinates l3_mod_l4;
  QuotientCoordinates ab;          // L / L²
  QuotientCoordinates central_ab;  // L / (Z + L²)

  static Subspace term(const std::vector<Subspace>& series, std::size_t i, std::size_t n) {
    return i - 1 < series.size() ? series[i - 1] : Subspace::zero(n);
  }

  Frames(const LieAlgebra& alg, const Representatives* reps)
      : L(alg),
        series(liealg::lower_central_series(alg)),
        l2(term(series, 2, alg.dim())),
        l3(term(series, 3, alg.dim())),
        l4(term(series, 4, alg.dim())),
        z(liealg::center(alg)),
        zl(span_sum(z, l2)),
        l2_mod_l3(l2, l3),
        l3_mod_l4(l3, l4),
        ab(reps ? QuotientCoordinates(Subspace::full(alg.dim()), l2, reps->abelianization)
                : QuotientCoordinates(Subspace::full(alg.dim()), l2)),
        central_ab(reps ? QuotientCoordinates(Subspace::full(alg.dim()), zl, reps->central_abelianization)
                        : QuotientCoordinates(Subspace::full(alg.dim()), zl)) {}

  std::size_t nil_class() const { return series.size() - 1; }

  // ([x,y] mod L³) ⊗ (z mod target) summed cyclically.
  Vector cyclic(const QuotientCoordinates& target, const Vector& x, const Vector& y, const Vector& w) const {
    Vector out = outer(l2_mod_l3(L.bracket(x, y)), target(w));
    add_scaled(out, outer(l2_mod_l3(L.bracket(w, x)), target(y)), 1);
    add_scaled(out, outer(l2_mod_l3(L.bracket(y, w)), target(x)), 1);
    return out;
  }

  Vector four_term(const Vector& x, const Vector& y, const Vector& z3, const Vector& w) const {
    const Vector xy = L.bracket(x, y);
    const Vector zw = L.bracket(z3, w);
    Vector out = outer(l3_mod_l4(L.bracket(xy, z3)), central_ab(w));
    add_scaled(out, outer(l3_mod_l4(L.bracket(w, xy)), central_ab(z3)), 1);
    add_scaled(out, outer(l3_mod_l4(L.bracket(zw, x)), central_ab(y)), 1);
    add_scaled(out, outer(l3_mod_l4(L.bracket(y, zw)), central_ab(x)), 1);
    return out;
  }
};

// The cyclic three-term map is alternating, so increasing index triples span
// its image.
ImageResult cyclic_image(const Frames& f, const QuotientCoordinates& domain) {
  const auto& reps = domain.representatives();
  const std::size_t target_dim = f.l2_mod_l3.dim() * domain.dim();
  std::vector<Vector> values;
  for (std::size_t a = 0; a < reps.size(); ++a) {
    for (std::size_t b = a + 1; b < reps.size(); ++b) {
      for (std::size_t c = b + 1; c < reps.size(); ++c) {
        values.push_back(f.cyclic(domain, reps[a], reps[b], reps[c]));
      }
    }
  }
  auto image = Subspace::span(values, target_dim);
  return {image.dim(), std::move(image)};
}

}  // namespace

ImageResult gamma_L_image(const LieAlgebra& L, const Representatives* reps) {
  const Frames f(L, reps);
  return cyclic_image(f, f.ab);
}

ImageResult gamma2_image(const LieAlgebra& L, const Representatives* reps) {
  const Frames f(L, reps);
  return cyclic_image(f, f.central_ab);
}

ImageResult gamma3_image(const LieAlgebra& L, bool lenient, const Representatives* reps) {
  const Frames f(L, reps);
  const std::size_t target_dim = f.l3_mod_l4.dim() * f.central_ab.dim();
  if (f.nil_class() < 3) {
    if (!lenient) throw ClassTooSmall(f.nil_class());
    return {0, Subspace::zero(target_dim)};
  }
  // The four-term map is not alternating in all arguments: span over every
  // ordered tuple of representatives.
  const auto& r = f.central_ab.representatives();
  std::vector<Vector> values;
  for (const auto& x : r) {
    for (const auto& y : r) {
      for (const auto& z : r) {
        for (const auto& w : r) values.push_back(f.four_term(x, y, z, w));
      }
    }
  }
  auto image = Subspace::span(values, target_dim);
  return {image.dim(), std::move(image)};
}

Vector gamma_L_apply(const LieAlgebra& L, const Vector& x, const Vector& y, const Vector& z) {
  const Frames f(L, nullptr);
  return f.cyclic(f.ab, x, y, z);
}

Vector gamma2_apply(const LieAlgebra& L, const Vector& x, const Vector& y, const Vector& z) {
  const Frames f(L, nullptr);
  return f.cyclic(f.central_ab, x, y, z);
}

std::size_t tau_prime_dim(const LieAlgebra& L, std::size_t i) {
  const auto series = liealg::lower_central_series(L);
  const std::size_t nil_class = series.size() - 1;
  if (i < 2 || i > nil_class) {
    throw PreconditionFailed("tau' index " + std::to_string(i) + " outside 2.." + std::to_string(nil_class));
  }
  const auto z = liealg::center(L);
  const std::size_t level = series[i - 1].dim() - series[i].dim();
  const std::size_t central_part = span_sum(z, series[1]).dim() - series[1].dim();
  return level * central_part;
}

Subspace tau2_image(const LieAlgebra& L, const Representatives* reps) {
  const Frames f(L, reps);
  std::vector<Vector> values;
  for (const auto& x : f.l2_mod_l3.representatives()) {
    for (std::size_t r = 0; r < f.z.dim(); ++r) {
      values.push_back(outer(f.l2_mod_l3(x), f.ab(f.z.basis().row(r))));
    }
  }
  return Subspace::span(values, f.l2_mod_l3.dim() * f.ab.dim());
}

GammaReport sequence_audit(const LieAlgebra& L) {
  const auto report = liealg::structure_report(L);
  if (report.m == 0) throw PreconditionFailed("sequence audit needs a non-abelian algebra");
  const std::size_t n = report.n;
  const std::size_t m = report.m;

  GammaReport g;
  const auto gamma_L = gamma_L_image(L);
  const auto gamma2 = gamma2_image(L);
  const auto tau2 = tau2_image(L);
  g.dim_im_gamma_L = gamma_L.dim;
  g.dim_im_gamma2 = gamma2.dim;
  g.dim_im_gamma3 = report.nil_class >= 3 ? gamma3_image(L).dim : 0;
  g.tau2_dim = tau2.dim();
  if (g.tau2_dim != tau_prime_dim(L, 2)) {
    throw InternalInconsistency("explicit Im tau'_2 has dimension " + std::to_string(g.tau2_dim) +
                                ", expected " + std::to_string(tau_prime_dim(L, 2)));
  }
  g.tau2_cap = span_intersect(tau2, gamma_L.image).dim();
  for (std::size_t i = 1; i + 1 < report.lcs_dims.size(); ++i) {
    g.level_dims.push_back(report.lcs_dims[i] - report.lcs_dims[i + 1]);
  }
  g.ab_dim = n - m;
  g.central_ab_dim = report.t;
  g.d = report.d;
  g.dim_wedge = multiplier::exterior_square_dim(L);
  g.wedge_of_abelianization = choose2(n - m);
  g.rhs_full = g.wedge_of_abelianization + m * (n - m);
  g.rhs_central = g.wedge_of_abelianization + m * report.d;
  g.sum_ker_alpha = g.rhs_full >= g.dim_wedge ? g.rhs_full - g.dim_wedge : 0;

  g.gamma_L_bound_ok = g.dim_wedge + g.dim_im_gamma_L <= g.rhs_full;
  g.gamma2_bound_ok = g.dim_wedge + g.dim_im_gamma2 <= g.rhs_central;
  g.containment_ok = g.tau2_cap == g.tau2_dim;
  g.split_ok = g.dim_im_gamma_L == g.dim_im_gamma2 + g.tau2_dim;
  return g;
}

StemClass3Audit stem_class3_audit(const LieAlgebra& L) {
  const auto report = liealg::structure_report(L);
  if (!report.is_stem || report.nil_class != 3) {
    throw PreconditionFailed("stem class-3 audit needs a stem algebra of class 3 (class " +
                             std::to_string(report.nil_class) + ", t = " + std::to_string(report.t) + ")");
  }
  const std::size_t n = report.n;
  const std::size_t m = report.m;
  const std::size_t m1 = report.lcs_dims[2];
  StemClass3Audit a;
  a.dim_wedge = multiplier::exterior_square_dim(L);
  a.dim_im_gamma2 = gamma2_image(L).dim;
  a.dim_im_gamma3 = gamma3_image(L).dim;
  a.lhs = a.dim_wedge + a.dim_im_gamma2 + a.dim_im_gamma3;
  a.rhs = choose2(n - m) + (m - m1) * (n - m) + m1 * (n - m);
  a.ok = a.lhs <= a.rhs;
  return a;
}

Gamma2LowerBound gamma2_lower_bound_check(const LieAlgebra& L) {
  const auto report = liealg::structure_report(L);
  if (report.m == 0) throw PreconditionFailed("gamma2 lower bound needs a non-abelian algebra");
  if (report.d < 2) throw PreconditionFailed("gamma2 lower bound needs d >= 2, got " + std::to_string(report.d));
  Gamma2LowerBound check;
  check.d = report.d;
  check.dim_im_gamma2 = gamma2_image(L).dim;
  check.ok = report.d - 2 <= check.dim_im_gamma2;
  return check;
}

}  // namespace nilschur::gammamaps
