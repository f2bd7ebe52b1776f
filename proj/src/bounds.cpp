#include "nilschur/bounds.hpp"

#include <algorithm>

#include "nilschur/catalog.hpp"
#include "nilschur/multiplier.hpp"

namespace nilschur::bounds {

namespace {

void require_domain(std::size_t n, std::size_t m) {
  if (!(n > m && m >= 1)) {
    throw DomainError("bound needs n > m >= 1, got n = " + std::to_string(n) + ", m = " + std::to_string(m));
  }
}

std::int64_t half_product(std::size_t n, std::size_t m) {
  const auto sn = static_cast<std::int64_t>(n);
  const auto sm = static_cast<std::int64_t>(m);
  return (sn + sm - 2) * (sn - sm - 1) / 2;
}

Verdict verdict_for(std::size_t dim_M, std::int64_t bound) {
  const auto d = static_cast<std::int64_t>(dim_M);
  if (d < bound) return Verdict::strict;
  if (d == bound) return Verdict::attained;
  return Verdict::violated;
}

}  // namespace

std::int64_t bound_theorem15(std::size_t n, std::size_t m) {
  require_domain(n, m);
  return half_product(n, m) + 1;
}

std::int64_t bound_theorem212(std::size_t n, std::size_t m, std::size_t t) {
  require_domain(n, m);
  return bound_theorem15(n, m) - static_cast<std::int64_t>(t) * (static_cast<std::int64_t>(m) - 1);
}

std::int64_t bound_class3(std::size_t n, std::size_t m) {
  require_domain(n, m);
  return half_product(n, m);
}

std::string to_string(BoundName name) {
  switch (name) {
    case BoundName::theorem15: return "theorem15";
    case BoundName::theorem212: return "theorem212";
    case BoundName::class3: return "class3";
    case BoundName::lemma14: return "lemma14";
    case BoundName::prop29: return "prop29";
  }
  return "?";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::strict: return "strict";
    case Verdict::attained: return "attained";
    case Verdict::violated: return "violated";
  }
  return "?";
}

BoundName bound_name_from_string(const std::string& text) {
  for (auto b : {BoundName::theorem15, BoundName::theorem212, BoundName::class3, BoundName::lemma14,
                 BoundName::prop29}) {
    if (to_string(b) == text) return b;
  }
  throw InputError("BadReport", "unknown bound name '" + text + "'");
}

Verdict verdict_from_string(const std::string& text) {
  for (auto v : {Verdict::strict, Verdict::attained, Verdict::violated}) {
    if (to_string(v) == text) return v;
  }
  throw InputError("BadReport", "unknown verdict '" + text + "'");
}

std::string to_string(Family family) {
  switch (family) {
    case Family::H1_plus_abelian: return "H1_plus_abelian";
    case Family::L_5_8: return "L_5_8";
    case Family::L_6_26: return "L_6_26";
    case Family::none: return "none";
  }
  return "?";
}

Family family_from_string(const std::string& text) {
  for (auto f : {Family::H1_plus_abelian, Family::L_5_8, Family::L_6_26, Family::none}) {
    if (to_string(f) == text) return f;
  }
  throw InputError("BadReport", "unknown family '" + text + "'");
}

M1Recognition recognize_m1(const LieAlgebra& L) {
  const auto result = multiplier::schur_multiplier_dim(L);
  const auto& r = result.report;
  if (r.m != 1) throw PreconditionFailed("recognize_m1 needs dim L^2 = 1, got " + std::to_string(r.m));
  M1Recognition rec;
  rec.k = (r.n - r.z_dim) / 2;
  const std::size_t base = (r.n - 1) * (r.n - 2) / 2;
  rec.predicted_dim_M = rec.k == 1 ? base + 1 : base - 1;
  if (rec.predicted_dim_M != result.dim_M) {
    throw InternalInconsistency("m = 1 closed form predicts " + std::to_string(rec.predicted_dim_M) +
                                " but the multiplier engine gives " + std::to_string(result.dim_M));
  }
  return rec;
}

std::vector<BoundReport> evaluate_bounds(const LieAlgebra& L) {
  const auto result = multiplier::schur_multiplier_dim(L);
  const auto& r = result.report;
  if (r.m == 0) throw PreconditionFailed("bounds need a non-abelian algebra");

  const std::size_t q = r.n - r.z_dim;
  if (r.m > q * (q - 1) / 2) {
    throw TheoremViolation("dim L^2 = " + std::to_string(r.m) + " exceeds q(q-1)/2 for q = dim L/Z(L) = " +
                           std::to_string(q));
  }

  std::vector<BoundReport> reports;
  const auto add = [&](BoundName name, std::int64_t value) {
    reports.push_back({name, value, result.dim_M, verdict_for(result.dim_M, value)});
  };
  add(BoundName::theorem15, bound_theorem15(r.n, r.m));
  add(BoundName::theorem212, bound_theorem212(r.n, r.m, r.t));
  if (r.nil_class >= 3) add(BoundName::class3, bound_class3(r.n, r.m));
  if (r.n >= 4 && r.m + 2 == r.n) add(BoundName::lemma14, static_cast<std::int64_t>(r.m));
  if (r.m == 1) add(BoundName::prop29, static_cast<std::int64_t>(recognize_m1(L).predicted_dim_M));
  return reports;
}

bool any_violated(const std::vector<BoundReport>& reports) {
  return std::any_of(reports.begin(), reports.end(),
                     [](const BoundReport& b) { return b.verdict == Verdict::violated; });
}

Profile profile_of(const LieAlgebra& L) {
  const auto result = multiplier::schur_multiplier_dim(L);
  return {result.report, result.dim_M};
}

AttainerVerdict classify_attainer(const LieAlgebra& L) {
  const auto profile = profile_of(L);
  const auto& r = profile.report;
  if (r.m == 0) throw PreconditionFailed("classification needs a non-abelian algebra");

  AttainerVerdict verdict;
  verdict.attains_theorem15 = static_cast<std::int64_t>(profile.dim_M) == bound_theorem15(r.n, r.m);
  if (!verdict.attains_theorem15) return verdict;

  if (r.m >= 2 && !r.is_stem) {
    throw TheoremViolation("attainer with dim L^2 >= 2 is not stem");
  }

  // Reference profiles are computed from the catalog presentations.
  if (r.m == 1 && r.n >= 3 && profile == profile_of(catalog::parse_spec(r.n == 3 ? "H(1)" : "H(1)+A(" +
                                                                                       std::to_string(r.n - 3) + ")"))) {
    verdict.family = Family::H1_plus_abelian;
  } else if (r.n == 5 && profile == profile_of(catalog::get_named("L5_8"))) {
    verdict.family = Family::L_5_8;
  } else if (r.n == 6 && profile == profile_of(catalog::get_named("L6_26"))) {
    verdict.family = Family::L_6_26;
  }
  verdict.consistent_with_theorem220 = verdict.family != Family::none && r.nil_class <= 2;
  return verdict;
}

CentralQuotientAttainment central_quotient_attainment(const LieAlgebra& L, std::size_t k) {
  const auto profile = profile_of(L);
  const auto& r = profile.report;
  if (r.m < 2) throw PreconditionFailed("central quotient attainment needs dim L^2 >= 2");
  if (static_cast<std::int64_t>(profile.dim_M) != bound_theorem15(r.n, r.m)) {
    throw PreconditionFailed("central quotient attainment needs an algebra attaining the bound");
  }
  if (k < 1 || k > std::min(r.z_dim, r.m - 1)) {
    throw PreconditionFailed("k must satisfy 1 <= k <= min(dim Z, dim L^2 - 1) = " +
                             std::to_string(std::min(r.z_dim, r.m - 1)));
  }
  const auto z = liealg::center(L);
  std::vector<liealg::Vector> first;
  for (std::size_t i = 0; i < k; ++i) first.push_back(z.basis().row_vector(i));
  const auto K = liealg::Subspace::span(first, L.dim());
  const auto Q = liealg::quotient(L, K).algebra;
  const auto q = multiplier::schur_multiplier_dim(Q);

  CentralQuotientAttainment result;
  result.k = k;
  result.dim_M_quotient = q.dim_M;
  const auto sn = static_cast<std::int64_t>(r.n);
  const auto sm = static_cast<std::int64_t>(r.m);
  const auto sk = static_cast<std::int64_t>(k);
  result.predicted = (sn + sm - 2 * (sk + 1)) * (sn - sm - 1) / 2 + 1;
  result.quotient_report = q.report;
  result.ok = static_cast<std::int64_t>(q.dim_M) == result.predicted;
  return result;
}

}  // namespace nilschur::bounds
