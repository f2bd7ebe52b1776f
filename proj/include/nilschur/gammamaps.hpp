#ifndef NILSCHUR_GAMMAMAPS_HPP
#define NILSCHUR_GAMMAMAPS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "nilschur/liealg.hpp"

/// The cyclic multilinear maps on abelianizations and their images inside
/// tensor products of lower-central quotients, plus the wedge-sequence
/// inequalities they feed.
namespace nilschur::gammamaps {

using liealg::LieAlgebra;
using liealg::Rational;
using liealg::Subspace;
using liealg::Vector;

struct ImageResult {
  std::size_t dim = 0;
  Subspace image;  // in flattened tensor coordinates
};

/// Explicit complement representatives, used to check that images do not
/// depend on the lifts chosen for quotient bases.
struct Representatives {
  std::vector<Vector> abelianization;        // lifts of a basis of L/L²
  std::vector<Vector> central_abelianization;  // lifts of a basis of L/(Z+L²)
};

/// x⊗y⊗z -> ([x,y]+L³)⊗(z+L²) + ([z,x]+L³)⊗(y+L²) + ([y,z]+L³)⊗(x+L²)
/// into (L²/L³)⊗(L/L²).
ImageResult gamma_L_image(const LieAlgebra& L, const Representatives* reps = nullptr);
/// Same cyclic sum on lifts of L/(Z+L²), into (L²/L³)⊗(L/(Z+L²)).
ImageResult gamma2_image(const LieAlgebra& L, const Representatives* reps = nullptr);

class ClassTooSmall : public PreconditionFailed {
 public:
  explicit ClassTooSmall(std::size_t nil_class)
      : PreconditionFailed("gamma3 needs nilpotency class >= 3, got " + std::to_string(nil_class)) {}
};

/// x⊗y⊗z⊗w -> [[x,y],z]⊗w + [w,[x,y]]⊗z + [[z,w],x]⊗y + [y,[z,w]]⊗x into
/// (L³/L⁴)⊗(L/(Z+L²)), which is L³⊗(L/(Z+L²)) in class 3. Class below 3
/// throws ClassTooSmall unless `lenient`, which returns the zero image.
ImageResult gamma3_image(const LieAlgebra& L, bool lenient = false, const Representatives* reps = nullptr);

/// Evaluations on arbitrary argument vectors (no image span), in the same
/// tensor coordinates as the image functions with canonical representatives.
Vector gamma_L_apply(const LieAlgebra& L, const Vector& x, const Vector& y, const Vector& z);
Vector gamma2_apply(const LieAlgebra& L, const Vector& x, const Vector& y, const Vector& z);

/// dim(L^i/L^{i+1}) * dim((Z+L²)/L²), for 2 <= i <= class.
std::size_t tau_prime_dim(const LieAlgebra& L, std::size_t i);

/// Im τ'_2 = (L²/L³)⊗((Z+L²)/L²) inside (L²/L³)⊗(L/L²) coordinates.
Subspace tau2_image(const LieAlgebra& L, const Representatives* reps = nullptr);

struct GammaReport {
  std::size_t dim_im_gamma_L = 0;
  std::size_t dim_im_gamma2 = 0;
  std::size_t dim_im_gamma3 = 0;  // 0 below class 3
  std::size_t tau2_dim = 0;
  std::size_t tau2_cap = 0;  // dim(Im τ'_2 ∩ Im γ_L)
  std::vector<std::size_t> level_dims;  // dim L^i/L^{i+1}, i = 2..class
  std::size_t ab_dim = 0;               // dim L/L²
  std::size_t central_ab_dim = 0;       // dim (Z+L²)/L²
  std::size_t d = 0;                    // dim L/(Z+L²)
  std::size_t dim_wedge = 0;
  std::size_t wedge_of_abelianization = 0;  // C(n-m, 2)
  std::size_t sum_ker_alpha = 0;
  std::size_t rhs_full = 0;     // C(n-m,2) + Σ dim(L^i/L^{i+1}) * (n-m)
  std::size_t rhs_central = 0;  // C(n-m,2) + Σ dim(L^i/L^{i+1}) * d
  bool gamma_L_bound_ok = false;   // dim Im γ_L <= Σ dim ker α_i
  bool gamma2_bound_ok = false;    // dim L∧L + dim Im γ'_2 <= rhs_central
  bool containment_ok = false;     // Im τ'_2 ⊆ Im γ_L
  bool split_ok = false;           // dim Im γ_L = dim Im γ'_2 + dim Im τ'_2

  bool all_ok() const { return gamma_L_bound_ok && gamma2_bound_ok && containment_ok && split_ok; }
  friend bool operator==(const GammaReport&, const GammaReport&) = default;
};

/// Throws PreconditionFailed on abelian input.
GammaReport sequence_audit(const LieAlgebra& L);

struct StemClass3Audit {
  std::size_t dim_wedge = 0;
  std::size_t dim_im_gamma2 = 0;
  std::size_t dim_im_gamma3 = 0;
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  bool ok = false;

  friend bool operator==(const StemClass3Audit&, const StemClass3Audit&) = default;
};

/// dim L∧L + dim Im γ'_2 + dim Im γ'_3
///   <= C(n-m,2) + dim(L²/L³)(n-m) + dim L³ (n-m), for stem L of class 3.
StemClass3Audit stem_class3_audit(const LieAlgebra& L);

struct Gamma2LowerBound {
  std::size_t d = 0;
  std::size_t dim_im_gamma2 = 0;
  bool ok = false;
};

/// d - 2 <= dim Im γ'_2 when d >= 2.
Gamma2LowerBound gamma2_lower_bound_check(const LieAlgebra& L);

}  // namespace nilschur::gammamaps

#endif  // NILSCHUR_GAMMAMAPS_HPP
