#ifndef NILSCHUR_BOUNDS_HPP
#define NILSCHUR_BOUNDS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilschur/liealg.hpp"

namespace nilschur::bounds {

using liealg::LieAlgebra;
using liealg::StructureReport;

class DomainError : public InputError {
 public:
  explicit DomainError(const std::string& what) : InputError("DomainError", what) {}
};

/// (n+m-2)(n-m-1)/2 + 1, for n > m >= 1.
std::int64_t bound_theorem15(std::size_t n, std::size_t m);
/// bound_theorem15 - t(m-1).
std::int64_t bound_theorem212(std::size_t n, std::size_t m, std::size_t t);
/// (n+m-2)(n-m-1)/2, the class >= 3 bound.
std::int64_t bound_class3(std::size_t n, std::size_t m);

enum class BoundName { theorem15, theorem212, class3, lemma14, prop29 };
enum class Verdict { strict, attained, violated };

std::string to_string(BoundName name);
std::string to_string(Verdict verdict);
BoundName bound_name_from_string(const std::string& text);
Verdict verdict_from_string(const std::string& text);

struct BoundReport {
  BoundName bound_name = BoundName::theorem15;
  std::int64_t bound_value = 0;
  std::size_t dim_M = 0;
  Verdict verdict = Verdict::strict;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

struct M1Recognition {
  std::size_t k = 0;  // L ≅ H(k) ⊕ A(n-2k-1)
  std::size_t predicted_dim_M = 0;
};

/// Throws PreconditionFailed when dim L² != 1, InternalInconsistency when the
/// closed form disagrees with the computed multiplier.
M1Recognition recognize_m1(const LieAlgebra& L);

/// One report per applicable bound. Also asserts dim L² <= q(q-1)/2 with
/// q = dim L/Z(L) (TheoremViolation otherwise).
std::vector<BoundReport> evaluate_bounds(const LieAlgebra& L);

bool any_violated(const std::vector<BoundReport>& reports);

enum class Family { H1_plus_abelian, L_5_8, L_6_26, none };
std::string to_string(Family family);
Family family_from_string(const std::string& text);

struct AttainerVerdict {
  bool attains_theorem15 = false;
  Family family = Family::none;
  bool consistent_with_theorem220 = true;

  friend bool operator==(const AttainerVerdict&, const AttainerVerdict&) = default;
};

/// Invariant profile used to match attainers against the known families.
struct Profile {
  StructureReport report;
  std::size_t dim_M = 0;
  friend bool operator==(const Profile&, const Profile&) = default;
};

Profile profile_of(const LieAlgebra& L);

/// Throws TheoremViolation if an attainer with dim L² >= 2 is not stem.
AttainerVerdict classify_attainer(const LieAlgebra& L);

struct CentralQuotientAttainment {
  std::size_t k = 0;
  std::size_t dim_M_quotient = 0;
  std::int64_t predicted = 0;  // ((n+m-2(k+1))(n-m-1))/2 + 1
  StructureReport quotient_report;
  bool ok = false;
};

/// L must attain bound_theorem15 with dim L² >= 2; K is spanned by the first
/// k RREF basis vectors of Z(L), 1 <= k <= min(dim Z, dim L² - 1).
CentralQuotientAttainment central_quotient_attainment(const LieAlgebra& L, std::size_t k);

}  // namespace nilschur::bounds

#endif  // NILSCHUR_BOUNDS_HPP
