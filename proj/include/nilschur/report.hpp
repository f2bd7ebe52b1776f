#ifndef NILSCHUR_REPORT_HPP
#define NILSCHUR_REPORT_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nilschur/bounds.hpp"
#include "nilschur/gammamaps.hpp"
#include "nilschur/liealg.hpp"
#include "nilschur/multiplier.hpp"

/// File formats and the analysis document shared by the CLI commands.
namespace nilschur::report {

using Json = nlohmann::ordered_json;
using liealg::LieAlgebra;

// --- algebra files ---------------------------------------------------------
//
// { "dim": 3, "labels": ["x","y","z"],
//   "brackets": [ { "i": 1, "j": 2, "value": [ { "k": 3, "c": "1" } ] } ] }
//
// Indices are 1-based with i < j; "c" is a rational literal "p" or "p/q".
// Unknown keys are rejected.

LieAlgebra algebra_from_json(const Json& doc);
Json algebra_to_json(const LieAlgebra& L);
LieAlgebra load_algebra_file(const std::filesystem::path& path);

/// "@path.json" loads a file; anything else is a catalog expression.
LieAlgebra resolve_algebra(const std::string& spec);

// --- analysis document -------------------------------------------------------

struct Term {
  std::size_t k = 0;  // 1-based symbol index
  std::string c;
  friend bool operator==(const Term&, const Term&) = default;
};

struct CoverSummary {
  std::size_t symbols = 0;
  std::size_t relation_rank = 0;
  std::vector<std::vector<Term>> relations;  // RREF rows of the relation space
  std::vector<std::array<std::size_t, 2>> absorbed_pairs;    // 1-based
  std::vector<std::array<std::size_t, 2>> multiplier_basis;  // 1-based
  std::size_t multiplier_dim = 0;
  std::size_t s_space_dim = 0;
  friend bool operator==(const CoverSummary&, const CoverSummary&) = default;
};

CoverSummary summarize(const multiplier::CoverPresentation& cover);

struct MultiplierSection {
  std::size_t dim_M = 0;
  std::size_t dim_wedge = 0;
  std::optional<CoverSummary> cover;
  friend bool operator==(const MultiplierSection&, const MultiplierSection&) = default;
};

struct QuotientAudit {
  std::string ideal;  // "Z", "L^2", "L^i"
  multiplier::QuotientInequality check;
};

struct AuditSection {
  std::optional<std::size_t> gamma3_dim;  // absent below class 3 unless lenient
  std::optional<gammamaps::StemClass3Audit> stem_class3;
  std::optional<gammamaps::Gamma2LowerBound> gamma2_lower_bound;
  std::optional<multiplier::GMapAnalysis> g_map;
  std::vector<QuotientAudit> quotient_inequalities;
  std::vector<bounds::CentralQuotientAttainment> central_quotients;
};

struct AnalysisDocument {
  std::string input;
  liealg::StructureReport structure;
  MultiplierSection multiplier;
  std::optional<gammamaps::GammaReport> gamma;
  std::vector<bounds::BoundReport> bounds;
  std::optional<bounds::AttainerVerdict> classification;
  std::optional<AuditSection> audits;
  std::vector<std::string> notices;
  std::vector<std::string> violations;  // nonempty => exit code 2
};

struct AnalyzeOptions {
  bool cover = false;
  bool audit = false;
  bool lenient = false;
};

AnalysisDocument analyze(const LieAlgebra& L, const std::string& input, const AnalyzeOptions& options);

Json to_json(const AnalysisDocument& doc);
AnalysisDocument document_from_json(const Json& j);

Json to_json(const liealg::StructureReport& r);
liealg::StructureReport structure_from_json(const Json& j);

void print_text(std::ostream& out, const AnalysisDocument& doc);

}  // namespace nilschur::report

#endif  // NILSCHUR_REPORT_HPP
