#include "nilschur/report.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "nilschur/catalog.hpp"

namespace nilschur::report {

using exactla::Rational;
using exactla::Vector;

namespace {

InputError bad_file(const std::string& what) { return InputError("BadAlgebraFile", what); }

void require_keys(const Json& object, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!object.is_object()) throw bad_file(where + " must be a JSON object");
  const std::set<std::string> keys(allowed.begin(), allowed.end());
  for (const auto& [key, _] : object.items()) {
    if (!keys.contains(key)) throw bad_file("unknown key '" + key + "' in " + where);
  }
}

std::size_t index_field(const Json& object, const char* key, const std::string& where) {
  if (!object.contains(key)) throw bad_file("missing key '" + std::string(key) + "' in " + where);
  const auto& v = object.at(key);
  if (!v.is_number_integer()) throw bad_file("'" + std::string(key) + "' in " + where + " must be an integer");
  const auto value = v.get<long long>();
  if (value < 0) throw bad_file("'" + std::string(key) + "' in " + where + " must be non-negative");
  return static_cast<std::size_t>(value);
}

}  // namespace

// ---------------------------------------------------------------------------
// Algebra files

LieAlgebra algebra_from_json(const Json& doc) {
  require_keys(doc, {"dim", "labels", "brackets"}, "algebra");
  const std::size_t n = index_field(doc, "dim", "algebra");

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const auto& l = doc.at("labels");
    if (!l.is_array()) throw bad_file("'labels' must be an array of strings");
    for (const auto& item : l) {
      if (!item.is_string()) throw bad_file("'labels' must be an array of strings");
      labels.push_back(item.get<std::string>());
    }
  }

  std::vector<liealg::BracketEntry> entries;
  if (doc.contains("brackets")) {
    const auto& b = doc.at("brackets");
    if (!b.is_array()) throw bad_file("'brackets' must be an array");
    for (std::size_t r = 0; r < b.size(); ++r) {
      const std::string where = "brackets[" + std::to_string(r) + "]";
      require_keys(b[r], {"i", "j", "value"}, where);
      const std::size_t i = index_field(b[r], "i", where);
      const std::size_t j = index_field(b[r], "j", where);
      if (i < 1 || j < 1 || i >= j || j > n) {
        throw bad_file(where + ": need 1 <= i < j <= dim");
      }
      if (!b[r].contains("value") || !b[r].at("value").is_array()) {
        throw bad_file(where + ": 'value' must be an array");
      }
      Vector value = exactla::zero_vector(n);
      std::set<std::size_t> seen;
      for (const auto& term : b[r].at("value")) {
        require_keys(term, {"k", "c"}, where + ".value");
        const std::size_t k = index_field(term, "k", where + ".value");
        if (k < 1 || k > n) throw bad_file(where + ": basis index k out of range");
        if (!seen.insert(k).second) throw bad_file(where + ": basis index " + std::to_string(k) + " repeated");
        if (!term.contains("c") || !term.at("c").is_string()) {
          throw bad_file(where + ": coefficient 'c' must be a string such as \"1\" or \"-2/3\"");
        }
        value[k - 1] = exactla::parse_rational(term.at("c").get<std::string>());
      }
      entries.push_back({i - 1, j - 1, std::move(value)});
    }
  }
  return LieAlgebra::validate(n, std::move(labels), entries);
}

Json algebra_to_json(const LieAlgebra& L) {
  Json doc;
  doc["dim"] = L.dim();
  doc["labels"] = L.labels();
  Json brackets = Json::array();
  for (const auto& entry : L.brackets()) {
    Json value = Json::array();
    for (std::size_t k = 0; k < entry.value.size(); ++k) {
      if (sgn(entry.value[k]) == 0) continue;
      value.push_back(Json{{"k", k + 1}, {"c", exactla::to_string(entry.value[k])}});
    }
    brackets.push_back(Json{{"i", entry.i + 1}, {"j", entry.j + 1}, {"value", std::move(value)}});
  }
  doc["brackets"] = std::move(brackets);
  return doc;
}

LieAlgebra load_algebra_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("IoError", "cannot open " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw bad_file(path.string() + ": " + e.what());
  }
  return algebra_from_json(doc);
}

LieAlgebra resolve_algebra(const std::string& spec) {
  if (!spec.empty() && spec[0] == '@') return load_algebra_file(spec.substr(1));
  return catalog::parse_spec(spec);
}

// ---------------------------------------------------------------------------
// Cover summary

CoverSummary summarize(const multiplier::CoverPresentation& cover) {
  CoverSummary s;
  s.symbols = cover.pairs.size();
  s.relation_rank = cover.relation_rank;
  for (std::size_t r = 0; r < cover.relations.dim(); ++r) {
    std::vector<Term> row;
    const auto coeffs = cover.relations.basis().row(r);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (sgn(coeffs[k]) != 0) row.push_back({k + 1, exactla::to_string(coeffs[k])});
    }
    s.relations.push_back(std::move(row));
  }
  for (const auto& [i, j] : cover.absorbed_pairs) s.absorbed_pairs.push_back({i + 1, j + 1});
  for (const auto& [i, j] : cover.multiplier_basis) s.multiplier_basis.push_back({i + 1, j + 1});
  s.multiplier_dim = cover.multiplier_dim;
  s.s_space_dim = cover.s_space_dim;
  return s;
}

// ---------------------------------------------------------------------------
// Analysis

AnalysisDocument analyze(const LieAlgebra& L, const std::string& input, const AnalyzeOptions& options) {
  AnalysisDocument doc;
  doc.input = input;
  const auto mult = multiplier::schur_multiplier_dim(L);
  doc.structure = mult.report;
  doc.multiplier.dim_M = mult.dim_M;
  doc.multiplier.dim_wedge = mult.dim_wedge;
  if (options.cover) {
    const auto cover = multiplier::cover_presentation(L);
    if (cover.multiplier_dim != mult.dim_M) {
      throw InternalInconsistency("cover presentation has " + std::to_string(cover.multiplier_dim) +
                                  " survivors but dim M = " + std::to_string(mult.dim_M));
    }
    doc.multiplier.cover = summarize(cover);
  }

  const auto& r = doc.structure;
  if (r.m == 0) {
    doc.notices.push_back("abelian algebra: dim M = n(n-1)/2; bounds and gamma audits need a non-abelian input");
    return doc;
  }

  doc.bounds = bounds::evaluate_bounds(L);
  for (const auto& b : doc.bounds) {
    if (b.verdict == bounds::Verdict::violated) {
      doc.violations.push_back(bounds::to_string(b.bound_name) + ": dim M = " + std::to_string(b.dim_M) +
                               " exceeds " + std::to_string(b.bound_value));
    }
  }
  doc.classification = bounds::classify_attainer(L);
  if (!doc.classification->consistent_with_theorem220) {
    doc.violations.push_back("bound attainer does not match any known attaining family");
  }

  if (!options.audit) return doc;

  doc.gamma = gammamaps::sequence_audit(L);
  if (!doc.gamma->gamma_L_bound_ok) doc.violations.push_back("gamma_L wedge-sequence inequality failed");
  if (!doc.gamma->gamma2_bound_ok) doc.violations.push_back("gamma'_2 wedge-sequence inequality failed");
  if (!doc.gamma->containment_ok) doc.violations.push_back("Im tau'_2 is not contained in Im gamma_L");
  if (!doc.gamma->split_ok) doc.violations.push_back("dim Im gamma_L != dim Im gamma'_2 + dim Im tau'_2");

  AuditSection audit;
  if (r.nil_class >= 3 || options.lenient) audit.gamma3_dim = gammamaps::gamma3_image(L, true).dim;
  if (r.is_stem && r.nil_class == 3) {
    audit.stem_class3 = gammamaps::stem_class3_audit(L);
    if (!audit.stem_class3->ok) doc.violations.push_back("stem class-3 wedge inequality failed");
  }
  if (r.d >= 2) {
    audit.gamma2_lower_bound = gammamaps::gamma2_lower_bound_check(L);
    if (!audit.gamma2_lower_bound->ok) doc.violations.push_back("d - 2 <= dim Im gamma'_2 failed");
  }
  if (r.nil_class == 2) {
    audit.g_map = multiplier::g_map_analysis(L);
    if (!audit.g_map->exactness_ok) doc.violations.push_back("class-two exact sequence dimension count failed");
    if (!audit.g_map->K_in_kernel_ok) doc.violations.push_back("g does not kill the cyclic Jacobi elements");
  }

  const auto series = liealg::lower_central_series(L);
  // K = L itself is excluded: H = 0 there and the inequality cannot hold
  std::vector<std::pair<std::string, liealg::Subspace>> ideals{{"Z", liealg::center(L)}};
  for (std::size_t i = 1; i + 1 < series.size(); ++i) ideals.emplace_back("L^" + std::to_string(i + 1), series[i]);
  for (const auto& [name, K] : ideals) {
    auto check = multiplier::quotient_inequality_check(L, K);
    if (!check.ok) doc.violations.push_back("quotient inequality failed for ideal " + name);
    audit.quotient_inequalities.push_back({name, check});
  }

  if (doc.classification->attains_theorem15 && r.m >= 2) {
    for (std::size_t k = 1; k <= std::min(r.z_dim, r.m - 1); ++k) {
      auto c = bounds::central_quotient_attainment(L, k);
      if (!c.ok) doc.violations.push_back("central quotient by " + std::to_string(k) + " dims misses the formula");
      audit.central_quotients.push_back(std::move(c));
    }
  }
  doc.audits = std::move(audit);
  return doc;
}

// ---------------------------------------------------------------------------
// JSON encoding

namespace {

template <typename T>
T get_field(const Json& j, const char* key) {
  if (!j.contains(key)) throw InputError("BadReport", std::string("missing key '") + key + "'");
  return j.at(key).get<T>();
}

Json encode_pairs(const std::vector<std::array<std::size_t, 2>>& pairs) {
  Json out = Json::array();
  for (const auto& p : pairs) out.push_back(Json::array({p[0], p[1]}));
  return out;
}

std::vector<std::array<std::size_t, 2>> decode_pairs(const Json& j) {
  std::vector<std::array<std::size_t, 2>> out;
  for (const auto& p : j) out.push_back({p.at(0).get<std::size_t>(), p.at(1).get<std::size_t>()});
  return out;
}

Json encode(const CoverSummary& c) {
  Json relations = Json::array();
  for (const auto& row : c.relations) {
    Json terms = Json::array();
    for (const auto& t : row) terms.push_back(Json{{"k", t.k}, {"c", t.c}});
    relations.push_back(std::move(terms));
  }
  return Json{{"symbols", c.symbols},
              {"relation_rank", c.relation_rank},
              {"relations", std::move(relations)},
              {"absorbed_pairs", encode_pairs(c.absorbed_pairs)},
              {"multiplier_basis", encode_pairs(c.multiplier_basis)},
              {"multiplier_dim", c.multiplier_dim},
              {"s_space_dim", c.s_space_dim}};
}

CoverSummary decode_cover(const Json& j) {
  CoverSummary c;
  c.symbols = get_field<std::size_t>(j, "symbols");
  c.relation_rank = get_field<std::size_t>(j, "relation_rank");
  for (const auto& row : j.at("relations")) {
    std::vector<Term> terms;
    for (const auto& t : row) terms.push_back({t.at("k").get<std::size_t>(), t.at("c").get<std::string>()});
    c.relations.push_back(std::move(terms));
  }
  c.absorbed_pairs = decode_pairs(j.at("absorbed_pairs"));
  c.multiplier_basis = decode_pairs(j.at("multiplier_basis"));
  c.multiplier_dim = get_field<std::size_t>(j, "multiplier_dim");
  c.s_space_dim = get_field<std::size_t>(j, "s_space_dim");
  return c;
}

Json encode(const gammamaps::GammaReport& g) {
  return Json{{"dim_im_gamma_L", g.dim_im_gamma_L},
              {"dim_im_gamma2", g.dim_im_gamma2},
              {"dim_im_gamma3", g.dim_im_gamma3},
              {"tau2_dim", g.tau2_dim},
              {"tau2_cap", g.tau2_cap},
              {"level_dims", g.level_dims},
              {"ab_dim", g.ab_dim},
              {"central_ab_dim", g.central_ab_dim},
              {"d", g.d},
              {"dim_wedge", g.dim_wedge},
              {"wedge_of_abelianization", g.wedge_of_abelianization},
              {"sum_ker_alpha", g.sum_ker_alpha},
              {"rhs_full", g.rhs_full},
              {"rhs_central", g.rhs_central},
              {"gamma_L_bound_ok", g.gamma_L_bound_ok},
              {"gamma2_bound_ok", g.gamma2_bound_ok},
              {"containment_ok", g.containment_ok},
              {"split_ok", g.split_ok}};
}

gammamaps::GammaReport decode_gamma(const Json& j) {
  gammamaps::GammaReport g;
  g.dim_im_gamma_L = get_field<std::size_t>(j, "dim_im_gamma_L");
  g.dim_im_gamma2 = get_field<std::size_t>(j, "dim_im_gamma2");
  g.dim_im_gamma3 = get_field<std::size_t>(j, "dim_im_gamma3");
  g.tau2_dim = get_field<std::size_t>(j, "tau2_dim");
  g.tau2_cap = get_field<std::size_t>(j, "tau2_cap");
  g.level_dims = get_field<std::vector<std::size_t>>(j, "level_dims");
  g.ab_dim = get_field<std::size_t>(j, "ab_dim");
  g.central_ab_dim = get_field<std::size_t>(j, "central_ab_dim");
  g.d = get_field<std::size_t>(j, "d");
  g.dim_wedge = get_field<std::size_t>(j, "dim_wedge");
  g.wedge_of_abelianization = get_field<std::size_t>(j, "wedge_of_abelianization");
  g.sum_ker_alpha = get_field<std::size_t>(j, "sum_ker_alpha");
  g.rhs_full = get_field<std::size_t>(j, "rhs_full");
  g.rhs_central = get_field<std::size_t>(j, "rhs_central");
  g.gamma_L_bound_ok = get_field<bool>(j, "gamma_L_bound_ok");
  g.gamma2_bound_ok = get_field<bool>(j, "gamma2_bound_ok");
  g.containment_ok = get_field<bool>(j, "containment_ok");
  g.split_ok = get_field<bool>(j, "split_ok");
  return g;
}

Json encode(const bounds::BoundReport& b) {
  return Json{{"bound_name", bounds::to_string(b.bound_name)},
              {"bound_value", b.bound_value},
              {"dim_M", b.dim_M},
              {"verdict", bounds::to_string(b.verdict)}};
}

bounds::BoundReport decode_bound(const Json& j) {
  return {bounds::bound_name_from_string(get_field<std::string>(j, "bound_name")),
          get_field<std::int64_t>(j, "bound_value"), get_field<std::size_t>(j, "dim_M"),
          bounds::verdict_from_string(get_field<std::string>(j, "verdict"))};
}

Json encode(const bounds::AttainerVerdict& v) {
  return Json{{"attains_theorem15", v.attains_theorem15},
              {"family", bounds::to_string(v.family)},
              {"consistent_with_theorem220", v.consistent_with_theorem220}};
}

bounds::AttainerVerdict decode_verdict(const Json& j) {
  return {get_field<bool>(j, "attains_theorem15"), bounds::family_from_string(get_field<std::string>(j, "family")),
          get_field<bool>(j, "consistent_with_theorem220")};
}

Json encode(const multiplier::QuotientInequality& q) {
  return Json{{"dim_M_L", q.dim_M_L},     {"dim_L2_cap_K", q.dim_L2_cap_K}, {"dim_M_H", q.dim_M_H},
              {"dim_M_K", q.dim_M_K},     {"dim_tensor", q.dim_tensor},     {"lhs", q.lhs},
              {"rhs", q.rhs},             {"ok", q.ok}};
}

multiplier::QuotientInequality decode_quotient(const Json& j) {
  multiplier::QuotientInequality q;
  q.dim_M_L = get_field<std::size_t>(j, "dim_M_L");
  q.dim_L2_cap_K = get_field<std::size_t>(j, "dim_L2_cap_K");
  q.dim_M_H = get_field<std::size_t>(j, "dim_M_H");
  q.dim_M_K = get_field<std::size_t>(j, "dim_M_K");
  q.dim_tensor = get_field<std::size_t>(j, "dim_tensor");
  q.lhs = get_field<std::size_t>(j, "lhs");
  q.rhs = get_field<std::size_t>(j, "rhs");
  q.ok = get_field<bool>(j, "ok");
  return q;
}

Json encode(const AuditSection& a) {
  Json out;
  out["gamma3_dim"] = a.gamma3_dim ? Json(*a.gamma3_dim) : Json(nullptr);
  if (a.stem_class3) {
    const auto& s = *a.stem_class3;
    out["stem_class3"] = Json{{"dim_wedge", s.dim_wedge}, {"dim_im_gamma2", s.dim_im_gamma2},
                              {"dim_im_gamma3", s.dim_im_gamma3}, {"lhs", s.lhs}, {"rhs", s.rhs}, {"ok", s.ok}};
  } else {
    out["stem_class3"] = nullptr;
  }
  if (a.gamma2_lower_bound) {
    const auto& g = *a.gamma2_lower_bound;
    out["gamma2_lower_bound"] = Json{{"d", g.d}, {"dim_im_gamma2", g.dim_im_gamma2}, {"ok", g.ok}};
  } else {
    out["gamma2_lower_bound"] = nullptr;
  }
  if (a.g_map) {
    const auto& g = *a.g_map;
    out["g_map"] = Json{{"dim_M", g.dim_M},
                        {"dim_M_abelianization", g.dim_M_abelianization},
                        {"tensor_dim", g.tensor_dim},
                        {"dim_im_g", g.dim_im_g},
                        {"dim_ker_g", g.dim_ker_g},
                        {"exactness_ok", g.exactness_ok},
                        {"K_in_kernel_ok", g.K_in_kernel_ok}};
  } else {
    out["g_map"] = nullptr;
  }
  Json quotients = Json::array();
  for (const auto& q : a.quotient_inequalities) {
    Json entry{{"ideal", q.ideal}};
    entry.update(encode(q.check));
    quotients.push_back(std::move(entry));
  }
  out["quotient_inequalities"] = std::move(quotients);
  Json central = Json::array();
  for (const auto& c : a.central_quotients) {
    central.push_back(Json{{"k", c.k},
                           {"dim_M_quotient", c.dim_M_quotient},
                           {"predicted", c.predicted},
                           {"quotient_structure", to_json(c.quotient_report)},
                           {"ok", c.ok}});
  }
  out["central_quotients"] = std::move(central);
  return out;
}

AuditSection decode_audit(const Json& j) {
  AuditSection a;
  if (!j.at("gamma3_dim").is_null()) a.gamma3_dim = j.at("gamma3_dim").get<std::size_t>();
  if (const auto& s = j.at("stem_class3"); !s.is_null()) {
    a.stem_class3 = gammamaps::StemClass3Audit{get_field<std::size_t>(s, "dim_wedge"),
                                               get_field<std::size_t>(s, "dim_im_gamma2"),
                                               get_field<std::size_t>(s, "dim_im_gamma3"),
                                               get_field<std::size_t>(s, "lhs"), get_field<std::size_t>(s, "rhs"),
                                               get_field<bool>(s, "ok")};
  }
  if (const auto& g = j.at("gamma2_lower_bound"); !g.is_null()) {
    a.gamma2_lower_bound = gammamaps::Gamma2LowerBound{get_field<std::size_t>(g, "d"),
                                                       get_field<std::size_t>(g, "dim_im_gamma2"),
                                                       get_field<bool>(g, "ok")};
  }
  if (const auto& g = j.at("g_map"); !g.is_null()) {
    multiplier::GMapAnalysis m;
    m.dim_M = get_field<std::size_t>(g, "dim_M");
    m.dim_M_abelianization = get_field<std::size_t>(g, "dim_M_abelianization");
    m.tensor_dim = get_field<std::size_t>(g, "tensor_dim");
    m.dim_im_g = get_field<std::size_t>(g, "dim_im_g");
    m.dim_ker_g = get_field<std::size_t>(g, "dim_ker_g");
    m.exactness_ok = get_field<bool>(g, "exactness_ok");
    m.K_in_kernel_ok = get_field<bool>(g, "K_in_kernel_ok");
    a.g_map = m;
  }
  for (const auto& q : j.at("quotient_inequalities")) {
    a.quotient_inequalities.push_back({get_field<std::string>(q, "ideal"), decode_quotient(q)});
  }
  for (const auto& c : j.at("central_quotients")) {
    bounds::CentralQuotientAttainment cq;
    cq.k = get_field<std::size_t>(c, "k");
    cq.dim_M_quotient = get_field<std::size_t>(c, "dim_M_quotient");
    cq.predicted = get_field<std::int64_t>(c, "predicted");
    cq.quotient_report = structure_from_json(c.at("quotient_structure"));
    cq.ok = get_field<bool>(c, "ok");
    a.central_quotients.push_back(std::move(cq));
  }
  return a;
}

}  // namespace

Json to_json(const liealg::StructureReport& r) {
  return Json{{"n", r.n},
              {"m", r.m},
              {"class", r.nil_class},
              {"lcs_dims", r.lcs_dims},
              {"z_dim", r.z_dim},
              {"t", r.t},
              {"d", r.d},
              {"is_stem", r.is_stem},
              {"is_generalized_heisenberg", r.is_generalized_heisenberg},
              {"heisenberg_rank", r.heisenberg_rank ? Json(*r.heisenberg_rank) : Json(nullptr)}};
}

liealg::StructureReport structure_from_json(const Json& j) {
  liealg::StructureReport r;
  r.n = get_field<std::size_t>(j, "n");
  r.m = get_field<std::size_t>(j, "m");
  r.nil_class = get_field<std::size_t>(j, "class");
  r.lcs_dims = get_field<std::vector<std::size_t>>(j, "lcs_dims");
  r.z_dim = get_field<std::size_t>(j, "z_dim");
  r.t = get_field<std::size_t>(j, "t");
  r.d = get_field<std::size_t>(j, "d");
  r.is_stem = get_field<bool>(j, "is_stem");
  r.is_generalized_heisenberg = get_field<bool>(j, "is_generalized_heisenberg");
  if (!j.at("heisenberg_rank").is_null()) r.heisenberg_rank = j.at("heisenberg_rank").get<std::size_t>();
  return r;
}

Json to_json(const AnalysisDocument& doc) {
  Json out;
  out["input"] = doc.input;
  out["structure"] = to_json(doc.structure);
  Json mult{{"dim_M", doc.multiplier.dim_M}, {"dim_wedge", doc.multiplier.dim_wedge}};
  mult["cover"] = doc.multiplier.cover ? encode(*doc.multiplier.cover) : Json(nullptr);
  out["multiplier"] = std::move(mult);
  out["gamma"] = doc.gamma ? encode(*doc.gamma) : Json(nullptr);
  Json bounds = Json::array();
  for (const auto& b : doc.bounds) bounds.push_back(encode(b));
  out["bounds"] = std::move(bounds);
  out["classification"] = doc.classification ? encode(*doc.classification) : Json(nullptr);
  out["audits"] = doc.audits ? encode(*doc.audits) : Json(nullptr);
  out["notices"] = doc.notices;
  out["violations"] = doc.violations;
  return out;
}

AnalysisDocument document_from_json(const Json& j) {
  AnalysisDocument doc;
  try {
    doc.input = get_field<std::string>(j, "input");
    doc.structure = structure_from_json(j.at("structure"));
    const auto& mult = j.at("multiplier");
    doc.multiplier.dim_M = get_field<std::size_t>(mult, "dim_M");
    doc.multiplier.dim_wedge = get_field<std::size_t>(mult, "dim_wedge");
    if (!mult.at("cover").is_null()) doc.multiplier.cover = decode_cover(mult.at("cover"));
    if (!j.at("gamma").is_null()) doc.gamma = decode_gamma(j.at("gamma"));
    for (const auto& b : j.at("bounds")) doc.bounds.push_back(decode_bound(b));
    if (!j.at("classification").is_null()) doc.classification = decode_verdict(j.at("classification"));
    if (!j.at("audits").is_null()) doc.audits = decode_audit(j.at("audits"));
    doc.notices = get_field<std::vector<std::string>>(j, "notices");
    doc.violations = get_field<std::vector<std::string>>(j, "violations");
  } catch (const nlohmann::json::exception& e) {
    throw InputError("BadReport", e.what());
  }
  return doc;
}

// ---------------------------------------------------------------------------
// Text

void print_text(std::ostream& out, const AnalysisDocument& doc) {
  const auto& r = doc.structure;
  out << "algebra: " << doc.input << "\n";
  out << "structure: n=" << r.n << " m=" << r.m << " class=" << r.nil_class << " z=" << r.z_dim << " t=" << r.t
      << " d=" << r.d << " lcs=[";
  for (std::size_t i = 0; i < r.lcs_dims.size(); ++i) out << (i ? "," : "") << r.lcs_dims[i];
  out << "]" << (r.is_stem ? " stem" : "");
  if (r.heisenberg_rank) out << " generalized-heisenberg(rank " << *r.heisenberg_rank << ")";
  out << "\n";
  out << "multiplier: dim M = " << doc.multiplier.dim_M << ", dim L^L = " << doc.multiplier.dim_wedge << "\n";
  for (const auto& note : doc.notices) out << "note: " << note << "\n";
  for (const auto& b : doc.bounds) {
    out << "bound " << bounds::to_string(b.bound_name) << ": " << b.dim_M << " vs " << b.bound_value << " -> "
        << bounds::to_string(b.verdict) << "\n";
  }
  if (doc.classification) {
    out << "classification: attains=" << (doc.classification->attains_theorem15 ? "yes" : "no")
        << " family=" << bounds::to_string(doc.classification->family)
        << " consistent=" << (doc.classification->consistent_with_theorem220 ? "yes" : "no") << "\n";
  }
  if (doc.gamma) {
    const auto& g = *doc.gamma;
    out << "gamma: dim Im gamma_L=" << g.dim_im_gamma_L << " gamma'_2=" << g.dim_im_gamma2
        << " gamma'_3=" << g.dim_im_gamma3 << " tau'_2=" << g.tau2_dim << " sum ker alpha=" << g.sum_ker_alpha
        << (g.all_ok() ? " [ok]" : " [FAILED]") << "\n";
  }
  if (doc.audits) {
    const auto& a = *doc.audits;
    if (a.stem_class3) {
      out << "stem class 3: " << a.stem_class3->lhs << " <= " << a.stem_class3->rhs
          << (a.stem_class3->ok ? " [ok]" : " [FAILED]") << "\n";
    }
    if (a.gamma2_lower_bound) {
      out << "gamma'_2 lower bound: d-2=" << a.gamma2_lower_bound->d - 2
          << " <= " << a.gamma2_lower_bound->dim_im_gamma2 << (a.gamma2_lower_bound->ok ? " [ok]" : " [FAILED]")
          << "\n";
    }
    if (a.g_map) {
      out << "g map: dim Im g=" << a.g_map->dim_im_g << " dim ker g=" << a.g_map->dim_ker_g
          << (a.g_map->exactness_ok && a.g_map->K_in_kernel_ok ? " [ok]" : " [FAILED]") << "\n";
    }
    for (const auto& q : a.quotient_inequalities) {
      out << "quotient by " << q.ideal << ": " << q.check.lhs << " <= " << q.check.rhs
          << (q.check.ok ? " [ok]" : " [FAILED]") << "\n";
    }
    for (const auto& c : a.central_quotients) {
      out << "central quotient k=" << c.k << ": dim M = " << c.dim_M_quotient << " (expected " << c.predicted
          << ")" << (c.ok ? " [ok]" : " [FAILED]") << "\n";
    }
  }
  for (const auto& v : doc.violations) out << "VIOLATION: " << v << "\n";
}

}  // namespace nilschur::report
