#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nilschur/bounds.hpp"
#include "nilschur/catalog.hpp"
#include "nilschur/multiplier.hpp"
#include "nilschur/report.hpp"

namespace fs = std::filesystem;
using namespace nilschur;
using report::Json;

namespace {

int code_of(Severity s) { return static_cast<int>(s); }

void emit_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int finish(const report::AnalysisDocument& doc, bool json) {
  if (json) {
    emit_json(report::to_json(doc));
  } else {
    report::print_text(std::cout, doc);
  }
  return doc.violations.empty() ? 0 : 2;
}

int cmd_validate(const std::string& spec, bool json) {
  const auto L = report::resolve_algebra(spec);
  const auto r = liealg::structure_report(L);
  if (json) {
    emit_json(Json{{"input", spec}, {"valid", true}, {"structure", report::to_json(r)}});
  } else {
    std::cout << "valid: " << spec << " (n=" << r.n << ", m=" << r.m << ", class " << r.nil_class << ")\n";
  }
  return 0;
}

int cmd_multiplier(const std::string& spec, bool json, bool cover) {
  const auto L = report::resolve_algebra(spec);
  report::AnalyzeOptions options;
  options.cover = cover;
  auto doc = report::analyze(L, spec, options);
  if (json) {
    Json out{{"input", spec}, {"structure", report::to_json(doc.structure)}};
    out["multiplier"] = report::to_json(doc)["multiplier"];
    emit_json(out);
  } else {
    std::cout << "dim M(" << spec << ") = " << doc.multiplier.dim_M << "\n";
    if (cover) multiplier::print_cover(std::cout, multiplier::cover_presentation(L));
  }
  return 0;
}

int cmd_bounds(const std::string& spec, bool json) {
  const auto L = report::resolve_algebra(spec);
  const auto doc = report::analyze(L, spec, {});
  if (json) {
    const auto full = report::to_json(doc);
    emit_json(Json{{"input", spec},
                   {"bounds", full["bounds"]},
                   {"classification", full["classification"]},
                   {"notices", full["notices"]},
                   {"violations", full["violations"]}});
  } else {
    for (const auto& note : doc.notices) std::cout << "note: " << note << "\n";
    for (const auto& b : doc.bounds) {
      std::cout << bounds::to_string(b.bound_name) << ": dim M = " << b.dim_M << ", bound " << b.bound_value
                << " -> " << bounds::to_string(b.verdict) << "\n";
    }
    if (doc.classification) std::cout << "family: " << bounds::to_string(doc.classification->family) << "\n";
    for (const auto& v : doc.violations) std::cout << "VIOLATION: " << v << "\n";
  }
  return doc.violations.empty() ? 0 : 2;
}

std::string file_stem_for(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      out += c;
    } else if (c == '+') {
      out += "_plus_";
    } else if (c != ')') {
      out += '_';
    }
  }
  return out;
}

int cmd_catalog(const std::string& export_dir, bool json) {
  Json rows = Json::array();
  int code = 0;
  if (!export_dir.empty()) fs::create_directories(export_dir);
  for (const auto& entry : catalog::list_all()) {
    const auto L = entry.builder();
    const auto result = multiplier::schur_multiplier_dim(L);
    bool ok = true;
    if (entry.expected) {
      ok = entry.expected->dim_M == result.dim_M && entry.expected->nil_class == result.report.nil_class &&
           entry.expected->m == result.report.m;
    }
    if (!ok) code = 2;
    if (!export_dir.empty()) {
      std::ofstream out(fs::path(export_dir) / (file_stem_for(entry.name) + ".json"));
      out << report::algebra_to_json(L).dump(2) << "\n";
    }
    if (json) {
      Json row{{"name", entry.name},
               {"n", result.report.n},
               {"m", result.report.m},
               {"class", result.report.nil_class},
               {"dim_M", result.dim_M}};
      row["expected_dim_M"] = entry.expected ? Json(entry.expected->dim_M) : Json(nullptr);
      row["provenance"] = entry.expected ? Json(entry.expected->provenance) : Json(nullptr);
      row["ok"] = ok;
      rows.push_back(std::move(row));
    } else {
      std::cout << entry.name << ": n=" << result.report.n << " m=" << result.report.m
                << " class=" << result.report.nil_class << " dim M=" << result.dim_M;
      if (entry.expected) std::cout << " (expected " << entry.expected->dim_M << ")";
      std::cout << (ok ? "" : " MISMATCH") << "\n";
    }
  }
  if (json) emit_json(rows);
  return code;
}

int cmd_batch(const std::string& dir, const report::AnalyzeOptions& options, bool json) {
  if (!fs::is_directory(dir)) throw InputError("IoError", dir + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());

  int code = 0;
  Json rows = Json::array();
  for (const auto& path : files) {
    Json row{{"file", path.filename().string()}};
    try {
      const auto L = report::load_algebra_file(path);
      const auto doc = report::analyze(L, "@" + path.string(), options);
      row["n"] = doc.structure.n;
      row["m"] = doc.structure.m;
      row["class"] = doc.structure.nil_class;
      row["dim_M"] = doc.multiplier.dim_M;
      Json verdicts = Json::object();
      for (const auto& b : doc.bounds) verdicts[bounds::to_string(b.bound_name)] = bounds::to_string(b.verdict);
      row["verdicts"] = std::move(verdicts);
      row["family"] = doc.classification ? bounds::to_string(doc.classification->family) : "none";
      row["violations"] = doc.violations;
      row["status"] = doc.violations.empty() ? "ok" : "violation";
      if (!doc.violations.empty()) code = std::max(code, 2);
    } catch (const Error& e) {
      row["status"] = "error";
      row["error"] = e.what();
      code = std::max(code, code_of(e.severity()));
    }
    rows.push_back(std::move(row));
  }

  if (json) {
    emit_json(Json{{"directory", dir}, {"files", rows}, {"exit_code", code}});
    return code;
  }
  std::cout << files.size() << " file(s)\n";
  for (const auto& row : rows) {
    std::cout << row["file"].get<std::string>() << ": ";
    if (row["status"] == "error") {
      std::cout << "ERROR " << row["error"].get<std::string>() << "\n";
      continue;
    }
    std::cout << "n=" << row["n"] << " m=" << row["m"] << " class=" << row["class"] << " dim M=" << row["dim_M"];
    for (const auto& [name, verdict] : row["verdicts"].items()) {
      std::cout << " " << name << "=" << verdict.get<std::string>();
    }
    std::cout << " family=" << row["family"].get<std::string>();
    for (const auto& v : row["violations"]) std::cout << "\n  VIOLATION: " << v.get<std::string>();
    std::cout << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Schur multiplier and bound audits for nilpotent Lie algebras over Q"};
  app.require_subcommand(1);

  std::string spec;
  std::string dir;
  std::string export_dir;
  bool json = false;
  bool cover = false;
  bool audit = false;
  bool lenient = false;
  const char* spec_help = "catalog expression such as L5_8+A(1), or @file.json";

  auto* validate = app.add_subcommand("validate", "check an algebra and print its basic invariants");
  validate->add_option("spec", spec, spec_help)->required();
  validate->add_flag("--json", json);

  auto* analyze = app.add_subcommand("analyze", "full report: structure, multiplier, bounds, classification");
  analyze->add_option("spec", spec, spec_help)->required();
  analyze->add_flag("--json", json);
  analyze->add_flag("--cover", cover, "include the cover presentation");
  analyze->add_flag("--audit", audit, "run the wedge-sequence and quotient audits");
  analyze->add_flag("--lenient", lenient, "report gamma'_3 = 0 below class 3 instead of omitting it");

  auto* mult = app.add_subcommand("multiplier", "dimension of the Schur multiplier");
  mult->add_option("spec", spec, spec_help)->required();
  mult->add_flag("--json", json);
  mult->add_flag("--cover", cover, "print the cover presentation");

  auto* bnds = app.add_subcommand("bounds", "evaluate the upper bounds on dim M");
  bnds->add_option("spec", spec, spec_help)->required();
  bnds->add_flag("--json", json);

  auto* aud = app.add_subcommand("audit", "analyze with all audits enabled");
  aud->add_option("spec", spec, spec_help)->required();
  aud->add_flag("--json", json);
  aud->add_flag("--cover", cover);
  aud->add_flag("--lenient", lenient);

  auto* cat = app.add_subcommand("catalog", "list catalog algebras and recheck their known values");
  cat->add_option("--export", export_dir, "write one algebra file per entry into this directory");
  cat->add_flag("--json", json);

  auto* batch = app.add_subcommand("batch", "analyze every .json algebra file in a directory");
  batch->add_option("dir", dir, "directory of algebra files")->required();
  batch->add_flag("--json", json);
  batch->add_flag("--cover", cover);
  batch->add_flag("--audit", audit);
  batch->add_flag("--lenient", lenient);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*validate) return cmd_validate(spec, json);
    if (*mult) return cmd_multiplier(spec, json, cover);
    if (*bnds) return cmd_bounds(spec, json);
    if (*cat) return cmd_catalog(export_dir, json);
    report::AnalyzeOptions options{cover, audit || aud->parsed(), lenient};
    if (*batch) return cmd_batch(dir, options, json);
    const auto L = report::resolve_algebra(spec);
    return finish(report::analyze(L, spec, options), json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return code_of(e.severity());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
