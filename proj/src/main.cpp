#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclolie/catalog.hpp"
#include "cyclolie/cochains.hpp"
#include "cyclolie/cohomology.hpp"
#include "cyclolie/deformations.hpp"
#include "cyclolie/reproduce.hpp"
#include "cyclolie/scalar.hpp"

namespace {

using namespace cyclolie;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;

/// Lazily loads the catalog so commands that never touch it (e.g. validating
/// a standalone file) work without a catalog directory present.
class CatalogHandle {
 public:
  explicit CatalogHandle(std::optional<std::string> override_path)
      : override_(std::move(override_path)) {}

  const Catalog& get() {
    if (!catalog_) catalog_ = std::make_unique<Catalog>(Catalog::resolve_path(override_));
    return *catalog_;
  }

 private:
  std::optional<std::string> override_;
  std::unique_ptr<Catalog> catalog_;
};

/// An algebra selected on the command line: a catalog id (family values
/// resolved, special values redirected) or a standalone JSON entry file.
struct Input {
  CatalogEntry entry;
  std::optional<Scalar> lambda;
};

Input resolve_input(CatalogHandle& cat, const std::string& input,
                    const std::optional<std::string>& lambda_text) {
  std::optional<Scalar> lambda;
  if (lambda_text) lambda = parse_scalar(*lambda_text);
  if (std::filesystem::is_regular_file(input)) return Input{load_entry_file(input), lambda};
  Catalog::Resolved r = cat.get().resolve(input, lambda);
  return Input{*r.entry, r.lambda};
}

std::string point_str(const std::map<std::string, Scalar>& pt) {
  std::string out = "(";
  bool first = true;
  for (const auto& [name, value] : pt) {
    if (!first) out += ", ";
    first = false;
    out += name + "=" + render_scalar(value);
  }
  return out + ")";
}

/// Parses "t1=1,t2=-1/2"; names must be parameters of the deformation.
std::map<std::string, Scalar> parse_point(const std::string& text,
                                          const std::vector<std::string>& params) {
  std::map<std::string, Scalar> pt;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("point entry '" + item + "' is not of the form name=value");
    std::string name = item.substr(0, eq);
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    if (std::find(params.begin(), params.end(), name) == params.end())
      throw std::invalid_argument("unknown parameter '" + name + "' in point " + text);
    pt[name] = parse_scalar(item.substr(eq + 1));
  }
  for (const std::string& p : params)
    if (!pt.count(p)) pt[p] = Scalar(0);
  return pt;
}

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Scalar draw_scalar(std::mt19937_64& rng) {
  return Scalar(draw(rng, -9, 9)) / Scalar(draw(rng, 1, 4));
}

std::string row_str(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

// ---- validate ----

int cmd_validate(CatalogHandle& cat, const std::string& input,
                 const std::optional<std::string>& lambda_text, bool as_json) {
  Input in = resolve_input(cat, input, lambda_text);
  const CatalogEntry& e = in.entry;
  LieAlgebra alg = e.algebra_unchecked(in.lambda);
  const bool jacobi_ok = nr_bracket(alg.d(), alg.d()).is_zero();
  bool all_ok = jacobi_ok;

  json report{{"id", e.id}, {"name", e.name}, {"dim", e.dim},
              {"field", e.field}, {"jacobi", jacobi_ok}};
  std::optional<Scalar> shown_lambda = in.lambda ? in.lambda : e.default_lambda();
  if (shown_lambda) report["lambda"] = render_scalar(*shown_lambda);

  std::vector<BilinearForm> forms = e.forms();
  json jforms = json::array();
  std::vector<std::string> lines;
  for (std::size_t f = 0; f < forms.size(); ++f) {
    const BilinearForm& b = forms[f];
    const bool sym = b.is_symmetric();
    const bool nondeg = sym && b.is_nondegenerate();
    const bool inv = is_invariant(alg, b);
    bool form_ok = sym && nondeg && inv;
    json jf{{"index", f + 1}, {"symmetric", sym}, {"nondegenerate", nondeg}, {"invariant", inv}};
    std::string line = "form " + std::to_string(f + 1) + ": symmetric " +
                       (sym ? "PASS" : "FAIL") + ", nondegenerate " + (nondeg ? "PASS" : "FAIL") +
                       ", invariant " + (inv ? "PASS" : "FAIL");
    if (e.field == "real" && sym) {
      auto [pos, neg, zero] = signature(b.matrix);
      jf["signature"] = {pos, neg};
      line += ", signature (" + std::to_string(pos) + "," + std::to_string(neg) + ")";
      if (zero != 0) line += " degenerate rank deficit " + std::to_string(zero);
      if (f < e.forms_spec.size() && e.forms_spec[f].signature) {
        const auto& stored = *e.forms_spec[f].signature;
        bool match = stored.first == pos && stored.second == neg && zero == 0;
        jf["signature_matches_stored"] = match;
        form_ok = form_ok && match;
        if (!match)
          line += " does not match stored (" + std::to_string(stored.first) + "," +
                  std::to_string(stored.second) + ")";
      }
    }
    jf["pass"] = form_ok;
    jforms.push_back(std::move(jf));
    lines.push_back(std::move(line));
    all_ok = all_ok && form_ok;
  }
  report["forms"] = std::move(jforms);
  report["pass"] = all_ok;

  if (as_json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << e.id << ": " << e.name << " (dim " << e.dim << ", " << e.field << ")";
    if (shown_lambda) std::cout << ", lambda = " << render_scalar(*shown_lambda);
    std::cout << "\n  jacobi: " << (jacobi_ok ? "PASS" : "FAIL") << "\n";
    for (const std::string& line : lines) std::cout << "  " << line << "\n";
    std::cout << "result: " << (all_ok ? "PASS" : "FAIL") << "\n";
  }
  return all_ok ? kExitOk : kExitCheckFailure;
}

// ---- cohomology ----

int cmd_cohomology(CatalogHandle& cat, const std::string& input,
                   const std::optional<std::string>& lambda_text, int max_degree,
                   bool compare_expected, bool as_json) {
  Input in = resolve_input(cat, input, lambda_text);
  const CatalogEntry& e = in.entry;
  if (max_degree < 0 || max_degree > e.dim)
    throw std::invalid_argument("maximum degree must lie in 0.." + std::to_string(e.dim));
  LieAlgebra alg = e.algebra(in.lambda);
  std::vector<BilinearForm> forms = e.forms();
  if (forms.empty()) throw std::invalid_argument("entry " + e.id + " has no bilinear form");
  for (std::size_t f = 0; f < forms.size(); ++f)
    if (!forms[f].is_symmetric() || !forms[f].is_nondegenerate())
      throw std::invalid_argument("form " + std::to_string(f + 1) +
                                  " is not a nondegenerate symmetric form");

  std::optional<Scalar> shown_lambda = in.lambda ? in.lambda : e.default_lambda();
  // The stored table describes the generic family member at its default
  // parameter value; H^n genuinely varies with the parameter, so it is only
  // compared there. Nongeneric values have no stored table at all.
  bool at_default = !e.family || !in.lambda || (e.default_lambda() && *in.lambda == *e.default_lambda());
  if (compare_expected && e.family && in.lambda) {
    for (const std::string& ng : e.family->nongeneric)
      if (parse_scalar(ng) == *in.lambda)
        throw std::invalid_argument("parameter value " + render_scalar(*in.lambda) +
                                    " is nongeneric; the stored table does not apply");
  }
  if (compare_expected && e.expected.empty())
    throw std::invalid_argument("entry " + e.id + " stores no expected table");

  json report{{"id", e.id}, {"dim", e.dim}, {"field", e.field}, {"max_degree", max_degree}};
  if (shown_lambda) report["lambda"] = render_scalar(*shown_lambda);
  json jtables = json::array();
  std::vector<std::vector<CohomologyRow>> tables;
  for (std::size_t f = 0; f < forms.size(); ++f) {
    std::vector<CohomologyRow> rows = cohomology_table(alg, forms[f], max_degree);
    json jrows = json::array();
    for (const CohomologyRow& r : rows)
      jrows.push_back({{"n", r.degree}, {"hc", r.hc}, {"hrc", r.hrc}, {"h", r.h}});
    jtables.push_back({{"form", f + 1}, {"rows", std::move(jrows)}});
    tables.push_back(std::move(rows));
  }
  report["tables"] = std::move(jtables);

  std::vector<std::string> mismatches;
  std::vector<std::string> warnings;
  if (compare_expected) {
    auto open_question = [&](const std::string& field) -> const OpenQuestionSpec* {
      for (const OpenQuestionSpec& q : e.open_questions)
        if (q.field == field) return &q;
      return nullptr;
    };
    for (std::size_t f = 0; f < tables.size(); ++f) {
      const auto& rows = tables[f];
      for (const auto& [field, want] : e.expected) {
        if (field == "h" && !at_default) {
          warnings.push_back("h row varies within the family; stored row applies at lambda=" +
                             (e.lambda_default ? *e.lambda_default : std::string("default")));
          continue;
        }
        std::vector<int> got;
        for (const CohomologyRow& r : rows) {
          if (static_cast<std::size_t>(r.degree) >= want.size()) break;
          got.push_back(field == "hc" ? r.hc : field == "hrc" ? r.hrc : r.h);
        }
        std::vector<int> want_prefix(want.begin(), want.begin() + got.size());
        if (got == want_prefix) continue;
        std::string msg = "form " + std::to_string(f + 1) + " " + field + " row " + row_str(got) +
                          " != stored " + row_str(want_prefix);
        if (const OpenQuestionSpec* q = open_question(field)) {
          warnings.push_back(msg + " [open question: source prints " + row_str(q->printed) + "]");
        } else {
          mismatches.push_back(std::move(msg));
        }
      }
    }
    report["expected"] = {{"match", mismatches.empty()},
                          {"mismatches", mismatches},
                          {"warnings", warnings}};
  }

  if (as_json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << e.id << ": " << e.name << " (dim " << e.dim << ", " << e.field << ")";
    if (shown_lambda) std::cout << ", lambda = " << render_scalar(*shown_lambda);
    std::cout << "\n";
    for (std::size_t f = 0; f < tables.size(); ++f) {
      if (tables.size() > 1) std::cout << "form " << (f + 1) << ":\n";
      std::cout << "  n | HC^n | HRC^n | H^n\n";
      for (const CohomologyRow& r : tables[f])
        std::cout << std::setw(3) << r.degree << " |" << std::setw(5) << r.hc << " |"
                  << std::setw(6) << r.hrc << " |" << std::setw(4) << r.h << "\n";
    }
    for (const std::string& w : warnings) std::cout << "note: " << w << "\n";
    for (const std::string& m : mismatches) std::cout << "mismatch: " << m << "\n";
    if (compare_expected && mismatches.empty()) std::cout << "expected: match\n";
  }
  return mismatches.empty() ? kExitOk : kExitCheckFailure;
}

// ---- deform ----

int deform_isos(CatalogHandle& cat, const CatalogEntry& e, bool as_json) {
  std::vector<CatalogEntry::Isomorphism> isos = e.parsed_isomorphisms();
  if (isos.empty())
    throw std::invalid_argument("entry " + e.id + " stores no isomorphisms");
  bool all_ok = true;
  json jisos = json::array();
  for (std::size_t i = 0; i < isos.size(); ++i) {
    const auto& iso = isos[i];
    std::optional<Scalar> lambda;
    std::optional<Scalar> target_lambda;
    std::map<std::string, Scalar> pt;
    for (const auto& [key, value] : iso.point) {
      if (key == "lambda") lambda = value;
      else if (key == "target_lambda") target_lambda = value;
      else pt[key] = value;
    }
    std::optional<Deformation> def = e.deformation(lambda);
    if (!def) throw std::invalid_argument("entry " + e.id + " has no stored deformation");
    for (const std::string& p : def->params)
      if (!pt.count(p)) pt[p] = Scalar(0);
    AdjCochain deformed = def->evaluate(pt);
    AdjCochain target = target_lambda ? cat.get().at(iso.target).algebra(*target_lambda).d()
                                      : cat.get().at(iso.target).algebra().d();
    bool ok = iso.direction == "deformed_to_target"
                  ? check_isomorphism(iso.matrix, deformed, target)
                  : check_isomorphism(iso.matrix, target, deformed);
    all_ok = all_ok && ok;
    std::map<std::string, Scalar> full_pt = pt;
    if (lambda) full_pt["lambda"] = *lambda;
    if (as_json) {
      json jp;
      for (const auto& [name, value] : full_pt) jp[name] = render_scalar(value);
      jisos.push_back({{"index", i + 1}, {"target", iso.target}, {"point", jp},
                       {"direction", iso.direction}, {"pass", ok}});
    } else {
      std::cout << "iso " << (i + 1) << ": target " << iso.target << ", point "
                << point_str(full_pt) << ", direction " << iso.direction << ": "
                << (ok ? "PASS" : "FAIL") << "\n";
    }
  }
  if (as_json)
    std::cout << json{{"id", e.id}, {"check", "iso"}, {"isomorphisms", jisos}, {"pass", all_ok}}
                     .dump(2)
              << "\n";
  else
    std::cout << "result: " << (all_ok ? "PASS" : "FAIL") << "\n";
  return all_ok ? kExitOk : kExitCheckFailure;
}

int cmd_deform(CatalogHandle& cat, const std::string& input, const std::string& check,
               const std::vector<std::string>& at_texts, std::optional<int> points_opt,
               std::uint64_t seed, const std::optional<std::string>& lambda_text, bool as_json) {
  Input in = resolve_input(cat, input, lambda_text);
  const CatalogEntry& e = in.entry;
  if (check == "iso") return deform_isos(cat, e, as_json);

  std::optional<Deformation> def = e.deformation(in.lambda);
  if (!def) throw std::invalid_argument("entry " + e.id + " has no stored deformation");
  if (check == "jacobi" && def->truncated)
    std::cout << "note: family is stated only up to the recorded order; "
                 "exact bracket checks will generally fail\n";

  std::vector<std::map<std::string, Scalar>> points;
  for (const std::string& txt : at_texts) points.push_back(parse_point(txt, def->params));
  if (points.empty()) {
    int count = points_opt.value_or(check == "relations" ? 1 : 10);
    if (count <= 0) throw std::invalid_argument("--points must be positive");
    std::mt19937_64 rng(seed);
    while (static_cast<int>(points.size()) < count) {
      std::map<std::string, Scalar> pt;
      for (const std::string& p : def->params) pt[p] = draw_scalar(rng);
      bool denominator_ok = true;
      try {
        def->evaluate(pt);
      } catch (const std::domain_error&) {
        denominator_ok = false;
      }
      if (denominator_ok) points.push_back(std::move(pt));
    }
  }

  BilinearForm form = e.forms().at(0);
  bool all_ok = true;
  json jpoints = json::array();
  for (const auto& pt : points) {
    json jp{{"point", json::object()}};
    for (const auto& [name, value] : pt) jp["point"][name] = render_scalar(value);
    bool ok = false;
    std::string extra;
    if (check == "relations") {
      std::vector<Scalar> values = def->relations_at(pt);
      ok = true;
      std::string rendered = "[";
      json jv = json::array();
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] != 0) ok = false;
        if (i) rendered += ", ";
        rendered += render_scalar(values[i]);
        jv.push_back(render_scalar(values[i]));
      }
      rendered += "]";
      jp["values"] = std::move(jv);
      extra = " relations = " + rendered;
    } else {
      AdjCochain dt;
      try {
        dt = def->evaluate(pt);
      } catch (const std::domain_error& ex) {
        // A user-supplied point on a denominator zero set is an input error,
        // not a failed check.
        throw std::invalid_argument(std::string(ex.what()) + " at point " + point_str(pt));
      }
      if (check == "jacobi") {
        AdjCochain residual = nr_bracket(dt, dt);
        ok = residual.is_zero();
        if (!ok) {
          extra = " residual = " + render_cochain(residual);
          jp["residual"] = render_cochain(residual);
        }
      } else {  // cyclic
        ok = is_cyclic(dt, form);
      }
    }
    jp["pass"] = ok;
    jpoints.push_back(std::move(jp));
    all_ok = all_ok && ok;
    if (!as_json)
      std::cout << "point " << point_str(pt) << ": " << (ok ? "PASS" : "FAIL") << extra << "\n";
  }
  if (as_json)
    std::cout << json{{"id", e.id}, {"check", check}, {"points", jpoints}, {"pass", all_ok}}
                     .dump(2)
              << "\n";
  else
    std::cout << "result: " << (all_ok ? "PASS" : "FAIL") << "\n";
  return all_ok ? kExitOk : kExitCheckFailure;
}

// ---- catalog list / graph ----

int cmd_catalog_list(CatalogHandle& cat, std::optional<int> dim,
                     const std::optional<std::string>& field, bool as_json) {
  std::vector<const CatalogEntry*> entries = cat.get().entries(dim, field);
  if (as_json) {
    json jentries = json::array();
    for (const CatalogEntry* e : entries) {
      json je{{"id", e->id}, {"name", e->name}, {"dim", e->dim}, {"field", e->field}};
      if (e->family) je["family_parameter"] = e->family->parameter;
      if (e->deformation_spec) je["has_deformation"] = true;
      jentries.push_back(std::move(je));
    }
    std::cout << json{{"entries", std::move(jentries)}}.dump(2) << "\n";
    return kExitOk;
  }
  std::size_t idw = 2;
  for (const CatalogEntry* e : entries) idw = std::max(idw, e->id.size());
  std::cout << std::left << std::setw(static_cast<int>(idw + 2)) << "id"
            << std::right << std::setw(4) << "dim" << "  " << std::left << std::setw(9)
            << "field" << "name\n";
  for (const CatalogEntry* e : entries)
    std::cout << std::left << std::setw(static_cast<int>(idw + 2)) << e->id
              << std::right << std::setw(4) << e->dim << "  " << std::left << std::setw(9)
              << e->field << e->name << "\n";
  return kExitOk;
}

int cmd_catalog_graph(CatalogHandle& cat, bool as_json) {
  const Catalog& catalog = cat.get();
  JumpGraph graph = catalog.jump_graph();
  if (as_json) {
    json jnodes = json::array();
    for (const auto& [type, id] : graph.type_to_id) jnodes.push_back({{"type", type}, {"id", id}});
    json jedges = json::array();
    for (const JumpEdge& edge : graph.edges)
      jedges.push_back({{"from", edge.from_id}, {"to", edge.to_id}});
    json jsmooth = json::array();
    for (const auto& [type, id] : graph.type_to_id) {
      const CatalogEntry& e = catalog.at(id);
      if (!e.ordering) continue;
      for (const std::string& label : e.ordering->smooth) {
        auto it = graph.type_to_id.find(label);
        jsmooth.push_back({{"from", id},
                           {"to", it == graph.type_to_id.end() ? label : it->second}});
      }
    }
    std::cout << json{{"nodes", jnodes}, {"jumps", jedges}, {"smooth", jsmooth}}.dump(2) << "\n";
    return kExitOk;
  }
  std::map<std::string, std::string> id_to_type;
  for (const auto& [type, id] : graph.type_to_id) id_to_type[id] = type;
  std::cout << "nodes (degeneration type: entry):\n";
  for (const auto& [type, id] : graph.type_to_id)
    std::cout << "  " << type << ": " << id << " (" << catalog.at(id).name << ")\n";
  std::cout << "jump specializations (cohomology dimensions change):\n";
  for (const JumpEdge& edge : graph.edges)
    std::cout << "  " << edge.from_id << " -> " << edge.to_id << "\n";
  std::cout << "smooth specializations:\n";
  for (const auto& [type, id] : graph.type_to_id) {
    const CatalogEntry& e = catalog.at(id);
    if (!e.ordering) continue;
    for (const std::string& label : e.ordering->smooth) {
      auto it = graph.type_to_id.find(label);
      std::cout << "  " << id << " -> "
                << (it == graph.type_to_id.end() ? label : it->second) << "\n";
    }
  }
  return kExitOk;
}

// ---- reproduce ----

int cmd_reproduce(CatalogHandle& cat, std::optional<int> dim, std::uint64_t seed, bool as_json) {
  ReproduceOptions options;
  options.dim = dim;
  options.seed = seed;
  std::vector<CheckResult> results = run_checks(cat.get(), options);
  int pass = 0, warn = 0, fail = 0;
  for (const CheckResult& r : results) {
    switch (r.status) {
      case CheckStatus::Pass: ++pass; break;
      case CheckStatus::Warn: ++warn; break;
      case CheckStatus::Fail: ++fail; break;
    }
  }
  if (as_json) {
    json jchecks = json::array();
    for (const CheckResult& r : results)
      jchecks.push_back({{"criterion", r.criterion}, {"name", r.name},
                         {"status", status_label(r.status)}, {"detail", r.detail}});
    json summary{{"total", results.size()}, {"pass", pass}, {"warn", warn}, {"fail", fail}};
    json report{{"seed", seed}, {"checks", std::move(jchecks)}, {"summary", std::move(summary)}};
    if (dim) report["dim"] = *dim;
    std::cout << report.dump(2) << "\n";
  } else {
    for (const CheckResult& r : results) {
      std::cout << "[" << status_label(r.status) << "] ";
      if (r.criterion > 0) std::cout << "(C" << r.criterion << ") ";
      else std::cout << "(--) ";
      std::cout << r.name;
      if (r.status != CheckStatus::Pass && !r.detail.empty()) std::cout << " -- " << r.detail;
      std::cout << "\n";
    }
    std::cout << "checks: " << results.size() << "  pass " << pass << "  warn " << warn
              << "  fail " << fail << "\n";
  }
  return fail == 0 ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cyclic/reduced-cyclic/ordinary cohomology tables and metric "
               "deformation checks for the catalog of metric Lie algebras of dimension <= 6"};
  app.require_subcommand(1);
  std::optional<std::string> catalog_override;
  app.add_option("--catalog", catalog_override,
                 "catalog directory (overrides CYCLOLIE_CATALOG and the built-in default)");

  std::string v_input;
  std::optional<std::string> v_lambda;
  bool v_json = false;
  CLI::App* validate = app.add_subcommand(
      "validate", "check Jacobi, form symmetry/nondegeneracy/invariance and signature");
  validate->add_option("input", v_input, "catalog id or JSON entry file")->required();
  validate->add_option("--lambda", v_lambda, "family parameter value (rational)");
  validate->add_flag("--json", v_json, "structured output");

  std::string c_input;
  std::optional<std::string> c_lambda;
  int c_max = 3;
  bool c_expected = false, c_json = false;
  CLI::App* cohomology = app.add_subcommand(
      "cohomology", "print the HC^n / HRC^n / H^n table of an algebra");
  cohomology->add_option("input", c_input, "catalog id or JSON entry file")->required();
  cohomology->add_option("--lambda", c_lambda, "family parameter value (rational)");
  cohomology->add_option("--max-degree", c_max, "top degree of the table (default 3)");
  cohomology->add_flag("--expected", c_expected,
                       "compare against the stored table; mismatch fails unless recorded "
                       "as an open question");
  cohomology->add_flag("--json", c_json, "structured output");

  std::string d_input, d_check;
  std::vector<std::string> d_at;
  std::optional<int> d_points;
  std::uint64_t d_seed = 12345;
  std::optional<std::string> d_lambda;
  bool d_json = false;
  CLI::App* deform = app.add_subcommand("deform", "check a stored deformation family");
  deform->add_option("input", d_input, "catalog id or JSON entry file")->required();
  deform->add_option("check", d_check, "one of jacobi|cyclic|relations|iso")
      ->required()
      ->check(CLI::IsMember({"jacobi", "cyclic", "relations", "iso"}));
  deform->add_option("--at", d_at, "parameter point like t1=1,t2=-1/2 (repeatable)");
  deform->add_option("--points", d_points,
                     "number of random points when no --at is given (default 10; 1 for relations)");
  deform->add_option("--seed", d_seed, "seed for random points (default 12345)");
  deform->add_option("--lambda", d_lambda, "family parameter value (rational)");
  deform->add_flag("--json", d_json, "structured output");

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "inspect the embedded catalog");
  catalog_cmd->require_subcommand(1);
  std::optional<int> k_dim;
  std::optional<std::string> k_field;
  bool kl_json = false, kg_json = false;
  CLI::App* list = catalog_cmd->add_subcommand("list", "list entries sorted by (dim, id)");
  list->add_option("--dim", k_dim, "only entries of this dimension");
  list->add_option("--field", k_field, "only real or complex entries")
      ->check(CLI::IsMember({"real", "complex"}));
  list->add_flag("--json", kl_json, "structured output");
  CLI::App* graph = catalog_cmd->add_subcommand(
      "graph", "print the specialization order of the six-dimensional entries");
  graph->add_flag("--json", kg_json, "structured output");

  std::optional<int> r_dim;
  std::uint64_t r_seed = 12345;
  bool r_json = false;
  CLI::App* reproduce = app.add_subcommand(
      "reproduce", "run the full verification battery against the catalog");
  reproduce->add_option("--dim", r_dim, "restrict to entries of this dimension");
  reproduce->add_option("--seed", r_seed, "seed for the randomized suites (default 12345)");
  reproduce->add_flag("--json", r_json, "structured output, one record per check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  CatalogHandle cat(catalog_override);
  try {
    if (validate->parsed()) return cmd_validate(cat, v_input, v_lambda, v_json);
    if (cohomology->parsed())
      return cmd_cohomology(cat, c_input, c_lambda, c_max, c_expected, c_json);
    if (deform->parsed())
      return cmd_deform(cat, d_input, d_check, d_at, d_points, d_seed, d_lambda, d_json);
    if (list->parsed()) return cmd_catalog_list(cat, k_dim, k_field, kl_json);
    if (graph->parsed()) return cmd_catalog_graph(cat, kg_json);
    if (reproduce->parsed()) return cmd_reproduce(cat, r_dim, r_seed, r_json);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
