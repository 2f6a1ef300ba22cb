#include "cyclolie/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#ifndef CYCLOLIE_DEFAULT_CATALOG
#define CYCLOLIE_DEFAULT_CATALOG ""
#endif

namespace cyclolie {

namespace {

using nlohmann::json;

/// Scalar literal with an optional "lambda" factor, e.g. "-lambda" or "2*lambda".
Scalar parse_coefficient(const std::string& text, const std::optional<Scalar>& lambda_value) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s.push_back(ch);
  Scalar sign(1);
  std::size_t pos = 0;
  while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    if (s[pos] == '-') sign = -sign;
    ++pos;
  }
  s = s.substr(pos);
  if (s.empty()) throw std::invalid_argument("empty coefficient");
  Scalar value(1);
  std::string cur;
  auto flush = [&](const std::string& factor) {
    if (factor == "lambda") {
      if (!lambda_value)
        throw std::invalid_argument("coefficient mentions lambda but no value was given");
      value *= *lambda_value;
    } else {
      value *= parse_scalar(factor);
    }
  };
  for (char ch : s) {
    if (ch == '*') {
      flush(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  flush(cur);
  return sign * value;
}

Matrix parse_matrix(const std::vector<std::vector<std::string>>& rows) {
  std::vector<Vec> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    Vec r;
    r.reserve(row.size());
    for (const std::string& x : row) r.push_back(parse_scalar(x));
    out.push_back(std::move(r));
  }
  return Matrix::from_rows(out);
}

std::vector<std::string> string_list(const json& j) {
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(x.get<std::string>());
  return out;
}

CatalogEntry parse_entry(const json& j, const std::string& path) {
  CatalogEntry e;
  try {
    e.id = j.at("id").get<std::string>();
    e.name = j.value("name", e.id);
    e.dim = j.at("dim").get<int>();
    e.field = j.at("field").get<std::string>();
    for (const auto& b : j.at("brackets")) {
      BracketSpec bs;
      bs.i = b.at("i").get<int>();
      bs.j = b.at("j").get<int>();
      bs.k = b.at("k").get<int>();
      bs.c = b.at("c").get<std::string>();
      e.brackets.push_back(std::move(bs));
    }
    for (const auto& f : j.at("forms")) {
      FormSpec fs;
      for (const auto& row : f.at("matrix")) fs.matrix.push_back(string_list(row));
      if (f.contains("signature") && !f.at("signature").is_null()) {
        fs.signature = std::make_pair(f.at("signature").at(0).get<int>(),
                                      f.at("signature").at(1).get<int>());
      }
      e.forms_spec.push_back(std::move(fs));
    }
    if (j.contains("lambda")) e.lambda_default = j.at("lambda").get<std::string>();
    if (j.contains("family")) {
      const auto& f = j.at("family");
      FamilySpec fam;
      fam.parameter = f.at("parameter").get<std::string>();
      if (f.contains("excluded")) fam.excluded = string_list(f.at("excluded"));
      if (f.contains("special_values"))
        for (const auto& [key, value] : f.at("special_values").items())
          fam.special_values.emplace(key, value.get<std::string>());
      if (f.contains("nongeneric")) fam.nongeneric = string_list(f.at("nongeneric"));
      e.family = std::move(fam);
    }
    if (j.contains("expected") && !j.at("expected").is_null())
      for (const auto& [key, value] : j.at("expected").items())
        e.expected.emplace(key, value.get<std::vector<int>>());
    if (j.contains("hc2_basis")) e.hc2_text = string_list(j.at("hc2_basis"));
    if (j.contains("deformation")) {
      const auto& d = j.at("deformation");
      DeformationSpec ds;
      ds.params = string_list(d.at("params"));
      for (const auto& t : d.at("terms")) {
        DeformationTermSpec ts;
        for (const auto& [key, value] : t.at("monomial").items())
          ts.monomial.emplace(key, value.get<int>());
        if (t.contains("denominator")) ts.denominator = t.at("denominator").get<std::string>();
        ts.cochain = t.at("cochain").get<std::string>();
        ds.terms.push_back(std::move(ts));
      }
      if (d.contains("relations")) ds.relations = string_list(d.at("relations"));
      ds.truncated = d.value("truncated", false);
      e.deformation_spec = std::move(ds);
    }
    if (j.contains("isomorphisms")) {
      for (const auto& i : j.at("isomorphisms")) {
        IsomorphismSpec is;
        is.target = i.at("target").get<std::string>();
        for (const auto& [key, value] : i.at("point").items())
          is.point.emplace(key, value.get<std::string>());
        for (const auto& row : i.at("matrix")) is.matrix.push_back(string_list(row));
        is.direction = i.at("direction").get<std::string>();
        is.note = i.value("note", "");
        e.isomorphisms.push_back(std::move(is));
      }
    }
    if (j.contains("ordering")) {
      const auto& o = j.at("ordering");
      OrderingSpec os;
      os.type = o.at("type").get<std::string>();
      if (o.contains("jumps")) os.jumps = string_list(o.at("jumps"));
      if (o.contains("smooth")) os.smooth = string_list(o.at("smooth"));
      e.ordering = std::move(os);
    }
    if (j.contains("open_questions")) {
      for (const auto& q : j.at("open_questions")) {
        OpenQuestionSpec qs;
        qs.field = q.at("field").get<std::string>();
        qs.computed = q.at("computed").get<std::vector<int>>();
        qs.printed = q.at("printed").get<std::vector<int>>();
        qs.note = q.value("note", "");
        e.open_questions.push_back(std::move(qs));
      }
    }
    if (j.contains("hc2_ambiguities")) {
      for (const auto& a : j.at("hc2_ambiguities")) {
        AmbiguitySpec as;
        as.index = a.at("index").get<int>();
        as.printed = a.value("printed", "");
        if (a.contains("candidates")) as.candidates = string_list(a.at("candidates"));
        as.resolved = a.value("resolved", "");
        e.hc2_ambiguities.push_back(std::move(as));
      }
    }
    if (j.contains("notes")) e.notes = string_list(j.at("notes"));
  } catch (const json::exception& ex) {
    throw std::runtime_error("catalog entry " + path + ": " + ex.what());
  }
  return e;
}

}  // namespace

std::optional<Scalar> CatalogEntry::default_lambda() const {
  if (!lambda_default) return std::nullopt;
  return parse_scalar(*lambda_default);
}

LieAlgebra CatalogEntry::algebra(const std::optional<Scalar>& lambda) const {
  std::optional<Scalar> lam = lambda ? lambda : default_lambda();
  std::vector<std::tuple<int, int, int, Scalar>> terms;
  terms.reserve(brackets.size());
  for (const BracketSpec& b : brackets)
    terms.emplace_back(b.i, b.j, b.k, parse_coefficient(b.c, lam));
  return LieAlgebra::from_brackets(dim, terms);
}

LieAlgebra CatalogEntry::algebra_unchecked(const std::optional<Scalar>& lambda) const {
  std::optional<Scalar> lam = lambda ? lambda : default_lambda();
  AdjCochain bracket = make_adj(dim, 2);
  for (const BracketSpec& b : brackets)
    bracket = add(bracket, adj_basis_element(dim, {b.i, b.j}, b.k), parse_coefficient(b.c, lam));
  return LieAlgebra::unchecked(dim, std::move(bracket));
}

std::vector<BilinearForm> CatalogEntry::forms() const {
  std::vector<BilinearForm> out;
  out.reserve(forms_spec.size());
  for (const FormSpec& f : forms_spec) out.push_back(BilinearForm{parse_matrix(f.matrix)});
  return out;
}

std::vector<AdjCochain> CatalogEntry::hc2_basis(const std::optional<Scalar>& lambda) const {
  std::optional<Scalar> lam = lambda ? lambda : default_lambda();
  std::vector<AdjCochain> out;
  out.reserve(hc2_text.size());
  for (const std::string& s : hc2_text) out.push_back(parse_cochain(s, dim, lam));
  return out;
}

std::optional<Deformation> CatalogEntry::deformation(const std::optional<Scalar>& lambda) const {
  if (!deformation_spec) return std::nullopt;
  std::optional<Scalar> lam = lambda ? lambda : default_lambda();
  Deformation d;
  d.params = deformation_spec->params;
  d.base = algebra(lambda).d();
  for (const DeformationTermSpec& ts : deformation_spec->terms) {
    DeformationTerm t;
    for (const auto& [name, exp] : ts.monomial) t.monomial.emplace(name, exp);
    if (ts.denominator) t.denominator = parse_poly(*ts.denominator);
    t.cochain = parse_cochain(ts.cochain, dim, lam);
    d.terms.push_back(std::move(t));
  }
  for (const std::string& r : deformation_spec->relations) d.relations.push_back(parse_poly(r));
  d.truncated = deformation_spec->truncated;
  return d;
}

std::vector<CatalogEntry::Isomorphism> CatalogEntry::parsed_isomorphisms() const {
  std::vector<Isomorphism> out;
  out.reserve(isomorphisms.size());
  for (const IsomorphismSpec& is : isomorphisms) {
    Isomorphism i;
    i.target = is.target;
    for (const auto& [name, value] : is.point) i.point.emplace(name, parse_scalar(value));
    i.matrix = parse_matrix(is.matrix);
    i.direction = is.direction;
    i.note = is.note;
    out.push_back(std::move(i));
  }
  return out;
}

CatalogEntry load_entry_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read entry file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& ex) {
    throw std::runtime_error("invalid JSON in " + path + ": " + ex.what());
  }
  return parse_entry(j, path);
}

std::string Catalog::resolve_path(const std::optional<std::string>& override_path) {
  if (override_path && !override_path->empty()) return *override_path;
  if (const char* env = std::getenv("CYCLOLIE_CATALOG"); env && *env) return env;
  const std::string compiled = CYCLOLIE_DEFAULT_CATALOG;
  if (!compiled.empty() && std::filesystem::is_directory(compiled)) return compiled;
  return "./catalog";
}

Catalog::Catalog(const std::string& directory) : directory_(directory) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(directory_))
    throw std::runtime_error("catalog directory not found: " + directory_);
  std::vector<fs::path> files;
  for (const auto& sub : fs::directory_iterator(directory_)) {
    if (!sub.is_directory()) continue;
    for (const auto& f : fs::directory_iterator(sub.path()))
      if (f.path().extension() == ".json") files.push_back(f.path());
  }
  std::sort(files.begin(), files.end());
  for (const fs::path& p : files) {
    std::ifstream in(p);
    if (!in) throw std::runtime_error("cannot read catalog file: " + p.string());
    json j;
    try {
      in >> j;
    } catch (const json::exception& ex) {
      throw std::runtime_error("invalid JSON in " + p.string() + ": " + ex.what());
    }
    CatalogEntry e = parse_entry(j, p.string());
    if (entries_.count(e.id))
      throw std::runtime_error("duplicate catalog id: " + e.id + " (" + p.string() + ")");
    entries_.emplace(e.id, std::move(e));
  }
  if (entries_.empty()) throw std::runtime_error("catalog is empty: " + directory_);
}

const CatalogEntry* Catalog::find(const std::string& id) const {
  auto it = entries_.find(id);
  return it == entries_.end() ? nullptr : &it->second;
}

const CatalogEntry& Catalog::at(const std::string& id) const {
  const CatalogEntry* e = find(id);
  if (!e) throw std::invalid_argument("unknown catalog id: " + id);
  return *e;
}

Catalog::Resolved Catalog::resolve(const std::string& id,
                                   const std::optional<Scalar>& lambda) const {
  const CatalogEntry& e = at(id);
  if (!lambda) return Resolved{&e, std::nullopt};
  if (!e.family)
    throw std::invalid_argument("entry " + id + " has no family parameter");
  // A special value may also be excluded from the generic family; the
  // redirect to its replacement entry takes precedence.
  for (const auto& [value, replacement] : e.family->special_values)
    if (parse_scalar(value) == *lambda) return Resolved{&at(replacement), std::nullopt};
  for (const std::string& x : e.family->excluded)
    if (parse_scalar(x) == *lambda)
      throw std::invalid_argument("parameter value " + render_scalar(*lambda) +
                                  " is excluded for family " + id);
  return Resolved{&e, lambda};
}

std::vector<const CatalogEntry*> Catalog::entries(std::optional<int> dim,
                                                  const std::optional<std::string>& field) const {
  std::vector<const CatalogEntry*> out;
  for (const auto& [id, e] : entries_) {
    if (dim && e.dim != *dim) continue;
    if (field && e.field != *field) continue;
    out.push_back(&e);
  }
  std::sort(out.begin(), out.end(), [](const CatalogEntry* a, const CatalogEntry* b) {
    return std::make_pair(a->dim, a->id) < std::make_pair(b->dim, b->id);
  });
  return out;
}

JumpGraph Catalog::jump_graph() const {
  JumpGraph g;
  for (const CatalogEntry* e : entries())
    if (e->ordering) {
      if (g.type_to_id.count(e->ordering->type))
        throw std::runtime_error("duplicate ordering type " + e->ordering->type);
      g.type_to_id.emplace(e->ordering->type, e->id);
    }
  for (const CatalogEntry* e : entries()) {
    if (!e->ordering) continue;
    for (const std::string& t : e->ordering->jumps) {
      auto it = g.type_to_id.find(t);
      if (it == g.type_to_id.end())
        throw std::runtime_error("jump target type " + t + " has no entry");
      g.edges.push_back(JumpEdge{e->id, it->second});
    }
  }
  return g;
}

}  // namespace cyclolie
