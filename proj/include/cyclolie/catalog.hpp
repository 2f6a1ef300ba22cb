#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclolie/cochains.hpp"
#include "cyclolie/deformations.hpp"
#include "cyclolie/linalg.hpp"

namespace cyclolie {

/// One structure constant [e_i, e_j] = c e_k; c may mention "lambda".
struct BracketSpec {
  int i = 0, j = 0, k = 0;
  std::string c;
};

struct FormSpec {
  std::vector<std::vector<std::string>> matrix;
  std::optional<std::pair<int, int>> signature;  ///< (positive, negative) for real entries
};

struct DeformationTermSpec {
  std::map<std::string, int> monomial;
  std::optional<std::string> denominator;
  std::string cochain;
};

struct DeformationSpec {
  std::vector<std::string> params;
  std::vector<DeformationTermSpec> terms;
  std::vector<std::string> relations;
  bool truncated = false;
};

struct IsomorphismSpec {
  std::string target;
  std::map<std::string, std::string> point;
  std::vector<std::vector<std::string>> matrix;
  std::string direction;  ///< "target_to_deformed" or "deformed_to_target"
  std::string note;
};

struct OrderingSpec {
  std::string type;                 ///< degeneration-type label, e.g. "4(lambda)"
  std::vector<std::string> jumps;   ///< type labels this entry jumps to
  std::vector<std::string> smooth;  ///< type labels reached without a jump
};

struct FamilySpec {
  std::string parameter;
  std::vector<std::string> excluded;                  ///< parameter values with no entry
  std::map<std::string, std::string> special_values;  ///< value -> replacement entry id
  std::vector<std::string> nongeneric;                ///< values where dimensions differ
};

/// A recorded discrepancy: the stored (computed) value of `field` disagrees
/// with the printed source value; verifiers report both instead of failing.
struct OpenQuestionSpec {
  std::string field;
  std::vector<int> computed;
  std::vector<int> printed;
  std::string note;
};

struct AmbiguitySpec {
  int index = 0;
  std::string printed;
  std::vector<std::string> candidates;
  std::string resolved;
};

/// One catalog algebra, as stored on disk plus instantiation helpers.
struct CatalogEntry {
  std::string id;
  std::string name;
  int dim = 0;
  std::string field;  ///< "complex" or "real"
  std::vector<BracketSpec> brackets;
  std::vector<FormSpec> forms_spec;
  std::optional<std::string> lambda_default;
  std::optional<FamilySpec> family;
  std::map<std::string, std::vector<int>> expected;  ///< keys "hc", "hrc", "h"
  std::vector<std::string> hc2_text;
  std::optional<DeformationSpec> deformation_spec;
  std::vector<IsomorphismSpec> isomorphisms;
  std::optional<OrderingSpec> ordering;
  std::vector<OpenQuestionSpec> open_questions;
  std::vector<AmbiguitySpec> hc2_ambiguities;
  std::vector<std::string> notes;

  /// Default family-parameter value if the entry has one.
  std::optional<Scalar> default_lambda() const;

  /// Structure constants instantiated at `lambda` (or the stored default).
  LieAlgebra algebra(const std::optional<Scalar>& lambda = {}) const;

  /// Same instantiation without the Jacobi check, so validators can report
  /// a broken bracket instead of failing to construct it.
  LieAlgebra algebra_unchecked(const std::optional<Scalar>& lambda = {}) const;

  std::vector<BilinearForm> forms() const;

  std::vector<AdjCochain> hc2_basis(const std::optional<Scalar>& lambda = {}) const;

  std::optional<Deformation> deformation(const std::optional<Scalar>& lambda = {}) const;

  /// Parsed isomorphism records: evaluation point and rational matrix.
  struct Isomorphism {
    std::string target;
    std::map<std::string, Scalar> point;
    Matrix matrix;
    std::string direction;
    std::string note;
  };
  std::vector<Isomorphism> parsed_isomorphisms() const;
};

/// Parses one standalone entry file (same JSON schema as catalog entries).
/// Throws std::runtime_error on unreadable files or schema violations.
CatalogEntry load_entry_file(const std::string& path);

struct JumpEdge {
  std::string from_id;
  std::string to_id;
};

/// Specialization order of the top-dimensional entries: nodes are entries with
/// an `ordering` block; each `jumps` label contributes one edge.
struct JumpGraph {
  std::map<std::string, std::string> type_to_id;
  std::vector<JumpEdge> edges;
};

class Catalog {
 public:
  /// Resolution order: explicit argument, CYCLOLIE_CATALOG environment
  /// variable, the path compiled in at build time, then "./catalog".
  static std::string resolve_path(const std::optional<std::string>& override_path = {});

  /// Loads every <dim>/<id>.json under the directory. Throws on parse errors.
  explicit Catalog(const std::string& directory);

  const std::string& directory() const { return directory_; }

  const CatalogEntry* find(const std::string& id) const;
  const CatalogEntry& at(const std::string& id) const;

  /// Entry lookup with family handling: an explicit lambda equal to a special
  /// value redirects to the replacement entry; an excluded value throws.
  struct Resolved {
    const CatalogEntry* entry = nullptr;
    std::optional<Scalar> lambda;  ///< value to instantiate with (empty after a redirect)
  };
  Resolved resolve(const std::string& id, const std::optional<Scalar>& lambda = {}) const;

  /// Entries sorted by (dim, id), optionally filtered.
  std::vector<const CatalogEntry*> entries(std::optional<int> dim = {},
                                           const std::optional<std::string>& field = {}) const;

  JumpGraph jump_graph() const;

 private:
  std::string directory_;
  std::map<std::string, CatalogEntry> entries_;
};

}  // namespace cyclolie
