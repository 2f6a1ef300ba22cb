#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclolie/catalog.hpp"

namespace cyclolie {

enum class CheckStatus { Pass, Warn, Fail };

/// Warn marks checks that pass against the stored (computed) value but where
/// the catalog records a discrepancy with the printed source value; both
/// readings appear in `detail`.
struct CheckResult {
  int criterion = 0;  ///< acceptance criterion 1..9; 0 = supplementary invariant
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct ReproduceOptions {
  std::optional<int> dim;        ///< restrict to catalog entries of one dimension
  std::uint64_t seed = 12345;    ///< seed for the randomized property suites
};

const char* status_label(CheckStatus s);

/// Runs the full verification battery over the catalog: table reproduction,
/// gap localization, two-route cyclic dimensions, Kunneth, structural
/// identities, signatures, deformation and isomorphism checks, order-2 versal
/// computations, and the seeded property suites. Dimension-filtered runs keep
/// only the per-entry checks for that dimension.
std::vector<CheckResult> run_checks(const Catalog& catalog, const ReproduceOptions& options);

}  // namespace cyclolie
