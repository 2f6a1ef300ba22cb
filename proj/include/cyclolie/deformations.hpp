#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclolie/cochains.hpp"
#include "cyclolie/cohomology.hpp"
#include "cyclolie/linalg.hpp"
#include "cyclolie/polynomial.hpp"

namespace cyclolie {

/// One deformation term: monomial * cochain, optionally divided by a polynomial.
struct DeformationTerm {
  Monomial monomial;
  std::optional<Polynomial> denominator;
  AdjCochain cochain;
};

/// A bracket family d(t) = base + sum of terms over named parameters,
/// together with the polynomial relations cutting out its parameter variety.
/// `truncated` marks families stated only up to the recorded order, for which
/// exact Jacobi checks are not meaningful.
struct Deformation {
  std::vector<std::string> params;
  AdjCochain base;
  std::vector<DeformationTerm> terms;
  std::vector<Polynomial> relations;
  bool truncated = false;

  /// Evaluate at a rational parameter point. Throws std::domain_error if a
  /// term denominator vanishes, std::out_of_range for an unbound parameter.
  AdjCochain evaluate(const std::map<std::string, Scalar>& point) const;

  /// Values of the stored relations at a point.
  std::vector<Scalar> relations_at(const std::map<std::string, Scalar>& point) const;

  /// [d(t), d(t)] expanded as a polynomial-valued cochain, keyed by monomial.
  /// Only valid for denominator-free families (throws otherwise).
  std::map<Monomial, AdjCochain> self_bracket() const;

  /// True iff [d(t), d(t)] == 0 identically (denominator-free families).
  bool self_bracket_vanishes() const;
};

/// Σ over ordered pairs of nr_bracket(c_i, c_j), keyed by monomial sums.
std::map<Monomial, AdjCochain> poly_self_bracket(
    const std::vector<std::pair<Monomial, AdjCochain>>& terms);

/// d'(e_a, e_b) = G^{-1} d(G e_a, G e_b): the bracket transported through G.
AdjCochain pushforward(const Matrix& g, const AdjCochain& d);

/// True iff G d1(x, y) == d2(G x, G y) on all basis pairs, i.e. G is a Lie
/// algebra map (V, d1) -> (V, d2).
bool check_isomorphism(const Matrix& g, const AdjCochain& d1, const AdjCochain& d2);

/// First derivative at 0 of eps -> pushforward(I + eps*N, d), where N is the
/// matrix of the 1-cochain beta. Clearing the determinant det(I + eps*N) makes
/// every coefficient polynomial in eps, so the derivative comes out of exact
/// Lagrange interpolation at dim + 3 sample points plus a det-correction term.
AdjCochain gauge_derivative(const LieAlgebra& alg, const AdjCochain& beta);

/// True iff the first-order gauge motion equals [d, beta].
bool gauge_orbit_check(const LieAlgebra& alg, const AdjCochain& beta);

/// Order-2 versal data computed from HC^2 cocycle representatives `deltas`:
/// for each i <= j a correction xi_{ij} and obstruction coefficients with
///   [d, xi_{ij}] + sum_k a_k alpha_k = -s_{ij} [delta_i, delta_j],
/// s_{ij} = 1 for i < j and 1/2 for i == j. The alphas are HC^3
/// representatives; relations[k] collects the a_k per monomial t_i t_j.
struct VersalResult {
  std::map<std::pair<int, int>, AdjCochain> second_order_terms;
  std::vector<Polynomial> leading_relations;
  std::vector<AdjCochain> alphas;
};

VersalResult versal_order2(CochainComplex& cx, const BilinearForm& b,
                           const std::vector<AdjCochain>& deltas);

}  // namespace cyclolie
