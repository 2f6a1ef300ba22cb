#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclolie/exterior.hpp"
#include "cyclolie/linalg.hpp"
#include "cyclolie/scalar.hpp"

namespace cyclolie {

/// Basis cochain label: (multi-index I, target index i), both 1-based.
using AdjKey = std::pair<MultiIndex, int>;

/// Sparse p-cochain with adjoint coefficients: Λ^p V -> V. Coefficients with
/// exact value zero are never stored, so operator== is semantic equality.
struct AdjCochain {
  int degree = 0;
  int dim = 0;
  std::map<AdjKey, Scalar> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  bool operator==(const AdjCochain& other) const {
    return degree == other.degree && dim == other.dim && coeffs == other.coeffs;
  }
};

/// Sparse q-cochain with trivial coefficients: Λ^q V -> k.
struct TrivCochain {
  int degree = 0;
  int dim = 0;
  std::map<MultiIndex, Scalar> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  bool operator==(const TrivCochain& other) const {
    return degree == other.degree && dim == other.dim && coeffs == other.coeffs;
  }
};

/// Symmetric bilinear form, candidate invariant inner product.
struct BilinearForm {
  Matrix matrix;

  int dim() const { return static_cast<int>(matrix.rows()); }
  bool is_symmetric() const { return matrix.is_symmetric(); }
  bool is_nondegenerate() const { return rank(matrix) == matrix.rows(); }
};

/// Finite-dimensional Lie algebra given by its bracket 2-cochain. The checked
/// constructor enforces the Jacobi identity ([d,d] = 0); the deformation
/// evaluator uses the unchecked one and reports Jacobi as a result instead.
class LieAlgebra {
 public:
  /// Throws std::invalid_argument when [d,d] != 0.
  LieAlgebra(int dim, AdjCochain bracket);
  static LieAlgebra unchecked(int dim, AdjCochain bracket);
  /// Build from sparse structure constants (i, j, k, c) meaning
  /// [e_i, e_j] = c e_k summed over equal (i,j,k); requires i < j.
  static LieAlgebra from_brackets(int dim,
                                  const std::vector<std::tuple<int, int, int, Scalar>>& brackets);
  static LieAlgebra abelian(int dim);

  int dim() const { return dim_; }
  const AdjCochain& d() const { return d_; }

 private:
  LieAlgebra() = default;
  int dim_ = 0;
  AdjCochain d_;
};

// ---- construction and arithmetic ----

AdjCochain make_adj(int dim, int degree);
AdjCochain adj_basis_element(int dim, const MultiIndex& index, int target);
/// The identity 1-cochain I = sum_i phi^i_i.
AdjCochain identity_cochain(int dim);

AdjCochain add(const AdjCochain& a, const AdjCochain& b, const Scalar& scale_b = Scalar(1));
AdjCochain scale(const AdjCochain& a, const Scalar& s);
TrivCochain add(const TrivCochain& a, const TrivCochain& b, const Scalar& scale_b = Scalar(1));
TrivCochain scale(const TrivCochain& a, const Scalar& s);

/// Antisymmetric evaluation on a tuple of basis indices; returns the
/// coefficient vector of the value in the e_1..e_n basis.
/// Throws std::out_of_range for indices outside 1..dim.
Vec eval(const AdjCochain& c, const std::vector<int>& args);
Scalar eval(const TrivCochain& c, const std::vector<int>& args);

// ---- graded operations ----

/// Insertion product phi∘psi: psi consumes the first unshuffle block of its
/// arguments. On basis cochains: phi^I_i ∘ phi^J_j is nonzero only when
/// j ∈ I and J ∩ (I\{j}) = ∅, with the Koszul sign of the block split.
AdjCochain compose(const AdjCochain& phi, const AdjCochain& psi);

/// Nijenhuis-Richardson bracket [phi,psi] = phi∘psi - (-1)^{(k+1)(l+1)} psi∘phi.
AdjCochain nr_bracket(const AdjCochain& phi, const AdjCochain& psi);

/// Coboundary on adjoint cochains. For p >= 1 it equals
/// (-1)^{p+1} [d, c] (the global sign fixed against the explicit
/// Chevalley-Eilenberg sum, see coboundary_adj_explicit); for p = 0 the
/// cochain holds a vector x as coefficients of the empty index and
/// (Dx)(v) = d(v, x).
AdjCochain coboundary_adj(const LieAlgebra& alg, const AdjCochain& c);

/// Degree-0 coboundary on a plain vector: (Dx)(v) = d(v, x).
AdjCochain coboundary_adj0(const LieAlgebra& alg, const Vec& x);

/// Independent oracle: the explicit two-sum Chevalley-Eilenberg formula
///   (Dc)(v_0..v_p) = sum_i (-1)^i [v_i, c(..v̂_i..)]
///                  + sum_{i<j} (-1)^{i+j} c([v_i,v_j], ..v̂_i..v̂_j..)
/// evaluated coefficient by coefficient. Equals coboundary_adj for p >= 1.
AdjCochain coboundary_adj_explicit(const LieAlgebra& alg, const AdjCochain& c);

/// Coboundary on trivial cochains: only the bracket-insertion sum survives.
TrivCochain coboundary_triv(const LieAlgebra& alg, const TrivCochain& c);

// ---- tilde map and cyclicity ----

/// The lowered (p+1)-linear form phi~(v_1..v_p, w) = <phi(v_1..v_p), w>,
/// tabulated on (strict multi-index, last argument) pairs. It is always
/// antisymmetric in the first p slots; `alternating` says whether it is
/// alternating in all p+1, and `form` holds it as a TrivCochain when so.
struct TildeResult {
  std::map<AdjKey, Scalar> table;
  bool alternating = false;
  std::optional<TrivCochain> form;
};

TildeResult tilde(const AdjCochain& c, const BilinearForm& b);

/// True iff the lowered form phi~ is alternating in all p+1 arguments.
bool is_cyclic(const AdjCochain& c, const BilinearForm& b);

/// tilde as a TrivCochain; precondition is_cyclic(c, b).
TrivCochain tilde_form(const AdjCochain& c, const BilinearForm& b);

/// Inverse of tilde_form: raise the last index of an alternating q-form with
/// b^{-1}, producing the cyclic (q-1)-cochain it came from.
/// Throws std::invalid_argument when b is degenerate.
AdjCochain untilde(const TrivCochain& c, const BilinearForm& b);

/// True iff b([x,y],z) = b(x,[y,z]) on all basis triples; equivalent to
/// is_cyclic(d, b).
bool is_invariant(const LieAlgebra& alg, const BilinearForm& b);

/// Bracket on C(V,k) for tilde images of cyclic cochains (ta of degree k+1,
/// tb of degree l+1), computed by the unshuffle sum
///   [ta,tb](e_K) = sum_{Sh(l,k)} sign * ta(tb-raised(e_first), e_second)
/// after raising tb's last index with b^{-1}. Satisfies
/// tilde([a,b]) = [tilde a, tilde b] (cross-checked in the test suite).
TrivCochain bracket_triv(const TrivCochain& ta, const TrivCochain& tb, const BilinearForm& b);

// ---- text syntax ----

/// Parse cochain text `k*psi[{i,j,...}->m]` terms joined by +/-, e.g.
/// "psi[{1,2}->3] - 2*psi[{1,3}->1]". `phi` and `psi` are interchangeable
/// names. A coefficient factor `lambda` (e.g. "lambda*psi[...]",
/// "-2*lambda*psi[...]") is substituted with `lambda_value`; passing
/// such text without a value throws std::invalid_argument.
AdjCochain parse_cochain(std::string_view text, int dim,
                         const std::optional<Scalar>& lambda_value = std::nullopt);

/// Canonical rendering, inverse of parse_cochain on canonical forms:
/// terms in key order, `psi` for even-length indices and `phi` for odd.
std::string render_cochain(const AdjCochain& c);

// ---- coordinates ----

/// Basis of C^p(V,V): (I, i) pairs, I lexicographic outer, i = 1..dim inner.
std::vector<AdjKey> adj_basis(int dim, int degree);

Vec to_vector(const AdjCochain& c, const std::vector<AdjKey>& basis);
AdjCochain from_vector(const Vec& v, const std::vector<AdjKey>& basis, int dim, int degree);

}  // namespace cyclolie
