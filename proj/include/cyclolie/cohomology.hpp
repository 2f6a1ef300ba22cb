#pragma once

#include <map>
#include <vector>

#include "cyclolie/cochains.hpp"
#include "cyclolie/linalg.hpp"

namespace cyclolie {

/// Caches the coboundary matrices of one algebra so repeated rank queries are cheap.
///
/// Coordinates: degree-p adjoint cochains are vectors over adj_basis(dim, p)
/// (index blocks in lexicographic order, target index fastest); degree-q
/// scalar cochains are vectors over enumerate_multiindices(dim, q).
class CochainComplex {
 public:
  explicit CochainComplex(LieAlgebra alg) : alg_(std::move(alg)) {}

  const LieAlgebra& algebra() const { return alg_; }
  int dim() const { return alg_.dim(); }

  /// Matrix of D : C^p(V,V) -> C^{p+1}(V,V) in the adj_basis coordinates.
  const Matrix& adjoint_matrix(int p);
  /// Matrix of D : C^q(V,k) -> C^{q+1}(V,k) in multi-index coordinates.
  const Matrix& trivial_matrix(int q);

  Subspace adjoint_cocycles(int p);       ///< Z^p(V,V)
  Subspace adjoint_coboundaries(int p);   ///< B^p(V,V)

  int adjoint_dim(int p);   ///< dim H^p(V,V)
  int trivial_dim(int q);   ///< dim H^q(V,k)

  /// Cocycle representatives of a basis of H^p(V,V).
  std::vector<AdjCochain> adjoint_representatives(int p);

 private:
  LieAlgebra alg_;
  std::map<int, Matrix> adj_cache_;
  std::map<int, Matrix> triv_cache_;
};

/// Degree-p cochains whose tilde pairing with the form is fully alternating,
/// as a subspace in adj_basis coordinates. For a nondegenerate symmetric form
/// its dimension is binomial(dim, p+1).
Subspace cyclic_subspace(const BilinearForm& b, int degree);

/// Z^p(V,V) intersected with the cyclic subspace.
Subspace cyclic_cocycles(CochainComplex& cx, const BilinearForm& b, int p);

/// Span of D(CC^{p-1}) inside degree-p cochains (p >= 1).
Subspace cyclic_coboundary_image(CochainComplex& cx, const BilinearForm& b, int p);

/// dim HC^p. Degree 0 is the kernel of D on linear scalar forms; degree >= 1
/// is (Z^p cap CC^p) / D(CC^{p-1}).
int cyclic_dim(CochainComplex& cx, const BilinearForm& b, int p);

/// Independent route for p >= 1: dim HC^p = dim H^{p+1}(V,k).
int cyclic_dim_via_trivial(CochainComplex& cx, int p);

/// dim HRC^p = dim (Z^p cap CC^p) / (B^p cap CC^p).
int reduced_cyclic_dim(CochainComplex& cx, const BilinearForm& b, int p);

/// Cocycle representatives of a basis of HC^p (p >= 1).
std::vector<AdjCochain> cyclic_representatives(CochainComplex& cx, const BilinearForm& b, int p);

/// One table row: dimensions at a fixed degree.
struct CohomologyRow {
  int degree = 0;
  int hc = 0;
  int hrc = 0;
  int h = 0;

  bool operator==(const CohomologyRow&) const = default;
};

/// Full table for degrees 0..max_degree.
std::vector<CohomologyRow> cohomology_table(const LieAlgebra& alg, const BilinearForm& b,
                                            int max_degree = 3);

/// Direct sum of two algebras (second summand's indices shifted by the first's
/// dimension) and the block-diagonal sum of two forms.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);
BilinearForm direct_sum(const BilinearForm& a, const BilinearForm& b);

/// Betti numbers h^q(V,k) for q = 0..max_degree.
std::vector<int> trivial_betti(const LieAlgebra& alg, int max_degree);

/// Checks h^q(sum,k) == sum_{i+j=q} h^i(a,k) * h^j(b,k) for q = 0..max_degree.
bool kunneth_check(const LieAlgebra& a, const LieAlgebra& b, int max_degree);

}  // namespace cyclolie
