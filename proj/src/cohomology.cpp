#include "cyclolie/cohomology.hpp"

#include <stdexcept>
#include <utility>

namespace cyclolie {

namespace {

Matrix matrix_from_columns(std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(static_cast<int>(rows), static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m.at(static_cast<int>(r), static_cast<int>(c)) = cols[c][r];
  return m;
}

std::map<MultiIndex, std::size_t> index_positions(int n, int p) {
  std::map<MultiIndex, std::size_t> pos;
  std::size_t i = 0;
  for (const MultiIndex& index : enumerate_multiindices(n, p)) pos.emplace(index, i++);
  return pos;
}

}  // namespace

const Matrix& CochainComplex::adjoint_matrix(int p) {
  auto it = adj_cache_.find(p);
  if (it != adj_cache_.end()) return it->second;
  const int n = dim();
  const std::vector<AdjKey> src = adj_basis(n, p);
  const std::vector<AdjKey> dst = adj_basis(n, p + 1);
  std::vector<Vec> cols;
  cols.reserve(src.size());
  for (const AdjKey& key : src) {
    AdjCochain img = coboundary_adj(alg_, adj_basis_element(n, key.first, key.second));
    cols.push_back(to_vector(img, dst));
  }
  return adj_cache_.emplace(p, matrix_from_columns(dst.size(), cols)).first->second;
}

const Matrix& CochainComplex::trivial_matrix(int q) {
  auto it = triv_cache_.find(q);
  if (it != triv_cache_.end()) return it->second;
  const int n = dim();
  const std::vector<MultiIndex> src = enumerate_multiindices(n, q);
  const auto dst_pos = index_positions(n, q + 1);
  std::vector<Vec> cols;
  cols.reserve(src.size());
  for (const MultiIndex& index : src) {
    TrivCochain c;
    c.dim = n;
    c.degree = q;
    c.coeffs.emplace(index, Scalar(1));
    TrivCochain img = coboundary_triv(alg_, c);
    Vec col(dst_pos.size(), Scalar(0));
    for (const auto& [key, value] : img.coeffs) col[dst_pos.at(key)] = value;
    cols.push_back(std::move(col));
  }
  return triv_cache_.emplace(q, matrix_from_columns(dst_pos.size(), cols)).first->second;
}

Subspace CochainComplex::adjoint_cocycles(int p) { return Subspace::kernel(adjoint_matrix(p)); }

Subspace CochainComplex::adjoint_coboundaries(int p) {
  const std::size_t ambient = adj_basis(dim(), p).size();
  if (p == 0) return Subspace::span(ambient, {});
  return Subspace::column_space(adjoint_matrix(p - 1));
}

int CochainComplex::adjoint_dim(int p) {
  const int src_dim = static_cast<int>(adj_basis(dim(), p).size());
  const int cocycles = src_dim - static_cast<int>(rank(adjoint_matrix(p)));
  const int boundaries = (p == 0) ? 0 : static_cast<int>(rank(adjoint_matrix(p - 1)));
  return cocycles - boundaries;
}

int CochainComplex::trivial_dim(int q) {
  const int src_dim = static_cast<int>(binomial(dim(), q));
  const int cocycles = src_dim - static_cast<int>(rank(trivial_matrix(q)));
  const int boundaries = (q == 0) ? 0 : static_cast<int>(rank(trivial_matrix(q - 1)));
  return cocycles - boundaries;
}

std::vector<AdjCochain> CochainComplex::adjoint_representatives(int p) {
  const std::vector<AdjKey> basis = adj_basis(dim(), p);
  Subspace z = adjoint_cocycles(p);
  Subspace b = adjoint_coboundaries(p);
  std::vector<AdjCochain> reps;
  for (const Vec& v : quotient_representatives(z.basis(), b.basis()))
    reps.push_back(from_vector(v, basis, dim(), p));
  return reps;
}

Subspace cyclic_subspace(const BilinearForm& b, int degree) {
  const int n = b.dim();
  const int p = degree;
  const std::vector<AdjKey> basis = adj_basis(n, p);
  const auto block_pos = index_positions(n, p);
  auto trow = [&](const MultiIndex& index, int m) {
    Vec row(basis.size(), Scalar(0));
    const std::size_t block = block_pos.at(index) * static_cast<std::size_t>(n);
    for (int i = 0; i < n; ++i) row[block + i] = b.matrix.at(i, m - 1);
    return row;
  };
  std::vector<Vec> rows;
  // tilde(c)(I, m) must vanish whenever m repeats an argument of I...
  for (const MultiIndex& index : enumerate_multiindices(n, p))
    for (int m : index) rows.push_back(trow(index, m));
  // ...and the (p+1)-linear extension must be alternating: all placements of
  // the last argument inside a strict block K agree up to the sign (-1)^{p-j}.
  for (const MultiIndex& k : enumerate_multiindices(n, p + 1)) {
    Vec prev;
    for (int j = 0; j <= p; ++j) {
      MultiIndex index;
      index.reserve(p);
      for (int t = 0; t <= p; ++t)
        if (t != j) index.push_back(k[t]);
      Vec cur = trow(index, k[j]);
      if ((p - j) & 1)
        for (Scalar& x : cur) x = -x;
      if (j > 0) {
        Vec diff(cur.size());
        for (std::size_t t = 0; t < cur.size(); ++t) diff[t] = prev[t] - cur[t];
        rows.push_back(std::move(diff));
      }
      prev = std::move(cur);
    }
  }
  Matrix constraints(static_cast<int>(rows.size()), static_cast<int>(basis.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < basis.size(); ++c)
      constraints.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
  return Subspace::kernel(constraints);
}

Subspace cyclic_cocycles(CochainComplex& cx, const BilinearForm& b, int p) {
  return intersect(cx.adjoint_cocycles(p), cyclic_subspace(b, p));
}

Subspace cyclic_coboundary_image(CochainComplex& cx, const BilinearForm& b, int p) {
  if (p < 1) throw std::invalid_argument("cyclic_coboundary_image: degree must be >= 1");
  const int n = cx.dim();
  const std::vector<AdjKey> src_basis = adj_basis(n, p - 1);
  const std::vector<AdjKey> dst_basis = adj_basis(n, p);
  std::vector<Vec> images;
  const Subspace lower = cyclic_subspace(b, p - 1);
  for (const Vec& v : lower.basis()) {
    AdjCochain c = from_vector(v, src_basis, n, p - 1);
    images.push_back(to_vector(coboundary_adj(cx.algebra(), c), dst_basis));
  }
  return Subspace::span(dst_basis.size(), images);
}

int cyclic_dim(CochainComplex& cx, const BilinearForm& b, int p) {
  if (p == 0) return cx.dim() - static_cast<int>(rank(cx.trivial_matrix(1)));
  Subspace zcc = cyclic_cocycles(cx, b, p);
  Subspace img = cyclic_coboundary_image(cx, b, p);
  if (sum(zcc, img).dim() != zcc.dim())
    throw std::invalid_argument("cyclic_dim: D(CC^{p-1}) is not contained in the cyclic cocycles"
                                " (is the form invariant?)");
  return static_cast<int>(zcc.dim() - img.dim());
}

int cyclic_dim_via_trivial(CochainComplex& cx, int p) {
  if (p < 1) throw std::invalid_argument("cyclic_dim_via_trivial: degree must be >= 1");
  return cx.trivial_dim(p + 1);
}

int reduced_cyclic_dim(CochainComplex& cx, const BilinearForm& b, int p) {
  Subspace cyc = cyclic_subspace(b, p);
  Subspace zcc = intersect(cx.adjoint_cocycles(p), cyc);
  Subspace bcc = intersect(cx.adjoint_coboundaries(p), cyc);
  return static_cast<int>(zcc.dim() - bcc.dim());
}

std::vector<AdjCochain> cyclic_representatives(CochainComplex& cx, const BilinearForm& b, int p) {
  if (p < 1) throw std::invalid_argument("cyclic_representatives: degree must be >= 1");
  const std::vector<AdjKey> basis = adj_basis(cx.dim(), p);
  Subspace zcc = cyclic_cocycles(cx, b, p);
  Subspace img = cyclic_coboundary_image(cx, b, p);
  std::vector<AdjCochain> reps;
  for (const Vec& v : quotient_representatives(zcc.basis(), img.basis()))
    reps.push_back(from_vector(v, basis, cx.dim(), p));
  return reps;
}

std::vector<CohomologyRow> cohomology_table(const LieAlgebra& alg, const BilinearForm& b,
                                            int max_degree) {
  CochainComplex cx(alg);
  std::vector<CohomologyRow> rows;
  for (int p = 0; p <= max_degree; ++p) {
    CohomologyRow row;
    row.degree = p;
    row.hc = cyclic_dim(cx, b, p);
    row.hrc = reduced_cyclic_dim(cx, b, p);
    row.h = cx.adjoint_dim(p);
    rows.push_back(row);
  }
  return rows;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const int na = a.dim();
  const int n = na + b.dim();
  AdjCochain d = make_adj(n, 2);
  for (const auto& [key, value] : a.d().coeffs) d.coeffs.emplace(key, value);
  for (const auto& [key, value] : b.d().coeffs) {
    MultiIndex shifted{key.first[0] + na, key.first[1] + na};
    d.coeffs.emplace(AdjKey{std::move(shifted), key.second + na}, value);
  }
  return LieAlgebra(n, std::move(d));
}

BilinearForm direct_sum(const BilinearForm& a, const BilinearForm& b) {
  const int na = a.dim();
  const int n = na + b.dim();
  Matrix m(n, n);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) m.at(i, j) = a.matrix.at(i, j);
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) m.at(na + i, na + j) = b.matrix.at(i, j);
  return BilinearForm{std::move(m)};
}

std::vector<int> trivial_betti(const LieAlgebra& alg, int max_degree) {
  CochainComplex cx(alg);
  std::vector<int> out;
  for (int q = 0; q <= max_degree; ++q) out.push_back(cx.trivial_dim(q));
  return out;
}

bool kunneth_check(const LieAlgebra& a, const LieAlgebra& b, int max_degree) {
  const std::vector<int> ha = trivial_betti(a, max_degree);
  const std::vector<int> hb = trivial_betti(b, max_degree);
  const std::vector<int> hs = trivial_betti(direct_sum(a, b), max_degree);
  for (int q = 0; q <= max_degree; ++q) {
    int conv = 0;
    for (int i = 0; i <= q; ++i) conv += ha[i] * hb[q - i];
    if (conv != hs[q]) return false;
  }
  return true;
}

}  // namespace cyclolie
