#include "cyclolie/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace cyclolie {

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Vec Matrix::row(std::size_t r) const {
  Vec out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

Vec Matrix::col(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

std::vector<Vec> Matrix::to_rows() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if (at(r, c) != at(c, r)) return false;
  return true;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b.at(k, j) != 0) out.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return out;
}

Vec mat_vec(const Matrix& a, const Vec& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("mat_vec shape mismatch");
  Vec out(a.rows(), Scalar(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (a.at(i, k) != 0 && x[k] != 0) out[i] += a.at(i, k) * x[k];
  return out;
}

RrefResult rref(const Matrix& input) {
  RrefResult res{input, {}};
  Matrix& m = res.reduced;
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && m.at(p, c) == 0) ++p;
    if (p == nr) continue;
    if (p != r)
      for (std::size_t j = 0; j < nc; ++j) std::swap(m.at(r, j), m.at(p, j));
    Scalar inv = Scalar(1) / m.at(r, c);
    for (std::size_t j = 0; j < nc; ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Scalar f = m.at(i, c);
      for (std::size_t j = 0; j < nc; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  return res;
}

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return rref(m).rank();
}

std::optional<Vec> solve(const Matrix& m, const Vec& rhs) {
  if (m.rows() != rhs.size()) throw std::invalid_argument("solve shape mismatch");
  const std::size_t n = m.cols();
  Matrix aug(m.rows(), n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n) = rhs[r];
  }
  RrefResult red = rref(aug);
  for (std::size_t p : red.pivot_cols)
    if (p == n) return std::nullopt;
  Vec x(n, Scalar(0));
  for (std::size_t r = 0; r < red.pivot_cols.size(); ++r)
    x[red.pivot_cols[r]] = red.reduced.at(r, n);
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = 1;
  }
  RrefResult red = rref(aug);
  if (red.rank() < n || red.pivot_cols[n - 1] != n - 1) return std::nullopt;
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.at(r, c) = red.reduced.at(r, n + c);
  return out;
}

Scalar determinant(const Matrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant: not square");
  Matrix m = input;
  const std::size_t n = m.rows();
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m.at(p, c) == 0) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(c, j), m.at(p, j));
      det = -det;
    }
    det *= m.at(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m.at(r, c) == 0) continue;
      Scalar f = m.at(r, c) / m.at(c, c);
      for (std::size_t j = c; j < n; ++j) m.at(r, j) -= f * m.at(c, j);
    }
  }
  return det;
}

std::tuple<int, int, int> signature(const Matrix& b) {
  if (!b.is_symmetric()) throw std::invalid_argument("signature needs a symmetric matrix");
  Matrix m = b;
  const std::size_t n = m.rows();
  int pos = 0, neg = 0, zero = 0;
  auto add_rc = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) m.at(i, c) += m.at(j, c);
    for (std::size_t r = 0; r < n; ++r) m.at(r, i) += m.at(r, j);
  };
  auto swap_rc = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) std::swap(m.at(i, c), m.at(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(m.at(r, i), m.at(r, j));
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (m.at(i, i) == 0) {
      std::size_t j = i + 1;
      while (j < n && m.at(j, j) == 0) ++j;
      if (j < n) {
        swap_rc(i, j);
      } else {
        j = i + 1;
        while (j < n && m.at(i, j) == 0) ++j;
        if (j == n) {
          ++zero;
          continue;
        }
        add_rc(i, j);
      }
    }
    const Scalar p = m.at(i, i);
    if (p == 0) {
      ++zero;
      continue;
    }
    if (scalar_sign(p) > 0)
      ++pos;
    else
      ++neg;
    for (std::size_t r = i + 1; r < n; ++r) {
      if (m.at(r, i) == 0) continue;
      Scalar f = m.at(r, i) / p;
      for (std::size_t c = 0; c < n; ++c) m.at(r, c) -= f * m.at(i, c);
      for (std::size_t rr = 0; rr < n; ++rr) m.at(rr, r) -= f * m.at(rr, i);
    }
  }
  return {pos, neg, zero};
}

namespace {

bool is_zero_vec(const Vec& v) {
  for (const Scalar& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  Subspace out(ambient_dim);
  // Incremental rref of the accepted rows; a vector joins the basis exactly
  // when it has a nonzero residue against the current reduced rows.
  std::vector<Vec> reduced;
  std::vector<std::size_t> pivots;
  for (const Vec& v : vectors) {
    if (v.size() != ambient_dim) throw std::invalid_argument("span vector length mismatch");
    Vec w = v;
    for (std::size_t r = 0; r < reduced.size(); ++r) {
      if (w[pivots[r]] != 0) {
        Scalar f = w[pivots[r]];
        for (std::size_t c = 0; c < ambient_dim; ++c) w[c] -= f * reduced[r][c];
      }
    }
    std::size_t pc = 0;
    while (pc < ambient_dim && w[pc] == 0) ++pc;
    if (pc == ambient_dim) continue;
    Scalar inv = Scalar(1) / w[pc];
    for (std::size_t c = 0; c < ambient_dim; ++c) w[c] *= inv;
    for (std::size_t r = 0; r < reduced.size(); ++r) {
      if (reduced[r][pc] != 0) {
        Scalar f = reduced[r][pc];
        for (std::size_t c = 0; c < ambient_dim; ++c) reduced[r][c] -= f * w[c];
      }
    }
    reduced.push_back(std::move(w));
    pivots.push_back(pc);
    out.basis_.push_back(v);
  }
  return out;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace out(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    Vec e(ambient_dim, Scalar(0));
    e[i] = 1;
    out.basis_.push_back(std::move(e));
  }
  return out;
}

Subspace Subspace::kernel(const Matrix& m) {
  const std::size_t nc = m.cols();
  if (m.rows() == 0) return Subspace::full(nc);
  RrefResult red = rref(m);
  std::vector<bool> is_pivot(nc, false);
  for (std::size_t p : red.pivot_cols) is_pivot[p] = true;
  Subspace out(nc);
  for (std::size_t fc = 0; fc < nc; ++fc) {
    if (is_pivot[fc]) continue;
    Vec v(nc, Scalar(0));
    v[fc] = 1;
    for (std::size_t r = 0; r < red.pivot_cols.size(); ++r)
      v[red.pivot_cols[r]] = -red.reduced.at(r, fc);
    out.basis_.push_back(std::move(v));
  }
  return out;
}

Subspace Subspace::column_space(const Matrix& m) {
  std::vector<Vec> cols;
  cols.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Vec v = m.col(c);
    if (!is_zero_vec(v)) cols.push_back(std::move(v));
  }
  return Subspace::span(m.rows(), cols);
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("contains: length mismatch");
  if (is_zero_vec(v)) return true;
  std::vector<Vec> stacked = basis_;
  stacked.push_back(v);
  return Subspace::span(ambient_, stacked).dim() == dim();
}

bool Subspace::same_span(const Subspace& other) const {
  if (ambient_ != other.ambient_ || dim() != other.dim()) return false;
  for (const Vec& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Subspace sum(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw std::invalid_argument("sum: ambient mismatch");
  std::vector<Vec> all = u.basis();
  for (const Vec& v : w.basis()) all.push_back(v);
  return Subspace::span(u.ambient_dim(), all);
}

Subspace intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim())
    throw std::invalid_argument("intersect: ambient mismatch");
  const std::size_t nc = u.ambient_dim();
  if (u.dim() == 0 || w.dim() == 0) return Subspace(nc);
  // Solve U^T x = W^T y by taking the kernel of the column-stacked matrix
  // [U^T | -W^T]; the U-part of each kernel vector spans the intersection.
  const std::size_t du = u.dim();
  const std::size_t dw = w.dim();
  Matrix stacked(nc, du + dw);
  for (std::size_t i = 0; i < du; ++i)
    for (std::size_t c = 0; c < nc; ++c) stacked.at(c, i) = u.basis()[i][c];
  for (std::size_t i = 0; i < dw; ++i)
    for (std::size_t c = 0; c < nc; ++c) stacked.at(c, du + i) = -w.basis()[i][c];
  Subspace ker = Subspace::kernel(stacked);
  std::vector<Vec> vecs;
  for (const Vec& z : ker.basis()) {
    Vec v(nc, Scalar(0));
    for (std::size_t i = 0; i < du; ++i) {
      if (z[i] == 0) continue;
      for (std::size_t c = 0; c < nc; ++c) v[c] += z[i] * u.basis()[i][c];
    }
    if (!is_zero_vec(v)) vecs.push_back(std::move(v));
  }
  return Subspace::span(nc, vecs);
}

std::vector<Vec> quotient_representatives(const std::vector<Vec>& numerators,
                                          const std::vector<Vec>& denominators) {
  std::vector<Vec> reps;
  if (numerators.empty()) return reps;
  const std::size_t nc = numerators.front().size();
  std::vector<Vec> current = denominators;
  std::size_t cur_dim = Subspace::span(nc, current).dim();
  for (const Vec& v : numerators) {
    current.push_back(v);
    std::size_t d = Subspace::span(nc, current).dim();
    if (d > cur_dim) {
      reps.push_back(v);
      cur_dim = d;
    } else {
      current.pop_back();
    }
  }
  return reps;
}

}  // namespace cyclolie
