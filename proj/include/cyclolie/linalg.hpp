#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "cyclolie/scalar.hpp"

namespace cyclolie {

using Vec = std::vector<Scalar>;

/// Dense matrix of exact rationals, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Scalar(0)) {}

  /// Build from nested rows; all rows must have equal length.
  static Matrix from_rows(const std::vector<Vec>& rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  std::vector<Vec> to_rows() const;

  Matrix transposed() const;
  bool is_symmetric() const;

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Vec mat_vec(const Matrix& a, const Vec& x);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

/// Reduced row-echelon form with exact pivots.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// One solution of m·x = rhs, or nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& rhs);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Determinant of a square matrix (Gaussian elimination with exact pivots).
Scalar determinant(const Matrix& m);

/// (positive, negative, zero) inertia counts of a symmetric matrix, computed
/// by exact symmetric congruence diagonalization (Sylvester's law makes the
/// result basis-independent). Throws std::invalid_argument if not symmetric.
std::tuple<int, int, int> signature(const Matrix& b);

/// A linear subspace of Q^ambient given by an independent spanning set.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  /// Span of arbitrary vectors: keeps the first vectors (in order) that
  /// enlarge the span, so the stored basis is independent.
  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors);
  static Subspace full(std::size_t ambient_dim);
  /// Right kernel { x : m x = 0 }.
  static Subspace kernel(const Matrix& m);
  /// Column space of m.
  static Subspace column_space(const Matrix& m);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool same_span(const Subspace& other) const;

 private:
  std::size_t ambient_;
  std::vector<Vec> basis_;
};

Subspace sum(const Subspace& u, const Subspace& w);

/// u ∩ w. Throws std::invalid_argument on ambient-dimension mismatch.
Subspace intersect(const Subspace& u, const Subspace& w);

/// Representatives of span(numerators)/span(denominators): the vectors of
/// `numerators` (in order) that enlarge the span of `denominators`. Both the
/// selection and its order are deterministic.
std::vector<Vec> quotient_representatives(const std::vector<Vec>& numerators,
                                          const std::vector<Vec>& denominators);

}  // namespace cyclolie
