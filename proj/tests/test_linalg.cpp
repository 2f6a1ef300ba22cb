#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cyclolie/linalg.hpp"

using namespace cyclolie;

namespace {

Matrix from(const std::vector<std::vector<int>>& rows) {
  std::vector<Vec> out;
  for (const auto& r : rows) {
    Vec v;
    for (int x : r) v.push_back(Scalar(x));
    out.push_back(std::move(v));
  }
  return Matrix::from_rows(out);
}

}  // namespace

TEST_CASE("rref ranks and pivots") {
  Matrix m = from({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  RrefResult r = rref(m);
  CHECK(r.rank() == 2);
  CHECK(rank(m) == 2);
  CHECK(rank(Matrix::identity(4)) == 4);
  CHECK(rank(Matrix(3, 3)) == 0);
}

TEST_CASE("solve and inverse agree") {
  Matrix m = from({{2, 1}, {1, 1}});
  Vec rhs = {Scalar(3), Scalar(2)};
  auto x = solve(m, rhs);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Scalar(1));
  CHECK((*x)[1] == Scalar(1));

  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(mat_mul(m, *inv) == Matrix::identity(2));

  Matrix singular = from({{1, 2}, {2, 4}});
  CHECK(!inverse(singular).has_value());
  CHECK(!solve(singular, {Scalar(1), Scalar(0)}).has_value());
}

TEST_CASE("determinant multiplies") {
  Matrix a = from({{2, 1, 0}, {0, 3, 1}, {1, 0, 1}});
  Matrix b = from({{1, 1, 1}, {0, 1, 2}, {0, 0, 1}});
  CHECK(determinant(b) == Scalar(1));
  CHECK(determinant(mat_mul(a, b)) == determinant(a) * determinant(b));
  CHECK(determinant(Matrix(2, 2)) == Scalar(0));
}

TEST_CASE("signature counts inertia") {
  Matrix d = from({{1, 0, 0}, {0, -1, 0}, {0, 0, 0}});
  auto [pos, neg, zero] = signature(d);
  CHECK(pos == 1);
  CHECK(neg == 1);
  CHECK(zero == 1);
  CHECK(signature(Matrix::identity(3)) == std::tuple<int, int, int>{3, 0, 0});
  CHECK_THROWS_AS(signature(from({{0, 1}, {0, 0}})), std::invalid_argument);
}

TEST_CASE("signature is a congruence invariant") {
  // Sylvester: G^T B G has the same inertia for any invertible G.
  Matrix b = from({{0, 1, 0}, {1, 0, 0}, {0, 0, 2}});
  auto base = signature(b);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    Matrix g = Matrix::identity(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (i != j) g.at(i, j) = Scalar(static_cast<long>(rng() % 5) - 2);
    if (determinant(g) == 0) continue;
    CHECK(signature(mat_mul(g.transposed(), mat_mul(b, g))) == base);
  }
}

TEST_CASE("subspace span keeps an independent basis") {
  std::vector<Vec> vecs = {{Scalar(1), Scalar(0)}, {Scalar(2), Scalar(0)}, {Scalar(0), Scalar(1)}};
  Subspace s = Subspace::span(2, vecs);
  CHECK(s.dim() == 2);
  CHECK(s.contains({Scalar(5), Scalar(-3)}));
  CHECK(Subspace::span(3, {}).dim() == 0);
  CHECK(Subspace::full(3).dim() == 3);
}

TEST_CASE("kernel and column space split the rank") {
  Matrix m = from({{1, 2, 3}, {2, 4, 6}});
  Subspace ker = Subspace::kernel(m);
  Subspace col = Subspace::column_space(m);
  CHECK(ker.dim() + col.dim() == 3);
  for (const Vec& v : ker.basis()) {
    Vec image = mat_vec(m, v);
    for (const Scalar& x : image) CHECK(x == 0);
  }
}

TEST_CASE("sum and intersection satisfy the dimension formula") {
  Subspace u = Subspace::span(3, {{Scalar(1), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(0)}});
  Subspace w = Subspace::span(3, {{Scalar(0), Scalar(1), Scalar(0)}, {Scalar(0), Scalar(0), Scalar(1)}});
  Subspace both = intersect(u, w);
  Subspace total = sum(u, w);
  CHECK(u.dim() + w.dim() == both.dim() + total.dim());
  CHECK(both.dim() == 1);
  CHECK(both.contains({Scalar(0), Scalar(1), Scalar(0)}));
  CHECK(total.same_span(Subspace::full(3)));
  CHECK_THROWS_AS(intersect(u, Subspace::full(2)), std::invalid_argument);
}

TEST_CASE("quotient representatives enlarge the denominator span") {
  std::vector<Vec> nums = {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}, {Scalar(1), Scalar(1)}};
  std::vector<Vec> dens = {{Scalar(1), Scalar(0)}};
  std::vector<Vec> reps = quotient_representatives(nums, dens);
  REQUIRE(reps.size() == 1);
  CHECK(reps[0] == Vec{Scalar(0), Scalar(1)});
  CHECK(quotient_representatives(nums, nums).empty());
}
