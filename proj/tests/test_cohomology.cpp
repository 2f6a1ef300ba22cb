#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclolie/cohomology.hpp"

using namespace cyclolie;

namespace {

LieAlgebra so3() {
  return LieAlgebra::from_brackets(
      3, {{1, 2, 3, Scalar(1)}, {1, 3, 2, Scalar(-1)}, {2, 3, 1, Scalar(1)}});
}

BilinearForm identity_form(int n) {
  return BilinearForm{Matrix::identity(static_cast<std::size_t>(n))};
}

}  // namespace

TEST_CASE("abelian cohomology is the full cochain space") {
  LieAlgebra a = LieAlgebra::abelian(2);
  CochainComplex cx(a);
  // Zero differential: H^p(V,V) = C^p(V,V) of dimension dim * C(dim, p).
  CHECK(cx.adjoint_dim(0) == 2);
  CHECK(cx.adjoint_dim(1) == 4);
  CHECK(cx.adjoint_dim(2) == 2);
  CHECK(cx.trivial_dim(0) == 1);
  CHECK(cx.trivial_dim(1) == 2);
  CHECK(cx.trivial_dim(2) == 1);
}

TEST_CASE("simple three-dimensional algebra has rigid cohomology") {
  CochainComplex cx(so3());
  for (int p = 0; p <= 3; ++p) CHECK(cx.adjoint_dim(p) == 0);
  CHECK(trivial_betti(so3(), 3) == std::vector<int>{1, 0, 0, 1});
}

TEST_CASE("cocycles contain coboundaries") {
  CochainComplex cx(so3());
  for (int p = 1; p <= 2; ++p) {
    Subspace z = cx.adjoint_cocycles(p);
    Subspace b = cx.adjoint_coboundaries(p);
    CHECK(b.dim() <= z.dim());
    for (const Vec& v : b.basis()) CHECK(z.contains(v));
  }
}

TEST_CASE("representatives are independent cocycles") {
  CochainComplex cx(LieAlgebra::abelian(2));
  std::vector<AdjCochain> reps = cx.adjoint_representatives(1);
  CHECK(reps.size() == 4);
  for (const AdjCochain& r : reps) CHECK(coboundary_adj(cx.algebra(), r).is_zero());
}

TEST_CASE("cyclic subspace has binomial dimension") {
  BilinearForm b = identity_form(3);
  for (int p = 0; p <= 2; ++p) {
    Subspace cc = cyclic_subspace(b, p);
    CHECK(cc.dim() == binomial(3, static_cast<unsigned>(p + 1)));
  }
}

TEST_CASE("both cyclic routes agree on a known algebra") {
  CochainComplex cx(so3());
  BilinearForm b = identity_form(3);
  for (int p = 1; p <= 3; ++p)
    CHECK(cyclic_dim(cx, b, p) == cyclic_dim_via_trivial(cx, p));
  // HC^2 of the simple three-dimensional algebra is one-dimensional and its
  // representative is a cyclic cocycle.
  CHECK(cyclic_dim(cx, b, 2) == 1);
  std::vector<AdjCochain> reps = cyclic_representatives(cx, b, 2);
  REQUIRE(reps.size() == 1);
  CHECK(is_cyclic(reps[0], b));
  CHECK(coboundary_adj(cx.algebra(), reps[0]).is_zero());
}

TEST_CASE("reduced cyclic dimension never exceeds cyclic") {
  CochainComplex cx(so3());
  BilinearForm b = identity_form(3);
  for (int p = 0; p <= 3; ++p) CHECK(reduced_cyclic_dim(cx, b, p) <= cyclic_dim(cx, b, p));
}

TEST_CASE("table rows carry all three dimensions") {
  std::vector<CohomologyRow> rows = cohomology_table(so3(), identity_form(3), 3);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == CohomologyRow{0, 0, 0, 0});
  CHECK(rows[2].hc == 1);
  CHECK(rows[2].h == 0);
}

TEST_CASE("direct sums add dimensions and satisfy Kunneth") {
  LieAlgebra s = so3();
  LieAlgebra sum1 = direct_sum(s, LieAlgebra::abelian(1));
  CHECK(sum1.dim() == 4);
  BilinearForm b4 = direct_sum(identity_form(3), identity_form(1));
  CHECK(b4.dim() == 4);
  CHECK(is_invariant(sum1, b4));
  CHECK(kunneth_check(s, LieAlgebra::abelian(1), 4));
  CHECK(kunneth_check(s, LieAlgebra::abelian(2), 4));
  CHECK(kunneth_check(LieAlgebra::abelian(2), LieAlgebra::abelian(3), 4));

  // Betti numbers of s + C convolve those of the summands.
  std::vector<int> bs = trivial_betti(s, 4);
  std::vector<int> bc = trivial_betti(LieAlgebra::abelian(1), 4);
  std::vector<int> bsum = trivial_betti(sum1, 4);
  for (int q = 0; q <= 4; ++q) {
    int conv = 0;
    for (int i = 0; i <= q; ++i) conv += bs[static_cast<std::size_t>(i)] * bc[static_cast<std::size_t>(q - i)];
    CHECK(bsum[static_cast<std::size_t>(q)] == conv);
  }
}
