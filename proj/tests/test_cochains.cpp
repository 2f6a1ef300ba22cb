#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclolie/cochains.hpp"

using namespace cyclolie;

namespace {

// so(3): [e1,e2] = e3, [e1,e3] = -e2, [e2,e3] = e1; the identity form is
// invariant for it.
LieAlgebra so3() {
  return LieAlgebra::from_brackets(
      3, {{1, 2, 3, Scalar(1)}, {1, 3, 2, Scalar(-1)}, {2, 3, 1, Scalar(1)}});
}

LieAlgebra heisenberg() { return LieAlgebra::from_brackets(3, {{1, 2, 3, Scalar(1)}}); }

BilinearForm identity_form(int n) { return BilinearForm{Matrix::identity(static_cast<std::size_t>(n))}; }

}  // namespace

TEST_CASE("constructor enforces the Jacobi identity") {
  CHECK_NOTHROW(so3());
  // [e1,e2]=e3, [e1,e3]=e2, [e2,e3]=e1 violates Jacobi.
  CHECK_THROWS_AS(LieAlgebra::from_brackets(
                      3, {{1, 2, 3, Scalar(1)}, {1, 3, 2, Scalar(1)}, {2, 3, 1, Scalar(1)}}),
                  std::invalid_argument);
  CHECK(LieAlgebra::abelian(4).d().is_zero());
}

TEST_CASE("parse and render round-trip") {
  const std::string text = "psi[{1,2}->3] - 2*psi[{1,3}->1] + 1/2*psi[{2,3}->2]";
  AdjCochain c = parse_cochain(text, 3);
  CHECK(c.degree == 2);
  CHECK(c.coeffs.size() == 3);
  CHECK(parse_cochain(render_cochain(c), 3) == c);

  AdjCochain lin = parse_cochain("phi[{1}->2] - phi[{2}->1]", 3);
  CHECK(lin.degree == 1);
  CHECK(render_cochain(lin) == "phi[{1}->2] - phi[{2}->1]");
}

TEST_CASE("parse substitutes lambda and rejects malformed input") {
  AdjCochain c = parse_cochain("lambda*psi[{1,2}->1]", 3, Scalar(5));
  CHECK(c.coeffs.at({{1, 2}, 1}) == Scalar(5));
  CHECK_THROWS_AS(parse_cochain("lambda*psi[{1,2}->1]", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_cochain("psi[{1,2z}->1]", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_cochain("psi[{1,2}->4]", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_cochain("psi[{1,2->3]", 3), std::invalid_argument);
}

TEST_CASE("evaluation is antisymmetric") {
  AdjCochain d = so3().d();
  Vec v12 = eval(d, {1, 2});
  Vec v21 = eval(d, {2, 1});
  for (std::size_t i = 0; i < 3; ++i) CHECK(v12[i] == -v21[i]);
  for (const Scalar& x : eval(d, {1, 1})) CHECK(x == 0);
  CHECK(eval(d, {1, 2})[2] == Scalar(1));
  CHECK_THROWS_AS(eval(d, {0, 1}), std::out_of_range);
}

TEST_CASE("bracket with the identity reproduces the bracket") {
  AdjCochain d = so3().d();
  CHECK(nr_bracket(d, identity_cochain(3)) == d);
  CHECK(nr_bracket(d, d).is_zero());
}

TEST_CASE("bracket is graded antisymmetric") {
  AdjCochain a = parse_cochain("phi[{1}->2] + 3*phi[{3}->3]", 3);
  AdjCochain b = parse_cochain("psi[{1,2}->1] - psi[{2,3}->2]", 3);
  // [a,b] = -(-1)^{(k+1)(l+1)} [b,a]; (k+1)(l+1) is even for degrees (1,2)
  // and odd for (2,2).
  CHECK(nr_bracket(a, b) == scale(nr_bracket(b, a), Scalar(-1)));
  AdjCochain c = parse_cochain("psi[{1,3}->2]", 3);
  CHECK(nr_bracket(b, c) == scale(nr_bracket(c, b), Scalar(1)));
}

TEST_CASE("coboundary matches the explicit two-sum formula") {
  LieAlgebra alg = so3();
  for (const char* text : {"phi[{1}->2]", "phi[{2}->3] - 2*phi[{1}->1]"}) {
    AdjCochain c = parse_cochain(text, 3);
    CHECK(coboundary_adj(alg, c) == coboundary_adj_explicit(alg, c));
  }
  AdjCochain two = parse_cochain("psi[{1,2}->3] + psi[{1,3}->1]", 3);
  CHECK(coboundary_adj(alg, two) == coboundary_adj_explicit(alg, two));
}

TEST_CASE("coboundary squares to zero") {
  LieAlgebra alg = so3();
  AdjCochain c = parse_cochain("phi[{1}->2] - phi[{3}->1]", 3);
  CHECK(coboundary_adj(alg, coboundary_adj(alg, c)).is_zero());

  AdjCochain x0 = make_adj(3, 0);
  x0.coeffs[{{}, 1}] = Scalar(1);
  x0.coeffs[{{}, 3}] = Scalar(-2);
  CHECK(coboundary_adj(alg, coboundary_adj(alg, x0)).is_zero());

  TrivCochain t;
  t.dim = 3;
  t.degree = 1;
  t.coeffs[{1}] = Scalar(1);
  CHECK(coboundary_triv(alg, coboundary_triv(alg, t)).is_zero());
}

TEST_CASE("degree-zero coboundary is the inner derivation") {
  LieAlgebra alg = so3();
  Vec x = {Scalar(0), Scalar(1), Scalar(0)};  // e2
  AdjCochain dx = coboundary_adj0(alg, x);
  // (D e2)(v) = [v, e2]: e1 -> e3, e3 -> -e1.
  CHECK(eval(dx, {1})[2] == Scalar(1));
  CHECK(eval(dx, {3})[0] == Scalar(-1));
  AdjCochain x0 = make_adj(3, 0);
  x0.coeffs[{{}, 2}] = Scalar(1);
  CHECK(coboundary_adj(alg, x0) == dx);
}

TEST_CASE("invariance detects bad forms") {
  CHECK(is_invariant(so3(), identity_form(3)));
  CHECK(!is_invariant(heisenberg(), identity_form(3)));
  CHECK(is_cyclic(so3().d(), identity_form(3)));
}

TEST_CASE("tilde lowers and untilde raises") {
  BilinearForm b = identity_form(3);
  AdjCochain d = so3().d();
  TildeResult t = tilde(d, b);
  CHECK(t.alternating);
  REQUIRE(t.form.has_value());
  CHECK(untilde(*t.form, b) == d);

  // A symmetric 1-cochain lowers to a non-alternating form.
  AdjCochain sym = parse_cochain("phi[{1}->1]", 3);
  CHECK(!tilde(sym, b).alternating);
  CHECK(!is_cyclic(sym, b));

  Matrix degenerate(3, 3);
  CHECK_THROWS_AS(untilde(*t.form, BilinearForm{degenerate}), std::invalid_argument);
}

TEST_CASE("scalar bracket mirrors the cochain bracket through tilde") {
  LieAlgebra alg = so3();
  BilinearForm b = identity_form(3);
  AdjCochain u = parse_cochain("phi[{1}->2] - phi[{2}->1]", 3);
  AdjCochain v = parse_cochain("phi[{2}->3] - phi[{3}->2]", 3);
  REQUIRE(is_cyclic(u, b));
  REQUIRE(is_cyclic(v, b));
  AdjCochain uv = nr_bracket(u, v);
  REQUIRE(is_cyclic(uv, b));
  CHECK(tilde_form(uv, b) == bracket_triv(tilde_form(u, b), tilde_form(v, b), b));
}

TEST_CASE("coordinates round-trip") {
  std::vector<AdjKey> basis = adj_basis(3, 2);
  CHECK(basis.size() == 9);  // C(3,2) * 3
  AdjCochain c = parse_cochain("psi[{1,2}->3] - psi[{2,3}->1]", 3);
  Vec v = to_vector(c, basis);
  CHECK(from_vector(v, basis, 3, 2) == c);
}
