#include "cyclolie/deformations.hpp"

#include <set>
#include <stdexcept>

namespace cyclolie {

namespace {

void add_poly_cochain(std::map<Monomial, AdjCochain>& acc, const Monomial& mono,
                      const AdjCochain& c) {
  if (c.is_zero()) return;
  auto it = acc.find(mono);
  if (it == acc.end()) {
    acc.emplace(mono, c);
  } else {
    it->second = add(it->second, c);
    if (it->second.is_zero()) acc.erase(it);
  }
}

}  // namespace

AdjCochain Deformation::evaluate(const std::map<std::string, Scalar>& point) const {
  AdjCochain acc = base;
  for (const DeformationTerm& term : terms) {
    Scalar coef(1);
    for (const auto& [name, exp] : term.monomial) {
      auto it = point.find(name);
      if (it == point.end()) throw std::out_of_range("evaluate: unbound parameter " + name);
      coef *= scalar_pow(it->second, static_cast<unsigned>(exp));
    }
    if (term.denominator) {
      Scalar den = poly_eval(*term.denominator, point);
      if (den == 0) throw std::domain_error("evaluate: term denominator vanishes at the point");
      coef /= den;
    }
    if (coef != 0) acc = add(acc, term.cochain, coef);
  }
  return acc;
}

std::vector<Scalar> Deformation::relations_at(const std::map<std::string, Scalar>& point) const {
  std::vector<Scalar> out;
  out.reserve(relations.size());
  for (const Polynomial& r : relations) out.push_back(poly_eval(r, point));
  return out;
}

std::map<Monomial, AdjCochain> Deformation::self_bracket() const {
  std::vector<std::pair<Monomial, AdjCochain>> all;
  all.emplace_back(Monomial{}, base);
  for (const DeformationTerm& term : terms) {
    if (term.denominator)
      throw std::invalid_argument("self_bracket: family has a term denominator");
    all.emplace_back(term.monomial, term.cochain);
  }
  return poly_self_bracket(all);
}

bool Deformation::self_bracket_vanishes() const { return self_bracket().empty(); }

std::map<Monomial, AdjCochain> poly_self_bracket(
    const std::vector<std::pair<Monomial, AdjCochain>>& terms) {
  std::map<Monomial, AdjCochain> acc;
  for (const auto& [m1, c1] : terms) {
    for (const auto& [m2, c2] : terms) {
      Monomial mono = m1;
      for (const auto& [name, exp] : m2) mono[name] += exp;
      add_poly_cochain(acc, mono, nr_bracket(c1, c2));
    }
  }
  return acc;
}

AdjCochain pushforward(const Matrix& g, const AdjCochain& d) {
  const int n = d.dim;
  if (g.rows() != static_cast<std::size_t>(n) || g.cols() != static_cast<std::size_t>(n))
    throw std::invalid_argument("pushforward: matrix shape");
  if (d.degree != 2) throw std::invalid_argument("pushforward: needs a 2-cochain");
  auto gi = inverse(g);
  if (!gi) throw std::invalid_argument("pushforward: matrix is singular");
  AdjCochain out = make_adj(n, 2);
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      Vec acc(n, Scalar(0));
      for (int i = 0; i < n; ++i) {
        if (g.at(i, a - 1) == 0) continue;
        for (int j = 0; j < n; ++j) {
          if (g.at(j, b - 1) == 0) continue;
          Vec dv = eval(d, {i + 1, j + 1});
          const Scalar f = g.at(i, a - 1) * g.at(j, b - 1);
          for (int t = 0; t < n; ++t)
            if (dv[t] != 0) acc[t] += f * dv[t];
        }
      }
      for (int t = 0; t < n; ++t) {
        Scalar w(0);
        for (int s = 0; s < n; ++s)
          if (acc[s] != 0) w += gi->at(t, s) * acc[s];
        if (w != 0) out.coeffs.emplace(AdjKey{{a, b}, t + 1}, w);
      }
    }
  }
  return out;
}

bool check_isomorphism(const Matrix& g, const AdjCochain& d1, const AdjCochain& d2) {
  const int n = d1.dim;
  if (d2.dim != n || g.rows() != static_cast<std::size_t>(n) ||
      g.cols() != static_cast<std::size_t>(n))
    throw std::invalid_argument("check_isomorphism: shape mismatch");
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      Vec v = eval(d1, {a, b});
      Vec lhs(n, Scalar(0));
      for (int t = 0; t < n; ++t)
        for (int s = 0; s < n; ++s)
          if (v[s] != 0) lhs[t] += g.at(t, s) * v[s];
      Vec rhs(n, Scalar(0));
      for (int i = 0; i < n; ++i) {
        if (g.at(i, a - 1) == 0) continue;
        for (int j = 0; j < n; ++j) {
          if (g.at(j, b - 1) == 0) continue;
          Vec dv = eval(d2, {i + 1, j + 1});
          const Scalar f = g.at(i, a - 1) * g.at(j, b - 1);
          for (int t = 0; t < n; ++t)
            if (dv[t] != 0) rhs[t] += f * dv[t];
        }
      }
      if (lhs != rhs) return false;
    }
  }
  return true;
}

AdjCochain gauge_derivative(const LieAlgebra& alg, const AdjCochain& beta) {
  const int n = alg.dim();
  if (beta.dim != n || beta.degree != 1)
    throw std::invalid_argument("gauge_derivative: beta must be a 1-cochain");
  Matrix nmat(n, n);
  for (const auto& [key, value] : beta.coeffs) nmat.at(key.second - 1, key.first[0] - 1) = value;
  // Entries of eps -> pushforward(I + eps*N, d) are rational with denominator
  // det(I + eps*N) (degree <= n), and cleared numerators have degree <= n+1.
  // Sampling the orbit at eps values away from the poles and multiplying each
  // sample by its exact determinant makes every entry a polynomial Q(eps)
  // that Lagrange interpolation recovers exactly; then, since det(0) = 1,
  //   f'(0) = Q'(0) - Q(0) * det'(0),   det'(0) = tr(N).
  const int needed = n + 3;  // one more than deg Q + 1, for slack
  std::vector<Scalar> pts;
  std::vector<Scalar> dets;
  std::vector<AdjCochain> vals;
  for (int k = 1; static_cast<int>(pts.size()) < needed; ++k) {
    if (k > 3 * needed) throw std::runtime_error("gauge_derivative: not enough sample points");
    Scalar eps(k);
    Matrix g = Matrix::identity(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g.at(i, j) += eps * nmat.at(i, j);
    Scalar det = determinant(g);
    if (det == 0) continue;
    pts.push_back(eps);
    dets.push_back(det);
    vals.push_back(pushforward(g, alg.d()));
  }
  Scalar trace(0);
  for (int i = 0; i < n; ++i) trace += nmat.at(i, i);
  std::set<AdjKey> keys;
  for (const AdjCochain& v : vals)
    for (const auto& [key, value] : v.coeffs) keys.insert(key);
  AdjCochain lin = make_adj(n, 2);
  for (const AdjKey& key : keys) {
    Scalar q0(0), q1(0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      auto it = vals[i].coeffs.find(key);
      Scalar y = (it == vals[i].coeffs.end()) ? Scalar(0) : it->second;
      y *= dets[i];
      if (y == 0) continue;
      // l_i(0) and l_i'(0) of the Lagrange basis polynomial at node pts[i].
      Scalar li(1), dsum(0);
      for (std::size_t j = 0; j < pts.size(); ++j) {
        if (j == i) continue;
        li *= (Scalar(0) - pts[j]) / (pts[i] - pts[j]);
        dsum += Scalar(1) / (Scalar(0) - pts[j]);
      }
      q0 += y * li;
      q1 += y * li * dsum;
    }
    Scalar der = q1 - q0 * trace;
    if (der != 0) lin.coeffs.emplace(key, der);
  }
  return lin;
}

bool gauge_orbit_check(const LieAlgebra& alg, const AdjCochain& beta) {
  return gauge_derivative(alg, beta) == nr_bracket(alg.d(), beta);
}

VersalResult versal_order2(CochainComplex& cx, const BilinearForm& b,
                           const std::vector<AdjCochain>& deltas) {
  const int n = cx.dim();
  const std::vector<AdjKey> amb3 = adj_basis(n, 3);
  const std::vector<AdjKey> amb2 = adj_basis(n, 2);
  const std::vector<Vec> cyc2 = cyclic_subspace(b, 2).basis();
  Subspace zcc3 = cyclic_cocycles(cx, b, 3);
  Subspace img = cyclic_coboundary_image(cx, b, 3);
  const std::vector<Vec> alphas_v = quotient_representatives(zcc3.basis(), img.basis());
  // Solve, for each i <= j:  [d, xi] + sum_k a_k alpha_k = -s_ij [delta_i, delta_j].
  // The xi-columns are [d, c] itself (not the signed coboundary) so that the
  // second-order term of the family cancels the quadratic bracket part.
  std::vector<Vec> cols;
  for (const Vec& v : cyc2) {
    AdjCochain c = from_vector(v, amb2, n, 2);
    cols.push_back(to_vector(nr_bracket(cx.algebra().d(), c), amb3));
  }
  for (const Vec& a : alphas_v) cols.push_back(a);
  Matrix amat(static_cast<int>(amb3.size()), static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < amb3.size(); ++r)
      amat.at(static_cast<int>(r), static_cast<int>(c)) = cols[c][r];
  const int m = static_cast<int>(deltas.size());
  VersalResult res;
  res.leading_relations.assign(alphas_v.size(), Polynomial{});
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      AdjCochain br = nr_bracket(deltas[i], deltas[j]);
      Scalar s = (i < j) ? Scalar(1) : Scalar(1, 2);
      Vec rhs = to_vector(scale(br, -s), amb3);
      auto sol = solve(amat, rhs);
      if (!sol) throw std::runtime_error("versal_order2: quadratic bracket not decomposable");
      AdjCochain xc = make_adj(n, 2);
      for (std::size_t l = 0; l < cyc2.size(); ++l)
        if ((*sol)[l] != 0) xc = add(xc, from_vector(cyc2[l], amb2, n, 2), (*sol)[l]);
      res.second_order_terms.emplace(std::make_pair(i, j), std::move(xc));
      for (std::size_t k = 0; k < alphas_v.size(); ++k) {
        const Scalar& a = (*sol)[cyc2.size() + k];
        if (a != 0)
          res.leading_relations[k] =
              poly_add(res.leading_relations[k],
                       poly_scale(poly_mul(poly_variable("t" + std::to_string(i + 1)),
                                           poly_variable("t" + std::to_string(j + 1))),
                                  a));
      }
    }
  }
  for (const Vec& a : alphas_v) res.alphas.push_back(from_vector(a, amb3, n, 3));
  return res;
}

}  // namespace cyclolie
