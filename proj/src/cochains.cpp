#include "cyclolie/cochains.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cyclolie {

namespace {

void add_coeff(std::map<AdjKey, Scalar>& coeffs, const AdjKey& key, const Scalar& value) {
  if (value == 0) return;
  auto it = coeffs.find(key);
  if (it == coeffs.end()) {
    coeffs.emplace(key, value);
  } else {
    it->second += value;
    if (it->second == 0) coeffs.erase(it);
  }
}

void add_coeff(std::map<MultiIndex, Scalar>& coeffs, const MultiIndex& key, const Scalar& value) {
  if (value == 0) return;
  auto it = coeffs.find(key);
  if (it == coeffs.end()) {
    coeffs.emplace(key, value);
  } else {
    it->second += value;
    if (it->second == 0) coeffs.erase(it);
  }
}

bool contains_index(const MultiIndex& index, int x) {
  return std::binary_search(index.begin(), index.end(), x);
}

void check_key(const AdjKey& key, int dim, int degree) {
  const auto& [index, target] = key;
  if (static_cast<int>(index.size()) != degree)
    throw std::invalid_argument("cochain key has wrong degree");
  if (target < 1 || target > dim) throw std::invalid_argument("cochain target out of range");
  int prev = 0;
  for (int x : index) {
    if (x <= prev || x > dim) throw std::invalid_argument("cochain index not strict in range");
    prev = x;
  }
}

}  // namespace

LieAlgebra::LieAlgebra(int dim, AdjCochain bracket) {
  dim_ = dim;
  d_ = std::move(bracket);
  if (d_.dim != dim || d_.degree != 2)
    throw std::invalid_argument("LieAlgebra bracket must be a 2-cochain of matching dimension");
  AdjCochain dd = nr_bracket(d_, d_);
  if (!dd.is_zero()) throw std::invalid_argument("Jacobi identity fails: [d,d] != 0");
}

LieAlgebra LieAlgebra::unchecked(int dim, AdjCochain bracket) {
  if (bracket.dim != dim || bracket.degree != 2)
    throw std::invalid_argument("LieAlgebra bracket must be a 2-cochain of matching dimension");
  LieAlgebra alg;
  alg.dim_ = dim;
  alg.d_ = std::move(bracket);
  return alg;
}

LieAlgebra LieAlgebra::from_brackets(
    int dim, const std::vector<std::tuple<int, int, int, Scalar>>& brackets) {
  AdjCochain d = make_adj(dim, 2);
  for (const auto& [i, j, k, c] : brackets) {
    if (i >= j) throw std::invalid_argument("structure constants need i < j");
    AdjKey key{{i, j}, k};
    check_key(key, dim, 2);
    add_coeff(d.coeffs, key, c);
  }
  return LieAlgebra(dim, std::move(d));
}

LieAlgebra LieAlgebra::abelian(int dim) { return LieAlgebra(dim, make_adj(dim, 2)); }

AdjCochain make_adj(int dim, int degree) {
  AdjCochain c;
  c.dim = dim;
  c.degree = degree;
  return c;
}

AdjCochain adj_basis_element(int dim, const MultiIndex& index, int target) {
  AdjCochain c = make_adj(dim, static_cast<int>(index.size()));
  AdjKey key{index, target};
  check_key(key, dim, c.degree);
  c.coeffs.emplace(std::move(key), Scalar(1));
  return c;
}

AdjCochain identity_cochain(int dim) {
  AdjCochain c = make_adj(dim, 1);
  for (int i = 1; i <= dim; ++i) c.coeffs.emplace(AdjKey{{i}, i}, Scalar(1));
  return c;
}

AdjCochain add(const AdjCochain& a, const AdjCochain& b, const Scalar& scale_b) {
  if (a.dim != b.dim || a.degree != b.degree)
    throw std::invalid_argument("cochain add: shape mismatch");
  AdjCochain out = a;
  for (const auto& [key, value] : b.coeffs) add_coeff(out.coeffs, key, scale_b * value);
  return out;
}

AdjCochain scale(const AdjCochain& a, const Scalar& s) {
  AdjCochain out = make_adj(a.dim, a.degree);
  if (s == 0) return out;
  for (const auto& [key, value] : a.coeffs) out.coeffs.emplace(key, s * value);
  return out;
}

TrivCochain add(const TrivCochain& a, const TrivCochain& b, const Scalar& scale_b) {
  if (a.dim != b.dim || a.degree != b.degree)
    throw std::invalid_argument("cochain add: shape mismatch");
  TrivCochain out = a;
  for (const auto& [key, value] : b.coeffs) add_coeff(out.coeffs, key, scale_b * value);
  return out;
}

TrivCochain scale(const TrivCochain& a, const Scalar& s) {
  TrivCochain out;
  out.dim = a.dim;
  out.degree = a.degree;
  if (s == 0) return out;
  for (const auto& [key, value] : a.coeffs) out.coeffs.emplace(key, s * value);
  return out;
}

Vec eval(const AdjCochain& c, const std::vector<int>& args) {
  if (static_cast<int>(args.size()) != c.degree)
    throw std::invalid_argument("eval: argument count must equal the degree");
  for (int x : args)
    if (x < 1 || x > c.dim) throw std::out_of_range("eval: basis index out of range");
  Vec out(c.dim, Scalar(0));
  auto sorted = sort_with_sign(args);
  if (!sorted) return out;
  const auto& [index, sign] = *sorted;
  for (int i = 1; i <= c.dim; ++i) {
    auto it = c.coeffs.find(AdjKey{index, i});
    if (it != c.coeffs.end()) out[i - 1] += Scalar(sign) * it->second;
  }
  return out;
}

Scalar eval(const TrivCochain& c, const std::vector<int>& args) {
  if (static_cast<int>(args.size()) != c.degree)
    throw std::invalid_argument("eval: argument count must equal the degree");
  for (int x : args)
    if (x < 1 || x > c.dim) throw std::out_of_range("eval: basis index out of range");
  auto sorted = sort_with_sign(args);
  if (!sorted) return Scalar(0);
  auto it = c.coeffs.find(sorted->first);
  if (it == c.coeffs.end()) return Scalar(0);
  return Scalar(sorted->second) * it->second;
}

AdjCochain compose(const AdjCochain& phi, const AdjCochain& psi) {
  if (phi.dim != psi.dim) throw std::invalid_argument("compose: dimension mismatch");
  AdjCochain out = make_adj(phi.dim, phi.degree + psi.degree - 1);
  for (const auto& [phikey, cphi] : phi.coeffs) {
    const auto& [index_i, target_i] = phikey;
    for (const auto& [psikey, cpsi] : psi.coeffs) {
      const auto& [index_j, target_j] = psikey;
      if (!contains_index(index_i, target_j)) continue;
      MultiIndex rest;  // I \ {j}
      rest.reserve(index_i.size() - 1);
      for (int x : index_i)
        if (x != target_j) rest.push_back(x);
      bool disjoint = true;
      for (int x : index_j)
        if (contains_index(rest, x)) {
          disjoint = false;
          break;
        }
      if (!disjoint) continue;
      MultiIndex merged;
      merged.reserve(index_j.size() + rest.size());
      std::merge(index_j.begin(), index_j.end(), rest.begin(), rest.end(),
                 std::back_inserter(merged));
      int s = split_sign(index_j, rest);
      int below = 0;
      for (int x : rest)
        if (x < target_j) ++below;
      if (below & 1) s = -s;
      add_coeff(out.coeffs, AdjKey{std::move(merged), target_i}, Scalar(s) * cphi * cpsi);
    }
  }
  return out;
}

AdjCochain nr_bracket(const AdjCochain& phi, const AdjCochain& psi) {
  AdjCochain a = compose(phi, psi);
  AdjCochain b = compose(psi, phi);
  int sgn = (((phi.degree + 1) * (psi.degree + 1)) & 1) ? -1 : 1;
  return add(a, b, Scalar(-sgn));
}

AdjCochain coboundary_adj0(const LieAlgebra& alg, const Vec& x) {
  const int n = alg.dim();
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("coboundary_adj0: vector length mismatch");
  AdjCochain out = make_adj(n, 1);
  for (const auto& [key, c] : alg.d().coeffs) {
    const int i = key.first[0];
    const int j = key.first[1];
    const int k = key.second;
    // d(e_i,e_j) = c e_k: (Dx)(e_i) += x_j d(e_i,e_j), (Dx)(e_j) -= x_i d(e_i,e_j)
    if (x[j - 1] != 0) add_coeff(out.coeffs, AdjKey{{i}, k}, c * x[j - 1]);
    if (x[i - 1] != 0) add_coeff(out.coeffs, AdjKey{{j}, k}, -c * x[i - 1]);
  }
  return out;
}

AdjCochain coboundary_adj(const LieAlgebra& alg, const AdjCochain& c) {
  if (c.dim != alg.dim()) throw std::invalid_argument("coboundary_adj: dimension mismatch");
  if (c.degree == 0) {
    Vec x(alg.dim(), Scalar(0));
    for (const auto& [key, value] : c.coeffs) x[key.second - 1] = value;
    return coboundary_adj0(alg, x);
  }
  const Scalar eps(((c.degree + 1) & 1) ? -1 : 1);
  return scale(nr_bracket(alg.d(), c), eps);
}

AdjCochain coboundary_adj_explicit(const LieAlgebra& alg, const AdjCochain& c) {
  const int n = alg.dim();
  const int p = c.degree;
  AdjCochain out = make_adj(n, p + 1);
  for (const MultiIndex& m : enumerate_multiindices(n, p + 1)) {
    Vec acc(n, Scalar(0));
    // action term: sum_i (-1)^i [v_i, c(..v̂_i..)]  (0-based exponent)
    for (int idx = 0; idx <= p; ++idx) {
      std::vector<int> rest;
      rest.reserve(p);
      for (int t = 0; t <= p; ++t)
        if (t != idx) rest.push_back(m[t]);
      Vec w = eval(c, rest);
      for (int wm = 0; wm < n; ++wm) {
        if (w[wm] == 0) continue;
        Vec dv = eval(alg.d(), {m[idx], wm + 1});
        Scalar s((idx & 1) ? -1 : 1);
        for (int t = 0; t < n; ++t)
          if (dv[t] != 0) acc[t] += s * w[wm] * dv[t];
      }
    }
    // bracket-insertion term: sum_{a<b} (-1)^{a+b} c([v_a,v_b], rest)  (1-based)
    for (int a = 0; a <= p; ++a) {
      for (int b = a + 1; b <= p; ++b) {
        Vec dv = eval(alg.d(), {m[a], m[b]});
        std::vector<int> rest;
        rest.reserve(p - 1);
        for (int t = 0; t <= p; ++t)
          if (t != a && t != b) rest.push_back(m[t]);
        for (int wm = 0; wm < n; ++wm) {
          if (dv[wm] == 0) continue;
          std::vector<int> args;
          args.reserve(p);
          args.push_back(wm + 1);
          args.insert(args.end(), rest.begin(), rest.end());
          Vec w = eval(c, args);
          Scalar s(((a + b) & 1) ? 1 : -1);  // (-1)^{(a+1)+(b+1)}
          for (int t = 0; t < n; ++t)
            if (w[t] != 0) acc[t] += s * dv[wm] * w[t];
        }
      }
    }
    for (int t = 0; t < n; ++t)
      if (acc[t] != 0) out.coeffs.emplace(AdjKey{m, t + 1}, acc[t]);
  }
  return out;
}

TrivCochain coboundary_triv(const LieAlgebra& alg, const TrivCochain& c) {
  const int n = alg.dim();
  const int q = c.degree;
  TrivCochain out;
  out.dim = n;
  out.degree = q + 1;
  for (const MultiIndex& m : enumerate_multiindices(n, q + 1)) {
    Scalar val(0);
    for (int a = 0; a <= q; ++a) {
      for (int b = a + 1; b <= q; ++b) {
        Vec dv = eval(alg.d(), {m[a], m[b]});
        std::vector<int> rest;
        rest.reserve(q);
        for (int t = 0; t <= q; ++t)
          if (t != a && t != b) rest.push_back(m[t]);
        for (int wm = 0; wm < n; ++wm) {
          if (dv[wm] == 0) continue;
          std::vector<int> args;
          args.reserve(q);
          args.push_back(wm + 1);
          args.insert(args.end(), rest.begin(), rest.end());
          auto sorted = sort_with_sign(args);
          if (!sorted) continue;
          auto it = c.coeffs.find(sorted->first);
          if (it == c.coeffs.end()) continue;
          Scalar s(((a + b) & 1) ? 1 : -1);  // (-1)^{(a+1)+(b+1)}
          val += s * dv[wm] * Scalar(sorted->second) * it->second;
        }
      }
    }
    if (val != 0) out.coeffs.emplace(m, val);
  }
  return out;
}

namespace {

std::map<AdjKey, Scalar> tilde_table(const AdjCochain& c, const BilinearForm& b) {
  const int n = c.dim;
  std::map<AdjKey, Scalar> table;
  for (const MultiIndex& index : enumerate_multiindices(n, c.degree)) {
    Vec w = eval(c, index);
    for (int m = 0; m < n; ++m) {
      Scalar val(0);
      for (int i = 0; i < n; ++i)
        if (w[i] != 0) val += w[i] * b.matrix.at(i, m);
      if (val != 0) table.emplace(AdjKey{index, m + 1}, val);
    }
  }
  return table;
}

Scalar table_get(const std::map<AdjKey, Scalar>& table, const MultiIndex& index, int m) {
  auto it = table.find(AdjKey{index, m});
  return it == table.end() ? Scalar(0) : it->second;
}

bool table_alternating(const std::map<AdjKey, Scalar>& table, int n, int p) {
  for (const MultiIndex& index : enumerate_multiindices(n, p))
    for (int m : index)
      if (table_get(table, index, m) != 0) return false;
  for (const MultiIndex& k : enumerate_multiindices(n, p + 1)) {
    // All cyclic placements of the last argument must agree:
    // phi~(K\{m_j}, m_j) carries the sign (-1)^{p-j}.
    bool have_first = false;
    Scalar first(0);
    for (int j = 0; j <= p; ++j) {
      MultiIndex index;
      index.reserve(p);
      for (int t = 0; t <= p; ++t)
        if (t != j) index.push_back(k[t]);
      Scalar v = Scalar(((p - j) & 1) ? -1 : 1) * table_get(table, index, k[j]);
      if (!have_first) {
        first = v;
        have_first = true;
      } else if (v != first) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

TildeResult tilde(const AdjCochain& c, const BilinearForm& b) {
  if (!b.is_symmetric()) throw std::invalid_argument("tilde: form must be symmetric");
  if (b.dim() != c.dim) throw std::invalid_argument("tilde: dimension mismatch");
  TildeResult res;
  res.table = tilde_table(c, b);
  res.alternating = table_alternating(res.table, c.dim, c.degree);
  if (res.alternating) {
    TrivCochain form;
    form.dim = c.dim;
    form.degree = c.degree + 1;
    for (const MultiIndex& k : enumerate_multiindices(c.dim, c.degree + 1)) {
      MultiIndex head(k.begin(), k.end() - 1);
      Scalar v = table_get(res.table, head, k.back());
      if (v != 0) form.coeffs.emplace(k, v);
    }
    res.form = std::move(form);
  }
  return res;
}

bool is_cyclic(const AdjCochain& c, const BilinearForm& b) {
  if (!b.is_symmetric()) throw std::invalid_argument("is_cyclic: form must be symmetric");
  if (b.dim() != c.dim) throw std::invalid_argument("is_cyclic: dimension mismatch");
  return table_alternating(tilde_table(c, b), c.dim, c.degree);
}

TrivCochain tilde_form(const AdjCochain& c, const BilinearForm& b) {
  TildeResult res = tilde(c, b);
  if (!res.alternating) throw std::invalid_argument("tilde_form: cochain is not cyclic");
  return std::move(*res.form);
}

AdjCochain untilde(const TrivCochain& c, const BilinearForm& b) {
  const int n = c.dim;
  auto binv = inverse(b.matrix);
  if (!binv) throw std::invalid_argument("untilde: form is degenerate");
  const int p = c.degree - 1;
  AdjCochain out = make_adj(n, p);
  for (const MultiIndex& index : enumerate_multiindices(n, p)) {
    Vec w(n, Scalar(0));
    for (int m = 1; m <= n; ++m) {
      if (contains_index(index, m)) continue;
      std::vector<int> args(index.begin(), index.end());
      args.push_back(m);
      auto sorted = sort_with_sign(args);
      auto it = c.coeffs.find(sorted->first);
      if (it != c.coeffs.end()) w[m - 1] = Scalar(sorted->second) * it->second;
    }
    for (int i = 0; i < n; ++i) {
      Scalar val(0);
      for (int m = 0; m < n; ++m)
        if (w[m] != 0) val += binv->at(i, m) * w[m];
      if (val != 0) out.coeffs.emplace(AdjKey{index, i + 1}, val);
    }
  }
  return out;
}

bool is_invariant(const LieAlgebra& alg, const BilinearForm& b) {
  if (!b.is_symmetric()) return false;
  const int n = alg.dim();
  if (b.dim() != n) throw std::invalid_argument("is_invariant: dimension mismatch");
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      for (int z = 1; z <= n; ++z) {
        Vec v1 = eval(alg.d(), {x, y});
        Scalar lhs(0);
        for (int i = 0; i < n; ++i)
          if (v1[i] != 0) lhs += v1[i] * b.matrix.at(i, z - 1);
        Vec v2 = eval(alg.d(), {y, z});
        Scalar rhs(0);
        for (int i = 0; i < n; ++i)
          if (v2[i] != 0) rhs += b.matrix.at(x - 1, i) * v2[i];
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

TrivCochain bracket_triv(const TrivCochain& ta, const TrivCochain& tb, const BilinearForm& b) {
  if (ta.dim != tb.dim || ta.dim != b.dim())
    throw std::invalid_argument("bracket_triv: dimension mismatch");
  const int n = ta.dim;
  const int k = ta.degree - 1;
  const int l = tb.degree - 1;
  AdjCochain raised = untilde(tb, b);
  TrivCochain out;
  out.dim = n;
  out.degree = k + l;
  const std::vector<Unshuffle> shuffles = unshuffles(k + l, l);
  for (const MultiIndex& kk : enumerate_multiindices(n, k + l)) {
    Scalar val(0);
    for (const Unshuffle& sh : shuffles) {
      std::vector<int> inner;
      inner.reserve(l);
      for (int pos : sh.first) inner.push_back(kk[pos]);
      Vec w = eval(raised, inner);
      for (int m = 0; m < n; ++m) {
        if (w[m] == 0) continue;
        std::vector<int> outer;
        outer.reserve(k + 1);
        outer.push_back(m + 1);
        for (int pos : sh.second) outer.push_back(kk[pos]);
        auto sorted = sort_with_sign(outer);
        if (!sorted) continue;
        auto it = ta.coeffs.find(sorted->first);
        if (it == ta.coeffs.end()) continue;
        val += Scalar(sh.sign) * w[m] * Scalar(sorted->second) * it->second;
      }
    }
    if (val != 0) out.coeffs.emplace(kk, val);
  }
  return out;
}

AdjCochain parse_cochain(std::string_view text, int dim,
                         const std::optional<Scalar>& lambda_value) {
  std::string s;
  s.reserve(text.size());
  for (char ch : text)
    if (ch != ' ') s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty cochain text");
  std::vector<std::string> terms;
  {
    std::string cur;
    int depth = 0;
    for (char ch : s) {
      if ((ch == '+' || ch == '-') && depth == 0 && !cur.empty()) {
        terms.push_back(cur);
        cur = (ch == '-') ? "-" : "";
        continue;
      }
      if (ch == '[') ++depth;
      if (ch == ']') --depth;
      if (!(ch == '+' && depth == 0)) cur.push_back(ch);
    }
    if (!cur.empty()) terms.push_back(cur);
  }
  if (terms.size() == 1 && terms[0] == "0") return make_adj(dim, 0);
  std::map<AdjKey, Scalar> coeffs;
  int degree = -1;
  for (std::string term : terms) {
    Scalar coef(1);
    std::size_t pos = 0;
    while (pos < term.size() && (term[pos] == '+' || term[pos] == '-')) {
      if (term[pos] == '-') coef = -coef;
      ++pos;
    }
    term = term.substr(pos);
    std::size_t bracket = term.find('[');
    if (bracket == std::string::npos) throw std::invalid_argument("bad cochain term: " + term);
    std::string head = term.substr(0, bracket);
    std::string rest = term.substr(bracket + 1);
    // head = "psi" | "phi" with optional leading factors joined by '*',
    // e.g. "2*psi", "lambda*psi", "1/2*lambda*psi".
    std::vector<std::string> factors;
    {
      std::string cur;
      for (char ch : head) {
        if (ch == '*') {
          factors.push_back(cur);
          cur.clear();
        } else {
          cur.push_back(ch);
        }
      }
      factors.push_back(cur);
    }
    const std::string name = factors.back();
    if (name != "psi" && name != "phi")
      throw std::invalid_argument("bad cochain name in term: " + term);
    for (std::size_t f = 0; f + 1 < factors.size(); ++f) {
      if (factors[f] == "lambda") {
        if (!lambda_value)
          throw std::invalid_argument("cochain text contains lambda but no value was given");
        coef *= *lambda_value;
      } else {
        coef *= parse_scalar(factors[f]);
      }
    }
    if (rest.empty() || rest.back() != ']')
      throw std::invalid_argument("bad cochain term: " + term);
    rest.pop_back();
    std::size_t arrow = rest.find("->");
    if (arrow == std::string::npos) throw std::invalid_argument("bad cochain term: " + term);
    std::string idx_s = rest.substr(0, arrow);
    std::string tgt_s = rest.substr(arrow + 2);
    if (idx_s.size() < 2 || idx_s.front() != '{' || idx_s.back() != '}')
      throw std::invalid_argument("bad cochain index in term: " + term);
    idx_s = idx_s.substr(1, idx_s.size() - 2);
    // stoi would silently accept trailing junk like "3z"; indices must be
    // pure digit runs so damaged text is rejected, not misread.
    auto parse_index = [&term](const std::string& text) {
      if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char ch) {
            return std::isdigit(ch) != 0;
          }))
        throw std::invalid_argument("bad basis index in term: " + term);
      return std::stoi(text);
    };
    MultiIndex index;
    if (!idx_s.empty()) {
      std::string cur;
      for (char ch : idx_s) {
        if (ch == ',') {
          index.push_back(parse_index(cur));
          cur.clear();
        } else {
          cur.push_back(ch);
        }
      }
      index.push_back(parse_index(cur));
    }
    int target = parse_index(tgt_s);
    AdjKey key{std::move(index), target};
    check_key(key, dim, static_cast<int>(key.first.size()));
    if (degree < 0)
      degree = static_cast<int>(key.first.size());
    else if (degree != static_cast<int>(key.first.size()))
      throw std::invalid_argument("mixed degrees in cochain text");
    add_coeff(coeffs, key, coef);
  }
  AdjCochain out = make_adj(dim, degree < 0 ? 0 : degree);
  out.coeffs = std::move(coeffs);
  return out;
}

std::string render_cochain(const AdjCochain& c) {
  if (c.coeffs.empty()) return "0";
  std::string out;
  for (const auto& [key, value] : c.coeffs) {
    const auto& [index, target] = key;
    std::string body = (index.size() % 2 == 0) ? "psi[{" : "phi[{";
    for (std::size_t i = 0; i < index.size(); ++i) {
      if (i) body.push_back(',');
      body += std::to_string(index[i]);
    }
    body += "}->" + std::to_string(target) + "]";
    std::string term;
    if (value == 1)
      term = body;
    else if (value == -1)
      term = "-" + body;
    else
      term = render_scalar(value) + "*" + body;
    if (out.empty()) {
      out = term;
    } else if (!term.empty() && term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

std::vector<AdjKey> adj_basis(int dim, int degree) {
  std::vector<AdjKey> out;
  for (const MultiIndex& index : enumerate_multiindices(dim, degree))
    for (int i = 1; i <= dim; ++i) out.emplace_back(index, i);
  return out;
}

Vec to_vector(const AdjCochain& c, const std::vector<AdjKey>& basis) {
  std::map<AdjKey, std::size_t> pos;
  for (std::size_t i = 0; i < basis.size(); ++i) pos.emplace(basis[i], i);
  Vec v(basis.size(), Scalar(0));
  for (const auto& [key, value] : c.coeffs) {
    auto it = pos.find(key);
    if (it == pos.end()) throw std::invalid_argument("to_vector: key outside basis");
    v[it->second] = value;
  }
  return v;
}

AdjCochain from_vector(const Vec& v, const std::vector<AdjKey>& basis, int dim, int degree) {
  if (v.size() != basis.size()) throw std::invalid_argument("from_vector: length mismatch");
  AdjCochain out = make_adj(dim, degree);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (v[i] != 0) out.coeffs.emplace(basis[i], v[i]);
  return out;
}

}  // namespace cyclolie
