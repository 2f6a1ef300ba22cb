#include "cyclolie/polynomial.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace cyclolie {

namespace {

void add_term(Polynomial& p, const Monomial& mono, const Scalar& coef) {
  if (coef == 0) return;
  auto it = p.terms.find(mono);
  if (it == p.terms.end()) {
    p.terms.emplace(mono, coef);
  } else {
    it->second += coef;
    if (it->second == 0) p.terms.erase(it);
  }
}

}  // namespace

Polynomial poly_constant(const Scalar& value) {
  Polynomial p;
  if (value != 0) p.terms.emplace(Monomial{}, value);
  return p;
}

Polynomial poly_variable(const std::string& name, int exponent) {
  if (exponent < 0) throw std::invalid_argument("poly_variable: negative exponent");
  if (exponent == 0) return poly_constant(Scalar(1));
  Polynomial p;
  p.terms.emplace(Monomial{{name, exponent}}, Scalar(1));
  return p;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  for (const auto& [mono, coef] : b.terms) add_term(out, mono, coef);
  return out;
}

Polynomial poly_scale(const Polynomial& a, const Scalar& s) {
  Polynomial out;
  if (s == 0) return out;
  for (const auto& [mono, coef] : a.terms) out.terms.emplace(mono, s * coef);
  return out;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms) {
    for (const auto& [mb, cb] : b.terms) {
      Monomial mono = ma;
      for (const auto& [name, exp] : mb) mono[name] += exp;
      add_term(out, mono, ca * cb);
    }
  }
  return out;
}

Scalar poly_eval(const Polynomial& p, const std::map<std::string, Scalar>& point) {
  Scalar total(0);
  for (const auto& [mono, coef] : p.terms) {
    Scalar term = coef;
    for (const auto& [name, exp] : mono) {
      auto it = point.find(name);
      if (it == point.end()) throw std::out_of_range("poly_eval: unbound variable " + name);
      term *= scalar_pow(it->second, static_cast<unsigned>(exp));
    }
    total += term;
  }
  return total;
}

Polynomial parse_poly(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char ch : text)
    if (ch != ' ') s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty polynomial text");
  std::vector<std::string> raw_terms;
  {
    std::string cur;
    for (char ch : s) {
      if ((ch == '+' || ch == '-') && !cur.empty() && cur.back() != '*' && cur.back() != '^') {
        raw_terms.push_back(cur);
        cur = (ch == '-') ? "-" : "";
        continue;
      }
      if (ch != '+' || !cur.empty()) cur.push_back(ch);
    }
    if (!cur.empty()) raw_terms.push_back(cur);
  }
  Polynomial out;
  for (std::string term : raw_terms) {
    Scalar coef(1);
    std::size_t pos = 0;
    while (pos < term.size() && (term[pos] == '+' || term[pos] == '-')) {
      if (term[pos] == '-') coef = -coef;
      ++pos;
    }
    term = term.substr(pos);
    if (term.empty()) throw std::invalid_argument("bad polynomial term");
    std::vector<std::string> factors;
    {
      std::string cur;
      for (char ch : term) {
        if (ch == '*') {
          factors.push_back(cur);
          cur.clear();
        } else {
          cur.push_back(ch);
        }
      }
      factors.push_back(cur);
    }
    Monomial mono;
    for (const std::string& fac : factors) {
      if (fac.empty()) throw std::invalid_argument("bad polynomial factor in: " + term);
      if (std::isdigit(static_cast<unsigned char>(fac[0]))) {
        coef *= parse_scalar(fac);
        continue;
      }
      std::size_t caret = fac.find('^');
      std::string name = (caret == std::string::npos) ? fac : fac.substr(0, caret);
      int exp = 1;
      if (caret != std::string::npos) exp = std::stoi(fac.substr(caret + 1));
      if (name.empty() || exp <= 0)
        throw std::invalid_argument("bad polynomial factor: " + fac);
      mono[name] += exp;
    }
    add_term(out, mono, coef);
  }
  return out;
}

std::string render_poly(const Polynomial& p) {
  if (p.terms.empty()) return "0";
  std::string out;
  for (const auto& [mono, coef] : p.terms) {
    std::string body;
    for (const auto& [name, exp] : mono) {
      if (!body.empty()) body += "*";
      body += name;
      if (exp != 1) body += "^" + std::to_string(exp);
    }
    std::string term;
    if (body.empty())
      term = render_scalar(coef);
    else if (coef == 1)
      term = body;
    else if (coef == -1)
      term = "-" + body;
    else
      term = render_scalar(coef) + "*" + body;
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

}  // namespace cyclolie
