#include "betaexp/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "betaexp/error.hpp"

namespace betaexp {
namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

ZPoly parse_polynomial(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw Error(Errc::ParseError, "empty polynomial");
  std::map<unsigned long, Integer> terms;
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    int sgn = 1;
    if (s[i] == '+' || s[i] == '-') {
      sgn = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw Error(Errc::ParseError, "expected '+' or '-' at offset " + std::to_string(i) + " in '" + s + "'");
    }
    first = false;
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    Integer coeff = 1;
    bool has_coeff = j > i;
    if (has_coeff) coeff = Integer(s.substr(i, j - i));
    i = j;
    if (i < s.size() && s[i] == '*') {
      if (!has_coeff) throw Error(Errc::ParseError, "dangling '*' in '" + s + "'");
      ++i;
      if (i >= s.size() || s[i] != 'x') throw Error(Errc::ParseError, "expected 'x' after '*' in '" + s + "'");
    }
    unsigned long exponent = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t k = i;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == i) throw Error(Errc::ParseError, "missing exponent in '" + s + "'");
        exponent = std::stoul(s.substr(i, k - i));
        i = k;
      }
    } else if (!has_coeff) {
      throw Error(Errc::ParseError, "unexpected character at offset " + std::to_string(i) + " in '" + s + "'");
    }
    if (exponent > 4096) throw Error(Errc::ParseError, "exponent too large in '" + s + "'");
    terms[exponent] += sgn * coeff;
  }
  ZPoly p(terms.rbegin()->first + 1, Integer(0));
  for (const auto& [e, c] : terms) p[e] = c;
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (p.empty()) throw Error(Errc::ParseError, "polynomial is identically zero");
  return p;
}

std::string format_polynomial(const ZPoly& p) {
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    const Integer& c = p[k];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? "-" : "+";
    }
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

Rational parse_rational(std::string_view text) {
  std::string s = strip_spaces(text);
  if (s.empty()) throw Error(Errc::ParseError, "empty number");
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rational num = parse_rational(s.substr(0, slash));
    Rational den = parse_rational(s.substr(slash + 1));
    if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + s + "'");
    Rational r = num / den;
    r.canonicalize();
    return r;
  }
  int sgn = 1;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    sgn = s[0] == '-' ? -1 : 1;
    i = 1;
  }
  long exp10 = 0;
  const auto epos = s.find_first_of("eE", i);
  std::string mantissa = s.substr(i, epos == std::string::npos ? std::string::npos : epos - i);
  if (epos != std::string::npos) {
    std::string e = s.substr(epos + 1);
    bool neg = !e.empty() && e[0] == '-';
    if (!e.empty() && (e[0] == '-' || e[0] == '+')) e = e.substr(1);
    if (!all_digits(e) || e.size() > 6) throw Error(Errc::ParseError, "bad exponent in '" + s + "'");
    exp10 = std::stol(e) * (neg ? -1 : 1);
  }
  std::string int_part = mantissa, frac_part;
  const auto dot = mantissa.find('.');
  if (dot != std::string::npos) {
    int_part = mantissa.substr(0, dot);
    frac_part = mantissa.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) throw Error(Errc::ParseError, "bad number '" + s + "'");
  if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) {
    throw Error(Errc::ParseError, "bad number '" + s + "'");
  }
  const std::string all = int_part + frac_part;
  Integer digits(all);
  exp10 -= static_cast<long>(frac_part.size());
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  Rational r = exp10 < 0 ? Rational(digits, scale) : Rational(digits * scale);
  r.canonicalize();
  return sgn < 0 ? Rational(-r) : r;
}

namespace poly {

QPoly to_q(const ZPoly& p) {
  QPoly q(p.begin(), p.end());
  trim(q);
  return q;
}

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

ZPoly primitive(const QPoly& p) {
  Integer den = 1;
  for (const auto& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z;
  z.reserve(p.size());
  Integer content = 0;
  for (const auto& c : p) {
    Integer v = c.get_num() * (den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    z.push_back(v);
  }
  if (content != 0) {
    if (z.back() < 0) content = -content;
    for (auto& v : z) v /= content;
  }
  return z;
}

QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<unsigned long>(k));
  trim(d);
  return d;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.empty()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  QPoly rem = a;
  trim(rem);
  if (rem.size() < b.size()) return {{}, rem};
  QPoly quot(rem.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  for (std::size_t k = rem.size() - 1;; --k) {
    Rational t = rem[k] / lead;
    quot[k - (b.size() - 1)] = t;
    if (t != 0) {
      for (std::size_t j = 0; j < b.size(); ++j) rem[k - (b.size() - 1) + j] -= t * b[j];
    }
    if (k == b.size() - 1) break;
  }
  trim(rem);
  trim(quot);
  return {quot, rem};
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

std::pair<QPoly, QPoly> gcd_with_cofactor(const QPoly& a, const QPoly& m) {
  // Extended Euclid tracking only the coefficient of a.
  QPoly r0 = m, r1 = a;
  trim(r0);
  trim(r1);
  QPoly s0, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.empty()) return {{}, {}};
  Rational lead = r0.back();
  for (auto& c : r0) c /= lead;
  for (auto& c : s0) c /= lead;
  s0 = divmod(s0, m).second;
  return {r0, s0};
}

Rational eval(const QPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

int sign_at(const QPoly& p, const Rational& x) { return sgn(eval(p, x)); }

namespace {

std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> chain{p, derivative(p)};
  while (!chain.back().empty()) {
    QPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }
  if (chain.back().empty()) chain.pop_back();
  return chain;
}

std::size_t sign_changes(const std::vector<QPoly>& chain, const Rational& x) {
  std::size_t changes = 0;
  int prev = 0;
  for (const auto& q : chain) {
    int s = sign_at(q, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

std::size_t sturm_count(const QPoly& p, const Rational& a, const Rational& b) {
  if (p.size() <= 1) return 0;
  // Square-free part has the same distinct roots and a well-behaved chain.
  QPoly g = gcd(p, derivative(p));
  QPoly sf = g.size() > 1 ? divmod(p, g).first : p;
  auto chain = sturm_chain(sf);
  std::size_t va = sign_changes(chain, a), vb = sign_changes(chain, b);
  return va >= vb ? va - vb : 0;
}

}  // namespace poly
}  // namespace betaexp
