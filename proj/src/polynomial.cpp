// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

#include "kronecker/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "kronecker/errors.hpp"
#include "kronecker/zpoly.hpp"

namespace kronecker {

// ---------------------------------------------------------------------------
// Rational helpers

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  bool seen_digit = false, seen_slash = false, digit_after_slash = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      seen_digit = true;
      if (seen_slash) digit_after_slash = true;
    } else if (s[i] == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
    } else {
      throw std::invalid_argument("malformed rational: " + std::string(text));
    }
  }
  if (!seen_digit || (seen_slash && !digit_after_slash)) {
    throw std::invalid_argument("malformed rational: " + std::string(text));
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + std::string(text));
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  r.canonicalize();
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {
const Rational kZero(0);
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t exponent) {
  std::vector<Rational> v(exponent + 1);
  v[exponent] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_ints(std::initializer_list<long> ascending) {
  std::vector<Rational> v;
  v.reserve(ascending.size());
  for (long c : ascending) v.emplace_back(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Rational& Polynomial::leading() const { return coeffs_.empty() ? kZero : coeffs_.back(); }

bool Polynomial::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Clear denominators and multiply over Z; one canonicalization per output
  // coefficient instead of one per partial product.
  Rational ca, cb;
  auto za = primitive_integer_part(a, &ca);
  auto zb = primitive_integer_part(b, &cb);
  auto zc = zpoly::mul(za, zb);
  Rational c = ca * cb;
  std::vector<Rational> out(zc.size());
  for (std::size_t i = 0; i < zc.size(); ++i) out[i] = Rational(zc[i]) * c;
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial r(*this);
  Rational inv = 1 / leading();
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

Polynomial Polynomial::shifted(const Rational& c) const {
  std::vector<Rational> r(coeffs_);
  const std::size_t n = r.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) r[j - 1] += c * r[j];
  }
  return Polynomial(std::move(r));
}

Polynomial Polynomial::scaled_argument(const Rational& c) const {
  std::vector<Rational> r(coeffs_);
  Rational p(1);
  for (auto& x : r) {
    x *= p;
    p *= c;
  }
  return Polynomial(std::move(r));
}

// ---------------------------------------------------------------------------

std::vector<Integer> primitive_integer_part(const Polynomial& f, Rational* content) {
  if (f.is_zero()) {
    if (content) *content = 0;
    return {};
  }
  Integer den = 1;
  for (const auto& c : f.coefficients()) den = lcm(den, c.get_den());
  std::vector<Integer> z(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Rational& c = f.coefficients()[i];
    z[i] = c.get_num() * (den / c.get_den());
  }
  Integer g = zpoly::content(z);
  if (g != 1) z = zpoly::divide_scalar(z, g);
  if (content) {
    *content = Rational(g, den);
    content->canonicalize();
  }
  return z;
}

Polynomial from_integers(std::span<const Integer> ascending) {
  std::vector<Rational> v(ascending.begin(), ascending.end());
  return Polynomial(std::move(v));
}

DivMod poly_divmod(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw PreconditionError("poly_divmod: division by the zero polynomial");
  if (f.degree() < g.degree()) return {Polynomial(), f};
  std::vector<Rational> r(f.coefficients().begin(), f.coefficients().end());
  const int dg = g.degree();
  std::vector<Rational> q(static_cast<std::size_t>(f.degree() - dg + 1));
  const Rational inv = 1 / g.leading();
  for (int k = f.degree() - dg; k >= 0; --k) {
    Rational c = r[static_cast<std::size_t>(k + dg)] * inv;
    q[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dg; ++j) r[static_cast<std::size_t>(k + j)] -= c * g.coeff(static_cast<std::size_t>(j));
  }
  r.resize(static_cast<std::size_t>(dg));
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() && g.is_zero()) throw PreconditionError("poly_gcd: gcd(0, 0) is undefined");
  // Primitive remainder sequence over Z keeps the intermediate sizes small.
  auto a = primitive_integer_part(f);
  auto b = primitive_integer_part(g);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    auto r = zpoly::primitive_part(zpoly::pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return from_integers(a).monic();
}

Polynomial derivative(const Polynomial& f) {
  if (f.degree() < 1) return {};
  std::vector<Rational> d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = f.coeff(i) * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Rational resultant(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw PreconditionError("resultant: zero polynomial argument");
  Rational cf, cg;
  auto F = primitive_integer_part(f, &cf);
  auto G = primitive_integer_part(g, &cg);
  Rational r(zpoly::resultant(F, G));
  Rational scale(1);
  for (int i = 0; i < g.degree(); ++i) scale *= cf;
  for (int i = 0; i < f.degree(); ++i) scale *= cg;
  return r * scale;
}

Rational discriminant(const Polynomial& f) {
  const int n = f.degree();
  if (n < 1) throw PreconditionError("discriminant: polynomial must have degree >= 1");
  if (n == 1) return Rational(1);
  Rational r = resultant(f, derivative(f)) / f.leading();
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("squarefree_part: zero polynomial");
  if (f.degree() == 0) return Polynomial::constant(1);
  Polynomial g = poly_gcd(f, derivative(f));
  return poly_divmod(f, g).quotient.monic();
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("squarefree_decomposition: zero polynomial");
  std::vector<std::pair<Polynomial, int>> out;
  if (f.degree() == 0) return out;
  Polynomial fm = f.monic();
  Polynomial fp = derivative(fm);
  Polynomial a = poly_gcd(fm, fp);
  Polynomial b = poly_divmod(fm, a).quotient;
  Polynomial c = poly_divmod(fp, a).quotient;
  Polynomial d = c - derivative(b);
  int i = 1;
  while (b.degree() > 0) {
    Polynomial g = poly_gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = poly_divmod(b, g).quotient;
    c = poly_divmod(d, g).quotient;
    d = c - derivative(b);
    ++i;
  }
  return out;
}

}  // namespace kronecker
