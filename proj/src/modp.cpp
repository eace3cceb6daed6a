// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

#include "kronecker/modp.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace kronecker::modp {

u64 pow(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inv(u64 a, u64 p) {
  a %= p;
  if (a == 0) throw std::domain_error("modp::inv of zero");
  // Extended Euclid on signed 128-bit to stay exact for p < 2^63.
  __int128 t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    __int128 q = r / nr;
    __int128 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<u64>(t);
}

u64 reduce(const Integer& x, u64 p) {
  return mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p));
}

Poly reduce(const zpoly::ZPoly& f, u64 p) {
  Poly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = reduce(f[i], p);
  trim(r);
  return r;
}

zpoly::ZPoly lift(const Poly& f, u64 p) {
  zpoly::ZPoly r(f.size());
  const u64 half = p / 2;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] > half) {
      r[i] = Integer(static_cast<unsigned long>(p - f[i]));
      r[i] = -r[i];
    } else {
      r[i] = Integer(static_cast<unsigned long>(f[i]));
    }
  }
  return r;
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly add(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0, p);
  }
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0, p);
  }
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  // Accumulate unreduced 128-bit products; flush before overflow.
  const std::size_t n = a.size() + b.size() - 1;
  std::vector<unsigned __int128> acc(n, 0);
  std::vector<int> pending(n, 0);
  const unsigned __int128 sq = static_cast<unsigned __int128>(p - 1) * (p - 1);
  const int budget = static_cast<int>(std::min<unsigned __int128>(
      (~static_cast<unsigned __int128>(0)) / (sq + 1), 1 << 20));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      auto& slot = acc[i + j];
      slot += static_cast<unsigned __int128>(a[i]) * b[j];
      if (++pending[i + j] >= budget) {
        slot %= p;
        pending[i + j] = 1;
      }
    }
  }
  Poly r(n);
  for (std::size_t k = 0; k < n; ++k) r[k] = static_cast<u64>(acc[k] % p);
  trim(r);
  return r;
}

Poly scale(const Poly& a, u64 c, u64 p) {
  c %= p;
  if (c == 0) return {};
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul(a[i], c, p);
  return r;
}

Poly derivative(const Poly& f, u64 p) {
  if (f.size() <= 1) return {};
  Poly r(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = mul(f[i], i % p, p);
  trim(r);
  return r;
}

Poly monic(const Poly& f, u64 p) {
  if (f.empty() || f.back() == 1) return f;
  return scale(f, inv(f.back(), p), p);
}

u64 evaluate(const Poly& f, u64 x, u64 p) {
  u64 acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = add(mul(acc, x, p), *it, p);
  return acc;
}

DivMod divmod(const Poly& a, const Poly& b, u64 p) {
  if (b.empty()) throw std::domain_error("modp::divmod by zero polynomial");
  if (a.size() < b.size()) return {{}, a};
  Poly r(a);
  const int db = degree(b);
  const u64 li = inv(b.back(), p);
  Poly q(a.size() - b.size() + 1);
  for (int k = degree(a) - db; k >= 0; --k) {
    u64 c = mul(r[static_cast<std::size_t>(k + db)], li, p);
    q[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      auto& x = r[static_cast<std::size_t>(k + j)];
      x = sub(x, mul(c, b[static_cast<std::size_t>(j)], p), p);
    }
  }
  r.resize(static_cast<std::size_t>(db));
  trim(r);
  trim(q);
  return {q, r};
}

Poly rem(const Poly& a, const Poly& b, u64 p) {
  if (a.size() < b.size()) return a;
  return divmod(a, b, p).remainder;
}

Poly gcd(const Poly& a_in, const Poly& b_in, u64 p) {
  Poly a = a_in, b = b_in;
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

ExtGcd ext_gcd(const Poly& a_in, const Poly& b_in, u64 p) {
  Poly r0 = a_in, r1 = b_in;
  Poly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    Poly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {{}, {}, {}};
  const u64 li = inv(r0.back(), p);
  return {scale(r0, li, p), scale(s0, li, p), scale(t0, li, p)};
}

Poly powmod(const Poly& base, const Integer& e, const Poly& m, u64 p) {
  Poly result{1 % p};
  result = rem(result, m, p);
  Poly b = rem(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, p), m, p);
  }
  return result;
}

u64 resultant(const Poly& a_in, const Poly& b_in, u64 p) {
  Poly a = a_in, b = b_in;
  if (a.empty() || b.empty()) return 0;
  u64 res = 1;
  // Res(a, b) with deg a = m, deg b = n:
  //   Res(a, b) = (-1)^(mn) Res(b, a)
  //   Res(a, b) = lc(b)^(m - deg r) Res(r, b) ... applied via the usual
  //   Res(b, a) = lc(b)^(m - deg r) * Res(b, r) with r = a mod b.
  while (true) {
    const int m = degree(a), n = degree(b);
    if (n == 0) {
      return mul(res, pow(b[0], static_cast<u64>(m), p), p);
    }
    if (m == 0) {
      return mul(res, pow(a[0], static_cast<u64>(n), p), p);
    }
    Poly r = rem(a, b, p);
    if (r.empty()) return 0;
    // Res(a, b) = (-1)^(mn) Res(b, a) = (-1)^(mn) lc(b)^(m - deg r) Res(b, r).
    if ((static_cast<long>(m) * n) % 2 == 1) res = sub(0, res, p);
    res = mul(res, pow(b.back(), static_cast<u64>(m - degree(r)), p), p);
    a = std::move(b);
    b = std::move(r);
  }
}

namespace {

// Rows of the Frobenius matrix: X^(i p) mod f for i < deg f.
std::vector<Poly> frobenius_rows(const Poly& f, u64 p) {
  const int n = degree(f);
  std::vector<Poly> rows(static_cast<std::size_t>(n));
  Poly xp = powmod(Poly{0, 1}, Integer(static_cast<unsigned long>(p)), f, p);
  rows[0] = rem(Poly{1}, f, p);
  for (int i = 1; i < n; ++i) rows[static_cast<std::size_t>(i)] = rem(mul(rows[static_cast<std::size_t>(i - 1)], xp, p), f, p);
  return rows;
}

// h^p mod f given the Frobenius rows.
Poly apply_frobenius(const Poly& h, const std::vector<Poly>& rows, u64 p) {
  Poly r;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] == 0) continue;
    r = add(r, scale(rows[i], h[i], p), p);
  }
  return r;
}

}  // namespace

std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f_in, u64 p) {
  std::vector<std::pair<Poly, int>> out;
  Poly f = monic(f_in, p);
  if (degree(f) <= 0) return out;
  const auto rows = frobenius_rows(f, p);
  Poly h{0, 1};
  h = rem(h, f, p);
  Poly cur = f;
  for (int d = 1; 2 * d <= degree(cur); ++d) {
    h = apply_frobenius(h, rows, p);
    Poly g = gcd(sub(h, Poly{0, 1}, p), cur, p);
    if (degree(g) > 0) {
      out.emplace_back(g, d);
      cur = divmod(cur, g, p).quotient;
    }
  }
  if (degree(cur) > 0) out.emplace_back(monic(cur, p), degree(cur));
  return out;
}

std::vector<Poly> equal_degree(const Poly& f_in, int d, u64 p, std::mt19937_64& rng) {
  Poly f = monic(f_in, p);
  const int n = degree(f);
  if (n == d) return {f};
  if (p == 2) throw std::domain_error("modp::equal_degree needs an odd prime");
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> coeff(0, p - 1);
  while (true) {
    Poly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = coeff(rng);
    trim(a);
    if (degree(a) < 1) continue;
    Poly g = gcd(a, f, p);
    if (degree(g) > 0 && degree(g) < n) {
      auto left = equal_degree(g, d, p, rng);
      auto right = equal_degree(divmod(f, g, p).quotient, d, p, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
    Poly b = powmod(a, e, f, p);
    g = gcd(sub(b, Poly{1}, p), f, p);
    if (degree(g) > 0 && degree(g) < n) {
      auto left = equal_degree(g, d, p, rng);
      auto right = equal_degree(divmod(f, g, p).quotient, d, p, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

std::vector<Poly> factor_squarefree(const Poly& f, u64 p, std::mt19937_64& rng) {
  std::vector<Poly> out;
  for (const auto& [g, d] : distinct_degree(f, p)) {
    auto parts = equal_degree(g, d, p, rng);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

Poly interpolate(std::span<const u64> xs, std::span<const u64> ys, u64 p) {
  const std::size_t n = xs.size();
  // Newton divided differences, then expand.
  std::vector<u64> c(ys.begin(), ys.end());
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      u64 num = sub(c[i], c[i - 1], p);
      u64 den = sub(xs[i], xs[i - j], p);
      c[i] = mul(num, inv(den, p), p);
      if (i == j) break;
    }
  }
  Poly r;
  for (std::size_t k = n; k-- > 0;) {
    // r = r * (X - xs[k]) + c[k]
    Poly t(r.size() + 1, 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      t[i + 1] = add(t[i + 1], r[i], p);
      t[i] = sub(t[i], mul(r[i], xs[k], p), p);
    }
    t[0] = add(t[0], c[k], p);
    trim(t);
    r = std::move(t);
  }
  return r;
}

u64 large_prime(std::size_t index) {
  static std::mutex mu;
  static std::vector<u64> primes;
  std::lock_guard<std::mutex> lock(mu);
  u64 candidate = primes.empty() ? (u64{1} << 62) - 1 : primes.back() - 2;
  while (primes.size() <= index) {
    Integer z(static_cast<unsigned long>(candidate));
    if (mpz_probab_prime_p(z.get_mpz_t(), 30) > 0) {
      primes.push_back(candidate);
    }
    candidate -= 2;
  }
  return primes[index];
}

}  // namespace kronecker::modp
