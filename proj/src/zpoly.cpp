// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

#include "kronecker/zpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace kronecker::zpoly {

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Integer content(const ZPoly& f) {
  Integer g = 0;
  for (const auto& c : f) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_part(const ZPoly& f) {
  Integer c = content(f);
  if (c == 0 || c == 1) return f;
  return divide_scalar(f, c);
}

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  trim(r);
  return r;
}

ZPoly scale(const ZPoly& a, const Integer& c) {
  if (c == 0) return {};
  ZPoly r(a);
  for (auto& x : r) x *= c;
  return r;
}

ZPoly derivative(const ZPoly& f) {
  if (f.size() <= 1) return {};
  ZPoly r(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = f[i] * static_cast<unsigned long>(i);
  trim(r);
  return r;
}

ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw std::invalid_argument("pseudo_remainder by zero polynomial");
  ZPoly r(a);
  const int db = degree(b);
  const Integer& lb = leading(b);
  int e = degree(a) - db + 1;
  while (!r.empty() && degree(r) >= db) {
    Integer lr = r.back();
    const int shift = degree(r) - db;
    for (auto& x : r) x *= lb;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(r[j + shift].get_mpz_t(), lr.get_mpz_t(), b[j].get_mpz_t());
    }
    trim(r);
    --e;
  }
  if (e > 0 && !r.empty()) {
    Integer f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& x : r) x *= f;
  }
  return r;
}

std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw std::invalid_argument("divide_exact by zero polynomial");
  if (a.empty()) return ZPoly{};
  if (degree(a) < degree(b)) return std::nullopt;
  ZPoly r(a);
  const int db = degree(b);
  ZPoly q(static_cast<std::size_t>(degree(a) - db + 1));
  const Integer& lb = leading(b);
  // Cheap rejection on the constant terms first.
  if (b[0] != 0 && a[0] != 0 && !mpz_divisible_p(a[0].get_mpz_t(), b[0].get_mpz_t())) {
    return std::nullopt;
  }
  for (int k = degree(a) - db; k >= 0; --k) {
    Integer& top = r[static_cast<std::size_t>(k + db)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Integer c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (int j = 0; j <= db; ++j) {
      mpz_submul(r[static_cast<std::size_t>(k + j)].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    }
    q[static_cast<std::size_t>(k)] = c;
  }
  for (const auto& x : r) {
    if (x != 0) return std::nullopt;
  }
  trim(q);
  return q;
}

ZPoly divide_scalar(const ZPoly& a, const Integer& c) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_divexact(r[i].get_mpz_t(), a[i].get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

Integer evaluate(const ZPoly& f, const Integer& x) {
  Integer acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

ZPoly taylor_shift(const ZPoly& f, const Integer& c) {
  // Repeated synthetic division, in place.
  ZPoly r(f);
  if (c == 0) return r;
  const std::size_t n = r.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) {
      mpz_addmul(r[j - 1].get_mpz_t(), r[j].get_mpz_t(), c.get_mpz_t());
    }
  }
  return r;
}

namespace {

Integer ipow(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace

Integer resultant(const ZPoly& a_in, const ZPoly& b_in) {
  if (a_in.empty() || b_in.empty()) return 0;
  ZPoly A = a_in, B = b_in;
  trim(A);
  trim(B);
  if (A.empty() || B.empty()) return 0;
  if (degree(A) == 0 && degree(B) == 0) return 1;
  if (degree(A) == 0) return ipow(A[0], static_cast<unsigned long>(degree(B)));
  if (degree(B) == 0) return ipow(B[0], static_cast<unsigned long>(degree(A)));

  Integer ca = content(A), cb = content(B);
  A = divide_scalar(A, ca);
  B = divide_scalar(B, cb);
  Integer g = 1, h = 1;
  int s = 1;
  Integer t = ipow(ca, static_cast<unsigned long>(degree(B))) *
              ipow(cb, static_cast<unsigned long>(degree(A)));
  if (degree(A) < degree(B)) {
    std::swap(A, B);
    if ((degree(A) % 2 == 1) && (degree(B) % 2 == 1)) s = -1;
  }
  while (true) {
    const int delta = degree(A) - degree(B);
    if ((degree(A) % 2 == 1) && (degree(B) % 2 == 1)) s = -s;
    ZPoly R = pseudo_remainder(A, B);
    A = std::move(B);
    if (R.empty()) return 0;
    Integer divisor = g * ipow(h, static_cast<unsigned long>(delta));
    B = divide_scalar(R, divisor);
    g = leading(A);
    // h <- g^delta / h^(delta-1); unchanged when delta = 0.
    if (delta > 0) {
      Integer num = ipow(g, static_cast<unsigned long>(delta));
      Integer den = ipow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (degree(B) <= 0) break;
  }
  // h <- h^(1 - deg A) * lc(B)^deg A
  const int da = degree(A);
  Integer num = ipow(leading(B), static_cast<unsigned long>(da));
  Integer result;
  if (da >= 1) {
    Integer den = ipow(h, static_cast<unsigned long>(da - 1));
    mpz_divexact(result.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  } else {
    result = num * h;
  }
  return s * t * result;
}

Integer norm2_ceil(const ZPoly& f) {
  Integer s = 0;
  for (const auto& c : f) s += c * c;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
  if (r * r < s) r += 1;
  return r;
}

Integer max_abs(const ZPoly& f) {
  Integer m = 0;
  for (const auto& c : f) {
    if (abs(c) > m) m = abs(c);
  }
  return m;
}

Integer smod(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  Integer half = m / 2;
  if (r > half) r -= m;
  return r;
}

ZPoly smod(const ZPoly& f, const Integer& m) {
  ZPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = smod(f[i], m);
  trim(r);
  return r;
}

ZPoly mul_mod(const ZPoly& a, const ZPoly& b, const Integer& m) {
  return smod(mul(a, b), m);
}

DivModResult divmod_mod(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly bb = smod(b, m);
  if (bb.empty()) throw std::invalid_argument("divmod_mod by zero polynomial");
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), bb.back().get_mpz_t(), m.get_mpz_t()) == 0) {
    throw std::invalid_argument("divmod_mod: leading coefficient not invertible");
  }
  ZPoly r = smod(a, m);
  const int db = degree(bb);
  if (degree(r) < db) return {{}, r};
  ZPoly q(static_cast<std::size_t>(degree(r) - db + 1));
  for (int k = degree(r) - db; k >= 0; --k) {
    Integer c = smod(r[static_cast<std::size_t>(k + db)] * inv, m);
    q[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(r[static_cast<std::size_t>(k + j)].get_mpz_t(), c.get_mpz_t(), bb[j].get_mpz_t());
    }
    for (int j = 0; j <= db; ++j) {
      r[static_cast<std::size_t>(k + j)] = smod(r[static_cast<std::size_t>(k + j)], m);
    }
  }
  trim(q);
  trim(r);
  return {q, r};
}

}  // namespace kronecker::zpoly
