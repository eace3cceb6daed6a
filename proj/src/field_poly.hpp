// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Univariate polynomials over an abstract field given by an Ops policy:
//   Elem; zero(); one(); from_rational(q); add; sub; mul; neg; inv; is_zero.

#include <utility>
#include <vector>

#include "kronecker/errors.hpp"
#include "kronecker/rational.hpp"

namespace kronecker {

template <class Ops>
class FieldPolyRing {
 public:
  using E = typename Ops::Elem;
  using Poly = std::vector<E>;

  explicit FieldPolyRing(Ops ops) : ops_(std::move(ops)) {}
  const Ops& ops() const { return ops_; }

  void trim(Poly& f) const {
    while (!f.empty() && ops_.is_zero(f.back())) f.pop_back();
  }
  int degree(const Poly& f) const { return static_cast<int>(f.size()) - 1; }

  Poly add(const Poly& a, const Poly& b) const {
    Poly r(std::max(a.size(), b.size()), ops_.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = ops_.add(r[i], b[i]);
    trim(r);
    return r;
  }

  Poly sub(const Poly& a, const Poly& b) const {
    Poly r(std::max(a.size(), b.size()), ops_.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = ops_.sub(r[i], b[i]);
    trim(r);
    return r;
  }

  Poly mul(const Poly& a, const Poly& b) const {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, ops_.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (ops_.is_zero(a[i])) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (ops_.is_zero(b[j])) continue;
        r[i + j] = ops_.add(r[i + j], ops_.mul(a[i], b[j]));
      }
    }
    trim(r);
    return r;
  }

  Poly scale(const Poly& a, const E& c) const {
    Poly r;
    r.reserve(a.size());
    for (const auto& x : a) r.push_back(ops_.mul(x, c));
    trim(r);
    return r;
  }

  Poly monic(const Poly& f) const {
    if (f.empty()) return f;
    return scale(f, ops_.inv(f.back()));
  }

  Poly derivative(const Poly& f) const {
    Poly r;
    for (std::size_t i = 1; i < f.size(); ++i) {
      r.push_back(ops_.mul(ops_.from_rational(Rational(static_cast<long>(i))), f[i]));
    }
    trim(r);
    return r;
  }

  std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) const {
    if (b.empty()) throw PreconditionError("polynomial division by zero");
    Poly r = a;
    trim(r);
    if (r.size() < b.size()) return {Poly{}, r};
    const E lc_inv = ops_.inv(b.back());
    Poly q(r.size() - b.size() + 1, ops_.zero());
    const int db = degree(b);
    for (int t = degree(r); t >= db; --t) {
      const auto ti = static_cast<std::size_t>(t);
      if (ops_.is_zero(r[ti])) continue;
      const E c = ops_.mul(r[ti], lc_inv);
      q[ti - b.size() + 1] = c;
      for (int i = 0; i < db; ++i) {
        const auto idx = static_cast<std::size_t>(t - db + i);
        if (!ops_.is_zero(b[static_cast<std::size_t>(i)])) {
          r[idx] = ops_.sub(r[idx], ops_.mul(c, b[static_cast<std::size_t>(i)]));
        }
      }
      r[ti] = ops_.zero();
    }
    trim(r);
    trim(q);
    return {q, r};
  }

  Poly rem(const Poly& a, const Poly& b) const { return divmod(a, b).second; }

  /// Monic gcd.
  Poly gcd(Poly a, Poly b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      Poly r = rem(a, b);
      a = std::move(b);
      b = monic(r);
    }
    return monic(a);
  }

  /// g = gcd(a, b) monic and s with s*a == g (mod b).
  std::pair<Poly, Poly> half_ext_gcd(Poly a, Poly b) const {
    trim(a);
    trim(b);
    Poly s0{ops_.one()}, s1;
    while (!b.empty()) {
      auto [q, r] = divmod(a, b);
      Poly s2 = sub(s0, mul(q, s1));
      a = std::move(b);
      b = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    if (a.empty()) return {a, s0};
    const E c = ops_.inv(a.back());
    return {scale(a, c), scale(s0, c)};
  }

  /// a / b when b divides a exactly.
  Poly exact_quotient(const Poly& a, const Poly& b) const {
    auto [q, r] = divmod(a, b);
    if (!r.empty()) throw ConsistencyError("inexact polynomial division");
    return q;
  }

  /// Yun's squarefree decomposition of a monic f: (a_i, i) with
  /// f = prod a_i^i, a_i monic squarefree, trivial a_i omitted.
  std::vector<std::pair<Poly, int>> squarefree(const Poly& f) const {
    std::vector<std::pair<Poly, int>> out;
    if (degree(f) < 1) return out;
    Poly fp = derivative(f);
    Poly a0 = gcd(f, fp);
    Poly b = exact_quotient(f, a0);
    Poly c = exact_quotient(fp, a0);
    Poly d = sub(c, derivative(b));
    int i = 1;
    while (degree(b) > 0) {
      Poly a = gcd(b, d);
      if (degree(a) > 0) out.emplace_back(monic(a), i);
      b = exact_quotient(b, a);
      c = exact_quotient(d, a);
      d = sub(c, derivative(b));
      ++i;
    }
    return out;
  }

 private:
  Ops ops_;
};

}  // namespace kronecker
