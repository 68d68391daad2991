#include "prudent/series.hpp"

#include <algorithm>

namespace prudent {

Poly1::Poly1(std::initializer_list<Mono1> t) : terms(t) {}

long Poly1::constant_term() const {
  long c = 0;
  for (const auto& m : terms)
    if (m.q == 0) c += m.c;
  return c;
}

int Poly1::degree() const {
  int d = 0;
  for (const auto& m : terms)
    if (m.c != 0) d = std::max(d, m.q);
  return d;
}

Poly2::Poly2(std::initializer_list<Mono2> t) : terms(t) {}

long Poly2::constant_term() const {
  long c = 0;
  for (const auto& m : terms)
    if (m.q == 0 && m.u == 0) c += m.c;
  return c;
}

Poly2 Poly2::subst_u(int t) const {
  Poly2 r;
  for (const auto& m : terms) r.terms.push_back({m.q + t * m.u, m.u, m.c});
  return r;
}

Poly3::Poly3(std::initializer_list<Mono3> t) : terms(t) {}

Series1 expand_rational(const Poly1& numerator, const Poly1& denominator, int order) {
  return Series1::from_poly(numerator, order).divided_by(denominator);
}

FloatSeries1 to_scaled_float(const Series1& exact) {
  FloatSeries1 r(exact.order());
  for (int n = 0; n <= exact.order(); ++n) r[n] = ldexp_real(to_real(exact[n]), -n);
  return r;
}

// ---------------------------------------------------------------- Series2

Series2::Series2(int order) : order_(order) {
  if (order < 0) throw UsageError("series order must be non-negative");
  c_.resize(index(order + 1, 0));
}

Series2 Series2::from_poly(const Poly2& p, int order) {
  Series2 s(order);
  for (const auto& m : p.terms) {
    if (m.q > order || m.c == 0) continue;
    if (m.u > m.q) throw std::logic_error("monomial exceeds the catalytic degree cap");
    s.at(m.q, m.u) += m.c;
  }
  return s;
}

BigInt Series2::get(int n, int i) const {
  if (n < 0 || n > order_ || i < 0 || i > n) return 0;
  return at(n, i);
}

int Series2::valuation() const {
  for (int n = 0; n <= order_; ++n)
    for (int i = 0; i <= n; ++i)
      if (at(n, i) != 0) return n;
  return order_ + 1;
}

int Series2::u_valuation() const {
  int best = order_ + 1;
  for (int n = 0; n <= order_; ++n)
    for (int i = 0; i <= std::min(n, best - 1); ++i)
      if (at(n, i) != 0) best = i;
  return best;
}

bool Series2::is_zero() const { return valuation() > order_; }

Series2 Series2::truncated(int order) const {
  Series2 r(order);
  for (int n = 0; n <= std::min(order, order_); ++n)
    for (int i = 0; i <= n; ++i) r.at(n, i) = at(n, i);
  return r;
}

Series2 operator+(const Series2& a, const Series2& b) {
  Series2 r = a.truncated(std::min(a.order_, b.order_));
  for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] += b.c_[k];
  return r;
}

Series2 operator-(const Series2& a, const Series2& b) {
  Series2 r = a.truncated(std::min(a.order_, b.order_));
  for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] -= b.c_[k];
  return r;
}

Series2 operator*(const Series2& a, const Series2& b) {
  int N = std::min(a.order_, b.order_);
  Series2 r(N);
  int va = a.valuation(), vb = b.valuation();
  for (int n1 = va; n1 <= N - vb; ++n1)
    for (int i1 = 0; i1 <= n1; ++i1) {
      const BigInt& x = a.at(n1, i1);
      if (x == 0) continue;
      for (int n2 = vb; n1 + n2 <= N; ++n2)
        for (int i2 = 0; i2 <= n2; ++i2) {
          const BigInt& y = b.at(n2, i2);
          if (y != 0) kernels::fma_into(r.at(n1 + n2, i1 + i2), x, y);
        }
    }
  return r;
}

Series2 Series2::times(const Poly2& p) const {
  Series2 r(order_);
  for (const auto& m : p.terms) {
    if (m.c == 0) continue;
    for (int n = 0; n + m.q <= order_; ++n)
      for (int i = 0; i <= n; ++i) {
        const BigInt& x = at(n, i);
        if (x == 0) continue;
        int nn = n + m.q, ii = i + m.u;
        if (ii > nn) throw std::logic_error("product leaves the catalytic degree cap");
        if (m.c > 0)
          mpz_addmul_ui(r.at(nn, ii).get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(m.c));
        else
          mpz_submul_ui(r.at(nn, ii).get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(-m.c));
      }
  }
  return r;
}

Series2 Series2::divided_by(const Poly2& p) const {
  long c0 = p.constant_term();
  if (c0 != 1 && c0 != -1)
    throw UsageError("denominator constant term must be +-1, got " + std::to_string(c0));
  Series2 r(order_);
  for (int n = 0; n <= order_; ++n)
    for (int i = 0; i <= n; ++i) {
      BigInt s = at(n, i);
      for (const auto& m : p.terms) {
        if ((m.q == 0 && m.u == 0) || m.c == 0) continue;
        int pn = n - m.q, pi = i - m.u;
        if (pn < 0 || pi < 0 || pi > pn) continue;
        const BigInt& y = r.at(pn, pi);
        if (y == 0) continue;
        if (m.c > 0)
          mpz_submul_ui(s.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(m.c));
        else
          mpz_addmul_ui(s.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(-m.c));
      }
      r.at(n, i) = c0 == 1 ? s : BigInt(-s);
    }
  return r;
}

Series2 Series2::subst_scale(int t) const {
  if (t < 1) throw UsageError("subst_scale requires t >= 1");
  Series2 r(order_);
  for (int n = 0; n <= order_; ++n)
    for (int i = 0; i <= n; ++i) {
      int nn = n + t * i;
      if (nn <= order_ && at(n, i) != 0) r.at(nn, i) = at(n, i);
    }
  return r;
}

Series1 Series2::eval_at_one() const {
  Series1 r(order_);
  for (int n = 0; n <= order_; ++n)
    for (int i = 0; i <= n; ++i) r[n] += at(n, i);
  return r;
}

// ---------------------------------------------------------------- Series3

Series3::Series3(int order) : order_(order) {
  if (order < 0) throw UsageError("series order must be non-negative");
  c_.resize(index(order + 1, 0, 0));
}

Series3 Series3::from_poly(const Poly3& p, int order) {
  Series3 s(order);
  for (const auto& m : p.terms) {
    if (m.q > order || m.c == 0) continue;
    if (m.u > m.q || m.v > m.q) throw std::logic_error("monomial exceeds the catalytic degree cap");
    s.at(m.q, m.u, m.v) += m.c;
  }
  return s;
}

BigInt Series3::get(int n, int i, int j) const {
  if (n < 0 || n > order_ || i < 0 || j < 0 || i > n || j > n) return 0;
  return at(n, i, j);
}

int Series3::valuation() const {
  for (int n = 0; n <= order_; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        if (at(n, i, j) != 0) return n;
  return order_ + 1;
}

bool Series3::is_zero() const { return valuation() > order_; }

Series3 Series3::truncated(int order) const {
  Series3 r(order);
  for (int n = 0; n <= std::min(order, order_); ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) r.at(n, i, j) = at(n, i, j);
  return r;
}

Series3 operator+(const Series3& a, const Series3& b) {
  Series3 r = a.truncated(std::min(a.order_, b.order_));
  for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] += b.c_[k];
  return r;
}

Series3 operator-(const Series3& a, const Series3& b) {
  Series3 r = a.truncated(std::min(a.order_, b.order_));
  for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] -= b.c_[k];
  return r;
}

Series3 operator*(const Series3& a, const Series3& b) {
  int N = std::min(a.order_, b.order_);
  Series3 r(N);
  int va = a.valuation(), vb = b.valuation();
  for (int n1 = va; n1 <= N - vb; ++n1)
    for (int i1 = 0; i1 <= n1; ++i1)
      for (int j1 = 0; j1 <= n1; ++j1) {
        const BigInt& x = a.at(n1, i1, j1);
        if (x == 0) continue;
        for (int n2 = vb; n1 + n2 <= N; ++n2)
          for (int i2 = 0; i2 <= n2; ++i2)
            for (int j2 = 0; j2 <= n2; ++j2) {
              const BigInt& y = b.at(n2, i2, j2);
              if (y != 0) kernels::fma_into(r.at(n1 + n2, i1 + i2, j1 + j2), x, y);
            }
      }
  return r;
}

Series3 Series3::times(const Poly3& p) const {
  Series3 r(order_);
  for (const auto& m : p.terms) {
    if (m.c == 0) continue;
    BigInt k = m.c;
    for (int n = 0; n + m.q <= order_; ++n)
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
          const BigInt& x = at(n, i, j);
          if (x == 0) continue;
          int nn = n + m.q, ii = i + m.u, jj = j + m.v;
          if (ii > nn || jj > nn) throw std::logic_error("product leaves the catalytic degree cap");
          kernels::fma_into(r.at(nn, ii, jj), x, k);
        }
  }
  return r;
}

Series3 Series3::divided_by(const Poly1& p) const {
  long c0 = p.constant_term();
  if (c0 != 1 && c0 != -1)
    throw UsageError("denominator constant term must be +-1, got " + std::to_string(c0));
  Series3 r(order_);
  for (int n = 0; n <= order_; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        BigInt s = at(n, i, j);
        for (const auto& m : p.terms) {
          if (m.q == 0 || m.c == 0) continue;
          int pn = n - m.q;
          if (pn < std::max(i, j)) continue;
          const BigInt& y = r.at(pn, i, j);
          if (y == 0) continue;
          if (m.c > 0)
            mpz_submul_ui(s.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(m.c));
          else
            mpz_addmul_ui(s.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(-m.c));
        }
        r.at(n, i, j) = c0 == 1 ? s : BigInt(-s);
      }
  return r;
}

Series3 Series3::subst_scale(Catalytic which, int t) const {
  if (t < 1) throw UsageError("subst_scale requires t >= 1");
  Series3 r(order_);
  for (int n = 0; n <= order_; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        const BigInt& x = at(n, i, j);
        if (x == 0) continue;
        int nn = n + t * (which == Catalytic::u ? i : j);
        if (nn <= order_) r.at(nn, i, j) = x;
      }
  return r;
}

Series3 Series3::swap_catalytics() const {
  Series3 r(order_);
  for (int n = 0; n <= order_; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) r.at(n, j, i) = at(n, i, j);
  return r;
}

Series1 Series3::eval_at_one() const {
  Series1 r(order_);
  for (int n = 0; n <= order_; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) r[n] += at(n, i, j);
  return r;
}

}  // namespace prudent
