#pragma once

// Truncated power series in the area variable q with zero, one or two
// catalytic variables. Coefficients are exact big integers; FloatSeries1 is a
// high-precision mirror of Series1 in the scaled variable x = 2q.

#include "prudent/errors.hpp"
#include "prudent/hp.hpp"
#include "prudent/kernels.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace prudent {

// Sparse integer polynomials used as rational-function numerators/denominators.
struct Mono1 {
  int q;
  long c;
};
struct Mono2 {
  int q, u;
  long c;
};
struct Mono3 {
  int q, u, v;
  long c;
};

struct Poly1 {
  std::vector<Mono1> terms;
  Poly1() = default;
  Poly1(std::initializer_list<Mono1> t);
  long constant_term() const;
  int degree() const;
};

struct Poly2 {
  std::vector<Mono2> terms;
  Poly2() = default;
  Poly2(std::initializer_list<Mono2> t);
  long constant_term() const;
  // u -> q^t u
  Poly2 subst_u(int t) const;
};

struct Poly3 {
  std::vector<Mono3> terms;
  Poly3() = default;
  Poly3(std::initializer_list<Mono3> t);
};

enum class Catalytic { u, v };

namespace detail {

template <class R>
struct Scalar;

template <>
struct Scalar<BigInt> {
  static BigInt monomial(long c, int) { return BigInt(c); }
};

// q^k with coefficient c is (c 2^-k) x^k.
template <>
struct Scalar<Real> {
  static Real monomial(long c, int k) { return ldexp_real(Real(c), -k); }
};

}  // namespace detail

/// Univariate truncated series with coefficients of type R and order N
/// (coefficients 0..N stored).
template <class R>
class UniSeries {
 public:
  UniSeries() : UniSeries(0) {}
  explicit UniSeries(int order) : c_(static_cast<std::size_t>(check_order(order)) + 1, R(0)) {}
  UniSeries(int order, std::vector<R> coeffs) : c_(std::move(coeffs)) {
    c_.resize(static_cast<std::size_t>(check_order(order)) + 1, R(0));
  }
  static UniSeries one(int order) {
    UniSeries s(order);
    s.c_[0] = R(1);
    return s;
  }
  static UniSeries from_poly(const Poly1& p, int order) {
    UniSeries s(order);
    for (const auto& m : p.terms)
      if (m.q <= order) s.c_[m.q] += detail::Scalar<R>::monomial(m.c, m.q);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const R& operator[](int n) const { return c_[static_cast<std::size_t>(n)]; }
  R& operator[](int n) { return c_[static_cast<std::size_t>(n)]; }
  const std::vector<R>& coeffs() const { return c_; }

  int valuation() const { return static_cast<int>(kernels::first_nonzero(c_)); }
  bool is_zero() const { return valuation() > order(); }

  UniSeries truncated(int order) const {
    std::vector<R> c(c_.begin(), c_.begin() + std::min<std::size_t>(c_.size(), order + 1));
    return UniSeries(order, std::move(c));
  }

  friend UniSeries operator+(const UniSeries& a, const UniSeries& b) {
    int n = std::min(a.order(), b.order());
    UniSeries r(n);
    for (int i = 0; i <= n; ++i) r[i] = a[i] + b[i];
    return r;
  }
  friend UniSeries operator-(const UniSeries& a, const UniSeries& b) {
    int n = std::min(a.order(), b.order());
    UniSeries r(n);
    for (int i = 0; i <= n; ++i) r[i] = a[i] - b[i];
    return r;
  }
  UniSeries operator-() const {
    UniSeries r(order());
    for (int i = 0; i <= order(); ++i) r[i] = -c_[i];
    return r;
  }
  UniSeries& operator+=(const UniSeries& b) { return *this = *this + b; }
  UniSeries& operator-=(const UniSeries& b) { return *this = *this - b; }

  friend UniSeries operator*(const UniSeries& a, const UniSeries& b) {
    int n = std::min(a.order(), b.order());
    return UniSeries(n, kernels::convolve(a.c_, b.c_, static_cast<std::size_t>(n)));
  }
  UniSeries multiply_serial(const UniSeries& b) const {
    int n = std::min(order(), b.order());
    return UniSeries(n, kernels::convolve_serial(c_, b.c_, static_cast<std::size_t>(n)));
  }

  UniSeries scaled(const R& k) const {
    UniSeries r(order());
    for (int i = 0; i <= order(); ++i) r[i] = c_[i] * k;
    return r;
  }

  /// Product with a sparse polynomial in q: O(N * terms).
  UniSeries times(const Poly1& p) const {
    UniSeries r(order());
    int v = valuation();
    for (const auto& m : p.terms) {
      if (m.c == 0) continue;
      R k = detail::Scalar<R>::monomial(m.c, m.q);
      for (int n = std::max(m.q + v, m.q); n <= order(); ++n) r.c_[n] += k * c_[n - m.q];
    }
    return r;
  }

  /// Quotient by a sparse polynomial with constant term +-1, in place of
  /// expanding 1/p and convolving.
  UniSeries divided_by(const Poly1& p) const {
    long c0 = p.constant_term();
    if (c0 != 1 && c0 != -1)
      throw UsageError("denominator constant term must be +-1, got " + std::to_string(c0));
    std::vector<std::pair<int, R>> rest;
    for (const auto& m : p.terms)
      if (m.q > 0 && m.c != 0) rest.emplace_back(m.q, detail::Scalar<R>::monomial(m.c, m.q));
    UniSeries r(order());
    int v = valuation();
    for (int n = v; n <= order(); ++n) {
      R s = c_[n];
      for (const auto& [k, ck] : rest)
        if (n - k >= v) s -= ck * r.c_[n - k];
      r.c_[n] = c0 == 1 ? s : R(-s);
    }
    return r;
  }

  bool operator==(const UniSeries& o) const { return c_ == o.c_; }

 private:
  static int check_order(int order) {
    if (order < 0) throw UsageError("series order must be non-negative");
    return order;
  }
  std::vector<R> c_;
};

using Series1 = UniSeries<BigInt>;
using FloatSeries1 = UniSeries<Real>;

/// Series with numerator/denominator polynomials expanded to order N.
/// Rejects denominators whose constant term is not +-1.
Series1 expand_rational(const Poly1& numerator, const Poly1& denominator, int order);

/// Coefficient n of `exact` scaled by 2^-n, for comparison with float mode.
FloatSeries1 to_scaled_float(const Series1& exact);

/// c[n][i] = coefficient of q^n u^i, 0 <= i <= n <= N (triangular storage).
class Series2 {
 public:
  explicit Series2(int order = 0);
  static Series2 from_poly(const Poly2& p, int order);

  int order() const { return order_; }
  const BigInt& at(int n, int i) const { return c_[index(n, i)]; }
  BigInt& at(int n, int i) { return c_[index(n, i)]; }
  // Zero when (n, i) lies outside the stored triangle.
  BigInt get(int n, int i) const;

  int valuation() const;
  int u_valuation() const;
  bool is_zero() const;

  friend Series2 operator+(const Series2& a, const Series2& b);
  friend Series2 operator-(const Series2& a, const Series2& b);
  friend Series2 operator*(const Series2& a, const Series2& b);
  bool operator==(const Series2& o) const { return order_ == o.order_ && c_ == o.c_; }

  Series2 times(const Poly2& p) const;
  Series2 divided_by(const Poly2& p) const;
  Series2 subst_scale(int t) const;  // u -> q^t u
  Series1 eval_at_one() const;       // u = 1
  Series2 truncated(int order) const;

 private:
  static std::size_t index(int n, int i) {
    return static_cast<std::size_t>(n) * (n + 1) / 2 + static_cast<std::size_t>(i);
  }
  int order_;
  std::vector<BigInt> c_;
};

/// c[n][i][j] = coefficient of q^n u^i v^j, 0 <= i, j <= n <= N.
class Series3 {
 public:
  explicit Series3(int order = 0);
  static Series3 from_poly(const Poly3& p, int order);

  int order() const { return order_; }
  const BigInt& at(int n, int i, int j) const { return c_[index(n, i, j)]; }
  BigInt& at(int n, int i, int j) { return c_[index(n, i, j)]; }
  BigInt get(int n, int i, int j) const;

  int valuation() const;
  bool is_zero() const;

  friend Series3 operator+(const Series3& a, const Series3& b);
  friend Series3 operator-(const Series3& a, const Series3& b);
  friend Series3 operator*(const Series3& a, const Series3& b);
  bool operator==(const Series3& o) const { return order_ == o.order_ && c_ == o.c_; }

  Series3 times(const Poly3& p) const;
  Series3 divided_by(const Poly1& p) const;  // denominators in q only
  Series3 subst_scale(Catalytic which, int t) const;
  Series3 swap_catalytics() const;
  Series1 eval_at_one() const;
  Series3 truncated(int order) const;

 private:
  static std::size_t index(int n, int i, int j) {
    std::size_t nn = static_cast<std::size_t>(n);
    return nn * (nn + 1) * (2 * nn + 1) / 6 + static_cast<std::size_t>(i) * (nn + 1) + j;
  }
  int order_;
  std::vector<BigInt> c_;
};

}  // namespace prudent
