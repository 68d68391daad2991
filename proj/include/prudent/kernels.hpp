#pragma once

// Truncated convolution c[n] = sum_{i+j=n} a[i] b[j], n <= order, in a serial
// reference form and an OpenMP form. Operands may be shorter than order+1.

#include "prudent/hp.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace prudent::kernels {

inline void fma_into(BigInt& acc, const BigInt& x, const BigInt& y) {
  mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
}

inline void fma_into(Real& acc, const Real& x, const Real& y) { acc += x * y; }

template <class R>
bool is_zero(const R& x) {
  return x == 0;
}

// First index with a nonzero entry, or v.size().
template <class R>
std::size_t first_nonzero(const std::vector<R>& v) {
  std::size_t i = 0;
  while (i < v.size() && is_zero(v[i])) ++i;
  return i;
}

template <class R>
void convolve_row(const std::vector<R>& a, const std::vector<R>& b, std::size_t va, std::size_t vb,
                  std::size_t n, R& out) {
  if (n < va + vb) return;
  std::size_t lo = va;
  std::size_t hi = std::min(n - vb, a.size() - 1);
  if (n >= b.size()) lo = std::max(lo, n - (b.size() - 1));
  for (std::size_t i = lo; i <= hi && i <= n; ++i) {
    if (is_zero(a[i])) continue;
    fma_into(out, a[i], b[n - i]);
  }
}

template <class R>
std::vector<R> convolve_serial(const std::vector<R>& a, const std::vector<R>& b, std::size_t order) {
  std::vector<R> c(order + 1, R(0));
  if (a.empty() || b.empty()) return c;
  std::size_t va = first_nonzero(a), vb = first_nonzero(b);
  if (va == a.size() || vb == b.size()) return c;
  for (std::size_t n = va + vb; n <= order; ++n) convolve_row(a, b, va, vb, n, c[n]);
  return c;
}

template <class R>
std::vector<R> convolve_parallel(const std::vector<R>& a, const std::vector<R>& b, std::size_t order) {
  std::vector<R> c(order + 1, R(0));
  if (a.empty() || b.empty()) return c;
  std::size_t va = first_nonzero(a), vb = first_nonzero(b);
  if (va == a.size() || vb == b.size()) return c;
  const long lo = static_cast<long>(va + vb), hi = static_cast<long>(order);
  // Rows near the top cost the most; dynamic scheduling balances them.
#pragma omp parallel for schedule(dynamic, 16)
  for (long n = lo; n <= hi; ++n) convolve_row(a, b, va, vb, static_cast<std::size_t>(n), c[n]);
  return c;
}

// Below this order the OpenMP launch overhead dominates.
inline constexpr std::size_t kParallelThreshold = 256;

template <class R>
std::vector<R> convolve(const std::vector<R>& a, const std::vector<R>& b, std::size_t order) {
  return order >= kParallelThreshold ? convolve_parallel(a, b, order) : convolve_serial(a, b, order);
}

}  // namespace prudent::kernels
