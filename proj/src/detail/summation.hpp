#pragma once

// Tail-bounded summation shared by the q-series evaluators.

#include "prudent/errors.hpp"
#include "prudent/hp.hpp"

#include <limits>

namespace prudent::detail {

/// Sums term(first), term(first+1), ... with the geometric tail estimate
/// |t_i| r/(1-r), r = |t_i/t_{i-1}|, valid once the terms decrease.
template <class Term>
Complex sum_geometric(long first, const NumericContext& ctx, Term&& term, long max_terms = 200000) {
  Truncation tr(ctx, max_terms);
  Complex s(0);
  Real prev(-1);
  const Real inf = std::numeric_limits<Real>::infinity();
  for (long i = first, count = 1;; ++i, ++count) {
    Complex t = term(i);
    s += t;
    Real at = abs(t);
    Real tail = inf;
    if (at == 0) {
      if (prev == 0) tail = 0;
    } else if (prev > 0 && at < prev) {
      Real r = at / prev;
      if (r < Real(0.995)) tail = at * r / (1 - r);
    }
    prev = at;
    if (tr.done(count, tail, abs(s))) return s;
  }
}

inline Real tolerance(const NumericContext& ctx) { return pow10_real(-(ctx.precision.digits + 5)); }

}  // namespace prudent::detail
