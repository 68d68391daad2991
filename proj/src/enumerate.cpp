#include "prudent/enumerate.hpp"

#include <stdexcept>

namespace prudent {

namespace {

void require_order(int N) {
  if (N < 1) throw UsageError("order N must be >= 1");
}

Poly1 one_minus_2q() { return {{0, 1}, {1, -2}}; }
Poly1 one_minus_q() { return {{0, 1}, {1, -1}}; }

// 1 - q - q^k + q^(k+1) - q^(k+2)
Poly1 product_numerator(int k) { return {{0, 1}, {1, -1}, {k, -1}, {k + 1, 1}, {k + 2, -1}}; }

// C(q) = 2q(3 - 10q + 9q^2 - q^3) / ((1-2q)^2 (1-q))
template <class R>
UniSeries<R> c_part(int N) {
  return UniSeries<R>::from_poly({{1, 6}, {2, -20}, {3, 18}, {4, -2}}, N)
      .divided_by(one_minus_2q())
      .divided_by(one_minus_2q())
      .divided_by(one_minus_q());
}

// Explicit q-sum with an incremental running product:
// run_m = prod_{k<m} num_k/den_k / (1-2q)^m.
template <class R>
UniSeries<R> theorem_route(int N) {
  UniSeries<R> sum(N);
  UniSeries<R> run = UniSeries<R>::one(N).divided_by(one_minus_2q());
  for (int m = 1; 2 * m + 3 <= N; ++m) {
    Poly1 mono{{2 * m, m % 2 == 0 ? 1L : -1L}};
    sum += run.times(mono).divided_by({{0, 1}, {1, -1}, {m + 1, -1}});
    run = run.times(product_numerator(m)).divided_by({{0, 1}, {1, -1}, {m + 1, -1}}).divided_by(one_minus_2q());
  }
  UniSeries<R> part = sum.times({{3, -2}, {4, 4}, {5, -2}}).divided_by(one_minus_2q()).divided_by(one_minus_2q());
  return part + c_part<R>(N);
}

// PA = C - A (v;q)/(qu;q) [ sum_{nu>=0} d_nu q^(nu+2) / (1 - 2q + q^(nu+2)) ], d_0 = 1.
template <class R>
UniSeries<R> meromorphic_route(int N) {
  UniSeries<R> Q = UniSeries<R>::from_poly({{2, -1}}, N).divided_by({{0, 1}, {1, -1}, {2, -1}});
  for (int k = 1; k <= N; ++k) Q = Q.times(product_numerator(k)).divided_by({{0, 1}, {1, -1}, {k + 2, -1}});
  UniSeries<R> bracket(N);
  UniSeries<R> d = UniSeries<R>::one(N);
  for (int nu = 0; nu + 2 <= N; ++nu) {
    if (nu > 0) {
      // d_nu = d_{nu-1} (v - u q^nu) / (1 - q^nu)
      d = d.times({{0, 1}, {1, -1}, {2, 1}, {nu + 1, -1}}).divided_by(one_minus_q()).divided_by({{0, 1}, {nu, -1}});
    }
    bracket += d.times({{nu + 2, 1}}).divided_by({{0, 1}, {1, -2}, {nu + 2, 1}});
  }
  UniSeries<R> x = (Q * bracket).times({{1, 2}, {2, -4}, {3, 2}}).divided_by(one_minus_2q()).divided_by(one_minus_2q());
  return c_part<R>(N) - x;
}

CountTable make_table(int k, const Series1& s, const std::string& method) {
  CountTable t;
  t.k = k;
  t.method = method;
  t.counts.assign(s.coeffs().begin(), s.coeffs().end());
  t.counts[0] = 0;
  return t;
}

// Coefficient access that tolerates out-of-range indices.
const BigInt& cref(const Series3& s, int n, int i, int j) {
  static const BigInt zero = 0;
  if (n < 0 || n > s.order() || i < 0 || j < 0 || i > n || j > n) return zero;
  return s.at(n, i, j);
}

Series3 rhs_x(const Series3& X, const Series3& Y, const Series3& Z) {
  const Poly3 qv{{1, 0, 1, 1}};
  const Poly3 u{{0, 1, 0, 1}};
  const Poly3 q{{1, 0, 0, 1}};
  Series3 Ys = Y.swap_catalytics();
  Series3 inner = (X - X.subst_scale(Catalytic::u, 1)) + (Ys - Ys.subst_scale(Catalytic::u, 1)) +
                  (Z - Z.subst_scale(Catalytic::u, 1).times(q)).times(u);
  return inner.divided_by(one_minus_q()).times(qv);
}

Series3 rhs_y(const Series3& X, const Series3& Y, const Series3& Z) {
  const int N = Y.order();
  const Poly3 qv{{1, 0, 1, 1}};
  const Poly3 v{{0, 0, 1, 1}};
  const Poly3 quv{{1, 1, 1, 1}};
  Series3 Zs = Z.swap_catalytics();
  Series3 first = ((Y - Y.subst_scale(Catalytic::u, 1)) + (Zs - Zs.subst_scale(Catalytic::u, 1)).times(v))
                      .divided_by(one_minus_q())
                      .times(qv);
  Series3 added = X.swap_catalytics().subst_scale(Catalytic::v, 1) + Y.subst_scale(Catalytic::v, 1) +
                  Z.swap_catalytics().subst_scale(Catalytic::v, 1).times(qv);
  return Series3::from_poly(Poly3{{1, 1, 1, 1}}, N) + first + added.times(quv);
}

Series3 rhs_z(const Series3& Y, const Series3& Z) {
  const Poly3 qv{{1, 0, 1, 1}};
  const Poly3 quv{{1, 1, 1, 1}};
  return (Z - Z.subst_scale(Catalytic::u, 1)).divided_by(one_minus_q()).times(qv) +
         Y.swap_catalytics().subst_scale(Catalytic::v, 1).times(qv) + Z.subst_scale(Catalytic::v, 1).times(quv);
}

}  // namespace

std::string to_string(Pa3Method m) {
  switch (m) {
    case Pa3Method::theorem: return "theorem";
    case Pa3Method::functional: return "functional";
    case Pa3Method::meromorphic: return "meromorphic";
  }
  return "?";
}

Pa3Method parse_pa3_method(const std::string& s) {
  if (s == "theorem") return Pa3Method::theorem;
  if (s == "functional") return Pa3Method::functional;
  if (s == "meromorphic") return Pa3Method::meromorphic;
  throw UsageError("unknown method '" + s + "' (expected theorem, functional or meromorphic)");
}

Series1 bargraph_series(int N) {
  require_order(N);
  return expand_rational({{1, 1}}, one_minus_2q(), N);
}

Series2 bargraph_width_series(int N) {
  require_order(N);
  // B = qu/(1-q) + qu/(1-q) B  =>  B (1 - q - qu) = qu
  return Series2::from_poly({{1, 1, 1}}, N).divided_by({{0, 0, 1}, {1, 0, -1}, {1, 1, -1}});
}

CountTable pa2_series(int N) {
  require_order(N);
  Series1 s = expand_rational({{1, 2}}, one_minus_2q(), N) + expand_rational({{1, 2}}, one_minus_q(), N);
  return make_table(2, s, "closed-form");
}

Series2 w_series(int N) {
  require_order(N);
  const Poly2 f_num{{1, 1, 1}, {2, 1, -2}, {3, 1, 1}};
  const Poly2 g_num{{1, 0, -1}, {2, 0, 1}, {1, 1, 1}, {2, 1, -1}, {3, 1, 1}};
  const Poly2 den{{0, 0, 1}, {1, 0, -3}, {1, 1, -1}, {2, 0, 2}, {2, 1, 2}};
  Series2 W(N);
  Series2 P = Series2::from_poly({{0, 0, 1}}, N);
  for (int m = 0; 2 * m + 1 <= N; ++m) {
    Series2 term = P.times(f_num.subst_u(m)).divided_by(den.subst_u(m));
    if (term.valuation() < 2 * m + 1)
      throw std::logic_error("w_series: term " + std::to_string(m) + " has valuation below 2m+1");
    W = W + term;
    P = P.times(g_num.subst_u(m)).divided_by(den.subst_u(m));
  }
  return W;
}

CountTable pa3_series(int N, Pa3Method method) {
  require_order(N);
  Series1 s;
  switch (method) {
    case Pa3Method::theorem: s = theorem_route<BigInt>(N); break;
    case Pa3Method::meromorphic: s = meromorphic_route<BigInt>(N); break;
    case Pa3Method::functional: {
      Series1 w = w_series(N).eval_at_one();
      Series1 rest = expand_rational({{1, 1}}, one_minus_q(), N) + expand_rational({{1, 1}}, one_minus_2q(), N);
      s = (w + rest).scaled(BigInt(2));
      break;
    }
  }
  return make_table(3, s, to_string(method));
}

FloatSeries1 pa3_float_series(int N, Precision precision, Pa3Method method) {
  require_order(N);
  PrecisionScope scope(precision);
  FloatSeries1 s;
  switch (method) {
    case Pa3Method::meromorphic: s = meromorphic_route<Real>(N); break;
    case Pa3Method::theorem: s = theorem_route<Real>(N); break;
    case Pa3Method::functional: throw UsageError("float mode supports the theorem and meromorphic routes only");
  }
  s[0] = 0;
  return s;
}

Pa4System pa4_sweep(const Pa4System& s) {
  Pa4System r;
  r.X = rhs_x(s.X, s.Y, s.Z);
  r.Y = rhs_y(r.X, s.Y, s.Z);
  r.Z = rhs_z(r.Y, s.Z);
  return r;
}

Pa4System pa4_equation_residuals(const Pa4System& s) {
  Pa4System r;
  r.X = s.X - rhs_x(s.X, s.Y, s.Z);
  r.Y = s.Y - rhs_y(s.X, s.Y, s.Z);
  r.Z = s.Z - rhs_z(s.Y, s.Z);
  return r;
}

Pa4System pa4_system_sweep(int N) {
  require_order(N);
  // After s sweeps the iterate is exact through order s, so sweep s only
  // needs to be carried to order s.
  Pa4System cur{Series3(1), Series3(1), Series3(1)};
  for (int s = 1; s <= N; ++s) {
    Pa4System widened{cur.X.truncated(s), cur.Y.truncated(s), cur.Z.truncated(s)};
    cur = pa4_sweep(widened);
  }
  Pa4System again = pa4_sweep(cur);
  if (!(again.X == cur.X && again.Y == cur.Y && again.Z == cur.Z))
    throw std::logic_error("pa4 sweep solver did not stabilise");
  return cur;
}

Pa4System pa4_system(int N) {
  require_order(N);
  Series3 X(N), Y(N), Z(N);
  const std::size_t W = static_cast<std::size_t>(N) + 3;
  std::vector<BigInt> AX(W * W), AY(W * W), AZ(W * W);
  auto acc = [W](std::vector<BigInt>& a, int i, int j) -> BigInt& { return a[static_cast<std::size_t>(i) * W + j]; };
  BigInt t;
  for (int n = 1; n <= N; ++n) {
    for (int i = 0; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        X.at(n, i, j) = acc(AX, i, j - 1);

        t = acc(AY, i, j - 1);
        if (n == 1 && i == 1 && j == 1) t += 1;
        if (i >= 1) {
          // quv [X(q,qv,u) + Y(q,u,qv) + qv Z(q,qv,u)] at q^(n-1) u^a v^b
          int m = n - 1, a = i - 1, b = j - 1;
          t += cref(X, m - b, b, a);
          t += cref(Y, m - b, a, b);
          if (b >= 1) t += cref(Z, m - b, b - 1, a);
        }
        Y.at(n, i, j) = t;

        t = acc(AZ, i, j - 1);
        t += cref(Y, n - j, j - 1, i);
        if (i >= 1) t += cref(Z, n - j, i - 1, j - 1);
        Z.at(n, i, j) = t;
      }
    for (int i = 0; i <= n + 1; ++i)
      for (int j = 0; j <= n + 1; ++j) {
        BigInt& ax = acc(AX, i, j);
        ax += cref(X, n, i, j);
        ax -= cref(X, n - i, i, j);
        ax += cref(Y, n, j, i);
        ax -= cref(Y, n - i, j, i);
        if (i >= 1) {
          ax += cref(Z, n, i - 1, j);
          ax -= cref(Z, n - i, i - 1, j);
        }
        BigInt& ay = acc(AY, i, j);
        ay += cref(Y, n, i, j);
        ay -= cref(Y, n - i, i, j);
        if (j >= 1) {
          ay += cref(Z, n, j - 1, i);
          ay -= cref(Z, n - i, j - 1, i);
        }
        BigInt& az = acc(AZ, i, j);
        az += cref(Z, n, i, j);
        az -= cref(Z, n - i, i, j);
      }
  }
  Pa4System sys{std::move(X), std::move(Y), std::move(Z)};
  Pa4System check = pa4_sweep(sys);
  if (!(check.X == sys.X && check.Y == sys.Y && check.Z == sys.Z))
    throw std::logic_error("pa4 layered solution is not a fixed point of the system");
  return sys;
}

CountTable pa4_series(int N) {
  Pa4System s = pa4_system(N);
  Series1 total = (s.X.eval_at_one() + s.Y.eval_at_one() + s.Z.eval_at_one()).scaled(BigInt(8));
  return make_table(4, total, "functional");
}

CountTable count_series(int k, int N) {
  switch (k) {
    case 2: return pa2_series(N);
    case 3: return pa3_series(N);
    case 4: return pa4_series(N);
    default: throw UsageError("k must be 2, 3 or 4");
  }
}

Series2 bargraph_equation_residual(const Series2& B) {
  const int N = B.order();
  Series2 qu_over = Series2::from_poly({{1, 1, 1}}, N).divided_by({{0, 0, 1}, {1, 0, -1}});
  return B - qu_over - (B.times({{1, 1, 1}}).divided_by({{0, 0, 1}, {1, 0, -1}}));
}

Series2 w_equation_residual(const Series2& W) {
  const int N = W.order();
  Series2 one_plus_b = Series2::from_poly({{0, 0, 1}}, N) + bargraph_width_series(std::max(N, 1)).truncated(N);
  Series2 lead = one_plus_b.times({{1, 1, 1}});
  Series2 shifted = W.subst_scale(1);
  Series2 rhs = lead + (W - shifted).times({{1, 0, 1}}).divided_by({{0, 0, 1}, {1, 0, -1}}) + lead * shifted;
  return W - rhs;
}

}  // namespace prudent
