#include "prudent/asymptotics.hpp"

#include "detail/summation.hpp"

#include <mutex>

namespace prudent {

namespace {

// Exact theorem-route counts, grown on demand and shared between calls.
std::vector<BigInt> exact_counts(int N) {
  static std::mutex mu;
  static CountTable cache;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.max_area() < N) cache = pa3_series(std::max(N, 2 * std::max(cache.max_area(), 0)), Pa3Method::theorem);
  return std::vector<BigInt>(cache.counts.begin(), cache.counts.begin() + N + 1);
}

bool on_slit(const Complex& q) {
  return abs(imag(q)) < Real(1e-30) && real(q) >= Real(0.5) && real(q) <= Real(0.55);
}

// Pi(w) = sum_k p_k exp(-2 i k pi w), p_k = pi / sin(pi gamma + 2 i k pi^2 / L), L = log(1/q).
Complex pi_series(const Complex& w, const Complex& gamma, const Complex& L, const NumericContext& ctx) {
  const Real pi = real_pi();
  const Complex I(Real(0), Real(1));
  auto pk = [&](long k) { return Complex(pi / sin(pi * gamma + Real(2 * k) * I * pi * pi / L)); };
  Complex s = pk(0);
  const Real tol = detail::tolerance(ctx);
  Real prev(-1);
  for (long k = 1; k <= 200; ++k) {
    Complex e = exp(Real(-2 * k) * I * pi * w);
    Complex term = pk(k) * e + pk(-k) / e;
    s += term;
    Real at = abs(term);
    if (at <= tol * abs(s) && (prev < 0 || at < prev)) return s;
    prev = at;
  }
  throw DomainError("Fourier series Pi(w) does not converge for this w (|Im w| too large)");
}

Complex rational_A(const Complex& q) {
  Complex t = Complex(1) - Real(2) * q, om = Complex(1) - q;
  return Real(2) * q * om * om / (t * t);
}

Complex rational_C(const Complex& q) {
  Complex t = Complex(1) - Real(2) * q, om = Complex(1) - q;
  return Real(2) * q * (Real(3) - Real(10) * q + Real(9) * q * q - q * q * q) / (om * t * t);
}

void require_not_half(const Complex& q, const NumericContext& ctx) {
  if (abs(Complex(1) - Real(2) * q) < pow10_real(-ctx.precision.digits))
    throw PoleError("PA(q) has its dominant singularity at q = 1/2");
}

Complex eval_taylor(const Complex& q, const NumericContext& ctx, GfParams params) {
  const Real x = 2 * abs(q);
  if (x >= 1) throw DomainError("taylor route requires |q| < 1/2");
  int N = params.taylor_order;
  if (N <= 0) {
    // PA_n <= 3 n^2 2^n; tail of sum 3 n^2 x^n beyond N is below 3 (N+1)^2 x^(N+1) / (1-x)^3
    const Real tol = detail::tolerance(ctx) * std::max(Real(6 * abs(q)), Real(1e-30));
    N = 1;
    while (3 * Real(N + 1) * (N + 1) * pow(x, N + 1) / pow(1 - x, 3) > tol) {
      if (++N > 20000) throw DomainError("taylor route needs more than 20000 terms; |q| too close to 1/2");
    }
  }
  auto counts = exact_counts(N);
  Complex s(0);
  for (int n = N; n >= 1; --n) s = (s + Complex(to_real(counts[n]))) * q;
  return s;
}

Complex eval_meromorphic(const Complex& q, const NumericContext& ctx) {
  if (abs(q) >= Real(0.55)) throw DomainError("meromorphic route requires |q| < 0.55");
  if (on_slit(q)) throw DomainError("meromorphic route excludes the slit [1/2, 0.55]");
  require_not_half(q, ctx);
  if (abs(q) == 0) return Complex(0);
  const Complex u = q / (Complex(1) - q), v = (Complex(1) - q + q * q) / (Complex(1) - q);
  const Complex t = Complex(1) - Real(2) * q;
  Complex d = Complex(1), qn = Complex(1), qnu2 = q * q;
  Complex s = q * q / ((Complex(1) - q) * (Complex(1) - q));
  s += detail::sum_geometric(1, ctx, [&](long) {
    qn *= q;
    qnu2 *= q;
    d *= (v - u * qn) / (Complex(1) - qn);
    Complex den = t + qnu2;
    if (abs(den) < Real(1e-25)) throw DomainError("q is a pole of PA (root of 1 - 2q + q^(k+2))");
    return Complex(d * qnu2 / den);
  });
  return rational_C(q) - rational_A(q) * pochhammer_inf(v, q, ctx) / pochhammer_inf(q * u, q, ctx) * s;
}

Complex eval_doublesum(const Complex& q, const NumericContext& ctx) {
  if (abs(q - Complex(Real(0.5))) >= Real(0.1)) throw DomainError("doublesum route requires |q - 1/2| < 0.1");
  if (on_slit(q)) throw DomainError("doublesum route excludes the slit [1/2, 0.55]");
  require_not_half(q, ctx);
  BaseQuantities b = base_quantities(q, ctx, true);
  const Complex& v = b.v;
  Complex c = Complex(1), qj = Complex(1);
  Complex T = detail::sum_geometric(0, ctx, [&](long j) {
    if (j > 0) {
      qj *= q;
      c *= (b.a - qj) / (Complex(1) - qj);
    }
    const Complex r = v * qj * q;  // v q^(j+1)
    Complex w = Complex(1), qnu2 = q * q;
    Complex H = detail::sum_geometric(1, ctx, [&](long) {
      w *= r;
      qnu2 *= q;
      return Complex(w / (b.t + qnu2));
    });
    return Complex(c * H);
  });
  Complex K = pochhammer_inf(b.a, q, ctx) * pochhammer_inf(v, q, ctx) /
              (pochhammer_inf(q, q, ctx) * pochhammer_inf(b.a * v, q, ctx));
  return b.D - q * q * b.A * K * T;
}

void require_singular_region(const Complex& q) {
  Complex t = Complex(1) - Real(2) * q;
  if (abs(t) >= Real(0.2)) throw DomainError("singular route requires |1 - 2q| < 0.2");
  if (abs(imag(t)) < Real(1e-30) && real(t) <= 0)
    throw DomainError("singular route requires 1 - 2q off the branch cut (-inf, 0]");
}

}  // namespace

std::string to_string(GfMethod m) {
  switch (m) {
    case GfMethod::taylor: return "taylor";
    case GfMethod::meromorphic: return "meromorphic";
    case GfMethod::doublesum: return "doublesum";
    case GfMethod::singular: return "singular";
  }
  return "?";
}

GfMethod parse_gf_method(const std::string& s) {
  if (s == "taylor") return GfMethod::taylor;
  if (s == "meromorphic") return GfMethod::meromorphic;
  if (s == "doublesum") return GfMethod::doublesum;
  if (s == "singular") return GfMethod::singular;
  throw UsageError("unknown gf method '" + s + "' (taylor, meromorphic, doublesum, singular)");
}

Complex p_k(long k, const Complex& q) {
  const Real pi = real_pi();
  const Complex I(Real(0), Real(1));
  Complex L = log(Complex(1) / q);
  Complex gamma = log((Complex(1) - q + q * q) / (Complex(1) - q)) / L;
  return pi / sin(pi * gamma + Real(2 * k) * I * pi * pi / L);
}

Complex pi_eval(const Complex& w, const Complex& q, const NumericContext& ctx) {
  Complex L = log(Complex(1) / q);
  Complex gamma = log((Complex(1) - q + q * q) / (Complex(1) - q)) / L;
  return pi_series(w, gamma, L, ctx);
}

Complex U_eval(const Complex& q, const NumericContext& ctx) {
  BaseQuantities b = base_quantities(q, ctx);
  if (abs(b.t) >= Real(0.2)) throw DomainError("U requires |1 - 2q| < 0.2");
  Complex L = log(Complex(1) / q);
  Complex pref = b.v * exp((Real(3) * b.gamma - Real(2)) * log(q)) / L;
  return pref * pochhammer_inf(-b.t / q, q, ctx) / pochhammer_inf(-b.a * b.t / (q * q), q, ctx);
}

Complex V_eval(const Complex& q, const NumericContext& ctx) {
  BaseQuantities b = base_quantities(q, ctx);
  if (abs(b.t) >= Real(0.2)) throw DomainError("V requires |1 - 2q| < 0.2");
  const Complex z = -b.a * b.t / (q * q);
  if (abs(z) >= 1) throw DomainError("V requires |a q^-2 (1-2q)| < 1");
  const Complex qq = pochhammer_inf(q, q, ctx), aq = pochhammer_inf(b.a, q, ctx);
  const Complex x1 = q / (b.a * b.v), x2 = q / b.v;
  Complex term = Complex(1), p1 = x1, p2 = x2;  // p1 = x1 q^(r-1) for the next factor
  Complex s = detail::sum_geometric(0, ctx, [&](long r) {
    if (r > 0) {
      term *= (Complex(1) - p1) / (Complex(1) - p2) * z;
      p1 *= q;
      p2 *= q;
    }
    return term;
  });
  Complex q2 = q * q;
  return -qq / aq / (q2 + b.t) +
         qq * pochhammer_inf(b.a * b.v, q, ctx) / (aq * pochhammer_inf(b.v, q, ctx)) / q2 * s;
}

std::vector<Real> U_taylor_coefficients(int count, const NumericContext& ctx) {
  if (count < 1) throw UsageError("count must be >= 1");
  const int M = 4 * (count + ctx.precision.digits);
  const Real rho = Real(1) / 20;
  const Real pi = real_pi();
  std::vector<Complex> acc(count, Complex(0));
  for (int m = 0; m < M; ++m) {
    Real th = 2 * pi * m / M;
    Complex t(rho * cos(th), rho * sin(th));
    Complex q = (Complex(1) - t) / Real(2);
    Complex U = U_eval(q, ctx);
    Complex tk = Complex(1);
    for (int k = 0; k < count; ++k) {
      acc[k] += U / tk;
      tk *= t;
    }
  }
  std::vector<Real> out(count);
  for (int k = 0; k < count; ++k) out[k] = real(acc[k]) / M;
  return out;
}

Real hj_direct(int j, const Real& t, const Real& q, const Real& v, const NumericContext& ctx) {
  if (j < 0) throw UsageError("j must be >= 0");
  if (!(t > 0)) throw DomainError("h_j needs t > 0");
  if (!(q > 0 && q < 1)) throw DomainError("h_j needs 0 < q < 1");
  const Real r = v * pow(q, j);
  if (r * q >= 1) throw DomainError("h_j needs v q^(j+1) < 1 for convergence");
  Real w(1), qi = Real(1) / (q * q);  // q^(-nu-2)
  Complex s = detail::sum_geometric(1, ctx, [&](long) {
    w *= r;
    qi /= q;
    return Complex(w / (1 + t * qi));
  });
  return real(s) / (q * q);
}

HjPair hj_check(int j, const Real& t, const Real& q, const Real& v, const NumericContext& ctx) {
  if (!(t > 0) || !(t < q * q))
    throw DomainError("h_j representation requires 0 < t < q^2 (its regular series diverges beyond)");
  HjPair out;
  out.direct = hj_direct(j, t, q, v, ctx);
  const Real L = log(1 / q);
  const Real gamma = log(v) / L;
  const Complex Pi = pi_series(Complex(log(t) / L), Complex(gamma), Complex(L), ctx);
  Real sing = (j % 2 ? -1 : 1) * v * pow(q, 3 * gamma - 2 * j - 2) / L * pow(t, j - gamma);
  Complex total = Complex(sing) * Pi;
  Complex reg = detail::sum_geometric(0, ctx, [&](long r) {
    Real x = v * pow(q, Real(j - r));
    return Complex((r % 2 ? -1 : 1) * v * pow(q, Real(j - 3 * r)) / (1 - x) * pow(t, r));
  });
  out.representation = real(total) + real(reg) / (q * q);
  return out;
}

Complex gf_eval(const Complex& q, GfMethod method, const NumericContext& ctx, GfParams params) {
  switch (method) {
    case GfMethod::taylor:
      if (abs(q) == 0) return Complex(0);
      return eval_taylor(q, ctx, params);
    case GfMethod::meromorphic: return eval_meromorphic(q, ctx);
    case GfMethod::doublesum: return eval_doublesum(q, ctx);
    case GfMethod::singular: {
      require_singular_region(q);
      BaseQuantities b = base_quantities(q, ctx, true);
      Complex z = -b.a * b.t / (q * q);
      if (abs(z) >= 1) throw DomainError("singular route requires |a q^-2 (1-2q)| < 1");
      Complex L = log(Complex(1) / q);
      Complex logt = log(b.t);
      Complex T = exp(-b.gamma * logt) * pi_series(logt / L, b.gamma, L, ctx) * U_eval(q, ctx) + V_eval(q, ctx);
      Complex K = pochhammer_inf(b.a, q, ctx) * pochhammer_inf(b.v, q, ctx) /
                  (pochhammer_inf(q, q, ctx) * pochhammer_inf(b.a * b.v, q, ctx));
      return b.D - q * q * b.A * K * T;
    }
  }
  throw UsageError("unknown gf method");
}

}  // namespace prudent
