#include "prudent/asymptotics.hpp"

#include "detail/summation.hpp"

namespace prudent {

Complex pochhammer(const Complex& x, const Complex& q, long n) {
  if (n < 0) throw UsageError("pochhammer length must be non-negative");
  Complex r(1), f = x;
  for (long i = 0; i < n; ++i) {
    r *= Complex(1) - f;
    f *= q;
  }
  return r;
}

Complex pochhammer_inf(const Complex& x, const Complex& q, const NumericContext& ctx) {
  const Real aq = abs(q);
  if (aq >= 1) throw DomainError("infinite q-Pochhammer requires |q| < 1");
  if (aq > Real(0.9)) throw DomainError("infinite q-Pochhammer requires |q| <= 0.9 for its tail bound");
  Truncation tr(ctx);
  Complex r(1), f = x;
  Real fx = abs(x);
  for (long m = 1;; ++m) {
    r *= Complex(1) - f;
    f *= q;
    fx *= aq;
    // |log prod_{i>=m}(1 - x q^i)| <= 2 |x| |q|^m / (1 - |q|) once |x q^m| <= 1/2
    Real tail = fx <= Real(0.5) ? Real(2 * fx / (1 - aq)) : Real(1);
    if (tr.done(m, tail, Real(1))) return r;
  }
}

BaseQuantities base_quantities(const Complex& q, const NumericContext& ctx, bool require_rational) {
  if (abs(q) == 0) throw DomainError("base quantities need q != 0 (gamma involves log(1/q))");
  if (abs(q - Complex(1)) < Real(1e-30)) throw DomainError("base quantities need q != 1");
  BaseQuantities b;
  const Complex one(1);
  b.q = q;
  b.t = one - Real(2) * q;
  b.u = q / (one - q);
  b.v = (one - q + q * q) / (one - q);
  b.a = q * q / (one - q + q * q);
  b.gamma = log(b.v) / log(one / q);
  if (abs(b.t) < pow10_real(-ctx.precision.digits)) {
    if (require_rational) throw PoleError("A, C and D have a double pole at q = 1/2; use the Laurent data");
    b.has_poles = false;
    return b;
  }
  Complex t2 = b.t * b.t;
  Complex om = one - q;
  b.A = Real(2) * q * om * om / t2;
  b.C = Real(2) * q * (Real(3) - Real(10) * q + Real(9) * q * q - q * q * q) / (om * t2);
  b.D = b.C - q * q / (om * om) * b.A * pochhammer_inf(b.v, q, ctx) / pochhammer_inf(b.a * b.v, q, ctx);
  return b;
}

std::vector<mpq_class> laurent_A() {
  // 2q(1-q)^2 = (1-t)(1+t)^2/4 with q = (1-t)/2
  return {mpq_class(1, 4), mpq_class(1, 4), mpq_class(-1, 4), mpq_class(-1, 4)};
}

std::vector<mpq_class> laurent_C(int terms) {
  if (terms < 1) throw UsageError("laurent_C needs at least one term");
  // numerator 2q(3 - 10q + 9q^2 - q^3) as a polynomial in t
  std::vector<mpq_class> one_minus_t{1, -1};
  auto mul = [](const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
    std::vector<mpq_class> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
  };
  std::vector<mpq_class> qpoly{mpq_class(1, 2), mpq_class(-1, 2)};  // q = (1-t)/2
  std::vector<mpq_class> inner{3};
  std::vector<mpq_class> qp{1};
  const long cs[] = {-10, 9, -1};
  for (long c : cs) {
    qp = mul(qp, qpoly);
    if (inner.size() < qp.size()) inner.resize(qp.size());
    for (std::size_t i = 0; i < qp.size(); ++i) inner[i] += c * qp[i];
  }
  std::vector<mpq_class> num = mul(one_minus_t, inner);  // 2q = 1 - t
  // divide by (1 - q) = (1 + t)/2
  std::vector<mpq_class> out(terms);
  for (int k = 0; k < terms; ++k) {
    mpq_class s = 0;
    for (int i = 0; i <= k && i < static_cast<int>(num.size()); ++i)
      s += num[i] * ((k - i) % 2 == 0 ? 2 : -2);
    out[k] = s;
  }
  return out;
}

std::vector<Complex> d_nu_recurrence(int nu_max, const Complex& q) {
  if (nu_max < 0) throw UsageError("nu_max must be non-negative");
  const Complex one(1);
  Complex u = q / (one - q), v = (one - q + q * q) / (one - q);
  std::vector<Complex> d(nu_max + 1);
  d[0] = one;
  Complex qn = one;
  for (int nu = 1; nu <= nu_max; ++nu) {
    qn *= q;
    d[nu] = d[nu - 1] * (v - u * qn) / (one - qn);
  }
  return d;
}

Complex d_nu_formula(int nu, const Complex& q, const NumericContext& ctx) {
  if (nu < 1) throw UsageError("the j-sum formula for d_nu needs nu >= 1");
  const Complex one(1);
  Complex u = q / (one - q), v = (one - q + q * q) / (one - q);
  Complex a = q * u / v;
  if (abs(a) >= 1) throw DomainError("d_nu formula requires |a| < 1");
  Complex qnu = pow(q, nu);
  Complex c(1), qj(1), w = pow(v, nu);  // w = (v q^j)^nu
  Complex s = detail::sum_geometric(0, ctx, [&](long j) {
    if (j > 0) {
      qj *= q;
      c *= (a - qj) / (one - qj);
      w *= qnu;
    }
    return Complex(c * w);
  });
  return pochhammer_inf(a, q, ctx) / pochhammer_inf(q, q, ctx) * s;
}

std::pair<Complex, Complex> mittag_leffler_check(const Complex& a, const Complex& q, const Complex& z,
                                                 const NumericContext& ctx) {
  if (abs(a) >= 1) throw DomainError("Mittag-Leffler expansion requires |a| < 1");
  if (abs(q) >= 1) throw DomainError("Mittag-Leffler expansion requires |q| < 1");
  const Complex one(1);
  {
    Complex zj = z;
    for (int j = 0; j < 100000 && abs(zj) > Real(1e-3); ++j, zj *= q)
      if (abs(one - zj) < Real(1e-6)) throw DomainError("z lies within 1e-6 of the pole q^-" + std::to_string(j));
  }
  Complex lhs = pochhammer_inf(a * z, q, ctx) / pochhammer_inf(z, q, ctx);
  Complex c(1), qj(1);
  Complex s = detail::sum_geometric(0, ctx, [&](long j) {
    if (j > 0) {
      qj *= q;
      c *= (a - qj) / (one - qj);
    }
    Complex zq = z * qj;
    return Complex(c * zq / (one - zq));
  });
  Complex rhs = one + pochhammer_inf(a, q, ctx) / pochhammer_inf(q, q, ctx) * s;
  return {lhs, rhs};
}

}  // namespace prudent
