#include "prudent/asymptotics.hpp"

#include <functional>

namespace prudent {

namespace {

// Bisection down to width 1e-3, then Newton until the step is negligible.
Real bracket_then_newton(const std::function<Real(const Real&)>& f, const std::function<Real(const Real&)>& df,
                         Real lo, Real hi, const NumericContext& ctx) {
  Real flo = f(lo);
  while (hi - lo > Real(1e-3)) {
    Real mid = (lo + hi) / 2;
    Real fm = f(mid);
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  Real x = (lo + hi) / 2;
  const Real tol = pow10_real(-(ctx.precision.working_digits() - 2));
  for (int it = 0; it < 200; ++it) {
    Real step = f(x) / df(x);
    x -= step;
    if (abs(step) <= tol * abs(x)) return x;
  }
  throw DomainError("Newton iteration did not converge");
}

// Published Omega_5 coefficients c_{j,l}, j = 0..4.
struct PrintedTerm {
  int j, l;
  const char* digits;
};
constexpr PrintedTerm kOmegaPrinted[] = {
    {0, 0, "0.1083842947"},
    {1, 1, "-0.3928066917"},  {1, 0, "0.5442458535"},
    {2, 2, "0.2627062704"},   {2, 1, "0.6950193894"},  {2, 0, "0.6985601031"},
    {3, 3, "0.08310555463"},  {3, 2, "-0.02188678892"}, {3, 1, "-1.570478457"}, {3, 0, "-1.18810811075202"},
    {4, 4, "0.06722511293"},  {4, 3, "0.05494834609"}, {4, 2, "-3.297513638"},  {4, 1, "-4.663711650"},
    {4, 0, "-4.156441653"},
};

}  // namespace

Real critical_exponent() { return log(Real(3)) / real_ln2(); }
Real gamma0() { return log(Real(3) / 2) / real_ln2(); }

Real kappa_product(const NumericContext& ctx) {
  const Complex h(Real(1) / 2);
  Complex p = pochhammer_inf(Complex(Real(1) / 3), h, ctx) * pochhammer_inf(Complex(Real(3) / 2), h, ctx) /
              (pochhammer_inf(h, h, ctx) * pochhammer_inf(h, h, ctx));
  return real(p);
}

Complex kappa(long k, const NumericContext& ctx) {
  const Real pi = real_pi(), l2 = real_ln2(), g = critical_exponent();
  const Complex I(Real(0), Real(1));
  Complex s = sin(Complex(pi * g) + Real(2 * k) * I * pi * pi / l2);
  Complex G = complex_gamma(Complex(g + 1) + Real(2 * k) * I * pi / l2);
  return Complex(pi * kappa_product(ctx) / (9 * l2)) / (s * G);
}

Amplitude amplitude(const NumericContext& ctx, int harmonics) {
  if (harmonics < 1) throw UsageError("harmonics must be >= 1");
  std::vector<Complex> kap;
  for (int k = 1; k <= harmonics; ++k) kap.push_back(kappa(k, ctx));
  const Real pi = real_pi();
  // kappa_{-k} = conj(kappa_k), so kappa(u) = 2 Re sum_{k>0} kappa_k e^{2ik pi u}
  auto f = [&](const Real& u) {
    Real s = 0;
    for (int k = 1; k <= harmonics; ++k) {
      Real th = 2 * pi * k * u;
      s += 2 * (real(kap[k - 1]) * cos(th) - imag(kap[k - 1]) * sin(th));
    }
    return abs(s);
  };
  const int grid = 720;
  int best = 0;
  Real bv = -1;
  for (int i = 0; i < grid; ++i) {
    Real v = f(Real(i) / grid);
    if (v > bv) {
      bv = v;
      best = i;
    }
  }
  // golden-section refinement on the bracketing cell
  Real a = Real(best - 1) / grid, b = Real(best + 1) / grid;
  const Real phi = (sqrt(Real(5)) - 1) / 2;
  for (int it = 0; it < 200; ++it) {
    Real c = b - phi * (b - a), d = a + phi * (b - a);
    if (f(c) > f(d)) b = d; else a = c;
  }
  Amplitude out;
  out.two_abs_kappa1 = 2 * abs(kap[0]);
  out.max_abs_kappa_u = std::max(bv, f((a + b) / 2));
  return out;
}

std::vector<Real> poles(int k_max, const NumericContext& ctx) {
  if (k_max < 1) throw UsageError("k_max must be >= 1");
  std::vector<Real> out;
  for (int k = 1; k <= k_max; ++k) {
    auto f = [k](const Real& x) { return 1 - 2 * x + pow(x, k + 2); };
    auto df = [k](const Real& x) { return -2 + (k + 2) * pow(x, k + 1); };
    Real xmin = pow(Real(2) / (k + 2), Real(1) / (k + 1));  // minimum of f on (1/2, 1)
    out.push_back(bracket_then_newton(f, df, Real(1) / 2, xmin, ctx));
  }
  return out;
}

Real theta_root(const NumericContext& ctx) {
  auto f = [](const Real& x) { return 1 - 2 * x + x * x - x * x * x; };
  auto df = [](const Real& x) { return -2 + 2 * x - 3 * x * x; };
  return bracket_then_newton(f, df, Real(0), Real(1), ctx);
}

Real U_at_half_closed() { return Real(16) / (9 * real_ln2()); }

Real Q1_at_half(const NumericContext& ctx) {
  const Complex h(Real(1) / 2);
  return real(pochhammer_inf(Complex(Real(3) / 2), h, ctx) / pochhammer_inf(h, h, ctx));
}

AsymptoticModel asymptotic_model(const NumericContext& ctx, int harmonics) {
  AsymptoticModel m;
  m.g = critical_exponent();
  for (const auto& p : kOmegaPrinted) m.omega_terms.push_back({p.j, p.l, Real(p.digits)});
  for (int k = 1; k <= harmonics; ++k) {
    Complex c = kappa(k, ctx);
    m.harmonics.push_back({k, c});
    m.harmonics.push_back({-k, conj(c)});
  }
  return m;
}

std::vector<ClosedFormCheck> omega_closed_form_checks(const NumericContext& ctx) {
  Real k0 = real(kappa(0, ctx));
  Real l2 = real_ln2();
  Real c11 = -k0 * critical_exponent() * log(Real(3)) / (l2 * l2);
  std::vector<ClosedFormCheck> out;
  for (const auto& p : kOmegaPrinted) {
    if (p.j == 0 && p.l == 0) out.push_back({0, 0, Real(p.digits), k0});
    if (p.j == 1 && p.l == 1) out.push_back({1, 1, Real(p.digits), c11});
  }
  return out;
}

}  // namespace prudent
