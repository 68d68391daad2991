#pragma once

// Analytic side of the 3-sided problem: q-Pochhammer numerics, the d_nu
// coefficients, several evaluations of PA(q), the amplitude constants kappa_k,
// the non-oscillating expansion Omega_T and residual/Fourier analysis of the
// exact counts.
//
// All functions compute at the precision currently installed by a
// PrecisionScope (callers normally open one from the NumericContext they pass).

#include "prudent/enumerate.hpp"
#include "prudent/hp.hpp"

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace prudent {

// ---------------------------------------------------------------- q-series

/// (x;q)_n for finite n.
Complex pochhammer(const Complex& x, const Complex& q, long n);

/// (x;q)_inf, truncated once the tail bound 2|x||q|^m/(1-|q|) is below
/// tolerance. Requires |q| <= 0.9.
Complex pochhammer_inf(const Complex& x, const Complex& q, const NumericContext& ctx);

struct BaseQuantities {
  Complex q, t;         // t = 1 - 2q
  Complex u, v, a;      // q/(1-q), (1-q+q^2)/(1-q), q^2/(1-q+q^2)
  Complex gamma;        // log v / log(1/q)
  Complex A, C, D;      // rational A, C and D = C - q^2/(1-q)^2 A (v;q)/(av;q)
  bool has_poles = true;  // false when A, C, D were not evaluated (q = 1/2)
};

/// All fields; at q = 1/2 the rational parts are skipped (has_poles = false)
/// unless `require_rational` is set, in which case PoleError is thrown.
BaseQuantities base_quantities(const Complex& q, const NumericContext& ctx, bool require_rational = false);

/// Exact Laurent coefficients in t = 1-2q, lowest power t^-2 first.
std::vector<mpq_class> laurent_A();  // exact: 4 terms, t^-2 .. t^1
std::vector<mpq_class> laurent_C(int terms = 4);

/// d_0..d_nu_max from d_nu = d_{nu-1} (v - u q^nu)/(1 - q^nu), d_0 = 1.
std::vector<Complex> d_nu_recurrence(int nu_max, const Complex& q);

/// d_nu from the j-sum (a;q)/(q;q) sum_j c_j (v q^j)^nu with
/// c_j = prod_{i<=j} (a - q^i)/(1 - q^i) and a = qu/v. nu >= 1.
Complex d_nu_formula(int nu, const Complex& q, const NumericContext& ctx);

/// Both sides of the partial-fraction expansion of (az;q)_inf/(z;q)_inf.
std::pair<Complex, Complex> mittag_leffler_check(const Complex& a, const Complex& q, const Complex& z,
                                                 const NumericContext& ctx);

// ---------------------------------------------------------------- PA(q)

enum class GfMethod { taylor, meromorphic, doublesum, singular };
std::string to_string(GfMethod m);
GfMethod parse_gf_method(const std::string& s);

struct GfParams {
  int taylor_order = 0;  // 0: chosen from the geometric tail bound
};

/// PA(q) by the chosen route; throws DomainError (naming the constraint) when
/// q is outside the route's region.
Complex gf_eval(const Complex& q, GfMethod method, const NumericContext& ctx, GfParams params = {});

/// Singular series U(q) and regular series V(q); both need |1-2q| < 0.2.
Complex U_eval(const Complex& q, const NumericContext& ctx);
Complex V_eval(const Complex& q, const NumericContext& ctx);

/// p_k at q, and Pi(w) = sum_k p_k exp(-2 i k pi w) summed until the terms
/// drop below tolerance.
Complex p_k(long k, const Complex& q);
Complex pi_eval(const Complex& w, const Complex& q, const NumericContext& ctx);

/// Taylor coefficients of U in t = 1-2q about t = 0 (Cauchy integral on a
/// small circle).
std::vector<Real> U_taylor_coefficients(int count, const NumericContext& ctx);

/// h_j(t) = q^-2 sum_{nu>=1} (v q^j)^nu / (1 + t q^(-nu-2)), any t > 0.
Real hj_direct(int j, const Real& t, const Real& q, const Real& v, const NumericContext& ctx);

struct HjPair {
  Real direct, representation;
};

/// Direct sum against the power-law + Fourier + regular-series
/// representation. The regular series converges only for t < q^2, so other
/// t are rejected with DomainError.
HjPair hj_check(int j, const Real& t, const Real& q, const Real& v, const NumericContext& ctx);

// ---------------------------------------------------------------- constants

Real critical_exponent();  // g = log2 3
Real gamma0();             // log2(3/2)

/// (1/3;1/2)(3/2;1/2)/(1/2;1/2)^2
Real kappa_product(const NumericContext& ctx);

Complex kappa(long k, const NumericContext& ctx);

struct Amplitude {
  Real two_abs_kappa1;   // 2|kappa_1|
  Real max_abs_kappa_u;  // max over u of |sum_{0<|k|<=K} kappa_k e^{2ik pi u}|
};
Amplitude amplitude(const NumericContext& ctx, int harmonics = 3);

/// Root in (1/2, 1) of 1 - 2x + x^(k+2), k = 1..k_max (bisection, then Newton).
std::vector<Real> poles(int k_max, const NumericContext& ctx);
Real theta_root(const NumericContext& ctx);  // real root of 1 - 2x + x^2 - x^3

Real U_at_half_closed();  // 16 / (9 log 2)
Real Q1_at_half(const NumericContext& ctx);  // (3/2;1/2)/(1/2;1/2)

struct OmegaTerm {
  int j;  // power n^(g-j)
  int l;  // power of log n
  Real c;
};

struct AsymptoticModel {
  Real g;
  std::vector<OmegaTerm> omega_terms;
  std::vector<std::pair<long, Complex>> harmonics;  // (k, kappa_k), 0 < |k| <= K

  static constexpr int kMaxTerms = 5;
};

/// Omega coefficients (published digits) and kappa_k for 0 < |k| <= harmonics.
AsymptoticModel asymptotic_model(const NumericContext& ctx, int harmonics = 1);

struct ClosedFormCheck {
  int j, l;
  Real tabulated, closed_form;
};
/// (0,0) -> kappa_0 and (1,1) -> -kappa_0 g log 3 / log^2 2.
std::vector<ClosedFormCheck> omega_closed_form_checks(const NumericContext& ctx);

// ---------------------------------------------------------------- residuals

/// Omega_T(n) / 2^n. T <= 5, n >= 2.
Real omega_scaled(long n, int terms, const AsymptoticModel& model);
Real omega_predict(long n, int terms, const AsymptoticModel& model);  // Omega_T(n)

struct ResidualRow {
  long n;
  Real log2n;
  Real scaled;    // PA_n 2^-n n^-g
  Real residual;  // (PA_n - Omega_T(n)) 2^-n n^-g
};

struct ResidualTable {
  int terms = 0;
  std::string source;  // "float" or "exact"
  std::vector<ResidualRow> rows;
};

/// Rows for 2 <= n <= N from the scaled coefficients x_n = PA_n 2^-n.
ResidualTable residual_rows(const FloatSeries1& scaled, int terms, const AsymptoticModel& model,
                            bool parallel = true);

/// Float-mode counts (validated elsewhere against exact mode) to N.
ResidualTable residuals(int N, int terms, const NumericContext& ctx);

/// (1/(u1-u0)) * integral of residual(u) e^{-2ik pi u} du over u = log2 n,
/// trapezoidal on the samples. u1 - u0 must be an integer >= 2.
Complex fourier_extract(const ResidualTable& table, long k, const Real& u0, const Real& u1);

/// Least-squares slope of log2(PA_n 2^-n) against log2 n over the top half
/// of 1..N. N >= 8 (practically >= 500 for 3-sided data).
Real exponent_fit(const CountTable& counts);

}  // namespace prudent
