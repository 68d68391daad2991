#include "prudent/asymptotics.hpp"

#include <cmath>

namespace prudent {

Real omega_scaled(long n, int terms, const AsymptoticModel& model) {
  if (terms < 0 || terms > AsymptoticModel::kMaxTerms)
    throw UsageError("Omega_T is available for 0 <= T <= 5 only");
  if (n < 2) throw UsageError("Omega_T needs n >= 2");
  const Real N(n);
  const Real L = log(N);
  Real s = 1;
  for (const auto& term : model.omega_terms) {
    if (term.j >= terms) continue;
    s += term.c * pow(N, model.g - term.j) * pow(L, term.l);
  }
  return s;
}

Real omega_predict(long n, int terms, const AsymptoticModel& model) {
  return ldexp_real(omega_scaled(n, terms, model), n);
}

ResidualTable residual_rows(const FloatSeries1& scaled, int terms, const AsymptoticModel& model, bool parallel) {
  if (terms < 0 || terms > AsymptoticModel::kMaxTerms)
    throw UsageError("Omega_T is available for 0 <= T <= 5 only");
  const long N = scaled.order();
  ResidualTable t;
  t.terms = terms;
  t.source = "float";
  if (N < 2) return t;
  t.rows.resize(N - 1);
  const Real l2 = real_ln2();
  auto row = [&](long n) {
    ResidualRow& r = t.rows[n - 2];
    Real N_(n);
    Real ng = pow(N_, -model.g);
    r.n = n;
    r.log2n = log(N_) / l2;
    r.scaled = scaled[n] * ng;
    r.residual = (scaled[n] - omega_scaled(n, terms, model)) * ng;
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (long n = 2; n <= N; ++n) row(n);
  } else {
    for (long n = 2; n <= N; ++n) row(n);
  }
  return t;
}

ResidualTable residuals(int N, int terms, const NumericContext& ctx) {
  if (N < 2) throw UsageError("residuals need N >= 2");
  FloatSeries1 x = pa3_float_series(N, ctx.precision, Pa3Method::meromorphic);
  return residual_rows(x, terms, asymptotic_model(ctx, 1));
}

Complex fourier_extract(const ResidualTable& table, long k, const Real& u0, const Real& u1) {
  Real span = u1 - u0;
  Real whole = round(span);
  if (span < 2 || abs(span - whole) > Real(1e-9))
    throw UsageError("fourier window must span an integer number >= 2 of periods");
  const auto& rows = table.rows;
  if (rows.size() < 2 || rows.front().log2n > u0 || rows.back().log2n < u1)
    throw UsageError("residual table does not cover the requested window");
  const Real pi = real_pi();
  auto f = [&](const Real& u, const Real& r) {
    Real th = -2 * pi * k * u;
    return Complex(r * cos(th), r * sin(th));
  };
  // linear interpolation of the residual at a window edge
  auto at = [&](const Real& u) {
    for (std::size_t i = 1; i < rows.size(); ++i)
      if (rows[i].log2n >= u) {
        const auto& a = rows[i - 1];
        const auto& b = rows[i];
        Real w = (u - a.log2n) / (b.log2n - a.log2n);
        return Real(a.residual + w * (b.residual - a.residual));
      }
    return rows.back().residual;
  };
  std::vector<std::pair<Real, Real>> pts;
  pts.push_back({u0, at(u0)});
  for (const auto& r : rows)
    if (r.log2n > u0 && r.log2n < u1) pts.push_back({r.log2n, r.residual});
  pts.push_back({u1, at(u1)});
  Complex integral(0);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    Real h = pts[i].first - pts[i - 1].first;
    integral += (f(pts[i].first, pts[i].second) + f(pts[i - 1].first, pts[i - 1].second)) * (h / 2);
  }
  return integral / span;
}

Real exponent_fit(const CountTable& counts) {
  const int N = counts.max_area();
  if (N < 8) throw UsageError("exponent fit needs counts up to n >= 8");
  const Real l2 = real_ln2();
  Real sx = 0, sy = 0, sxx = 0, sxy = 0;
  long m = 0;
  for (int n = N / 2; n <= N; ++n) {
    if (counts.counts[n] <= 0) continue;
    Real x = log(Real(n)) / l2;
    Real y = log(to_real(counts.counts[n])) / l2 - n;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace prudent
