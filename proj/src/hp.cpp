#include "prudent/hp.hpp"

#include "prudent/errors.hpp"

#include <boost/math/constants/constants.hpp>

#include <mutex>
#include <regex>
#include <vector>

namespace prudent {

PrecisionScope::PrecisionScope(Precision p) : previous_(Real::default_precision()) {
  Real::default_precision(static_cast<unsigned>(p.working_digits()));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(previous_); }

Truncation::Truncation(const NumericContext& ctx, long max_terms)
    : tolerance_(pow10_real(-(ctx.precision.digits + 5))),
      scale_(ctx.truncation_scale < 1 ? 1 : ctx.truncation_scale),
      max_terms_(max_terms) {}

bool Truncation::done(long terms, const Real& tail, const Real& magnitude) {
  if (first_converged_ < 0) {
    Real bound = magnitude > 0 ? Real(tolerance_ * magnitude) : tolerance_;
    if (tail <= bound) first_converged_ = terms;
  }
  if (first_converged_ >= 0 && terms >= first_converged_ * scale_) return true;
  if (terms >= max_terms_)
    throw DomainError("truncated sum did not reach its tail bound within " +
                      std::to_string(max_terms_) + " terms");
  return false;
}

Real real_pi() { return boost::math::constants::pi<Real>(); }
Real real_ln2() { return boost::math::constants::ln_two<Real>(); }

Real to_real(const BigInt& z) {
  Real r;
  mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real ldexp_real(const Real& x, long e) {
  Real r = x;
  mpfr_mul_2si(r.backend().data(), x.backend().data(), e, MPFR_RNDN);
  return r;
}

Real pow10_real(long e) { return pow(Real(10), Real(e)); }

namespace {

// B_2, B_4, ... as exact rationals (Akiyama-Tanigawa), grown on demand.
const mpq_class& bernoulli_2k(std::size_t k) {
  static std::mutex mu;
  static std::vector<mpq_class> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.size() < k) {
    std::size_t m = 2 * k;
    std::vector<mpq_class> a(m + 1);
    std::vector<mpq_class> b(m + 1);
    for (std::size_t n = 0; n <= m; ++n) {
      a[n] = mpq_class(1, n + 1);
      for (std::size_t j = n; j >= 1; --j) {
        a[j - 1] = mpq_class(static_cast<long>(j)) * (a[j - 1] - a[j]);
        a[j - 1].canonicalize();
      }
      b[n] = a[0];
    }
    cache.clear();
    for (std::size_t i = 1; i <= k; ++i) cache.push_back(b[2 * i]);
  }
  return cache[k - 1];
}

Real mpq_to_real(const mpq_class& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

}  // namespace

Complex complex_log_gamma_stirling(const Complex& w) {
  const Real half_log_2pi = log(2 * real_pi()) / 2;
  Complex result = (w - Real(0.5)) * log(w) - w + half_log_2pi;
  const long digits = static_cast<long>(Real::default_precision());
  const Real tol = pow10_real(-digits - 2);
  Complex w2 = w * w;
  Complex wpow = w;  // w^(2k-1)
  Real prev = -1;
  for (std::size_t k = 1; k < 400; ++k) {
    Complex term = mpq_to_real(bernoulli_2k(k)) / (Real(2 * k) * Real(2 * k - 1)) / wpow;
    Real mag = abs(term);
    if (prev >= 0 && mag > prev)
      throw DomainError("Stirling series diverged before reaching tolerance; argument too small");
    result += term;
    if (mag < tol * abs(result)) return result;
    prev = mag;
    wpow *= w2;
  }
  throw DomainError("Stirling series did not converge");
}

Complex complex_gamma(const Complex& z) {
  if (real(z) < Real(0.5)) {
    const Real pi = real_pi();
    Complex s = sin(pi * z);
    if (abs(s) == 0) throw DomainError("Gamma has a pole at non-positive integers");
    return pi / (s * complex_gamma(Complex(1) - z));
  }
  const Real threshold = Real(0.4) * Real(Real::default_precision()) + 2;
  Complex w = z;
  Complex shift = Complex(1);
  while (abs(w) < threshold || real(w) < threshold / 2) {
    shift *= w;
    w += 1;
  }
  return exp(complex_log_gamma_stirling(w)) / shift;
}

std::string format_real(const Real& x, int digits) {
  return x.str(digits, std::ios_base::fmtflags(0));
}

Complex parse_complex(const std::string& text) {
  static const std::regex pair_re(R"(^\s*([^,]+?)\s*,\s*([^,]+?)\s*$)");
  static const std::regex num_re(R"(^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$)");
  static const std::regex cplx_re(
      R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*(?:([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*[ij])?\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, pair_re)) {
    std::string re = m[1], im = m[2];
    if (!std::regex_match(re, num_re) || !std::regex_match(im, num_re))
      throw UsageError("cannot parse complex number '" + text + "'");
    return Complex(Real(re), Real(im));
  }
  if (std::regex_match(text, m, cplx_re) && (m[1].matched || m[2].matched)) {
    Real re = m[1].matched ? Real(m[1].str()) : Real(0);
    Real im = 0;
    if (m[2].matched) {
      im = m[3].matched ? Real(m[3].str()) : Real(1);
      if (m[2].str() == "-") im = -im;
    }
    return Complex(re, im);
  }
  throw UsageError("cannot parse complex number '" + text + "'");
}

}  // namespace prudent
