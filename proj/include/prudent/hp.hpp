#pragma once

// High-precision numeric layer: MPFR reals and complex numbers through
// Boost.Multiprecision, an explicit precision context, tail-bound bookkeeping
// for truncated sums/products, and a complex Gamma function.

#include <boost/multiprecision/complex_adaptor.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

#include <string>

namespace prudent {

namespace mpns = boost::multiprecision;

using BigInt = mpz_class;
using Real = mpns::number<mpns::mpfr_float_backend<0>, mpns::et_off>;
using Complex = mpns::number<mpns::complex_adaptor<mpns::mpfr_float_backend<0>>, mpns::et_off>;

/// Requested number of significant decimal digits.
///
/// Computations run with kGuardDigits extra digits; truncated infinite sums
/// and products stop once their tail bound drops below 10^-(digits+5).
struct Precision {
  static constexpr int kGuardDigits = 10;
  int digits = 40;

  int working_digits() const { return digits + kGuardDigits; }
};

/// Everything a numeric evaluation needs besides its arguments.
///
/// truncation_scale multiplies the term count chosen by every tail bound; the
/// re-run harness evaluates at scale 1 and 2 and compares.
struct NumericContext {
  Precision precision{};
  int truncation_scale = 1;
};

/// Sets the MPFR working precision for the lifetime of the object and restores
/// the previous value afterwards. The underlying default is process-wide, so
/// evaluations at different precisions must not overlap in time.
class PrecisionScope {
 public:
  explicit PrecisionScope(Precision p);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned previous_;
};

/// Stopping rule shared by every tail-bounded loop.
class Truncation {
 public:
  explicit Truncation(const NumericContext& ctx, long max_terms = 200000);

  /// Call after accumulating `terms` terms with an upper bound `tail` on the
  /// remainder and a current partial sum of magnitude `magnitude`. Returns true
  /// once the bound has dropped below tolerance and the scaled term count has
  /// been reached. Throws DomainError when max_terms is exceeded.
  bool done(long terms, const Real& tail, const Real& magnitude);

  const Real& tolerance() const { return tolerance_; }

 private:
  Real tolerance_;
  int scale_;
  long max_terms_;
  long first_converged_ = -1;
};

Real real_pi();
Real real_ln2();
Real to_real(const BigInt& z);
Real ldexp_real(const Real& x, long e);  // x * 2^e
Real pow10_real(long e);

/// Principal-branch Gamma function at the current working precision.
/// Upward recurrence moves Re z past a precision-dependent threshold, then the
/// Stirling series is summed until its terms fall below the tolerance.
Complex complex_gamma(const Complex& z);
Complex complex_log_gamma_stirling(const Complex& w);  // requires Re w large

/// Decimal rendering with `digits` significant digits.
std::string format_real(const Real& x, int digits);

/// Parses "0.45", "0.485+0.026i", "0.485-0.026i", "-0.1i" or "re,im".
Complex parse_complex(const std::string& text);

inline Complex make_complex(const Real& re, const Real& im = Real(0)) { return Complex(re, im); }

}  // namespace prudent
