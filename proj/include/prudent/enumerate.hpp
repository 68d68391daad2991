#pragma once

// Exact counting sequences of k-sided prudent polygons by area.

#include "prudent/series.hpp"

#include <string>
#include <vector>

namespace prudent {

/// counts[n] = number of k-sided polygons of area n, for 0 <= n <= N
/// (counts[0] = 0). `method` records how the numbers were obtained.
struct CountTable {
  int k = 0;
  std::vector<BigInt> counts;
  std::string method;

  int max_area() const { return static_cast<int>(counts.size()) - 1; }
};

Series1 bargraph_series(int N);        // q/(1-2q)
Series2 bargraph_width_series(int N);  // qu/(1-q-qu), built from its column equation
CountTable pa2_series(int N);

/// Width generating function of 3-sided polygons ending at (-1,0)
/// counter-clockwise, as the sum over m of F(q,q^m u) prod_{k<m} G(q,q^k u).
Series2 w_series(int N);

enum class Pa3Method { theorem, functional, meromorphic };
std::string to_string(Pa3Method m);
Pa3Method parse_pa3_method(const std::string& s);

CountTable pa3_series(int N, Pa3Method method = Pa3Method::theorem);

/// PA3 in x = 2q at the given precision: coefficient n is PA_n 2^-n.
/// The meromorphic route keeps full precision at large N; the theorem route
/// cancels roughly 0.08 N decimal digits and is kept for comparison.
FloatSeries1 pa3_float_series(int N, Precision precision = {}, Pa3Method method = Pa3Method::meromorphic);

struct Pa4System {
  Series3 X, Y, Z;
};

/// Layer-by-layer solution of the X/Y/Z system (each q^n layer depends only on
/// lower layers), followed by one full sweep that must reproduce it.
Pa4System pa4_system(int N);

/// Reference solver: Gauss-Seidel sweeps of the three equations from zero.
/// Throws std::logic_error if two consecutive sweeps differ at the end.
Pa4System pa4_system_sweep(int N);

/// One Gauss-Seidel sweep (X, then Y, then Z with the latest values).
Pa4System pa4_sweep(const Pa4System& s);

CountTable pa4_series(int N);

CountTable count_series(int k, int N);

// Functional-equation residuals; all are zero series for correct solutions.
Series2 bargraph_equation_residual(const Series2& B);
Series2 w_equation_residual(const Series2& W);
Pa4System pa4_equation_residuals(const Pa4System& s);

}  // namespace prudent
