#pragma once

#include <cstdint>

// Closed-form bound evaluators in base-2 log space. Asymptotic o(1) terms
// are dropped, so every comparison against an exact count is one-sided.
// Log-factorials are exact summations, never Stirling approximations.

namespace qpart::bounds {

struct LogValue {
  double log2 = 0.0;
};

// a-regular bipartite graph with vertex classes of size b
struct BoundParams {
  int a = 0;
  int64_t b = 0;
};

// sum_{i<=a} log2(i)
double log2_factorial(int64_t a);
double log2_binomial(int64_t n, int64_t k);

// log2 N with N = (d/e)^n, n = 2^(d-1)
LogValue log_N(int d);

// Bregman-Minc upper bound (a!)^(b/a) on perfect matchings
LogValue bregman_minc_log(BoundParams p);

// Van der Waerden lower bound (b!/b^b) * a^b
LogValue vdw_log(BoundParams p);

// Schrijver lower bound ((a-1)^(a-1) / a^(a-2))^b, a >= 2
LogValue schrijver_log(BoundParams p);

struct SandwichBounds {
  LogValue lower;
  LogValue upper;
};

// e^(n/2d) * N <= m(d) <= (d!)^(n/d)
SandwichBounds prop_pm_bounds(int d);

// f(d) <= (d+1)^n
LogValue f_upper_log(int d);

// f_{0,r}(d): lower N^(r/2^(r-1)) with o(1) dropped; upper is the explicit
// sum  sum_{j <= rn/2^(r-1)} C(n,j) d^j  evaluated in log space.
SandwichBounds f0r_bounds_log(int d, int r);

// f_{0,1,3,4,...}(d) <= exp(20 n / d^(1/4)) * N
LogValue approx_upper_log(int d);

// binary entropy, 0 < x < 1
double entropy(double x);

// Reported (not asserted) exponent of the m'(d)/m(d) envelope:
// (log2 m' - log2 m) * sqrt(d) / n.
double matching_envelope_exponent(int d, double log2_m, double log2_mprime);

}  // namespace qpart::bounds
