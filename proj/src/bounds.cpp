#include "qpart/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qpart::bounds {

namespace {
const double kLog2E = std::log2(std::exp(1.0));

int64_t pow2(int e) { return int64_t{1} << e; }
}  // namespace

double log2_factorial(int64_t a) {
  if (a < 0) throw std::domain_error("log2_factorial: negative argument");
  double s = 0.0;
  for (int64_t i = 2; i <= a; ++i) s += std::log2(double(i));
  return s;
}

double log2_binomial(int64_t n, int64_t k) {
  if (k < 0 || k > n) throw std::domain_error("log2_binomial: k out of range");
  return log2_factorial(n) - log2_factorial(k) - log2_factorial(n - k);
}

LogValue log_N(int d) {
  if (d < 2) throw std::invalid_argument("log_N requires d >= 2");
  double n = double(pow2(d - 1));
  return {n * (std::log2(double(d)) - kLog2E)};
}

LogValue bregman_minc_log(BoundParams p) {
  if (p.a < 1 || p.b < 1) throw std::invalid_argument("bound params must be >= 1");
  return {double(p.b) / double(p.a) * log2_factorial(p.a)};
}

LogValue vdw_log(BoundParams p) {
  if (p.a < 1 || p.b < 1) throw std::invalid_argument("bound params must be >= 1");
  double b = double(p.b);
  return {log2_factorial(p.b) - b * std::log2(b) + b * std::log2(double(p.a))};
}

LogValue schrijver_log(BoundParams p) {
  if (p.a < 2) throw std::invalid_argument("schrijver_log requires a >= 2");
  if (p.b < 1) throw std::invalid_argument("bound params must be >= 1");
  double a = double(p.a);
  return {double(p.b) * ((a - 1.0) * std::log2(a - 1.0) - (a - 2.0) * std::log2(a))};
}

SandwichBounds prop_pm_bounds(int d) {
  if (d < 2) throw std::invalid_argument("prop_pm_bounds requires d >= 2");
  int64_t n = pow2(d - 1);
  LogValue lower{log_N(d).log2 + double(n) / (2.0 * d) * kLog2E};
  LogValue upper = bregman_minc_log({d, n});
  return {lower, upper};
}

LogValue f_upper_log(int d) {
  if (d < 1) throw std::invalid_argument("f_upper_log requires d >= 1");
  return {double(pow2(d - 1)) * std::log2(double(d + 1))};
}

SandwichBounds f0r_bounds_log(int d, int r) {
  if (r < 2 || r > d) throw std::invalid_argument("f0r_bounds_log requires 2 <= r <= d");
  int64_t n = pow2(d - 1);
  double exponent = double(r) / double(pow2(r - 1));
  LogValue lower{exponent * log_N(d).log2};

  // log2 of sum_{j <= rn/2^(r-1)} C(n,j) d^j, terms built incrementally
  int64_t jmax = (int64_t(r) * n) / pow2(r - 1);
  if (jmax > n) jmax = n;
  std::vector<double> terms;
  terms.reserve(size_t(jmax) + 1);
  double log_c = 0.0;  // log2 C(n, 0)
  double log_d = std::log2(double(d));
  for (int64_t j = 0; j <= jmax; ++j) {
    terms.push_back(log_c + double(j) * log_d);
    log_c += std::log2(double(n - j)) - std::log2(double(j + 1));
  }
  double mx = terms.front();
  for (double t : terms) mx = std::max(mx, t);
  double acc = 0.0;
  for (double t : terms) acc += std::exp2(t - mx);
  return {lower, LogValue{mx + std::log2(acc)}};
}

LogValue approx_upper_log(int d) {
  if (d < 2) throw std::invalid_argument("approx_upper_log requires d >= 2");
  double n = double(pow2(d - 1));
  return {log_N(d).log2 + 20.0 * n * std::pow(double(d), -0.25) * kLog2E};
}

double entropy(double x) {
  if (!(x > 0.0 && x < 1.0)) throw std::domain_error("entropy requires 0 < x < 1");
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double matching_envelope_exponent(int d, double log2_m, double log2_mprime) {
  double n = double(pow2(d - 1));
  return (log2_mprime - log2_m) * std::sqrt(double(d)) / n;
}

}  // namespace qpart::bounds
