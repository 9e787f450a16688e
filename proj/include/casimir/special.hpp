#pragma once

#include <complex>
#include <cstddef>
#include <functional>

namespace casimir {

struct QuadratureSpec {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;

  void validate() const;
  friend bool operator==(const QuadratureSpec&, const QuadratureSpec&) = default;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  std::size_t evaluations = 0;
  std::size_t subdivisions = 0;
};

// Li4(z) = sum_{k>=1} z^k / k^4 on the closed unit disk, absolute accuracy
// ~1e-15. Arguments with 1 < |z| <= 1 + 1e-12 are pulled back onto the circle;
// anything larger throws DomainError.
std::complex<double> li4(std::complex<double> z);
double li4(double x);

// Defining Dirichlet series truncated once the tail bound drops below tol.
// Slow near |z| = 1; used as a reference.
std::complex<double> li4_series(std::complex<double> z, double tol = 1e-16);

// int_0^inf s^2 ln(1 - c e^{-s}) ds = -2 Li4(c).
std::complex<double> s_integral(std::complex<double> c);

// Globally adaptive 21-point Gauss-Kronrod on [a, b]. Nodes never touch the
// endpoints, so integrable endpoint singularities are fine. Throws
// QuadratureError when max_subdivisions is exhausted.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec = {});

// int_0^1 f(t) dt.
QuadratureResult integrate_t(const std::function<double(double)>& f, const QuadratureSpec& spec = {});

// int_0^inf s^2 g(s) ds through u = e^{-s}: int_0^1 ln(u)^2 g(-ln u) / u du.
QuadratureResult integrate_s_weighted(const std::function<double(double)>& g,
                                      const QuadratureSpec& spec = {});

// Same integral truncated at s_max, for diagnostics. With |g(s)| <= c e^{-s}
// for s >= s_max the dropped tail is bounded by
// c e^{-s_max} (s_max^2 + 2 s_max + 2), which is added to the error.
QuadratureResult integrate_s_truncated(const std::function<double(double)>& g, double s_max,
                                       double tail_constant, const QuadratureSpec& spec = {});

// int_0^1 dt int_0^inf s^2 f(t, s) ds.
QuadratureResult integrate_2d(const std::function<double(double, double)>& f,
                              const QuadratureSpec& spec = {});

// Nested form: inner_at(t) builds the s-integrand once per outer node, so
// per-t setup is not repeated for every s.
QuadratureResult integrate_2d_nested(
    const std::function<std::function<double(double)>(double)>& inner_at,
    const QuadratureSpec& spec = {});

}  // namespace casimir
