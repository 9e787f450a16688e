#include "casimir/special.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <sstream>
#include <vector>

#include "casimir/error.hpp"

namespace casimir {

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_subdivisions < 1) {
    std::ostringstream os;
    os << "quadrature tolerances must be > 0 and max_subdivisions >= 1 (rel_tol=" << rel_tol
       << ", abs_tol=" << abs_tol << ", max_subdivisions=" << max_subdivisions << ")";
    throw DomainError(os.str());
  }
}

// ---------------------------------------------------------------------------
// Li4

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeta2 = kPi * kPi / 6.0;
constexpr double kZeta3 = 1.2020569031595942853997;
constexpr double kZeta4 = kPi * kPi * kPi * kPi / 90.0;

// Series about z = 1 in mu = ln z, valid for |mu| < 2 pi:
//   Li4(e^mu) = zeta(4) + zeta(3) mu + zeta(2) mu^2/2 + mu^3/6 (H_3 - ln(-mu))
//               + sum_{k>=4} zeta(4-k) mu^k / k!
// zeta(4-k) vanishes for even k >= 6; for k = 2m+3 the coefficient
// zeta(1-2m)/k! reduces to (-1)^m zeta(2m) / ((2pi)^{2m} m (2m+1)(2m+2)(2m+3)).
struct LogSeries {
  static constexpr int kTerms = 40;
  std::array<double, kTerms + 1> odd{};  // odd[m] multiplies mu^{2m+3}

  LogSeries() {
    double two_pi_pow = 1.0;
    for (int m = 1; m <= kTerms; ++m) {
      two_pi_pow *= 4.0 * kPi * kPi;
      const double zeta_2m = m == 1 ? kZeta2 : std::riemann_zeta(2.0 * m);
      const double sign = (m % 2 == 0) ? 1.0 : -1.0;
      odd[static_cast<std::size_t>(m)] =
          sign * zeta_2m / (two_pi_pow * m * (2.0 * m + 1.0) * (2.0 * m + 2.0) * (2.0 * m + 3.0));
    }
  }
};

const LogSeries& log_series() {
  static const LogSeries series;
  return series;
}

std::complex<double> li4_log_series(std::complex<double> z) {
  const std::complex<double> mu = std::log(z);
  const std::complex<double> mu2 = mu * mu;
  const std::complex<double> mu3 = mu2 * mu;
  std::complex<double> sum = kZeta4 + kZeta3 * mu + 0.5 * kZeta2 * mu2;
  if (mu != 0.0) sum += mu3 / 6.0 * (11.0 / 6.0 - std::log(-mu));
  const std::complex<double> mu4 = mu2 * mu2;
  sum -= mu4 / 48.0;
  const auto& coef = log_series().odd;
  std::complex<double> power = mu3;
  for (int m = 1; m <= LogSeries::kTerms; ++m) {
    power *= mu2;
    const std::complex<double> term = coef[static_cast<std::size_t>(m)] * power;
    sum += term;
    if (std::abs(term) < 1e-18) break;
  }
  return sum;
}

}  // namespace

std::complex<double> li4_series(std::complex<double> z, double tol) {
  const double r = std::abs(z);
  if (r > 1.0) throw DomainError("li4_series requires |z| <= 1");
  std::complex<double> sum = 0.0;
  std::complex<double> power = 1.0;
  for (long k = 1;; ++k) {
    power *= z;
    const double kk = static_cast<double>(k);
    sum += power / (kk * kk * kk * kk);
    // Tail after k terms.
    const double next = kk + 1.0;
    const double bound = r < 1.0 ? std::pow(r, next) / (next * next * next * next) / (1.0 - r)
                                 : 1.0 / (3.0 * kk * kk * kk);
    if (bound < tol || power == 0.0) break;
  }
  return sum;
}

std::complex<double> li4(std::complex<double> z) {
  double r = std::abs(z);
  if (!std::isfinite(r) || r > 1.0 + 1e-12) {
    std::ostringstream os;
    os << "li4 argument outside the closed unit disk: " << z;
    throw DomainError(os.str());
  }
  if (r > 1.0) {
    z /= r;
    r = 1.0;
  }
  if (z == 0.0) return 0.0;
  if (z == 1.0) return kZeta4;
  if (z == -1.0) return -7.0 / 8.0 * kZeta4;
  // Conjugate symmetry holds exactly by evaluating in the upper half plane.
  if (z.imag() < 0.0) return std::conj(li4(std::conj(z)));
  std::complex<double> value = r <= 0.5 ? li4_series(z, 1e-17) : li4_log_series(z);
  if (z.imag() == 0.0) value.imag(0.0);
  return value;
}

double li4(double x) { return li4(std::complex<double>(x, 0.0)).real(); }

std::complex<double> s_integral(std::complex<double> c) { return -2.0 * li4(c); }

// ---------------------------------------------------------------------------
// Quadrature

namespace {

constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525478878, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
  double a;
  double b;
  double value;
  double error;
};

double checked(const std::function<double(double)>& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os << "integrand is not finite at x=" << x;
    throw NumericalError(os.str());
  }
  return v;
}

// 21-point Kronrod rule with the embedded 10-point Gauss rule; error estimate
// as in QUADPACK's qk21.
Segment kronrod21(const std::function<double(double)>& f, double a, double b) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double uflow = std::numeric_limits<double>::min();
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double abs_half = std::abs(half);

  const double fc = checked(f, center);
  double res_g = 0.0;
  double res_k = kWgk[10] * fc;
  double res_abs = std::abs(res_k);
  std::array<double, 10> fv1{}, fv2{};
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = checked(f, center - dx);
    const double f2 = checked(f, center + dx);
    fv1[j] = f1;
    fv2[j] = f2;
    res_k += kWgk[j] * (f1 + f2);
    res_abs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) res_g += kWg[j / 2] * (f1 + f2);
  }
  const double mean = 0.5 * res_k;
  double res_asc = kWgk[10] * std::abs(fc - mean);
  for (std::size_t j = 0; j < 10; ++j) res_asc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));

  res_abs *= abs_half;
  res_asc *= abs_half;
  double err = std::abs((res_k - res_g) * half);
  if (res_asc != 0.0 && err != 0.0) err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
  if (res_abs > uflow / (50.0 * eps)) err = std::max(50.0 * eps * res_abs, err);
  return {a, b, res_k * half, err};
}

struct ByError {
  bool operator()(const Segment& x, const Segment& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.a > y.a;
  }
};

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec) {
  spec.validate();
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    std::ostringstream os;
    os << "integration interval must be finite with a < b, got [" << a << ", " << b << "]";
    throw DomainError(os.str());
  }

  std::priority_queue<Segment, std::vector<Segment>, ByError> active;
  std::vector<Segment> frozen;  // too narrow to bisect further
  QuadratureResult result;

  const Segment first = kronrod21(f, a, b);
  result.evaluations = 21;
  active.push(first);

  auto totals = [&]() {
    // Summation in left-endpoint order gives a result independent of the
    // heap layout.
    std::vector<Segment> all = frozen;
    auto copy = active;
    while (!copy.empty()) {
      all.push_back(copy.top());
      copy.pop();
    }
    std::sort(all.begin(), all.end(), [](const Segment& x, const Segment& y) { return x.a < y.a; });
    double value = 0.0, error = 0.0;
    for (const auto& s : all) {
      value += s.value;
      error += s.error;
    }
    return std::pair{value, error};
  };

  double value = first.value;
  double error = first.error;
  while (error > std::max(spec.abs_tol, spec.rel_tol * std::abs(value))) {
    if (active.empty() || static_cast<int>(result.subdivisions) >= spec.max_subdivisions) {
      std::tie(value, error) = totals();
      std::ostringstream os;
      os << "adaptive quadrature did not converge on [" << a << ", " << b << "] after "
         << result.subdivisions << " subdivisions (estimate " << value << ", error " << error << ")";
      throw QuadratureError(os.str(), value, error);
    }
    const Segment worst = active.top();
    active.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      frozen.push_back(worst);
      continue;
    }
    const Segment left = kronrod21(f, worst.a, mid);
    const Segment right = kronrod21(f, mid, worst.b);
    result.evaluations += 42;
    ++result.subdivisions;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    active.push(left);
    active.push(right);
  }
  std::tie(result.value, result.error) = totals();
  return result;
}

QuadratureResult integrate_t(const std::function<double(double)>& f, const QuadratureSpec& spec) {
  return integrate(f, 0.0, 1.0, spec);
}

QuadratureResult integrate_s_weighted(const std::function<double(double)>& g,
                                      const QuadratureSpec& spec) {
  return integrate(
      [&g](double u) {
        const double s = -std::log(u);
        return s * s * g(s) / u;
      },
      0.0, 1.0, spec);
}

QuadratureResult integrate_s_truncated(const std::function<double(double)>& g, double s_max,
                                       double tail_constant, const QuadratureSpec& spec) {
  if (!(s_max > 0.0) || !(tail_constant >= 0.0))
    throw DomainError("truncated s-integral needs s_max > 0 and a non-negative tail constant");
  QuadratureResult r = integrate([&g](double s) { return s * s * g(s); }, 0.0, s_max, spec);
  r.error += tail_constant * std::exp(-s_max) * (s_max * s_max + 2.0 * s_max + 2.0);
  return r;
}

QuadratureResult integrate_2d_nested(
    const std::function<std::function<double(double)>(double)>& inner_at,
    const QuadratureSpec& spec) {
  spec.validate();
  QuadratureSpec inner_spec = spec;
  inner_spec.rel_tol *= 0.1;
  inner_spec.abs_tol *= 0.1;
  double worst_inner_error = 0.0;
  std::size_t inner_evaluations = 0;
  QuadratureResult outer = integrate_t(
      [&](double t) {
        const QuadratureResult inner = integrate_s_weighted(inner_at(t), inner_spec);
        worst_inner_error = std::max(worst_inner_error, inner.error);
        inner_evaluations += inner.evaluations;
        return inner.value;
      },
      spec);
  outer.error += worst_inner_error;
  outer.evaluations += inner_evaluations;
  return outer;
}

QuadratureResult integrate_2d(const std::function<double(double, double)>& f,
                              const QuadratureSpec& spec) {
  return integrate_2d_nested(
      [&f](double t) { return std::function<double(double)>([&f, t](double s) { return f(t, s); }); },
      spec);
}

}  // namespace casimir
