#include "casimir/energy.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <memory>
#include <numbers>
#include <numeric>
#include <sstream>
#include <thread>

namespace casimir {

namespace {

constexpr double kPi = std::numbers::pi;
// 45/pi^4 = 1 / (2 zeta(4)): a pair of ideal mirrors has one Li4(1) per polarization.
const double kLi4Scale = 45.0 / (kPi * kPi * kPi * kPi);

bool is_mixed_delta(const Material& m) {
  const auto* g = std::get_if<GenericDeltaPlate>(&m);
  return g != nullptr && g->lambda_e > 0.0 && g->lambda_g > 0.0;
}

NodeCoefficients node_coefficients(const StackSpec& stack, Polarization pol, double t) {
  const AngularNode node(t);
  NodeCoefficients c;
  c.r.reserve(stack.size());
  c.t_coef.reserve(stack.size());
  for (const auto& m : stack.plates) {
    const Coefficients k = coefficients(m, pol, node);
    c.r.push_back(k.r);
    c.t_coef.push_back(k.t_coef);
  }
  return c;
}

EnergyResult make_result(double ratio, double error, Method method, std::size_t plates) {
  EnergyResult r;
  r.ratio = ratio;
  r.per_plate = ratio / static_cast<double>(plates);
  r.method = method;
  r.error_estimate = std::abs(error);
  r.plates = plates;
  return r;
}

// ln Delta from a composition sum. Near s = 0 for nearly ideal stacks Delta
// vanishes like s^(N-1) and drops below the roundoff of the sum; such values
// are replaced by the roundoff floor. Anything clearly negative is an error.
double log_delta(const DeltaEvaluation& d, double t, double s) {
  const double floor = 32.0 * std::numeric_limits<double>::epsilon() * d.magnitude;
  if (d.value > floor) return d.minus_one > -0.5 ? std::log1p(d.minus_one) : std::log(d.value);
  if (d.value > -floor && floor > 0.0) return std::log(floor);
  std::ostringstream os;
  os << "Delta <= 0 at t=" << t << ", s=" << s << " (Delta = " << d.value << ")";
  throw NumericalError(os.str());
}

}  // namespace

StackSpec StackSpec::uniform(std::vector<Material> plates) {
  StackSpec s;
  s.gaps.assign(plates.empty() ? 0 : plates.size() - 1, 1.0);
  s.plates = std::move(plates);
  return s;
}

void StackSpec::validate() const {
  if (plates.size() < 2) {
    std::ostringstream os;
    os << "a stack needs at least two plates, got " << plates.size();
    throw DomainError(os.str());
  }
  if (gaps.size() != plates.size() - 1) {
    std::ostringstream os;
    os << "a stack of " << plates.size() << " plates needs " << plates.size() - 1 << " gaps, got "
       << gaps.size();
    throw DomainError(os.str());
  }
  for (const auto& m : plates) casimir::validate(m);
  (void)geometry();
}

StackGeometry StackSpec::geometry() const { return StackGeometry(gaps); }

StackSpec StackSpec::reversed() const {
  return StackSpec{{plates.rbegin(), plates.rend()}, {gaps.rbegin(), gaps.rend()}};
}

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::Polylog: return "polylog";
    case Method::Quadrature: return "quadrature";
    case Method::Ideal: return "ideal";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
  for (Method m : {Method::Auto, Method::Polylog, Method::Quadrature, Method::Ideal})
    if (to_string(m) == name) return m;
  return std::nullopt;
}

double polylog_node_value(const StackSpec& stack, double t, RootMethod roots) {
  double total = 0.0;
  double imag = 0.0;
  for (Polarization pol : {Polarization::TM, Polarization::TE}) {
    const NodeCoefficients coeffs = node_coefficients(stack, pol, t);
    const std::vector<std::complex<double>> recip =
        roots == RootMethod::Companion
            ? companion_reciprocal_roots(delta_polynomial(coeffs, StackGeometry::uniform(stack.size())))
            : round_trip_reciprocal_roots(coeffs);
    for (const auto& c : recip) {
      if (std::abs(c) > 1.0 + 1e-9) {
        std::ostringstream os;
        os << "root of Delta inside the unit disk: 1/x = " << c << " at t=" << t << " ("
           << (pol == Polarization::TM ? "TM" : "TE") << ")";
        throw NumericalError(os.str());
      }
      const std::complex<double> v = li4(std::abs(c) > 1.0 ? c / std::abs(c) : c);
      total += v.real();
      imag += v.imag();
    }
  }
  if (std::abs(imag) >= 1e-10) {
    std::ostringstream os;
    os << "Li4 root sum keeps an imaginary part " << imag << " at t=" << t;
    throw NumericalError(os.str());
  }
  return kLi4Scale * total;
}

EnergyResult energy_ratio_polylog(const StackSpec& stack, const QuadratureSpec& spec, RootMethod roots) {
  stack.validate();
  const StackGeometry geometry = stack.geometry();
  if (!geometry.is_equally_spaced())
    throw DomainError("the polylog path needs equally spaced plates; use quadrature");
  // Delta depends on s only through exp(-s g); rescaling s gives 1/g^3.
  const double g = stack.gaps.front();
  const double scale = 1.0 / (g * g * g);
  const QuadratureResult q =
      integrate_t([&](double t) { return polylog_node_value(stack, t, roots); }, spec);
  return make_result(scale * q.value, scale * q.error, Method::Polylog, stack.size());
}

EnergyResult energy_ratio_quadrature(const StackSpec& stack, const QuadratureSpec& spec) {
  stack.validate();
  const StackGeometry geometry = stack.geometry();
  auto inner_at = [&](double t) {
    auto tm = std::make_shared<NodeCoefficients>(node_coefficients(stack, Polarization::TM, t));
    auto te = std::make_shared<NodeCoefficients>(node_coefficients(stack, Polarization::TE, t));
    return std::function<double(double)>([tm, te, &geometry, t](double s) {
      return log_delta(delta_total_detailed(*tm, geometry, s), t, s) +
             log_delta(delta_total_detailed(*te, geometry, s), t, s);
    });
  };
  const QuadratureResult q = integrate_2d_nested(inner_at, spec);
  const double scale = -0.5 * kLi4Scale;
  return make_result(scale * q.value, scale * q.error, Method::Quadrature, stack.size());
}

ExactRatio ExactRatio::per_plate(std::size_t plates) const {
  if (plates == 0) throw DomainError("per-plate ratio needs a positive plate count");
  long long num = numerator;
  long long den = denominator * static_cast<long long>(plates);
  const long long g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

ExactRatio ideal_stack_ratio(const StackSpec& stack) {
  stack.validate();
  if (!stack.geometry().is_uniform()) throw DomainError("ideal_stack_ratio requires unit gaps");
  long long eighths = 0;
  for (std::size_t i = 0; i < stack.size(); ++i) {
    if (!is_ideal(stack.plates[i])) {
      std::ostringstream os;
      os << "ideal_stack_ratio: plate " << i + 1 << " is " << describe(stack.plates[i])
         << ", not PE or PM";
      throw DomainError(os.str());
    }
    if (i == 0) continue;
    const bool same = stack.plates[i].index() == stack.plates[i - 1].index();
    eighths += same ? 8 : -7;
  }
  ExactRatio r{eighths, 8};
  const long long g = std::gcd(r.numerator, r.denominator);
  if (g > 1) {
    r.numerator /= g;
    r.denominator /= g;
  }
  return r;
}

Method resolve_method(const StackSpec& stack, Method requested) {
  if (requested != Method::Auto) return requested;
  const bool mixed = std::any_of(stack.plates.begin(), stack.plates.end(), is_mixed_delta);
  return (!mixed && stack.geometry().is_equally_spaced()) ? Method::Polylog : Method::Quadrature;
}

EnergyResult energy_ratio(const StackSpec& stack, Method method, const QuadratureSpec& spec) {
  stack.validate();
  spec.validate();
  switch (resolve_method(stack, method)) {
    case Method::Polylog: return energy_ratio_polylog(stack, spec);
    case Method::Quadrature: return energy_ratio_quadrature(stack, spec);
    case Method::Ideal: return make_result(ideal_stack_ratio(stack).value(), 0.0, Method::Ideal, stack.size());
    case Method::Auto: break;
  }
  throw DomainError("unresolved energy method");
}

std::vector<SweepPoint> sweep(const StackSpec& stack_template, std::span<const double> sigma_grid,
                              Method method, const QuadratureSpec& spec,
                              std::span<const std::size_t> slots, unsigned workers) {
  stack_template.validate();
  if (sigma_grid.empty()) throw DomainError("sigma grid is empty");
  for (std::size_t i = 0; i < sigma_grid.size(); ++i) {
    if (!std::isfinite(sigma_grid[i]) || sigma_grid[i] <= 0.0)
      throw DomainError("sigma grid values must be finite and > 0");
    if (i > 0 && !(sigma_grid[i] > sigma_grid[i - 1]))
      throw DomainError("sigma grid must be strictly increasing");
  }
  std::vector<std::size_t> targets(slots.begin(), slots.end());
  if (targets.empty()) {
    for (std::size_t i = 0; i < stack_template.size(); ++i)
      if (std::holds_alternative<ConstantConductivity>(stack_template.plates[i])) targets.push_back(i);
    if (targets.empty()) throw DomainError("sweep template has no conductivity plate to vary");
  }
  for (std::size_t i : targets) {
    if (i >= stack_template.size() ||
        !std::holds_alternative<ConstantConductivity>(stack_template.plates[i])) {
      std::ostringstream os;
      os << "sweep slot " << i + 1 << " is not a conductivity plate";
      throw DomainError(os.str());
    }
  }

  const std::size_t n = sigma_grid.size();
  std::vector<SweepPoint> out(n);
  std::vector<std::exception_ptr> failures(n);
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        StackSpec stack = stack_template;
        for (std::size_t slot : targets) stack.plates[slot] = ConstantConductivity{sigma_grid[i]};
        out[i] = SweepPoint{sigma_grid[i], energy_ratio(stack, method, spec)};
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  unsigned count = workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : workers;
  count = static_cast<unsigned>(std::min<std::size_t>(count, n));
  if (count <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(count);
    for (unsigned w = 0; w < count; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!failures[i]) continue;
    std::string reason = "unknown error";
    try {
      std::rethrow_exception(failures[i]);
    } catch (const std::exception& e) {
      reason = e.what();
    } catch (...) {
    }
    std::ostringstream os;
    os << "sweep point " << i << " (sigma=" << sigma_grid[i] << ") failed: " << reason;
    throw SweepError(os.str(), i, sigma_grid[i], failures[i]);
  }
  return out;
}

double absolute_energy(double ratio, double gap_m, double area_m2) {
  if (!(gap_m > 0.0) || !(area_m2 > 0.0) || !std::isfinite(gap_m) || !std::isfinite(area_m2)) {
    std::ostringstream os;
    os << "gap and area must be positive, got a=" << gap_m << " m, A=" << area_m2 << " m^2";
    throw DomainError(os.str());
  }
  const double pair = -kPi * kPi * kHbarC / (720.0 * gap_m * gap_m * gap_m);
  return ratio * pair * area_m2;
}

}  // namespace casimir
