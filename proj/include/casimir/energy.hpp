#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "casimir/error.hpp"
#include "casimir/optics.hpp"
#include "casimir/scattering.hpp"
#include "casimir/special.hpp"

namespace casimir {

// Ordered plates with dimensionless gaps in units of the reference gap a.
struct StackSpec {
  std::vector<Material> plates;
  std::vector<double> gaps;

  // Unit gaps between consecutive plates.
  static StackSpec uniform(std::vector<Material> plates);

  std::size_t size() const noexcept { return plates.size(); }
  void validate() const;
  StackGeometry geometry() const;
  StackSpec reversed() const;
};

enum class Method { Auto, Polylog, Quadrature, Ideal };

std::string_view to_string(Method m) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;

// Energy relative to the perfect-conductor pair at the same reference gap,
// Delta E^c / A = -pi^2 / (720 a^3). Positive ratio means attraction.
struct EnergyResult {
  double ratio = 0.0;
  double per_plate = 0.0;
  Method method = Method::Auto;
  double error_estimate = 0.0;
  std::size_t plates = 0;
};

enum class RootMethod { ScatteringMatrix, Companion };

// (45/pi^4) * sum over polarizations and reciprocal roots c_j of Li4(c_j) at
// angular node t. Needs equally spaced gaps; the 1/g^3 gap scaling is not
// applied here.
double polylog_node_value(const StackSpec& stack, double t,
                          RootMethod roots = RootMethod::ScatteringMatrix);

// Brute-force path: -(45 / 2pi^4) int_0^1 dt int_0^inf s^2 ds
// [ln Delta_TM + ln Delta_TE], Delta summed over compositions.
EnergyResult energy_ratio_quadrature(const StackSpec& stack, const QuadratureSpec& spec = {});

// Semi-analytic path: the s-integral is done in closed form through the
// reciprocal roots of Delta, leaving a 1-D angular integral of Li4 sums.
// Requires equally spaced gaps.
EnergyResult energy_ratio_polylog(const StackSpec& stack, const QuadratureSpec& spec = {},
                                  RootMethod roots = RootMethod::ScatteringMatrix);

struct ExactRatio {
  long long numerator = 0;
  long long denominator = 1;

  double value() const noexcept { return static_cast<double>(numerator) / static_cast<double>(denominator); }
  ExactRatio per_plate(std::size_t plates) const;
  friend bool operator==(const ExactRatio&, const ExactRatio&) = default;
};

// Sum over adjacent pairs of 1 (same ideal type) or -7/8 (PE next to PM).
// Every plate must be PerfectElectric or PerfectMagnetic, gaps must be unit.
ExactRatio ideal_stack_ratio(const StackSpec& stack);

// Dispatch. Auto picks the polylog path for equally spaced stacks without
// mixed electric/magnetic delta plates, quadrature otherwise.
Method resolve_method(const StackSpec& stack, Method requested);
EnergyResult energy_ratio(const StackSpec& stack, Method method = Method::Auto,
                          const QuadratureSpec& spec = {});

struct SweepPoint {
  double sigma = 0.0;
  EnergyResult result;
};

class SweepError : public NumericalError {
 public:
  SweepError(const std::string& what, std::size_t index, double sigma,
             std::exception_ptr cause = nullptr)
      : NumericalError(what), index_(index), sigma_(sigma), cause_(std::move(cause)) {}
  std::size_t index() const noexcept { return index_; }
  double sigma() const noexcept { return sigma_; }
  // The exception raised by the failing point.
  std::exception_ptr cause() const noexcept { return cause_; }

 private:
  std::size_t index_;
  double sigma_;
  std::exception_ptr cause_;
};

// Evaluates the template once per sigma, writing sigma into the conductivity
// plates listed in slots (all ConstantConductivity plates when slots is
// empty). Points run on up to `workers` threads (0: hardware concurrency);
// the output does not depend on the worker count. The first failing point in
// grid order is reported as SweepError.
std::vector<SweepPoint> sweep(const StackSpec& stack_template, std::span<const double> sigma_grid,
                              Method method = Method::Auto, const QuadratureSpec& spec = {},
                              std::span<const std::size_t> slots = {}, unsigned workers = 0);

// SI energy in joules: ratio * (-pi^2 hbar c / (720 a^3)) * area.
inline constexpr double kHbarC = 1.054571817e-34 * 299792458.0;  // J m
double absolute_energy(double ratio, double gap_m, double area_m2);
inline double absolute_energy(const EnergyResult& r, double gap_m, double area_m2) {
  return absolute_energy(r.ratio, gap_m, area_m2);
}

}  // namespace casimir
