#pragma once

#include <string>
#include <variant>

namespace casimir {

// Sheet with frequency-independent conductivity sigma (Heaviside-Lorentz
// natural units, dimensionless).
struct ConstantConductivity {
  double sigma = 0.0;
};

// Generic delta-function plate. lambda_e and lambda_g are the electric and
// magnetic responses already multiplied by kappa, i.e. dimensionless and
// constant over the angular variable.
struct GenericDeltaPlate {
  double lambda_e = 0.0;
  double lambda_g = 0.0;
};

struct PerfectElectric {};
struct PerfectMagnetic {};
struct Transparent {};

using Material = std::variant<ConstantConductivity, GenericDeltaPlate,
                              PerfectElectric, PerfectMagnetic, Transparent>;

enum class Polarization { TM, TE };

// Cosine of the polar angle of the imaginary-frequency wave vector,
// t = zeta / kappa.
class AngularNode {
 public:
  explicit AngularNode(double t);
  double t() const noexcept { return t_; }

 private:
  double t_;
};

struct Coefficients {
  double r = 0.0;
  double t_coef = 1.0;
};

// Universal graphene conductivity pi * alpha with alpha the fine-structure
// constant (CODATA 2018).
inline constexpr double kFineStructure = 1.0 / 137.035999084;
inline constexpr double kGrapheneSigma = 3.14159265358979323846 * kFineStructure;

Material graphene();

// Throws DomainError if the material carries a negative or non-finite
// parameter.
void validate(const Material& m);

bool is_ideal(const Material& m) noexcept;
bool is_transparent(const Material& m) noexcept;
// True when both polarizations have t_coef == 0 exactly.
bool is_opaque(const Material& m) noexcept;

Coefficients coefficients(const Material& m, Polarization pol, AngularNode node);
double reflection(const Material& m, Polarization pol, AngularNode node);
double transmission(const Material& m, Polarization pol, AngularNode node);

std::string describe(const Material& m);

}  // namespace casimir
