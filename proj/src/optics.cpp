#include "casimir/optics.hpp"

#include <cmath>
#include <sstream>

#include "casimir/error.hpp"

namespace casimir {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_parameter(double value, const char* name) {
  if (!std::isfinite(value) || value < 0.0) {
    std::ostringstream os;
    os << name << " must be finite and >= 0, got " << value;
    throw DomainError(os.str());
  }
}

// x / (x + 2) with the x = 0 case exact.
double half_response(double x) { return x == 0.0 ? 0.0 : x / (x + 2.0); }

}  // namespace

AngularNode::AngularNode(double t) : t_(t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    std::ostringstream os;
    os << "angular node t must lie in [0,1], got " << t;
    throw DomainError(os.str());
  }
}

Material graphene() { return ConstantConductivity{kGrapheneSigma}; }

void validate(const Material& m) {
  std::visit(overloaded{
                 [](const ConstantConductivity& c) { require_parameter(c.sigma, "sigma"); },
                 [](const GenericDeltaPlate& g) {
                   require_parameter(g.lambda_e, "lambda_e");
                   require_parameter(g.lambda_g, "lambda_g");
                 },
                 [](const auto&) {},
             },
             m);
}

bool is_ideal(const Material& m) noexcept {
  return std::holds_alternative<PerfectElectric>(m) ||
         std::holds_alternative<PerfectMagnetic>(m);
}

bool is_transparent(const Material& m) noexcept {
  if (std::holds_alternative<Transparent>(m)) return true;
  if (const auto* c = std::get_if<ConstantConductivity>(&m)) return c->sigma == 0.0;
  if (const auto* g = std::get_if<GenericDeltaPlate>(&m))
    return g->lambda_e == 0.0 && g->lambda_g == 0.0;
  return false;
}

bool is_opaque(const Material& m) noexcept { return is_ideal(m); }

Coefficients coefficients(const Material& m, Polarization pol, AngularNode node) {
  validate(m);
  const double t = node.t();
  const bool tm = pol == Polarization::TM;
  return std::visit(
      overloaded{
          [&](const ConstantConductivity& c) -> Coefficients {
            // TM: sigma/(sigma + 2t), TE: -sigma t/(sigma t + 2).
            if (tm) {
              const double r = c.sigma == 0.0 ? 0.0 : c.sigma / (c.sigma + 2.0 * t);
              return {r, 1.0 - r};
            }
            const double r = -half_response(c.sigma * t);
            return {r, 1.0 + r};
          },
          [&](const GenericDeltaPlate& g) -> Coefficients {
            const double t2 = t * t;
            // The TE coefficients follow from TM by swapping lambda_e and lambda_g.
            const double normal = half_response(tm ? g.lambda_e : g.lambda_g);
            const double grazing = half_response((tm ? g.lambda_g : g.lambda_e) * t2);
            return {normal - grazing, 1.0 - normal - grazing};
          },
          [&](const PerfectElectric&) -> Coefficients { return {tm ? 1.0 : -1.0, 0.0}; },
          [&](const PerfectMagnetic&) -> Coefficients { return {tm ? -1.0 : 1.0, 0.0}; },
          [&](const Transparent&) -> Coefficients { return {0.0, 1.0}; },
      },
      m);
}

double reflection(const Material& m, Polarization pol, AngularNode node) {
  return coefficients(m, pol, node).r;
}

double transmission(const Material& m, Polarization pol, AngularNode node) {
  return coefficients(m, pol, node).t_coef;
}

std::string describe(const Material& m) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const ConstantConductivity& c) { os << "conductivity(" << c.sigma << ")"; },
                 [&](const GenericDeltaPlate& g) {
                   os << "delta(" << g.lambda_e << ", " << g.lambda_g << ")";
                 },
                 [&](const PerfectElectric&) { os << "PE"; },
                 [&](const PerfectMagnetic&) { os << "PM"; },
                 [&](const Transparent&) { os << "transparent"; },
             },
             m);
  return os.str();
}

}  // namespace casimir
