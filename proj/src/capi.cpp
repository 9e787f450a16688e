#include "casimir/casimir.h"

#include <new>
#include <string>
#include <vector>

#include "casimir/energy.hpp"

struct casimir_stack {
  std::vector<casimir::Material> plates;
  std::vector<double> gaps;  // empty: unit gaps
};

namespace {

thread_local std::string last_error;

casimir_status fail(casimir_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class F>
casimir_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const casimir::SweepError& e) {
    return fail(CASIMIR_ERROR_NUMERICAL, e.what());
  } catch (const casimir::QuadratureError& e) {
    return fail(CASIMIR_ERROR_CONVERGENCE, e.what());
  } catch (const casimir::NumericalError& e) {
    return fail(CASIMIR_ERROR_NUMERICAL, e.what());
  } catch (const casimir::DomainError& e) {
    return fail(CASIMIR_ERROR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CASIMIR_ERROR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(CASIMIR_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(CASIMIR_ERROR_INTERNAL, "unknown exception");
  }
}

bool to_method(casimir_method in, casimir::Method& out) {
  switch (in) {
    case CASIMIR_METHOD_AUTO: out = casimir::Method::Auto; return true;
    case CASIMIR_METHOD_POLYLOG: out = casimir::Method::Polylog; return true;
    case CASIMIR_METHOD_QUADRATURE: out = casimir::Method::Quadrature; return true;
    case CASIMIR_METHOD_IDEAL: out = casimir::Method::Ideal; return true;
  }
  return false;
}

casimir_method from_method(casimir::Method m) {
  switch (m) {
    case casimir::Method::Polylog: return CASIMIR_METHOD_POLYLOG;
    case casimir::Method::Quadrature: return CASIMIR_METHOD_QUADRATURE;
    case casimir::Method::Ideal: return CASIMIR_METHOD_IDEAL;
    case casimir::Method::Auto: break;
  }
  return CASIMIR_METHOD_AUTO;
}

bool to_material(casimir_plate_kind kind, double p1, double p2, casimir::Material& out) {
  switch (kind) {
    case CASIMIR_PLATE_CONDUCTIVITY: out = casimir::ConstantConductivity{p1}; break;
    case CASIMIR_PLATE_DELTA: out = casimir::GenericDeltaPlate{p1, p2}; break;
    case CASIMIR_PLATE_PERFECT_ELECTRIC: out = casimir::PerfectElectric{}; break;
    case CASIMIR_PLATE_PERFECT_MAGNETIC: out = casimir::PerfectMagnetic{}; break;
    case CASIMIR_PLATE_TRANSPARENT: out = casimir::Transparent{}; break;
    default: return false;
  }
  casimir::validate(out);
  return true;
}

casimir::StackSpec to_spec(const casimir_stack& s) {
  if (s.gaps.empty()) return casimir::StackSpec::uniform(s.plates);
  return casimir::StackSpec{s.plates, s.gaps};
}

casimir::QuadratureSpec to_quadrature(const casimir_quadrature* q) {
  casimir::QuadratureSpec spec;
  if (q != nullptr) spec = {q->rel_tol, q->abs_tol, q->max_subdivisions};
  spec.validate();
  return spec;
}

casimir_result to_result(const casimir::EnergyResult& r) {
  return {r.ratio, r.per_plate, r.error_estimate, from_method(r.method), r.plates};
}

}  // namespace

extern "C" {

const char* casimir_version(void) { return "1.0.0"; }

const char* casimir_last_error(void) { return last_error.c_str(); }

const char* casimir_status_string(casimir_status status) {
  switch (status) {
    case CASIMIR_OK: return "ok";
    case CASIMIR_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case CASIMIR_ERROR_DOMAIN: return "domain error";
    case CASIMIR_ERROR_CONVERGENCE: return "quadrature did not converge";
    case CASIMIR_ERROR_NUMERICAL: return "numerical failure";
    case CASIMIR_ERROR_OUT_OF_MEMORY: return "out of memory";
    case CASIMIR_ERROR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* casimir_method_name(casimir_method method) {
  casimir::Method m;
  if (!to_method(method, m)) return "unknown";
  return casimir::to_string(m).data();
}

casimir_quadrature casimir_default_quadrature(void) {
  const casimir::QuadratureSpec spec;
  return {spec.rel_tol, spec.abs_tol, spec.max_subdivisions};
}

double casimir_graphene_sigma(void) { return casimir::kGrapheneSigma; }

casimir_status casimir_stack_create(casimir_stack** out) {
  if (out == nullptr) return fail(CASIMIR_ERROR_INVALID_ARGUMENT, "output pointer is null");
  return guarded([&] {
    *out = new casimir_stack{};
    return CASIMIR_OK;
  });
}

void casimir_stack_destroy(casimir_stack* stack) { delete stack; }

casimir_status casimir_stack_add_plate(casimir_stack* stack, casimir_plate_kind kind, double p1,
                                       double p2) {
  if (stack == nullptr) return fail(CASIMIR_ERROR_INVALID_ARGUMENT, "stack handle is null");
  return guarded([&] {
    casimir::Material m;
    if (!to_material(kind, p1, p2, m)) return fail(CASIMIR_ERROR_INVALID_ARGUMENT, "unknown plate kind");
    stack->plates.push_back(m);
    return CASIMIR_OK;
  });
}

casimir_status casimir_stack_set_gaps(casimir_stack* stack, const double* gaps, size_t count) {
  if (stack == nullptr) return fail(CASIMIR_ERROR_INVALID_ARGUMENT, "stack handle is null");
  if (count > 0 && gaps == nullptr) return fail(CASIMIR_ERROR_INVALID_ARGUMENT, "gap array is null");
  return guarded([&] {
    if (count > 0) (void)casimir::StackGeometry(std::vector<double>(gaps, gaps + count));
    stack->gaps.assign(gaps, gaps + count);
    return CASIMIR_OK;
  });
}

casimir_status casimir_stack_plate_count(const casimir_stack* stack, size_t* out) {
  if (stack == nullptr || out == nullptr) return fail(CASIMIR_ERROR_INVALID_ARGUMENT, "null argument");
  *out = stack->plates.size();
  return CASIMIR_OK;
}

casimir_status casimir_stack_set_sigma(casimir_stack* stack, size_t index, double sigma) {
  if (stack == nullptr) return fail(CASIMIR_ERROR_INVALID_ARGUMENT, "stack handle is null");
  return guarded([&] {
    if (index >= stack->plates.size()) return fail(CASIMIR_ERROR_DOMAIN, "plate index out of range");
    if (!std::holds_alternative<casimir::ConstantConductivity>(stack->plates[index]))
      return fail(CASIMIR_ERROR_DOMAIN, "plate is not a conductivity plate");
    casimir::Material m = casimir::ConstantConductivity{sigma};
    casimir::validate(m);
    stack->plates[index] = m;
    return CASIMIR_OK;
  });
}

casimir_status casimir_plate_coefficients(casimir_plate_kind kind, double p1, double p2,
                                          casimir_polarization pol, double t, double* r,
                                          double* t_coef) {
  if (r == nullptr || t_coef == nullptr) return fail(CASIMIR_ERROR_INVALID_ARGUMENT, "null output pointer");
  if (pol != CASIMIR_TM && pol != CASIMIR_TE) return fail(CASIMIR_ERROR_INVALID_ARGUMENT, "unknown polarization");
  return guarded([&] {
    casimir::Material m;
    if (!to_material(kind, p1, p2, m)) return fail(CASIMIR_ERROR_INVALID_ARGUMENT, "unknown plate kind");
    const auto c = casimir::coefficients(
        m, pol == CASIMIR_TM ? casimir::Polarization::TM : casimir::Polarization::TE, casimir::AngularNode(t));
    *r = c.r;
    *t_coef = c.t_coef;
    return CASIMIR_OK;
  });
}

casimir_status casimir_resolve_method(const casimir_stack* stack, casimir_method requested,
                                      casimir_method* resolved) {
  if (stack == nullptr || resolved == nullptr) return fail(CASIMIR_ERROR_INVALID_ARGUMENT, "null argument");
  casimir::Method m;
  if (!to_method(requested, m)) return fail(CASIMIR_ERROR_INVALID_ARGUMENT, "unknown method");
  return guarded([&] {
    const auto spec = to_spec(*stack);
    spec.validate();
    *resolved = from_method(casimir::resolve_method(spec, m));
    return CASIMIR_OK;
  });
}

casimir_status casimir_energy_ratio(const casimir_stack* stack, casimir_method method,
                                    const casimir_quadrature* quad, casimir_result* out) {
  if (stack == nullptr || out == nullptr) return fail(CASIMIR_ERROR_INVALID_ARGUMENT, "null argument");
  casimir::Method m;
  if (!to_method(method, m)) return fail(CASIMIR_ERROR_INVALID_ARGUMENT, "unknown method");
  return guarded([&] {
    *out = to_result(casimir::energy_ratio(to_spec(*stack), m, to_quadrature(quad)));
    return CASIMIR_OK;
  });
}

casimir_status casimir_ideal_ratio(const casimir_stack* stack, int64_t* numerator, int64_t* denominator) {
  if (stack == nullptr || numerator == nullptr || denominator == nullptr)
    return fail(CASIMIR_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto r = casimir::ideal_stack_ratio(to_spec(*stack));
    *numerator = r.numerator;
    *denominator = r.denominator;
    return CASIMIR_OK;
  });
}

casimir_status casimir_sweep(const casimir_stack* stack, const double* sigmas, size_t count,
                             const size_t* slots, size_t slot_count, casimir_method method,
                             const casimir_quadrature* quad, unsigned workers,
                             casimir_result* results, size_t* failed_index) {
  if (stack == nullptr || sigmas == nullptr || results == nullptr || (slot_count > 0 && slots == nullptr))
    return fail(CASIMIR_ERROR_INVALID_ARGUMENT, "null argument");
  casimir::Method m;
  if (!to_method(method, m)) return fail(CASIMIR_ERROR_INVALID_ARGUMENT, "unknown method");
  try {
    last_error.clear();
    const auto points = casimir::sweep(to_spec(*stack), std::span<const double>(sigmas, count), m,
                                       to_quadrature(quad), std::span<const size_t>(slots, slot_count),
                                       workers);
    for (size_t i = 0; i < count; ++i) results[i] = to_result(points[i].result);
    return CASIMIR_OK;
  } catch (const casimir::SweepError& e) {
    if (failed_index != nullptr) *failed_index = e.index();
    // Report the failing point's own category with the sweep's message.
    const casimir_status status =
        e.cause() ? guarded([&]() -> casimir_status { std::rethrow_exception(e.cause()); })
                  : CASIMIR_ERROR_NUMERICAL;
    return fail(status, e.what());
  } catch (...) {
    return guarded([] () -> casimir_status { throw; });
  }
}

casimir_status casimir_absolute_energy(double ratio, double gap_m, double area_m2, double* joules) {
  if (joules == nullptr) return fail(CASIMIR_ERROR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    *joules = casimir::absolute_energy(ratio, gap_m, area_m2);
    return CASIMIR_OK;
  });
}

}  // extern "C"
