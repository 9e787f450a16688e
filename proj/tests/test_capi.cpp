#include <doctest.h>

#include <cmath>
#include <cstring>
#include <memory>
#include <thread>
#include <vector>

#include "casimir/casimir.h"

namespace {

using Stack = std::unique_ptr<casimir_stack, decltype(&casimir_stack_destroy)>;

Stack make_stack(std::initializer_list<std::pair<casimir_plate_kind, double>> plates) {
  casimir_stack* raw = nullptr;
  REQUIRE(casimir_stack_create(&raw) == CASIMIR_OK);
  Stack s(raw, &casimir_stack_destroy);
  for (auto [kind, p1] : plates) REQUIRE(casimir_stack_add_plate(s.get(), kind, p1, 0.0) == CASIMIR_OK);
  return s;
}

}  // namespace

TEST_CASE("version and strings") {
  CHECK(std::strlen(casimir_version()) > 0);
  CHECK(std::strcmp(casimir_status_string(CASIMIR_OK), "ok") == 0);
  CHECK(std::strcmp(casimir_method_name(CASIMIR_METHOD_POLYLOG), "polylog") == 0);
  CHECK(std::strcmp(casimir_method_name(CASIMIR_METHOD_QUADRATURE), "quadrature") == 0);
  const casimir_quadrature q = casimir_default_quadrature();
  CHECK(q.rel_tol == 1e-9);
  CHECK(q.abs_tol == 1e-12);
  CHECK(q.max_subdivisions == 2000);
  CHECK(casimir_graphene_sigma() == doctest::Approx(M_PI / 137.035999084).epsilon(1e-15));
}

TEST_CASE("graphene pair through the C API") {
  const double g = casimir_graphene_sigma();
  auto s = make_stack({{CASIMIR_PLATE_CONDUCTIVITY, g}, {CASIMIR_PLATE_CONDUCTIVITY, g}});
  size_t n = 0;
  CHECK(casimir_stack_plate_count(s.get(), &n) == CASIMIR_OK);
  CHECK(n == 2);
  casimir_method resolved{};
  CHECK(casimir_resolve_method(s.get(), CASIMIR_METHOD_AUTO, &resolved) == CASIMIR_OK);
  CHECK(resolved == CASIMIR_METHOD_POLYLOG);
  casimir_result r{};
  REQUIRE(casimir_energy_ratio(s.get(), CASIMIR_METHOD_AUTO, nullptr, &r) == CASIMIR_OK);
  CHECK(r.ratio == doctest::Approx(0.0053833228702806593).epsilon(1e-9));
  CHECK(r.per_plate == doctest::Approx(r.ratio / 2));
  CHECK(r.plates == 2);
  CHECK(r.method == CASIMIR_METHOD_POLYLOG);
  casimir_result q{};
  REQUIRE(casimir_energy_ratio(s.get(), CASIMIR_METHOD_QUADRATURE, nullptr, &q) == CASIMIR_OK);
  CHECK(std::abs(q.ratio - r.ratio) <= 1e-8);
}

TEST_CASE("ideal ratios through the C API") {
  auto s = make_stack({{CASIMIR_PLATE_PERFECT_MAGNETIC, 0},
                       {CASIMIR_PLATE_PERFECT_ELECTRIC, 0},
                       {CASIMIR_PLATE_PERFECT_ELECTRIC, 0},
                       {CASIMIR_PLATE_PERFECT_ELECTRIC, 0}});
  int64_t num = 0, den = 0;
  REQUIRE(casimir_ideal_ratio(s.get(), &num, &den) == CASIMIR_OK);
  CHECK(num == 9);
  CHECK(den == 8);
  casimir_result r{};
  REQUIRE(casimir_energy_ratio(s.get(), CASIMIR_METHOD_IDEAL, nullptr, &r) == CASIMIR_OK);
  CHECK(r.per_plate == 0.28125);
  CHECK(r.error_estimate == 0.0);
}

TEST_CASE("plate coefficients") {
  double r = 0, t = 0;
  REQUIRE(casimir_plate_coefficients(CASIMIR_PLATE_CONDUCTIVITY, 2.0, 0.0, CASIMIR_TM, 1.0, &r, &t) == CASIMIR_OK);
  CHECK(r == doctest::Approx(0.5));
  CHECK(t == doctest::Approx(0.5));
  REQUIRE(casimir_plate_coefficients(CASIMIR_PLATE_PERFECT_MAGNETIC, 0, 0, CASIMIR_TE, 0.3, &r, &t) == CASIMIR_OK);
  CHECK(r == 1.0);
  CHECK(t == 0.0);
  CHECK(casimir_plate_coefficients(CASIMIR_PLATE_CONDUCTIVITY, 1.0, 0.0, CASIMIR_TM, 1.5, &r, &t) ==
        CASIMIR_ERROR_DOMAIN);
  CHECK(std::strlen(casimir_last_error()) > 0);
  CHECK(casimir_plate_coefficients(static_cast<casimir_plate_kind>(42), 0, 0, CASIMIR_TM, 0.5, &r, &t) ==
        CASIMIR_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("argument and domain errors") {
  CHECK(casimir_stack_create(nullptr) == CASIMIR_ERROR_INVALID_ARGUMENT);
  casimir_result r{};
  CHECK(casimir_energy_ratio(nullptr, CASIMIR_METHOD_AUTO, nullptr, &r) == CASIMIR_ERROR_INVALID_ARGUMENT);
  auto s = make_stack({{CASIMIR_PLATE_CONDUCTIVITY, 1.0}});
  CHECK(casimir_energy_ratio(s.get(), CASIMIR_METHOD_AUTO, nullptr, &r) == CASIMIR_ERROR_DOMAIN);
  CHECK(casimir_stack_add_plate(s.get(), CASIMIR_PLATE_CONDUCTIVITY, -1.0, 0.0) == CASIMIR_ERROR_DOMAIN);
  CHECK(casimir_stack_add_plate(s.get(), CASIMIR_PLATE_PERFECT_ELECTRIC, 0.0, 0.0) == CASIMIR_OK);
  CHECK(casimir_energy_ratio(s.get(), static_cast<casimir_method>(9), nullptr, &r) ==
        CASIMIR_ERROR_INVALID_ARGUMENT);
  CHECK(casimir_energy_ratio(s.get(), CASIMIR_METHOD_IDEAL, nullptr, &r) == CASIMIR_ERROR_DOMAIN);
  const double bad_gaps[] = {1.0, 2.0};
  CHECK(casimir_stack_set_gaps(s.get(), bad_gaps, 2) == CASIMIR_OK);
  CHECK(casimir_energy_ratio(s.get(), CASIMIR_METHOD_AUTO, nullptr, &r) == CASIMIR_ERROR_DOMAIN);
  CHECK(casimir_stack_set_gaps(s.get(), nullptr, 0) == CASIMIR_OK);
  CHECK(casimir_energy_ratio(s.get(), CASIMIR_METHOD_AUTO, nullptr, &r) == CASIMIR_OK);
  CHECK(casimir_stack_set_sigma(s.get(), 1, 2.0) == CASIMIR_ERROR_DOMAIN);
  CHECK(casimir_stack_set_sigma(s.get(), 5, 2.0) == CASIMIR_ERROR_DOMAIN);
  CHECK(casimir_stack_set_sigma(s.get(), 0, 2.0) == CASIMIR_OK);
  casimir_quadrature bad{-1.0, 1e-12, 100};
  CHECK(casimir_energy_ratio(s.get(), CASIMIR_METHOD_QUADRATURE, &bad, &r) == CASIMIR_ERROR_DOMAIN);
  double j = 0;
  CHECK(casimir_absolute_energy(1.0, -1.0, 1.0, &j) == CASIMIR_ERROR_DOMAIN);
  casimir_stack_destroy(nullptr);
}

TEST_CASE("convergence failures are reported") {
  auto s = make_stack({{CASIMIR_PLATE_CONDUCTIVITY, 1.0}, {CASIMIR_PLATE_CONDUCTIVITY, 1.0}});
  casimir_quadrature starved{1e-15, 1e-300, 1};
  casimir_result r{};
  CHECK(casimir_energy_ratio(s.get(), CASIMIR_METHOD_QUADRATURE, &starved, &r) == CASIMIR_ERROR_CONVERGENCE);
  CHECK(std::strlen(casimir_last_error()) > 0);
}

TEST_CASE("last error is per thread") {
  casimir_stack_create(nullptr);
  std::string other;
  std::thread([&] {
    double j = 0;
    casimir_absolute_energy(1.0, 1e-6, 1e-4, &j);
    other = casimir_last_error();
  }).join();
  CHECK(other.empty());
  CHECK(std::strlen(casimir_last_error()) > 0);
}

TEST_CASE("sweep through the C API") {
  auto s = make_stack({{CASIMIR_PLATE_CONDUCTIVITY, 1.0},
                       {CASIMIR_PLATE_PERFECT_MAGNETIC, 0},
                       {CASIMIR_PLATE_CONDUCTIVITY, 1.0}});
  std::vector<double> grid;
  for (int i = 0; i < 20; ++i) grid.push_back(std::pow(10.0, -2.0 + 5.0 * i / 19.0));
  std::vector<casimir_result> out(grid.size());
  size_t failed = 99;
  REQUIRE(casimir_sweep(s.get(), grid.data(), grid.size(), nullptr, 0, CASIMIR_METHOD_AUTO, nullptr, 2,
                        out.data(), &failed) == CASIMIR_OK);
  for (const auto& r : out) CHECK(r.ratio < 0.0);

  const double unsorted[] = {2.0, 1.0};
  CHECK(casimir_sweep(s.get(), unsorted, 2, nullptr, 0, CASIMIR_METHOD_AUTO, nullptr, 1, out.data(), &failed) ==
        CASIMIR_ERROR_DOMAIN);
  casimir_quadrature starved{1e-15, 1e-300, 1};
  REQUIRE(casimir_sweep(s.get(), grid.data(), 3, nullptr, 0, CASIMIR_METHOD_QUADRATURE, &starved, 1, out.data(),
                        &failed) == CASIMIR_ERROR_CONVERGENCE);
  CHECK(failed == 0);
}

TEST_CASE("absolute energy") {
  double j = 0;
  REQUIRE(casimir_absolute_energy(1.0, 1e-6, 1e-4, &j) == CASIMIR_OK);
  CHECK(j == doctest::Approx(-4.3343e-14).epsilon(1e-4));
}
