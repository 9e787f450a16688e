// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "casimir/energy.hpp"
#include "random_stack.hpp"

using namespace casimir;

namespace {

// Pinned tolerances and budgets.
constexpr double kPairTarget = 0.00538, kPairTol = 5e-5, kPairBudget = 1.0;
constexpr double kStackTargets[] = {0.011, 0.017, 0.022, 0.028};
constexpr double kStackTol = 5e-4, kStackBudget = 10.0;
constexpr double kBoyerTarget = -0.875, kBoyerTol = 1e-6;
constexpr double kPeGrapheneTarget = 0.027, kPmGrapheneTarget = -0.026, kMixedPairTol = 5e-4;
constexpr double kIdealTol = 1e-6;
constexpr double kLargeSigma = 1e6, kLargeSigmaTol = 1e-3;
constexpr int kOracleSamples = 2000;
constexpr double kOracleTol = 1e-12;
constexpr int kPathStacks = 50;
constexpr double kPathTol = 1e-6;
constexpr int kSpecialSamples = 50;
constexpr double kSpecialTol = 1e-9;
constexpr int kSignPoints = 20;
constexpr double kSignBudget = 30.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(const char* id, const std::function<Outcome()>& check) {
  Outcome o;
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", id, o.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, double a = 0, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Material> repeated(std::size_t n, const Material& m) {
  std::vector<Material> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(m);
  return out;
}

StackSpec equal_sigma(std::size_t n, double sigma) {
  return StackSpec::uniform(std::vector<Material>(n, ConstantConductivity{sigma}));
}

Material random_material(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 7);
  std::uniform_real_distribution<double> log_sigma(-2.0, 3.0), lambda(0.0, 3.0), small(0.0, 1.0);
  switch (kind(rng)) {
    case 0:
    case 1:
    case 2: return ConstantConductivity{std::pow(10.0, log_sigma(rng))};
    case 3: return PerfectElectric{};
    case 4: return PerfectMagnetic{};
    case 5: return Transparent{};
    case 6: return rng() % 2 ? Material{GenericDeltaPlate{lambda(rng), 0.0}} : Material{GenericDeltaPlate{0.0, lambda(rng)}};
    default: return GenericDeltaPlate{small(rng), small(rng)};
  }
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;

  report("graphene-pair", [] {
    const auto t0 = clock::now();
    const double r = energy_ratio(equal_sigma(2, kGrapheneSigma)).ratio;
    const double dt = seconds_since(t0);
    return Outcome{std::abs(r - kPairTarget) <= kPairTol && dt < kPairBudget,
                   fmt("ratio=%.7f (target %.5f), %.3f s", r, kPairTarget, dt)};
  });

  report("graphene-stacks", [] {
    const auto t0 = clock::now();
    bool ok = true;
    std::string detail;
    for (std::size_t n = 3; n <= 6; ++n) {
      const double r = energy_ratio(equal_sigma(n, kGrapheneSigma)).ratio;
      ok = ok && std::abs(r - kStackTargets[n - 3]) <= kStackTol;
      detail += fmt("N=%.0f %.5f; ", static_cast<double>(n), r);
    }
    const double dt = seconds_since(t0);
    return Outcome{ok && dt < kStackBudget, detail + fmt("%.3f s", dt)};
  });

  report("boyer-and-mixed-pairs", [] {
    const double boyer = energy_ratio(StackSpec::uniform({PerfectElectric{}, PerfectMagnetic{}})).ratio;
    const double pe_g = energy_ratio(StackSpec::uniform({PerfectElectric{}, graphene()})).ratio;
    const double pm_g = energy_ratio(StackSpec::uniform({PerfectMagnetic{}, graphene()})).ratio;
    const bool ok = std::abs(boyer - kBoyerTarget) <= kBoyerTol &&
                    std::abs(pe_g - kPeGrapheneTarget) <= kMixedPairTol &&
                    std::abs(pm_g - kPmGrapheneTarget) <= kMixedPairTol;
    return Outcome{ok, fmt("PE+PM=%.9f PE+graphene=%.6f PM+graphene=%.6f", boyer, pe_g, pm_g)};
  });

  report("ideal-asymptotics", [] {
    bool ok = true;
    double worst = 0.0;
    for (std::size_t n = 2; n <= 6; ++n) {
      const auto pe = StackSpec::uniform(repeated(n, PerfectElectric{}));
      const auto exact = ideal_stack_ratio(pe);
      ok = ok && exact == ExactRatio{static_cast<long long>(n - 1), 1};
      worst = std::max(worst, std::abs(energy_ratio_quadrature(pe).ratio - static_cast<double>(n - 1)));

      std::vector<Material> alt;
      for (std::size_t i = 0; i < n; ++i) alt.push_back(i % 2 ? Material{PerfectMagnetic{}} : Material{PerfectElectric{}});
      const auto a = StackSpec::uniform(alt);
      const double target = -static_cast<double>(n - 1) * 7.0 / 8.0;
      ok = ok && ideal_stack_ratio(a).value() == target;
      worst = std::max(worst, std::abs(energy_ratio_quadrature(a).ratio - target));
    }
    const auto edge = ideal_stack_ratio(
        StackSpec::uniform({PerfectMagnetic{}, PerfectElectric{}, PerfectElectric{}, PerfectElectric{}}));
    const auto middle = ideal_stack_ratio(
        StackSpec::uniform({PerfectElectric{}, PerfectMagnetic{}, PerfectElectric{}, PerfectElectric{}}));
    const double e = edge.per_plate(4).value(), m = middle.per_plate(4).value();
    ok = ok && worst <= kIdealTol && e == 0.28125 && m == -0.1875;
    return Outcome{ok, fmt("max quadrature deviation %.2e, per-plate edge=%.5f middle=%.4f", worst, e, m)};
  });

  report("large-sigma-limit", [] {
    double worst = 0.0;
    for (std::size_t n = 2; n <= 6; ++n) {
      const double pp = energy_ratio(equal_sigma(n, kLargeSigma)).per_plate;
      worst = std::max(worst, std::abs(pp - static_cast<double>(n - 1) / static_cast<double>(n)));
    }
    return Outcome{worst <= kLargeSigmaTol, fmt("max |per_plate - (N-1)/N| = %.2e", worst)};
  });

  report("oracle-equivalence", [] {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::size_t> nd(2, 8);
    std::uniform_real_distribution<double> sd(0.0, 20.0);
    double worst_oracle = 0.0, worst_rev = 0.0, worst_transp = 0.0;
    auto scaled = [](double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); };
    for (int i = 0; i < kOracleSamples; ++i) {
      const std::size_t n = nd(rng);
      auto c = testing_support::random_coefficients(rng, n);
      const auto g = testing_support::random_geometry(rng, n);
      const double s = sd(rng);
      const double d = delta_total(c, g, s);
      worst_oracle = std::max(worst_oracle, scaled(d, delta_oracle(c, g, s)));
      worst_rev = std::max(worst_rev, scaled(delta_total(c.reversed(), g.reversed(), s), d));
      if (n >= 3) {
        const std::size_t m = 1 + static_cast<std::size_t>(i) % (n - 2);
        c.r[m] = 0.0;
        c.t_coef[m] = 1.0;
        auto reduced = c;
        reduced.r.erase(reduced.r.begin() + static_cast<std::ptrdiff_t>(m));
        reduced.t_coef.erase(reduced.t_coef.begin() + static_cast<std::ptrdiff_t>(m));
        std::vector<double> gaps(g.gaps().begin(), g.gaps().end());
        gaps[m - 1] += gaps[m];
        gaps.erase(gaps.begin() + static_cast<std::ptrdiff_t>(m));
        worst_transp = std::max(worst_transp, scaled(delta_total(c, g, s), delta_total(reduced, StackGeometry(gaps), s)));
      }
    }
    const bool ok = worst_oracle <= kOracleTol && worst_rev <= kOracleTol && worst_transp <= kOracleTol;
    return Outcome{ok, fmt("%.0f samples; oracle %.1e, reversal %.1e", kOracleSamples, worst_oracle, worst_rev) +
                           fmt(", transparency %.1e", worst_transp)};
  });

  report("path-agreement", [] {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> nd(2, 6);
    double worst = 0.0;
    for (int i = 0; i < kPathStacks; ++i) {
      std::vector<Material> plates;
      const std::size_t n = nd(rng);
      for (std::size_t k = 0; k < n; ++k) plates.push_back(random_material(rng));
      const auto s = StackSpec::uniform(plates);
      worst = std::max(worst, std::abs(energy_ratio_polylog(s).ratio - energy_ratio_quadrature(s).ratio));
    }
    return Outcome{worst <= kPathTol, fmt("%.0f stacks, max |polylog - quadrature| = %.2e", kPathStacks, worst)};
  });

  report("special-functions", [] {
    using std::numbers::pi;
    const double p = li4(1.0), m = li4(-1.0);
    bool ok = std::abs(p - std::pow(pi, 4) / 90) <= 1e-15 && std::abs(m + 7 * std::pow(pi, 4) / 720) <= 1e-15;
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> cd(-1.0, 1.0);
    QuadratureSpec spec;
    spec.rel_tol = 1e-12;
    spec.abs_tol = 1e-14;
    double worst = 0.0;
    for (int i = 0; i < kSpecialSamples; ++i) {
      const double c = cd(rng);
      const double direct = integrate_s_weighted([c](double s) { return std::log1p(-c * std::exp(-s)); }, spec).value;
      worst = std::max(worst, std::abs(direct - s_integral(c).real()));
    }
    ok = ok && worst <= kSpecialTol;
    return Outcome{ok, fmt("li4(1)=%.15f li4(-1)=%.15f, s_integral max deviation %.2e", p, m, worst)};
  });

  report("sign-behaviour", [] {
    const auto t0 = clock::now();
    std::vector<double> grid;
    for (int i = 0; i < kSignPoints; ++i) grid.push_back(std::pow(10.0, -2.0 + 5.0 * i / (kSignPoints - 1)));
    const auto middle = sweep(StackSpec::uniform({ConstantConductivity{1.0}, PerfectMagnetic{}, ConstantConductivity{1.0}}), grid);
    const auto edge = sweep(StackSpec::uniform({PerfectMagnetic{}, ConstantConductivity{1.0}, ConstantConductivity{1.0}}), grid);
    const bool middle_repulsive =
        std::all_of(middle.begin(), middle.end(), [](const SweepPoint& p) { return p.result.ratio < 0.0; });
    // One sign change, from repulsive to attractive.
    int changes = 0;
    double crossing = 0.0;
    for (std::size_t i = 1; i < edge.size(); ++i) {
      if ((edge[i - 1].result.ratio < 0.0) != (edge[i].result.ratio < 0.0)) {
        ++changes;
        crossing = edge[i].sigma;
      }
    }
    const bool edge_crosses = edge.front().result.ratio < 0.0 && edge.back().result.ratio > 0.0 && changes == 1;
    const double dt = seconds_since(t0);
    return Outcome{middle_repulsive && edge_crosses && dt < kSignBudget,
                   fmt("[s,PM,s] all repulsive=%.0f; [PM,s,s] turns attractive near sigma=%.3g; %.3f s",
                       middle_repulsive ? 1.0 : 0.0, crossing, dt)};
  });

  std::printf("%d criteria failed\n", failures);
  return failures;
}
