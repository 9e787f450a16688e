#include "casimir/scattering.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "casimir/error.hpp"

namespace casimir {

int Composition::sum() const noexcept { return std::accumulate(parts.begin(), parts.end(), 0); }

void for_each_composition(int n, const std::function<void(std::span<const int>)>& visit) {
  if (n < 1 || n > kMaxComposition) {
    std::ostringstream os;
    os << "composition order must be in [1, " << kMaxComposition << "], got " << n;
    throw DomainError(os.str());
  }
  // Depth-first, smallest leading part first: lexicographic order.
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(n));
  std::function<void(int)> descend = [&](int remaining) {
    if (remaining == 0) {
      visit(parts);
      return;
    }
    for (int p = 1; p <= remaining; ++p) {
      parts.push_back(p);
      descend(remaining - p);
      parts.pop_back();
    }
  };
  descend(n);
}

std::vector<Composition> compositions(int n) {
  if (n < 1 || n > kMaxListedComposition) {
    std::ostringstream os;
    os << "composition list supports n in [1, " << kMaxListedComposition << "], got " << n;
    throw DomainError(os.str());
  }
  std::vector<Composition> out;
  out.reserve(std::size_t{1} << (n - 1));
  for_each_composition(n, [&](std::span<const int> parts) {
    out.push_back(Composition{{parts.begin(), parts.end()}});
  });
  return out;
}

const std::vector<Composition>& cached_compositions(int n) {
  static std::array<std::once_flag, kMaxListedComposition + 1> once;
  static std::array<std::vector<Composition>, kMaxListedComposition + 1> cache;
  if (n < 1 || n > kMaxListedComposition) compositions(n);  // throws
  std::call_once(once[static_cast<std::size_t>(n)],
                 [n] { cache[static_cast<std::size_t>(n)] = compositions(n); });
  return cache[static_cast<std::size_t>(n)];
}

StackGeometry::StackGeometry(std::vector<double> gaps) : gaps_(std::move(gaps)) {
  if (gaps_.empty()) throw DomainError("a stack needs at least one gap (two plates)");
  for (double g : gaps_) {
    if (!std::isfinite(g) || g <= 0.0) {
      std::ostringstream os;
      os << "gaps must be finite and > 0, got " << g;
      throw DomainError(os.str());
    }
  }
}

StackGeometry StackGeometry::uniform(std::size_t plates) {
  if (plates < 2) throw DomainError("a stack needs at least two plates");
  return StackGeometry(std::vector<double>(plates - 1, 1.0));
}

bool StackGeometry::is_uniform() const noexcept {
  for (double g : gaps_)
    if (g != 1.0) return false;
  return true;
}

bool StackGeometry::is_equally_spaced() const noexcept {
  for (double g : gaps_)
    if (g != gaps_.front()) return false;
  return true;
}

StackGeometry StackGeometry::reversed() const { return StackGeometry({gaps_.rbegin(), gaps_.rend()}); }

NodeCoefficients NodeCoefficients::reversed() const {
  return {{r.rbegin(), r.rend()}, {t_coef.rbegin(), t_coef.rend()}};
}

namespace {

void check_sizes(const NodeCoefficients& coeffs, const StackGeometry& geometry) {
  if (coeffs.r.size() != coeffs.t_coef.size() || coeffs.r.size() != geometry.plates()) {
    std::ostringstream os;
    os << "size mismatch: " << coeffs.r.size() << " reflections, " << coeffs.t_coef.size()
       << " transmissions, " << geometry.plates() << " plates in geometry";
    throw DomainError(os.str());
  }
}

void check_s(double s) {
  if (std::isnan(s) || s < 0.0) {
    std::ostringstream os;
    os << "scaled frequency s must be >= 0, got " << s;
    throw DomainError(os.str());
  }
}

double beyond_factor(const NodeCoefficients& c, std::size_t i, std::size_t k,
                     std::span<const double> gaps, double s) {
  double path = 0.0;
  for (std::size_t m = i; m < k; ++m) path += gaps[m];
  double amp = -c.r[i];
  for (std::size_t m = i + 1; m < k; ++m) amp *= c.t_coef[m] * c.t_coef[m];
  amp *= c.r[k];
  return amp * std::exp(-s * path);
}

}  // namespace

double delta_beyond(const NodeCoefficients& coeffs, std::size_t i, std::size_t k,
                    const StackGeometry& geometry, double s) {
  check_sizes(coeffs, geometry);
  check_s(s);
  if (k < i + 2 || k >= coeffs.plates()) {
    std::ostringstream os;
    os << "beyond-nearest factor needs i + 2 <= k < N, got i=" << i << " k=" << k
       << " N=" << coeffs.plates();
    throw DomainError(os.str());
  }
  return beyond_factor(coeffs, i, k, geometry.gaps(), s);
}

DeltaEvaluation delta_total_detailed(const NodeCoefficients& coeffs, const StackGeometry& geometry,
                                     double s) {
  check_sizes(coeffs, geometry);
  check_s(s);
  const std::size_t n_plates = coeffs.plates();
  const std::size_t n = n_plates - 1;
  const auto gaps = geometry.gaps();

  // factor(i, k) for every pair of plates i < k, row-major upper triangle.
  std::vector<double> factor(n_plates * n_plates, 0.0);
  for (std::size_t i = 0; i + 1 < n_plates; ++i) {
    factor[i * n_plates + i + 1] = delta_nn(coeffs.r[i], coeffs.r[i + 1], std::exp(-s * gaps[i]));
    for (std::size_t k = i + 2; k < n_plates; ++k)
      factor[i * n_plates + k] = beyond_factor(coeffs, i, k, gaps, s);
  }

  DeltaEvaluation eval{0.0, 0.0, 0, 0.0};
  auto add_term = [&](std::span<const int> parts) {
    double term = 1.0;
    std::size_t p = 0;
    const bool nearest_only = parts.size() == n;
    double term_minus_one = 0.0;
    for (int c : parts) {
      const std::size_t k = p + static_cast<std::size_t>(c);
      const double f = factor[p * n_plates + k];
      if (nearest_only) {
        // (1 + d)(1 + e) - 1 = d + e + d e with e = f - 1 = -r r y.
        const double e = -coeffs.r[p] * coeffs.r[k] * std::exp(-s * gaps[p]);
        term_minus_one = term_minus_one + e + term_minus_one * e;
      }
      term *= f;
      p = k;
    }
    eval.value += term;
    eval.minus_one += nearest_only ? term_minus_one : term;
    eval.magnitude += std::abs(term);
    ++eval.terms;
  };

  const int order = static_cast<int>(n);
  if (order <= kMaxListedComposition) {
    for (const auto& comp : cached_compositions(order)) add_term(comp.parts);
  } else {
    for_each_composition(order, add_term);
  }
  return eval;
}

double delta_total(const NodeCoefficients& coeffs, const StackGeometry& geometry, double s) {
  return delta_total_detailed(coeffs, geometry, s).value;
}

double delta_oracle(const NodeCoefficients& coeffs, const StackGeometry& geometry, double s) {
  check_sizes(coeffs, geometry);
  check_s(s);
  const std::size_t n_plates = coeffs.plates();
  const auto gaps = geometry.gaps();

  // Extended precision keeps the oracle accurate when a dressing denominator
  // is small.
  using real = long double;
  real dressed = coeffs.r[n_plates - 1];
  real delta = 1.0L;
  for (std::size_t k = n_plates - 1; k-- > 0;) {
    const real y = std::exp(-static_cast<real>(s) * static_cast<real>(gaps[k]));
    const real rk = coeffs.r[k];
    const real tk = coeffs.t_coef[k];
    const real factor = 1.0L - rk * dressed * y;
    delta *= factor;
    if (k == 0) break;
    if (factor == 0.0L) {
      std::ostringstream os;
      os << "dressed reflection diverges at plate " << k << " (s=" << s << ")";
      throw NumericalError(os.str());
    }
    dressed = rk + tk * tk * dressed * y / factor;
  }
  return static_cast<double>(delta);
}

double DeltaPolynomial::operator()(double x) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> DeltaPolynomial::operator()(std::complex<double> x) const noexcept {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

DeltaPolynomial delta_polynomial(const NodeCoefficients& coeffs, const StackGeometry& geometry) {
  check_sizes(coeffs, geometry);
  if (!geometry.is_uniform())
    throw DomainError("delta_polynomial requires unit gaps (single propagation variable)");
  const std::size_t n_plates = coeffs.plates();
  const int order = static_cast<int>(n_plates - 1);

  std::vector<double> total(n_plates, 0.0);
  std::vector<double> term;
  auto add_term = [&](std::span<const int> parts) {
    term.assign(1, 1.0);
    std::size_t p = 0;
    for (int c : parts) {
      const std::size_t k = p + static_cast<std::size_t>(c);
      std::vector<double> next(term.size() + static_cast<std::size_t>(c), 0.0);
      if (c == 1) {
        const double a = -coeffs.r[p] * coeffs.r[k];
        for (std::size_t j = 0; j < term.size(); ++j) {
          next[j] += term[j];
          next[j + 1] += a * term[j];
        }
      } else {
        double amp = -coeffs.r[p];
        for (std::size_t m = p + 1; m < k; ++m) amp *= coeffs.t_coef[m] * coeffs.t_coef[m];
        amp *= coeffs.r[k];
        for (std::size_t j = 0; j < term.size(); ++j) next[j + static_cast<std::size_t>(c)] += amp * term[j];
      }
      term = std::move(next);
      p = k;
    }
    for (std::size_t j = 0; j < term.size(); ++j) total[j] += term[j];
  };
  if (order <= kMaxListedComposition) {
    for (const auto& comp : cached_compositions(order)) add_term(comp.parts);
  } else {
    for_each_composition(order, add_term);
  }
  while (total.size() > 1 && total.back() == 0.0) total.pop_back();
  return DeltaPolynomial{std::move(total)};
}

std::vector<std::complex<double>> companion_reciprocal_roots(const DeltaPolynomial& poly) {
  const std::size_t d = poly.degree();
  if (poly.coeffs.empty() || poly.coeffs.front() != 1.0)
    throw DomainError("delta polynomial must have c_0 = 1");
  if (d == 0) return {};
  // z^d Delta(1/z) = z^d + c_1 z^{d-1} + ... + c_d is monic; its roots are the c_j.
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d),
                                                    static_cast<Eigen::Index>(d));
  for (std::size_t j = 0; j < d; ++j) companion(0, static_cast<Eigen::Index>(j)) = -poly.coeffs[j + 1];
  for (std::size_t j = 1; j < d; ++j)
    companion(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j - 1)) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw NumericalError("companion eigenvalue iteration failed");

  std::vector<std::complex<double>> roots;
  roots.reserve(d);
  for (Eigen::Index j = 0; j < solver.eigenvalues().size(); ++j) {
    std::complex<double> z = solver.eigenvalues()(j);
    std::complex<double> p = 1.0;
    std::complex<double> dp = 0.0;
    for (std::size_t k = 1; k <= d; ++k) {
      dp = dp * z + p;
      p = p * z + poly.coeffs[k];
    }
    if (std::abs(dp) > 0.0) {
      const std::complex<double> step = p / dp;
      if (std::isfinite(step.real()) && std::isfinite(step.imag())) z -= step;
    }
    roots.push_back(z);
  }
  return roots;
}

Eigen::MatrixXd round_trip_matrix(const NodeCoefficients& coeffs) {
  if (coeffs.r.size() != coeffs.t_coef.size() || coeffs.r.size() < 2)
    throw DomainError("round-trip matrix needs matching r/t lists for at least two plates");
  // Gap k (0-based, between plates k and k+1) carries R_k, the right-moving
  // amplitude arriving at plate k+1, and L_k, the left-moving amplitude
  // arriving at plate k:
  //   R_k = t_k R_{k-1} + r_k L_k,   L_k = r_{k+1} R_k + t_{k+1} L_{k+1}.
  // Every coupling flips the parity class {R_k : k even} u {L_k : k odd}, so
  // two passes map each class onto itself.
  const Eigen::Index n = static_cast<Eigen::Index>(coeffs.plates() - 1);
  auto cls = [](bool right, Eigen::Index k) { return right ? (k % 2 == 0) : (k % 2 == 1); };
  // Position of each unknown within its class.
  std::vector<Eigen::Index> pos_r(static_cast<std::size_t>(n)), pos_l(static_cast<std::size_t>(n));
  Eigen::Index count_a = 0, count_b = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    pos_r[static_cast<std::size_t>(k)] = cls(true, k) ? count_a++ : count_b++;
    pos_l[static_cast<std::size_t>(k)] = cls(false, k) ? count_a++ : count_b++;
  }
  Eigen::MatrixXd a_from_b = Eigen::MatrixXd::Zero(count_a, count_b);
  Eigen::MatrixXd b_from_a = Eigen::MatrixXd::Zero(count_b, count_a);
  auto couple = [&](bool to_right, Eigen::Index to_k, bool from_right, Eigen::Index from_k, double w) {
    const Eigen::Index row = to_right ? pos_r[static_cast<std::size_t>(to_k)] : pos_l[static_cast<std::size_t>(to_k)];
    const Eigen::Index col = from_right ? pos_r[static_cast<std::size_t>(from_k)] : pos_l[static_cast<std::size_t>(from_k)];
    if (cls(to_right, to_k)) a_from_b(row, col) = w;
    else b_from_a(row, col) = w;
  };
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    if (k > 0) couple(true, k, true, k - 1, coeffs.t_coef[uk]);
    couple(true, k, false, k, coeffs.r[uk]);
    couple(false, k, true, k, coeffs.r[uk + 1]);
    if (k + 1 < n) couple(false, k, false, k + 1, coeffs.t_coef[uk + 1]);
  }
  return a_from_b * b_from_a;
}

std::vector<std::complex<double>> round_trip_reciprocal_roots(const NodeCoefficients& coeffs) {
  const Eigen::MatrixXd m = round_trip_matrix(coeffs);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
  if (solver.info() != Eigen::Success) throw NumericalError("round-trip eigenvalue iteration failed");
  std::vector<std::complex<double>> out;
  out.reserve(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index j = 0; j < solver.eigenvalues().size(); ++j) out.push_back(solver.eigenvalues()(j));
  return out;
}

}  // namespace casimir
