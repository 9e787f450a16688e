#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace casimir {

// Ordered list of positive integers. A composition of N-1 labels one product
// term of the multiple-scattering parameter of an N-plate stack: consecutive
// partial sums are the plates at which the term is split.
struct Composition {
  std::vector<int> parts;

  int sum() const noexcept;
  friend bool operator==(const Composition&, const Composition&) = default;
};

// Largest n for which compositions(n) materializes the full list.
inline constexpr int kMaxListedComposition = 20;
// Largest n accepted by for_each_composition.
inline constexpr int kMaxComposition = 62;

// All 2^(n-1) compositions of n in lexicographic order.
std::vector<Composition> compositions(int n);

// Cached read-only list for n <= kMaxListedComposition; safe to call from
// several threads.
const std::vector<Composition>& cached_compositions(int n);

// Streams compositions of n in the same order without materializing them.
void for_each_composition(int n, const std::function<void(std::span<const int>)>& visit);

// Dimensionless gap lengths g_i = l_{i,i+1} / a for a stack of gaps.size()+1
// plates.
class StackGeometry {
 public:
  explicit StackGeometry(std::vector<double> gaps);
  static StackGeometry uniform(std::size_t plates);

  std::size_t plates() const noexcept { return gaps_.size() + 1; }
  std::span<const double> gaps() const noexcept { return gaps_; }
  double gap(std::size_t i) const { return gaps_.at(i); }
  bool is_uniform() const noexcept;
  // True when every gap equals the same value (not necessarily 1).
  bool is_equally_spaced() const noexcept;
  StackGeometry reversed() const;

 private:
  std::vector<double> gaps_;
};

// Reflection and transmission amplitudes of every plate, one polarization,
// one angular node.
struct NodeCoefficients {
  std::vector<double> r;
  std::vector<double> t_coef;

  std::size_t plates() const noexcept { return r.size(); }
  NodeCoefficients reversed() const;
};

// Nearest-neighbour factor 1 - r_i r_j y, with y = exp(-s g) the round-trip
// attenuation across the gap.
constexpr double delta_nn(double r_i, double r_j, double y) noexcept { return 1.0 - r_i * r_j * y; }

// Beyond-nearest factor between plates i and k (0-based, k >= i + 2):
//   -r_i r_k prod_{m=i+1}^{k-1} t_m^2 exp(-s sum_{m=i}^{k-1} g_m).
double delta_beyond(const NodeCoefficients& coeffs, std::size_t i, std::size_t k,
                    const StackGeometry& geometry, double s);

struct DeltaEvaluation {
  double value = 1.0;
  double minus_one = 0.0;    // Delta - 1 without cancellation, for log1p
  std::size_t terms = 0;     // composition products summed
  double magnitude = 1.0;    // sum of |product|, for roundoff bounds
};

// Sum over compositions of N-1 of products of nearest / beyond-nearest
// factors, in the scaled variable s = 2 kappa a.
double delta_total(const NodeCoefficients& coeffs, const StackGeometry& geometry, double s);
DeltaEvaluation delta_total_detailed(const NodeCoefficients& coeffs, const StackGeometry& geometry,
                                     double s);

// Independent evaluation through the effective (dressed) reflection of each
// right sub-stack:
//   R_N = r_N,  R_k = r_k + t_k^2 R_{k+1} y_k / (1 - r_k R_{k+1} y_k),
//   Delta = prod_k (1 - r_k R_{k+1} y_k).
// Throws NumericalError when a dressing denominator vanishes.
double delta_oracle(const NodeCoefficients& coeffs, const StackGeometry& geometry, double s);

// Delta as a polynomial in x = exp(-s) for a stack with unit gaps.
struct DeltaPolynomial {
  std::vector<double> coeffs;  // c_0 .. c_d, c_0 == 1

  std::size_t degree() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  double operator()(double x) const noexcept;
  std::complex<double> operator()(std::complex<double> x) const noexcept;
};

DeltaPolynomial delta_polynomial(const NodeCoefficients& coeffs, const StackGeometry& geometry);

// Reciprocal roots c_j = 1/x_j of Delta, so that Delta(x) = prod_j (1 - c_j x).
// Computed as eigenvalues of the companion matrix of the monic reversed
// polynomial, then one Newton step per root.
std::vector<std::complex<double>> companion_reciprocal_roots(const DeltaPolynomial& poly);

// n x n matrix M (n = N - 1) with Delta(x) = det(I - x M) for unit gaps. It is
// the two-step block of the single-pass scattering matrix between gaps; its
// eigenvalues are the reciprocal roots of Delta.
Eigen::MatrixXd round_trip_matrix(const NodeCoefficients& coeffs);
std::vector<std::complex<double>> round_trip_reciprocal_roots(const NodeCoefficients& coeffs);

}  // namespace casimir
