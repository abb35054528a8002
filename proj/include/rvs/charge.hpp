#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "rvs/flow.hpp"

namespace rvs {

inline constexpr double kZeroTol = 1e-9;
inline constexpr double kNonzeroTol = 1e-6;

/// Scales theta onto Q = 1 and into the component with nonnegative
/// coordinate sum. Throws NotInCone when Q(theta) <= tol.
ThetaVec normalize_to_level(const RootSystem& rs, const ThetaVec& theta, double tol = kZeroTol);

/// Interior points of fA on the level: coordinates uniform in [0.1, 1]
/// before normalisation.
std::vector<ThetaVec> fundamental_sample(const RootSystem& rs, std::size_t k, std::uint64_t seed);
std::vector<ThetaVec> alcove_sample(const RootSystem& rs, const WeylElt& w, std::size_t k, std::uint64_t seed);

/// Q = lambda <theta, delta>^2 on affine graphs; returns lambda.
std::int64_t affine_level_constant(const RootSystem& rs);

struct AlcovePositivity {
  std::size_t alcove;
  std::size_t samples;
  double min_pairing;
  std::size_t worst_class;
  bool pass;
};

struct PositivityReport {
  std::vector<AlcovePositivity> alcoves;
  double min_pairing = 0.0;
  std::optional<std::size_t> worst_alcove;
  bool pass = true;
};

using DescriptorFn = std::function<std::vector<RootVec>(std::size_t alcove)>;

/// Pairs the samples of every alcove with its heart classes. Throws
/// InvalidFlow unless the flow validates.
PositivityReport positivity_check(const FlowAssignment& flow, std::size_t k, std::uint64_t seed,
                                  double tol = kZeroTol);
PositivityReport positivity_check(const Region& region, const DescriptorFn& descriptor, std::size_t k,
                                  std::uint64_t seed, double tol = kZeroTol);

struct WallVanishingReport {
  std::size_t alcove;
  int gen;
  RootVec root;
  std::size_t samples;
  double max_residual;
  double min_other;
  bool pass;
};

/// Projects alcove samples onto the wall of `alcove` across `gen` and checks
/// that only the wall class vanishes there.
WallVanishingReport wall_vanishing_check(const Region& region, std::size_t alcove, int gen, std::size_t k,
                                         std::uint64_t seed, double tol = kZeroTol,
                                         double nonzero_tol = kNonzeroTol);

/// (m + sqrt(m^2 - 4)) / 2 for real m >= 2.
double kronecker_constant(double m);

/// Closed-form rank-2 charge on the level of K_m; (1 - x, x) at m = 2.
std::pair<double, double> rank2_charge(double m, double x);

/// Z1^2 + m Z1 Z2 + Z2^2 - 1.
double rank2_residual(double m, double x);

/// Hyperboloid coordinates for n magnitudes and n - 1 angles; the last
/// coordinate is the timelike one.
std::vector<double> hyperboloid_param(const std::vector<double>& lambdas, const std::vector<double>& sigma);

/// -l_n^2 x_n^2 + sum_{v<n} l_v^2 x_v^2 + 1.
double hyperboloid_residual(const std::vector<double>& lambdas, const std::vector<double>& x);

struct EquivarianceReport {
  std::size_t trials;
  double max_pairing_error;
  double max_level_error;
  bool pass;
};

/// Random (w, theta, v): pairing invariance and level preservation.
EquivarianceReport charge_equivariance_check(const RootSystem& rs, std::size_t trials, std::uint64_t seed,
                                             double tol = 1e-10);

struct SymmetricEigen {
  std::vector<double> values;
  /// Column k is the eigenvector of values[k].
  std::vector<std::vector<double>> vectors;
};

/// Cyclic Jacobi rotations. Throws DiagonalizationFailed without convergence.
SymmetricEigen jacobi_eigen(const std::vector<std::vector<double>>& a, double tol = 1e-12);

}  // namespace rvs
