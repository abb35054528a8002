#include "rvs/charge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace rvs {

ThetaVec normalize_to_level(const RootSystem& rs, const ThetaVec& theta, double tol) {
  const double q = rs.tits_cone_quadratic(theta);
  if (!(q > tol)) throw Error(Errc::NotInCone, "Q(theta) = " + std::to_string(q) + " is not positive");
  const double sum = std::accumulate(theta.coords.begin(), theta.coords.end(), 0.0);
  const double scale = (sum < 0 ? -1.0 : 1.0) / std::sqrt(q);
  ThetaVec out = theta;
  for (auto& x : out.coords) x *= scale;
  return out;
}

std::vector<ThetaVec> fundamental_sample(const RootSystem& rs, std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.1, 1.0);
  std::vector<ThetaVec> out;
  std::size_t attempts = 0;
  while (out.size() < k) {
    if (++attempts > 1000 * (k + 1)) throw Error(Errc::NotInCone, "fundamental chamber misses the level");
    ThetaVec t{std::vector<double>(rs.rank())};
    for (auto& x : t.coords) x = coord(rng);
    if (rs.tits_cone_quadratic(t) <= kZeroTol) continue;
    out.push_back(normalize_to_level(rs, t));
  }
  return out;
}

std::vector<ThetaVec> alcove_sample(const RootSystem& rs, const WeylElt& w, std::size_t k, std::uint64_t seed) {
  auto out = fundamental_sample(rs, k, seed);
  for (auto& t : out) t = dual_apply(w, t);
  return out;
}

std::int64_t affine_level_constant(const RootSystem& rs) {
  const RootVec delta = rs.minimal_imaginary_root();
  const IntMatrix& adj = rs.adjugate_form();
  const std::int64_t d0 = delta.coords[0];
  const std::int64_t lambda = adj(0, 0) / (d0 * d0);
  for (std::size_t i = 0; i < rs.rank(); ++i)
    for (std::size_t j = 0; j < rs.rank(); ++j)
      if (adj(i, j) != lambda * delta.coords[i] * delta.coords[j])
        throw Error(Errc::WrongType, "adjugate is not a multiple of delta delta^T");
  return lambda;
}

PositivityReport positivity_check(const Region& region, const DescriptorFn& descriptor, std::size_t k,
                                  std::uint64_t seed, double tol) {
  const RootSystem& rs = region.root_system();
  const auto base = fundamental_sample(rs, k, seed);
  PositivityReport report;
  report.min_pairing = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < region.size(); ++a) {
    const auto classes = descriptor(a);
    AlcovePositivity ap{a, base.size(), std::numeric_limits<double>::infinity(), 0, true};
    for (const auto& t0 : base) {
      const ThetaVec t = dual_apply(region.alcove(a), t0);
      for (std::size_t c = 0; c < classes.size(); ++c) {
        const double p = pairing(t, classes[c]);
        if (p < ap.min_pairing) {
          ap.min_pairing = p;
          ap.worst_class = c;
        }
      }
    }
    ap.pass = ap.min_pairing > tol;
    if (ap.min_pairing < report.min_pairing) {
      report.min_pairing = ap.min_pairing;
      report.worst_alcove = a;
    }
    report.pass = report.pass && ap.pass;
    report.alcoves.push_back(ap);
  }
  return report;
}

PositivityReport positivity_check(const FlowAssignment& flow, std::size_t k, std::uint64_t seed, double tol) {
  if (!validate_flow(flow).valid) throw Error(Errc::InvalidFlow, "positivity needs a valid flow");
  return positivity_check(
      flow.region(), [&](std::size_t a) { return heart_descriptor(flow, a); }, k, seed, tol);
}

WallVanishingReport wall_vanishing_check(const Region& region, std::size_t alcove, int gen, std::size_t k,
                                         std::uint64_t seed, double tol, double nonzero_tol) {
  const RootSystem& rs = region.root_system();
  const WeylElt& w = region.alcove(alcove);
  const RootVec beta = w.image_of_simple(gen);
  ThetaVec e{std::vector<double>(rs.rank(), 0.0)};
  e.coords[static_cast<std::size_t>(gen)] = 1.0;
  const ThetaVec nu = dual_apply(w, e);
  const double nu_beta = pairing(nu, beta);

  std::vector<RootVec> others;
  for (const auto& c : heart_descriptor(rs, w))
    if (c != beta && c != -beta) others.push_back(c);
  for (const auto& c : heart_descriptor(rs, rs.right_multiply(w, gen)))
    if (c != beta && c != -beta) others.push_back(c);

  WallVanishingReport r{alcove, gen, wall_root(rs, w, gen), 0, 0.0, std::numeric_limits<double>::infinity(), true};
  for (ThetaVec t : alcove_sample(rs, w, k, seed)) {
    const double shift = pairing(t, beta) / nu_beta;
    for (std::size_t c = 0; c < t.coords.size(); ++c) t.coords[c] -= shift * nu.coords[c];
    if (rs.tits_cone_quadratic(t) <= tol) throw Error(Errc::ProjectionFailed, "projected point left the cone");
    t = normalize_to_level(rs, t, tol);
    ++r.samples;
    r.max_residual = std::max(r.max_residual, std::abs(pairing(t, beta)));
    for (const auto& c : others) r.min_other = std::min(r.min_other, std::abs(pairing(t, c)));
  }
  r.pass = r.max_residual < tol && (others.empty() || r.min_other > nonzero_tol);
  return r;
}

double kronecker_constant(double m) {
  if (!(m >= 2.0)) throw Error(Errc::BadParams, "Kronecker constant needs m >= 2");
  return (m + std::sqrt(m * m - 4.0)) / 2.0;
}

std::pair<double, double> rank2_charge(double m, double x) {
  if (!(m >= 2.0)) throw Error(Errc::BadParams, "rank-2 charge needs m >= 2");
  if (m == 2.0) return {1.0 - x, x};
  const double k = kronecker_constant(m);
  const double d = k - 1.0 / k;
  return {(std::pow(k, 1.0 - x) - std::pow(k, x - 1.0)) / d, (std::pow(k, x) - std::pow(k, -x)) / d};
}

double rank2_residual(double m, double x) {
  const auto [z1, z2] = rank2_charge(m, x);
  return z1 * z1 + m * z1 * z2 + z2 * z2 - 1.0;
}

std::vector<double> hyperboloid_param(const std::vector<double>& lambdas, const std::vector<double>& sigma) {
  const std::size_t n = lambdas.size();
  if (n == 0 || sigma.size() + 1 != n) throw Error(Errc::BadParams, "need n magnitudes and n - 1 angles");
  for (double l : lambdas)
    if (l == 0.0) throw Error(Errc::ZeroEigenvalue, "hyperboloid parametrisation needs nonzero eigenvalues");
  // sigma[s - 1] holds sigma_s; sinh(sigma_0) is taken as 1.
  std::vector<double> x(n);
  double prod = 1.0;
  for (std::size_t v = 1; v <= n; ++v) {
    const std::size_t s = n - v;
    const double sh = s == 0 ? 1.0 : std::sinh(sigma[s - 1]);
    x[v - 1] = sh * prod / lambdas[v - 1];
    if (s > 0) prod *= std::cosh(sigma[s - 1]);
  }
  return x;
}

double hyperboloid_residual(const std::vector<double>& lambdas, const std::vector<double>& x) {
  const std::size_t n = lambdas.size();
  double s = 1.0 - lambdas[n - 1] * lambdas[n - 1] * x[n - 1] * x[n - 1];
  for (std::size_t v = 0; v + 1 < n; ++v) s += lambdas[v] * lambdas[v] * x[v] * x[v];
  return s;
}

EquivarianceReport charge_equivariance_check(const RootSystem& rs, std::size_t trials, std::uint64_t seed,
                                             double tol) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(0, 8);
  std::uniform_int_distribution<int> gen(0, static_cast<int>(rs.rank()) - 1);
  std::uniform_int_distribution<std::int64_t> coeff(-5, 5);
  const auto thetas = fundamental_sample(rs, trials, seed ^ 0x9e3779b97f4a7c15ULL);
  EquivarianceReport r{trials, 0.0, 0.0, true};
  for (std::size_t t = 0; t < trials; ++t) {
    Word word(static_cast<std::size_t>(len(rng)));
    for (auto& g : word) g = gen(rng);
    const WeylElt w = rs.element(word);
    RootVec v{std::vector<std::int64_t>(rs.rank())};
    for (auto& c : v.coords) c = coeff(rng);
    const ThetaVec wt = dual_apply(w, thetas[t]);
    const double lhs = pairing(wt, apply(w, v));
    const double rhs = pairing(thetas[t], v);
    r.max_pairing_error = std::max(r.max_pairing_error, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    r.max_level_error = std::max(r.max_level_error, std::abs(rs.tits_cone_quadratic(wt) - 1.0));
  }
  r.pass = r.max_pairing_error <= tol && r.max_level_error <= tol;
  return r;
}

SymmetricEigen jacobi_eigen(const std::vector<std::vector<double>>& input, double tol) {
  const std::size_t n = input.size();
  auto a = input;
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;
  double scale = 0.0;
  for (const auto& row : a)
    for (double x : row) scale = std::max(scale, std::abs(x));
  const double thresh = tol * std::max(scale, 1.0);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a[p][q]));
    if (off <= thresh) {
      SymmetricEigen out;
      for (std::size_t i = 0; i < n; ++i) out.values.push_back(a[i][i]);
      out.vectors = v;
      return out;
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) <= thresh * 1e-3) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  throw Error(Errc::DiagonalizationFailed, "Jacobi iteration did not converge");
}

}  // namespace rvs
