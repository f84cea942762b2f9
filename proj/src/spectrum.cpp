#include "casimir4d/spectrum.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "numeric_utils.hpp"

namespace casimir4d {
namespace {

void require_tolerance(double tol) {
  if (!std::isfinite(tol) || !(tol > 0.0)) {
    throw DomainError("tolerance must be finite and > 0, got " + std::to_string(tol));
  }
}

// sum_{n>=m} n^2 q^n / (1 - q^n) bound, q = exp(-2 mu), written in terms of
// eps = 1 - q so that nothing cancels as mu -> 0:
//   sum_{n>=m} n^2 q^n = q^m [2 + (2m - 3) eps + (m - 1)^2 eps^2] / eps^3.
double weighted_tail(double mu, int n_max) {
  const double m = static_cast<double>(n_max) + 1.0;
  const double qm = std::exp(-2.0 * mu * m);
  if (qm == 0.0) return 0.0;
  const double eps = -std::expm1(-2.0 * mu);
  const double poly = 2.0 + (2.0 * m - 3.0) * eps + (m - 1.0) * (m - 1.0) * eps * eps;
  // |ln(1 - y)| <= y / (1 - y) and y = q^n <= q^m on the tail.
  return qm * poly / (eps * eps * eps) / (-std::expm1(-2.0 * mu * m));
}

template <class Weight, class Bound>
EnergyValue sum_series(const ConcentricPair& pair, double tol, int first, Weight weight, Bound bound) {
  require_tolerance(tol);
  const double mu = pair.mu();
  detail::CompensatedSum sum;
  for (int n = first; n <= kMaxSeriesTerms; ++n) {
    sum.add(weight(n) * detail::log1mexp(2.0 * mu * n));
    const double tail = bound(pair, n);
    const double value = sum.value();
    if (tail == 0.0 || tail <= tol * std::abs(value)) return EnergyValue{value, n, tail};
  }
  throw ConvergenceError("series for mu = " + std::to_string(mu) + " did not reach tol = " +
                         std::to_string(tol) + " within " + std::to_string(kMaxSeriesTerms) + " terms");
}

}  // namespace

double truncation_bound(const ConcentricPair& pair, int n_max) {
  if (n_max < 1) throw DomainError("n_max must be >= 1");
  return weighted_tail(pair.mu(), n_max);
}

double dirichlet_truncation_bound(const ConcentricPair& pair, int n_max) {
  if (n_max < 0) throw DomainError("n_max must be >= 0");
  return 0.5 * weighted_tail(pair.mu(), n_max);
}

EnergyValue em_energy_exact(const ConcentricPair& pair, double tol) {
  return sum_series(
      pair, tol, 2, [](int n) { return static_cast<double>(n) * n - 1.0; }, truncation_bound);
}

EnergyValue dirichlet_energy_exact(const ConcentricPair& pair, double tol) {
  return sum_series(
      pair, tol, 1, [](int n) { return 0.5 * static_cast<double>(n) * n; }, dirichlet_truncation_bound);
}

EnergyValue exact_energy(TheoryKind theory, const ConcentricPair& pair, double tol) {
  switch (theory) {
    case TheoryKind::ElectromagneticConductor:
      return em_energy_exact(pair, tol);
    case TheoryKind::DirichletScalar:
      return dirichlet_energy_exact(pair, tol);
    case TheoryKind::NeumannScalar:
      break;
  }
  throw NoExactSolution(theory);
}

EnergyValue exact_energy_truncated(TheoryKind theory, const ConcentricPair& pair, int n_max) {
  if (theory == TheoryKind::NeumannScalar) throw NoExactSolution(theory);
  const bool em = theory == TheoryKind::ElectromagneticConductor;
  if (n_max < (em ? 2 : 1)) throw DomainError("n_max too small for the requested series");
  detail::CompensatedSum sum;
  for (int n = em ? 2 : 1; n <= n_max; ++n) {
    const double weight = em ? static_cast<double>(n) * n - 1.0 : 0.5 * static_cast<double>(n) * n;
    sum.add(weight * detail::log1mexp(2.0 * pair.mu() * n));
  }
  const double tail = em ? truncation_bound(pair, n_max) : dirichlet_truncation_bound(pair, n_max);
  return EnergyValue{sum.value(), n_max, tail};
}

std::vector<ModeIndex> enumerate_shell(int n) {
  if (n < 2) throw DomainError("vector modes start at n = 2");
  std::vector<ModeIndex> modes;
  modes.reserve(2 * (static_cast<std::size_t>(n) * n - 1));
  for (int l = 1; l < n; ++l) {
    for (int m = -l; m <= l; ++m) {
      for (int p = 0; p < 2; ++p) modes.push_back({n, l, m, p});
    }
  }
  return modes;
}

ModeBasis make_shell_basis(int n) { return std::make_shared<const std::vector<ModeIndex>>(enumerate_shell(n)); }

DiagonalOperator::DiagonalOperator(ModeBasis basis, std::vector<double> entries)
    : basis_(std::move(basis)), entries_(std::move(entries)) {
  if (!basis_ || basis_->size() != entries_.size()) throw DomainError("diagonal operator: size mismatch");
}

DiagonalOperator DiagonalOperator::identity(const ModeBasis& basis, double factor) {
  return DiagonalOperator(basis, std::vector<double>(basis->size(), factor));
}

DiagonalOperator DiagonalOperator::operator*(const DiagonalOperator& rhs) const {
  if (rhs.basis_ != basis_) throw DomainError("diagonal operator: basis mismatch");
  std::vector<double> product(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) product[i] = entries_[i] * rhs.entries_[i];
  return DiagonalOperator(basis_, std::move(product));
}

double DiagonalOperator::log_det_one_minus() const {
  detail::CompensatedSum sum;
  for (double a : entries_) {
    if (!(a < 1.0)) throw DomainError("ln det(1 - A) undefined: entry >= 1");
    sum.add(std::log1p(-a));
  }
  return sum.value();
}

DiagonalOperator sphere_scattering_amplitude(const ModeBasis& basis) {
  return DiagonalOperator::identity(basis, -1.0);
}

DiagonalOperator concentric_translation(const ModeBasis& basis, double rho) {
  std::vector<double> entries;
  entries.reserve(basis->size());
  for (const auto& mode : *basis) entries.push_back(std::pow(rho, mode.n));
  return DiagonalOperator(basis, std::move(entries));
}

EnergyValue scattering_logdet_energy(const ConcentricPair& pair, int n_max) {
  if (n_max < 2) throw DomainError("scattering_logdet_energy needs n_max >= 2");
  detail::CompensatedSum log_det;
  for (int n = 2; n <= n_max; ++n) {
    const auto modes = make_shell_basis(n);
    const auto t1 = sphere_scattering_amplitude(modes);
    const auto t2 = sphere_scattering_amplitude(modes);
    const auto u12 = concentric_translation(modes, pair.rho());
    const auto u21 = concentric_translation(modes, pair.rho());
    log_det.add((u21 * t1 * u12 * t2).log_det_one_minus());
  }
  return EnergyValue{0.5 * log_det.value(), n_max, truncation_bound(pair, n_max)};
}

}  // namespace casimir4d
