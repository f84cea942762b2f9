#pragma once

#include <memory>
#include <vector>

#include "casimir4d/core.hpp"
#include "casimir4d/geometry.hpp"

namespace casimir4d {

inline constexpr double kDefaultTolerance = 1e-12;
inline constexpr int kMaxSeriesTerms = 50'000'000;

/// Exact classical energy of two perfectly conducting concentric
/// three-spheres,  F / k_B T = sum_{n>=2} (n^2 - 1) ln(1 - rho^{2n}).
///
/// Terms are added in ascending n with compensated summation until the
/// certified remainder (see truncation_bound) drops below tol * |value|.
/// Throws ConvergenceError if that does not happen within kMaxSeriesTerms.
EnergyValue em_energy_exact(const ConcentricPair& pair, double tol = kDefaultTolerance);

/// Exact energy of a Dirichlet scalar,  F / k_B T = (1/2) sum_{n>=1} n^2 ln(1 - rho^{2n}).
EnergyValue dirichlet_energy_exact(const ConcentricPair& pair, double tol = kDefaultTolerance);

/// Dispatches on theory; NeumannScalar throws NoExactSolution.
EnergyValue exact_energy(TheoryKind theory, const ConcentricPair& pair, double tol = kDefaultTolerance);

/// The series of `theory` summed through exactly n_max, with the certified
/// remainder as tail_bound. NeumannScalar throws NoExactSolution.
EnergyValue exact_energy_truncated(TheoryKind theory, const ConcentricPair& pair, int n_max);

/// Upper bound on |sum_{n>n_max} (n^2 - 1) ln(1 - rho^{2n})|.
double truncation_bound(const ConcentricPair& pair, int n_max);
/// Upper bound on the dropped remainder of the Dirichlet series.
double dirichlet_truncation_bound(const ConcentricPair& pair, int n_max);

/// Label of a transverse vector hyperspherical mode on the three-sphere:
/// n >= 2, 1 <= l <= n - 1, -l <= m <= l, parity p in {0, 1}. There are
/// 2 (n^2 - 1) labels per n.
struct ModeIndex {
  int n;
  int l;
  int m;
  int p;
};

/// All mode labels of shell n, in lexicographic (l, m, p) order.
std::vector<ModeIndex> enumerate_shell(int n);

using ModeBasis = std::shared_ptr<const std::vector<ModeIndex>>;
ModeBasis make_shell_basis(int n);

/// An operator that is diagonal in an enumerated mode basis.
class DiagonalOperator {
 public:
  DiagonalOperator(ModeBasis basis, std::vector<double> entries);

  static DiagonalOperator identity(const ModeBasis& basis, double factor = 1.0);

  const ModeBasis& basis() const noexcept { return basis_; }
  const std::vector<double>& entries() const noexcept { return entries_; }

  /// Operator product; both factors must act on the same basis object.
  DiagonalOperator operator*(const DiagonalOperator& rhs) const;

  /// ln det(1 - A), evaluated entrywise with compensated summation. Throws
  /// DomainError if some entry is >= 1 (determinant not positive).
  double log_det_one_minus() const;

 private:
  ModeBasis basis_;
  std::vector<double> entries_;
};

/// Scattering amplitude of a perfectly conducting three-sphere: -identity.
DiagonalOperator sphere_scattering_amplitude(const ModeBasis& basis);

/// Translation operator between the concentric spheres: (R-/R+)^n on the diagonal.
DiagonalOperator concentric_translation(const ModeBasis& basis, double rho);

/// (1/2) ln det[1 - U21 T1 U12 T2] over all modes with 2 <= n <= n_max,
/// assembled shell by shell from the operators above. This does not share
/// code with em_energy_exact and serves as an independent check on it.
/// The tail_bound of the result is truncation_bound(pair, n_max).
EnergyValue scattering_logdet_energy(const ConcentricPair& pair, int n_max);

}  // namespace casimir4d
