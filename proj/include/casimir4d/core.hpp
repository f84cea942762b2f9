#pragma once

#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace casimir4d {

inline constexpr double kPi = std::numbers::pi;
/// Apery's constant zeta(3).
inline constexpr double kZeta3 = 1.2020569031595942853997381615114499907649862923405;

/// Field theory and boundary condition on both surfaces.
enum class TheoryKind { ElectromagneticConductor, DirichletScalar, NeumannScalar };

std::string_view to_string(TheoryKind theory);
/// Accepts "em", "dirichlet", "neumann" (and the full enumerator names).
TheoryKind theory_from_string(std::string_view name);

/// An energy in units of k_B T.
///
/// For series results `n_max` is the last summed index and `tail_bound` bounds
/// the dropped remainder; closed-form approximations carry n_max = 0 and a
/// zero tail.
struct EnergyValue {
  double value = 0.0;
  int n_max = 0;
  double tail_bound = 0.0;
};

/// Invalid argument or configuration outside the supported domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact-series request for a theory without a known exact solution.
class NoExactSolution : public DomainError {
 public:
  explicit NoExactSolution(TheoryKind theory);
};

/// Input at the pole of the conformal map or mapped to infinity.
class SingularPointError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Series or quadrature that failed to reach the requested accuracy.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Least-squares problem that is rank deficient or too ill-conditioned.
class IllConditionedFit : public std::runtime_error {
 public:
  IllConditionedFit(const std::string& what, double condition)
      : std::runtime_error(what), condition_(condition) {}
  double condition() const noexcept { return condition_; }

 private:
  double condition_;
};

}  // namespace casimir4d
