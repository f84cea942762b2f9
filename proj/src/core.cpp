#include "casimir4d/core.hpp"

#include <string>

namespace casimir4d {

std::string_view to_string(TheoryKind theory) {
  switch (theory) {
    case TheoryKind::ElectromagneticConductor:
      return "em";
    case TheoryKind::DirichletScalar:
      return "dirichlet";
    case TheoryKind::NeumannScalar:
      return "neumann";
  }
  return "unknown";
}

TheoryKind theory_from_string(std::string_view name) {
  if (name == "em" || name == "ElectromagneticConductor") return TheoryKind::ElectromagneticConductor;
  if (name == "dirichlet" || name == "DirichletScalar") return TheoryKind::DirichletScalar;
  if (name == "neumann" || name == "NeumannScalar") return TheoryKind::NeumannScalar;
  throw DomainError("unknown theory '" + std::string(name) + "' (expected em, dirichlet or neumann)");
}

NoExactSolution::NoExactSolution(TheoryKind theory)
    : DomainError("no exact solution is known for theory '" + std::string(to_string(theory)) + "'") {}

}  // namespace casimir4d
