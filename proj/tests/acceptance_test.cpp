// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
#include <cstdio>
#include <iostream>

#include "casimir4d/validation.hpp"

int main() {
  const auto report = casimir4d::run_validation();
  std::cout << report.summary();
  std::printf("acceptance suite: %zu criteria, wall time %.2f s, %s\n", report.criteria.size(), report.wall_seconds,
              report.all_passed() ? "ALL PASS" : "FAILURES");
  return report.all_passed() ? 0 : 1;
}
