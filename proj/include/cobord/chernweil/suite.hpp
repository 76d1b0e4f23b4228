#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cobord/algebra/graded_ring.hpp"

namespace cobord::chernweil {

// Layout and data of a generated identity suite. Cycles live on tori:
// A = T^base_dim, V = A x T^fiber_dim, and cycle total spaces V x T^cycle_fiber_dim.
struct DemoConfig {
  std::string demo = "t2-line";
  int n = 32;
  int interval_n = 32;
  std::uint64_t seed = 1;
  std::vector<algebra::Rational> phi{1, algebra::Rational(-1, 3), algebra::Rational(1, 5)};
  std::vector<int> charges{-3, -2, -1, 0, 1, 2, 3};
  double tol = 1e-6;
  double exact_tol = 1e-8;
  double period_tol = 1e-10;
  int base_dim = 1;
  int fiber_dim = 1;
  int cycle_fiber_dim = 1;
  int compose_first = 1;
  int compose_second = 1;

  void validate() const;
};

DemoConfig demo_config(std::string_view name);
std::vector<std::string> demo_names();
std::vector<std::string> suite_groups();  // chern, transgression, pushforward, axioms

struct IdentityResult {
  std::string group;
  std::string name;
  double residual = 0;
  double tolerance = 0;

  bool pass() const { return residual <= tolerance; }
};

struct SuiteReport {
  std::string demo;
  std::vector<IdentityResult> results;

  bool pass() const;
};

SuiteReport run_suite(const DemoConfig& config, const std::vector<std::string>& groups);

}  // namespace cobord::chernweil
