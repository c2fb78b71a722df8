#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace jackhyp::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20240607;
  /// Restrict to these criterion ids (empty runs all ten).
  std::vector<int> only;
};

CriterionResult criterion_jack_oracle();
CriterionResult criterion_normalizations();
CriterionResult criterion_pochhammer_splitting(std::uint64_t seed);
CriterionResult criterion_dunkl();
CriterionResult criterion_dimension();
CriterionResult criterion_empirical();
CriterionResult criterion_quadrature();
CriterionResult criterion_coefficient_identity();
CriterionResult criterion_branching_bounds(std::uint64_t seed);
CriterionResult criterion_certificates();

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

/// "PASS  3  pochhammer-splitting  0.01s  <detail>"
std::string format_line(const CriterionResult& r);

}  // namespace jackhyp::verify
