#pragma once

#include <string>
#include <vector>

#include "jackhyp/hypergeo.hpp"

namespace jackhyp::verify {

/// What the partial sums at 1^r look like, judged from the shells alone.
struct EmpiricalBehavior {
  bool bounded = false;
  /// Fitted exponent s in |shell_n| ~ C n^s (1 + d/n) over the upper half
  /// of the degrees. Zero shells (finite series) report -inf.
  double exponent = 0;
  long double last_partial_sum = 0;
};

/// Sums whole shells at 1^r up to `max_degree` without consulting the
/// convergence predicate. Shells decaying like n^s with s < -1 - margin
/// count as bounded; anything slower (including the logarithmic growth at
/// s = -1) counts as growing.
EmpiricalBehavior empirical_behavior(const SeriesParams& p, int max_degree, double margin = 0.25);

struct EmpiricalCase {
  std::string name;
  SeriesParams params;
};

/// Twenty parameter sets on both sides of the convergence boundary,
/// ranks 1 to 3.
std::vector<EmpiricalCase> curated_boundary_cases();

}  // namespace jackhyp::verify
