#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jackhyp/partition.hpp"
#include "jackhyp/scalar.hpp"

namespace jackhyp {

/// Parameters of kFl^{(2/a)}(alpha; beta; .) in rank r.
///
/// Construction checks that no denominator Pochhammer (beta_p)_{m,a/2} can
/// vanish on a partition whose numerator is nonzero.
struct SeriesParams {
  std::vector<Scalar> alpha;
  std::vector<Scalar> beta;
  int rank = 1;
  Scalar a = 2;

  SeriesParams() = default;
  SeriesParams(std::vector<Scalar> alpha, std::vector<Scalar> beta, int rank, Scalar a);

  void validate() const;
  int k() const { return static_cast<int>(alpha.size()); }
  int l() const { return static_cast<int>(beta.size()); }
};

/// m_row <= level is forced by a numerator parameter alpha_p with
/// alpha_p - (a/2)(row-1) = -level.
struct RowBound {
  int row;  ///< 1-based
  int level;
};

/// Numerator-induced bounds, tightest per row, sorted by row.
std::vector<RowBound> numerator_bounds(const SeriesParams& p);

/// True when a numerator bounds the first row, so only finitely many
/// partitions contribute.
bool is_finite_series(const SeriesParams& p);

/// epsilon = sum(alpha) - sum(beta) + (a/2)(r-1). The balanced series
/// converges at 1^r exactly when epsilon < 0.
Scalar balance_excess(const SeriesParams& p);

/// Convergence of the series at (1,...,1):
///   finite series            -> true
///   k <= l                   -> true
///   k == l+1                 -> balance_excess < 0
///   k > l+1                  -> false
bool convergent_at_one(const SeriesParams& p);

/// prod_p (alpha_p)_m / prod_p (beta_p)_m * pi_m / (q)_m, all Pochhammers
/// with step a/2. Exact.
Scalar series_coefficient(const SeriesParams& p, const Partition& m);

/// Same coefficient in floating point, accumulated row by row as a product
/// of O(1) ratios so that large degrees do not overflow.
double series_coefficient_real(const SeriesParams& p, const Partition& m, double tag);
long double series_coefficient_real(const SeriesParams& p, const Partition& m, long double tag);

enum class Verdict { ConvergedByCriterion, TruncatedSeries, DivergentByCriterion };
std::string to_string(Verdict v);

enum class Precision { Double, Extended };
std::string to_string(Precision p);
Precision parse_precision(const std::string& s);

enum class Exec { Serial, Parallel };

struct EvalOptions {
  Precision precision = Precision::Double;
  Exec exec = Exec::Parallel;
  /// Stop once a whole shell has sum |term| below this (0 disables).
  double tail_tol = 0.0;
};

struct SeriesResult {
  bool has_value = false;
  long double value = 0;
  int truncation_degree = 0;          ///< weight of the last shell summed
  long double last_shell_magnitude = 0;  ///< sum of |term| over that shell
  Verdict verdict = Verdict::ConvergedByCriterion;
  bool tolerance_met = false;
  Precision precision = Precision::Double;
  std::vector<long double> shell_sums;  ///< signed sum of every shell
  std::vector<long double> shell_magnitudes;
};

/// Series with Omega_m evaluated at (t_1^2, ..., t_r^2); t in [0,1)^r.
SeriesResult hyper_eval(const SeriesParams& p, const std::vector<long double>& t, int max_degree,
                        const EvalOptions& opts = {});

/// Series with Omega_m evaluated directly at x, |x_i| < 1 (no squaring).
SeriesResult hyper_series(const SeriesParams& p, const std::vector<long double>& x, int max_degree,
                          const EvalOptions& opts = {});

/// Coefficient sum at 1^r (Omega_m(1^r) = 1). Refuses, with verdict
/// DivergentByCriterion and no value, when convergent_at_one fails.
SeriesResult hyper_at_one(const SeriesParams& p, int max_degree, double tail_tol, const EvalOptions& opts = {});

/// Per-partition terms of one weight shell, in enumerate_partitions order.
/// `x` empty means the all-ones point. Serial and parallel kernels produce
/// identical vectors.
std::vector<long double> shell_terms(const SeriesParams& p, int n, const std::vector<long double>& x, Precision prec,
                                     Exec exec);

/// Deterministic reduction used for every shell: left-to-right sum in
/// partition order, carried out in the working precision.
long double reduce_shell(const std::vector<long double>& terms, Precision prec);

}  // namespace jackhyp
