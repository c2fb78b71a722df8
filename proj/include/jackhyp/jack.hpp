#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "jackhyp/domains.hpp"
#include "jackhyp/partition.hpp"
#include "jackhyp/polynomial.hpp"
#include "jackhyp/scalar.hpp"

namespace jackhyp {

/// Homogeneous symmetric polynomial in `rank` variables, stored in the
/// monomial symmetric basis m_mu. Keys iterate dominating-first
/// (reverse-lexicographic).
class SymmetricPoly {
 public:
  using Table = std::map<Partition, Scalar, std::greater<>>;

  SymmetricPoly(int rank, int degree) : rank_(rank), degree_(degree) {}

  int rank() const { return rank_; }
  int degree() const { return degree_; }
  const Table& coeffs() const { return coeffs_; }
  Scalar coeff(const Partition& mu) const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Sets the coefficient of m_mu; a zero value removes the entry.
  void set(const Partition& mu, const Scalar& c);

  Scalar evaluate(const std::vector<Scalar>& x) const;
  double evaluate(const std::vector<double>& x) const;
  long double evaluate(const std::vector<long double>& x) const;
  /// Value at (1,...,1): sum of coefficient times orbit size.
  Scalar at_ones() const;

  MultivariatePoly expand() const;

  friend bool operator==(const SymmetricPoly&, const SymmetricPoly&) = default;

 private:
  int rank_;
  int degree_;
  Table coeffs_;
};

/// m_mu(x): sum of x^e over the distinct rearrangements e of mu padded to x.size().
template <class T>
T monomial_symmetric(const Partition& mu, const std::vector<T>& x) {
  std::vector<int> e = mu.padded(static_cast<int>(x.size()));
  std::sort(e.begin(), e.end());
  T total = 0;
  do {
    T term = 1;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term *= x[i];
    total += term;
  } while (std::next_permutation(e.begin(), e.end()));
  return total;
}

/// J_m^{(alpha)} in r variables with the standard (Macdonald J) normalization.
/// Results are memoized by (m, alpha, r); the cache is safe across threads.
SymmetricPoly jack_J(const Partition& m, const Scalar& alpha, int r);

/// Same computation without touching the cache.
SymmetricPoly jack_J_uncached(const Partition& m, const Scalar& alpha, int r);

/// Eigenvalue of the Laplace-Beltrami operator
///   (alpha/2) sum x_i^2 d_i^2 + sum_{i != j} x_i^2/(x_i - x_j) d_i
/// on J_m in r variables: (alpha/2) sum_i m_i (m_i - 1 - (2/alpha)(i-1)) + (r-1)|m|.
Scalar jack_eigenvalue(const Partition& m, const Scalar& alpha, int r);

/// All Jack polynomials of one weight in r variables together with the
/// normalized coefficients of Omega_kappa = J_kappa / J_kappa(1^r).
struct JackShell {
  int weight = 0;
  int rank = 0;
  Scalar alpha;
  std::vector<Partition> partitions;  ///< reverse-lexicographic
  std::vector<SymmetricPoly> jack;    ///< jack[i] = J_{partitions[i]}
  /// omega[i][j] = coefficient of m_{partitions[j]} in Omega_{partitions[i]}.
  std::vector<std::vector<long double>> omega;
};

/// Builds (or fetches from the shell cache) the shell of weight n. The
/// Jack polynomials of a shell are computed in parallel when OpenMP is on.
std::shared_ptr<const JackShell> jack_shell(int n, int r, const Scalar& alpha);

void clear_jack_caches();

/// J_m(1^r) = (r a/2)_{m, a/2} (a/2)^{-|m|} for alpha = 2/a.
Scalar jack_norm_one(const Partition& m, int r, const Scalar& a);

/// Omega_m(t) = J_m^{(2/a)}(t) / J_m^{(2/a)}(1^r), r = t.size().
Scalar omega_eval(const Partition& m, const Scalar& a, const std::vector<Scalar>& t);
double omega_eval(const Partition& m, const Scalar& a, const std::vector<double>& t);
long double omega_eval(const Partition& m, const Scalar& a, const std::vector<long double>& t);

/// d(m) = (d/r')_m pi_m / (q')_m with the complex-domain data of dom. Only
/// BCxBC descriptors are accepted. Throws unless the value is a positive
/// integer.
Scalar dim_component(const DomainDescriptor& dom, const Partition& m);

}  // namespace jackhyp
