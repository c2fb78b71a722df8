#pragma once

#include <map>
#include <vector>

#include "jackhyp/scalar.hpp"

namespace jackhyp {

/// Polynomial in a fixed number of variables with exact coefficients.
/// Terms are keyed by exponent vectors of length nvars(); zero coefficients
/// are never stored.
class MultivariatePoly {
 public:
  using Exponent = std::vector<int>;

  explicit MultivariatePoly(int nvars = 0) : nvars_(nvars) {}

  static MultivariatePoly constant(int nvars, const Scalar& c);
  static MultivariatePoly variable(int nvars, int j);
  static MultivariatePoly monomial(int nvars, const Exponent& e, const Scalar& c = 1);

  int nvars() const { return nvars_; }
  const std::map<Exponent, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  Scalar coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const Scalar& c);

  MultivariatePoly& operator+=(const MultivariatePoly& o);
  MultivariatePoly& operator-=(const MultivariatePoly& o);
  MultivariatePoly& operator*=(const Scalar& c);
  friend MultivariatePoly operator+(MultivariatePoly a, const MultivariatePoly& b) { return a += b; }
  friend MultivariatePoly operator-(MultivariatePoly a, const MultivariatePoly& b) { return a -= b; }
  friend MultivariatePoly operator*(MultivariatePoly a, const Scalar& c) { return a *= c; }
  friend MultivariatePoly operator*(const Scalar& c, MultivariatePoly a) { return a *= c; }
  friend MultivariatePoly operator*(const MultivariatePoly& a, const MultivariatePoly& b);
  friend bool operator==(const MultivariatePoly&, const MultivariatePoly&) = default;

  MultivariatePoly derivative(int j) const;

  /// p(y) with y_j = sign[j] * x[perm[j]]: the action of a signed permutation.
  MultivariatePoly signed_permute(const std::vector<int>& perm, const std::vector<int>& sign) const;

  /// Exact quotient by the linear form cj*x_j + ck*x_k (k < 0 means the form
  /// is cj*x_j alone). Throws std::logic_error when the remainder is nonzero.
  MultivariatePoly divide_linear(int j, const Scalar& cj, int k, const Scalar& ck) const;

  Scalar evaluate(const std::vector<Scalar>& x) const;
  /// Constant term, i.e. the value at the origin.
  Scalar at_origin() const { return coeff(Exponent(static_cast<std::size_t>(nvars_), 0)); }

 private:
  int nvars_;
  std::map<Exponent, Scalar> terms_;
};

}  // namespace jackhyp
