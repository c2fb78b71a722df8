#pragma once

#include <string>
#include <vector>

#include "jackhyp/domains.hpp"
#include "jackhyp/invariant_norms.hpp"
#include "jackhyp/polynomial.hpp"

namespace jackhyp {

/// Restricted root data in coordinates x on the Cartan subspace.
/// Roots and their coordinate forms:
///   beta_j        -> 2 x_j          multiplicity iota-1
///   (beta_j+beta_k)/2 -> x_j + x_k  multiplicity a
///   (beta_j-beta_k)/2 -> x_j - x_k  multiplicity a
///   beta_j/2      -> x_j            multiplicity 2b
/// With `differences_only` set, only the (beta_j-beta_k)/2 roots act (the
/// A_{r-1} system of a symmetric cone).
struct RootSystemData {
  int rank = 1;
  Scalar iota_minus_1 = 0;
  Scalar a = 0;
  Scalar two_b = 0;
  bool differences_only = false;

  static RootSystemData from(const RealQuadruple& q);
  static RootSystemData for_domain(const DomainDescriptor& dom);
};

/// D_j p = d_j p + (1/2) sum_{gamma > 0} m_gamma gamma(xi_j) (p - p o r_gamma) / gamma(x).
/// j is 1-based. Throws std::logic_error on a non-exact difference quotient.
MultivariatePoly dunkl_apply(const RootSystemData& rs, int j, const MultivariatePoly& p);

/// p(D) q evaluated at 0, with D replaced by D/2 when `half` is set. For
/// real coefficients p* = p, so norm_B(p) = pairing_B(p, p).
Scalar pairing_B(const RootSystemData& rs, const MultivariatePoly& p, const MultivariatePoly& q, bool half);
Scalar norm_B(const RootSystemData& rs, const MultivariatePoly& p, bool half);

/// The restriction of p_n to x_1 e_1 + ... + x_r e_r:
///   A:       Omega_m(x)
///   B, BC:   Omega_m(x^2)
///   D:       Omega_m(x^2), times x_1...x_r for odd parity
MultivariatePoly restricted_invariant(const DomainDescriptor& dom, const InvariantLabel& label);

/// Whether the Dunkl pairing uses the D/2 convention for this family.
bool uses_half_dunkl(Family f);

struct DunklCheckRow {
  std::string domain;  ///< e.g. "SO0(5,2)"
  std::string kind;    ///< B1, BC, ...
  int rank = 0;
  Partition m;
  int parity = 0;
  Scalar oracle;
  Scalar closed_form;
  bool pass = false;
};

/// Norm-square comparison over a family of domains and every |m| <= max_weight.
std::vector<DunklCheckRow> dunkl_check(const std::vector<DomainDescriptor>& domains, int max_weight);

/// The default table: B1 and BC in ranks 2 and 3, B2 and D1 (both parities).
std::vector<DomainDescriptor> default_dunkl_domains();

}  // namespace jackhyp
