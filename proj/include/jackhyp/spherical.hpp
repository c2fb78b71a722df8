#pragma once

#include <complex>
#include <string>
#include <vector>

#include "jackhyp/domains.hpp"
#include "jackhyp/hypergeo.hpp"
#include "jackhyp/invariant_norms.hpp"

namespace jackhyp {

/// sigma = (i lambda + rho(xi)) / (c r) with c = 2 for BCxBC and BC, c = 1
/// otherwise. lambda is purely imaginary on the axes of interest, so the
/// conversions trade in the real number i*lambda.
int sigma_scale(Family f);
Scalar sigma_of_lambda(const DomainDescriptor& dom, const Scalar& i_lambda);
Scalar lambda_of_sigma(const DomainDescriptor& dom, const Scalar& sigma);

/// Alternative printed normalizations of i*lambda for the same sigma, kept
/// for side-by-side display. Each entry is (source tag, value).
struct LambdaReading {
  std::string source;
  Scalar i_lambda;
};
std::vector<LambdaReading> lambda_literal_readings(const DomainDescriptor& dom, const Scalar& sigma);

/// One hypergeometric piece of a radial spherical function:
///   scale * prod_j t_j^{odd} * F(params; t or t^2)
struct SphericalPiece {
  SeriesParams params;
  Scalar scale = 1;
  int parity = 0;        ///< 1 multiplies by t_1 ... t_r
  bool squared = true;   ///< false: series argument is t itself
};

struct SphericalForm {
  Scalar prefactor_exponent;  ///< phi = prod (1 - t_j^2)^exponent * sum of pieces
  std::vector<SphericalPiece> pieces;
};

SphericalForm spherical_form(const DomainDescriptor& dom, const Scalar& sigma);

/// phi restricted to t_1 e_1 + ... + t_r e_r, |t_j| < 1. The returned
/// shell sums include the prefactor.
SeriesResult spherical_radial(const DomainDescriptor& dom, const Scalar& sigma, const std::vector<long double>& t,
                              int max_degree, const EvalOptions& opts = {});

/// Prefactor-stripped coefficient of the basis function labelled by `label`
/// in the implemented series (Omega_m(t^2), t_1...t_r Omega_m(t^2), or
/// Omega_m(t) for type A).
Scalar spherical_coefficient(const DomainDescriptor& dom, const Scalar& sigma, const InvariantLabel& label);

/// The same coefficient predicted by the kernel expansion:
/// (sigma)_{n, a'/2} / <p_n, p_n>_F.
Scalar expansion_coefficient(const DomainDescriptor& dom, const Scalar& sigma, const InvariantLabel& label);

/// Trapezoidal rule for (1/2pi) int (1-|z|^2)^sigma / |1 - z e^{-i theta}|^{2 sigma} d theta.
long double poisson_quadrature_rank1(long double sigma, std::complex<long double> z, int nodes);

}  // namespace jackhyp
