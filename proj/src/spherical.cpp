#include "jackhyp/spherical.hpp"

#include <cmath>
#include <numbers>

#include "jackhyp/combinatorics.hpp"

namespace jackhyp {

int sigma_scale(Family f) { return (f == Family::BCxBC || f == Family::BC) ? 2 : 1; }

Scalar sigma_of_lambda(const DomainDescriptor& dom, const Scalar& i_lambda) {
  return (i_lambda + dom.rho_xi) / (sigma_scale(dom.family()) * dom.rank());
}

Scalar lambda_of_sigma(const DomainDescriptor& dom, const Scalar& sigma) {
  return sigma * (sigma_scale(dom.family()) * dom.rank()) - dom.rho_xi;
}

std::vector<LambdaReading> lambda_literal_readings(const DomainDescriptor& dom, const Scalar& sigma) {
  const RealQuadruple& q = dom.real;
  const int r = q.rank;
  const Scalar k = q.a / 2;
  std::vector<LambdaReading> out;
  switch (dom.family()) {
    case Family::BCxBC: out.push_back({"complex-sigma-relation", 2 * r * sigma - dom.rho_xi}); break;
    case Family::A:
    case Family::D: out.push_back({"spherical-theorem", r * (sigma - k * (r - 1))}); break;
    case Family::B: out.push_back({"spherical-theorem", r * (sigma - q.b() - k * (r - 1))}); break;
    case Family::BC:
      out.push_back({"spherical-theorem", 2 * r * sigma - r * (q.iota_minus_1 + q.b() + 2 * q.a * (r - 1))});
      break;
  }
  // the branching theorem restates lambda for the two restriction families
  if (dom.kind == DomainKind::B1 && dom.params.l) {
    const int l = *dom.params.l;
    out.push_back({"branching-theorem", r * sigma - r * (Scalar(l - r) + frac(r - 1, 2))});
  }
  if (dom.kind == DomainKind::BC && dom.params.l) {
    const int l = *dom.params.l;
    out.push_back({"branching-theorem", 2 * r * sigma - r * Scalar(3 + l - r + 8 * (r - 1))});
  }
  return out;
}

SphericalForm spherical_form(const DomainDescriptor& dom, const Scalar& sigma) {
  const RealQuadruple& q = dom.real;
  const int r = q.rank;
  const Scalar k = q.a / 2;
  const Scalar half(1, 2);
  SphericalForm f;
  switch (dom.family()) {
    case Family::BCxBC:
      f.prefactor_exponent = sigma;
      f.pieces.push_back({SeriesParams({sigma, sigma}, {dom.d_over_r}, r, q.a), 1, 0, true});
      break;
    case Family::A:
      f.prefactor_exponent = sigma / 2;
      f.pieces.push_back({SeriesParams({sigma}, {}, r, q.a), 1, 0, false});
      break;
    case Family::B:
      f.prefactor_exponent = sigma / 2;
      f.pieces.push_back({SeriesParams({sigma / 2, (sigma + 1) / 2}, {k * (r - 1) + q.b() + half}, r, q.a), 1, 0, true});
      break;
    case Family::BC:
      f.prefactor_exponent = sigma;
      f.pieces.push_back(
          {SeriesParams({sigma, sigma - 1}, {k * (r - 1) + (q.iota() + q.two_b) / 2}, r, q.a), 1, 0, true});
      break;
    case Family::D: {
      f.prefactor_exponent = sigma / 2;
      f.pieces.push_back({SeriesParams({sigma / 2, (sigma + 1) / 2}, {k * (r - 1) + half}, r, q.a), 1, 0, true});
      Scalar c = 1;
      for (int j = 1; j <= r; ++j) c *= (sigma / 2 - k * (j - 1)) / (k * (r - 1) - k * (j - 1) + half);
      f.pieces.push_back(
          {SeriesParams({sigma / 2 + 1, (sigma + 1) / 2}, {k * (r - 1) + Scalar(3, 2)}, r, q.a), c, 1, true});
      break;
    }
  }
  return f;
}

SeriesResult spherical_radial(const DomainDescriptor& dom, const Scalar& sigma, const std::vector<long double>& t,
                              int max_degree, const EvalOptions& opts) {
  const int r = dom.rank();
  if (static_cast<int>(t.size()) != r) throw DomainError("need exactly r radial coordinates");
  std::vector<long double> abs_t;
  long double prod_t = 1;
  for (long double ti : t) {
    if (!(std::fabs(ti) < 1)) throw DomainError("radial coordinates must satisfy |t_j| < 1");
    abs_t.push_back(std::fabs(ti));
    prod_t *= ti;
  }
  const SphericalForm form = spherical_form(dom, sigma);
  const long double expo = to_long_double(form.prefactor_exponent);
  long double pref = 1;
  for (long double ti : t) pref *= std::pow(1 - ti * ti, expo);

  SeriesResult out;
  out.precision = opts.precision;
  out.has_value = true;
  out.tolerance_met = true;
  out.verdict = Verdict::TruncatedSeries;
  long double value = 0;
  for (const SphericalPiece& piece : form.pieces) {
    const long double scale = to_long_double(piece.scale) * (piece.parity ? prod_t : 1.0L);
    if (scale == 0) continue;
    SeriesResult s = piece.squared ? hyper_eval(piece.params, abs_t, max_degree, opts)
                                   : hyper_series(piece.params, t, max_degree, opts);
    if (!s.has_value) {
      out.has_value = false;
      out.verdict = s.verdict;
      return out;
    }
    value += scale * s.value;
    if (s.verdict != Verdict::TruncatedSeries) out.verdict = s.verdict;
    out.tolerance_met = out.tolerance_met && s.tolerance_met;
    out.truncation_degree = std::max(out.truncation_degree, s.truncation_degree);
    if (out.shell_sums.size() < s.shell_sums.size()) {
      out.shell_sums.resize(s.shell_sums.size(), 0);
      out.shell_magnitudes.resize(s.shell_sums.size(), 0);
    }
    for (std::size_t n = 0; n < s.shell_sums.size(); ++n) {
      out.shell_sums[n] += pref * scale * s.shell_sums[n];
      out.shell_magnitudes[n] += std::fabs(pref * scale) * s.shell_magnitudes[n];
    }
  }
  out.value = pref * value;
  out.last_shell_magnitude = out.shell_magnitudes.empty() ? 0 : out.shell_magnitudes.back();
  return out;
}

Scalar spherical_coefficient(const DomainDescriptor& dom, const Scalar& sigma, const InvariantLabel& label) {
  const SphericalForm form = spherical_form(dom, sigma);
  for (const SphericalPiece& piece : form.pieces)
    if (piece.parity == label.parity) return piece.scale * series_coefficient(piece.params, label.m);
  return 0;
}

Scalar expansion_coefficient(const DomainDescriptor& dom, const Scalar& sigma, const InvariantLabel& label) {
  return bergman_divisor(dom, label, sigma) / fock_norm(dom, label);
}

long double poisson_quadrature_rank1(long double sigma, std::complex<long double> z, int nodes) {
  if (nodes < 16) throw DomainError("quadrature needs at least 16 nodes");
  if (!(std::abs(z) < 1)) throw DomainError("quadrature point must lie in the open unit disk");
  const long double two_pi = 2 * std::numbers::pi_v<long double>;
  const long double top = std::pow(1 - std::norm(z), sigma);
  long double sum = 0;
  for (int k = 0; k < nodes; ++k) {
    const long double theta = two_pi * k / nodes;
    const std::complex<long double> w = 1.0L - z * std::polar(1.0L, -theta);
    sum += top / std::pow(std::norm(w), sigma);
  }
  return sum / nodes;
}

}  // namespace jackhyp
