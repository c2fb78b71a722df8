#include "empirical.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace jackhyp::verify {

namespace {

// Least squares for y ~ c0 + c1 log n + c2 / n.
double fitted_exponent(const std::vector<double>& ns, const std::vector<double>& ys) {
  std::array<std::array<double, 4>, 3> m{};
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const std::array<double, 3> f{1.0, std::log(ns[i]), 1.0 / ns[i]};
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) m[a][b] += f[a] * f[b];
      m[a][3] += f[a] * ys[i];
    }
  }
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int row = col + 1; row < 3; ++row)
      if (std::fabs(m[row][col]) > std::fabs(m[piv][col])) piv = row;
    std::swap(m[col], m[piv]);
    for (int row = 0; row < 3; ++row) {
      if (row == col) continue;
      const double f = m[row][col] / m[col][col];
      for (int k = col; k < 4; ++k) m[row][k] -= f * m[col][k];
    }
  }
  return m[1][3] / m[1][1];
}

}  // namespace

EmpiricalBehavior empirical_behavior(const SeriesParams& p, int max_degree, double margin) {
  EmpiricalBehavior out;
  std::vector<double> ns, ys;
  bool all_zero_tail = true;
  for (int n = 0; n <= max_degree; ++n) {
    const std::vector<long double> terms = shell_terms(p, n, {}, Precision::Extended, Exec::Parallel);
    long double mag = 0;
    for (long double t : terms) mag += std::fabs(t);
    out.last_partial_sum += reduce_shell(terms, Precision::Extended);
    if (2 * n < max_degree) continue;
    if (mag != 0) all_zero_tail = false;
    if (mag > 0 && std::isfinite(mag)) {
      ns.push_back(n);
      ys.push_back(static_cast<double>(std::log(mag)));
    }
  }
  if (all_zero_tail) {
    out.exponent = -std::numeric_limits<double>::infinity();
    out.bounded = true;
    return out;
  }
  out.exponent = fitted_exponent(ns, ys);
  out.bounded = out.exponent < -1 - margin;
  return out;
}

std::vector<EmpiricalCase> curated_boundary_cases() {
  auto q = [](const char* s) { return parse_scalar(s); };
  auto S = [&](std::vector<const char*> al, std::vector<const char*> be, int r, const char* a) {
    std::vector<Scalar> A, B;
    for (const char* x : al) A.push_back(q(x));
    for (const char* x : be) B.push_back(q(x));
    return SeriesParams(A, B, r, q(a));
  };
  return {
      {"r1 gauss eps=-1", S({"1", "1"}, {"3"}, 1, "2")},
      {"r1 gauss eps=0", S({"1", "1"}, {"2"}, 1, "2")},
      {"r1 gauss eps=1/2", S({"3/2", "1"}, {"2"}, 1, "2")},
      {"r1 gauss eps=-1/2", S({"1/2", "1"}, {"2"}, 1, "2")},
      {"r1 1F0 at one", S({"1"}, {}, 1, "2")},
      {"r1 1F1 at one", S({"1"}, {"2"}, 1, "2")},
      {"r1 3F0 at one", S({"1", "1", "1"}, {}, 1, "2")},
      {"r2 a=2 eps=-1", S({"3/2", "3/2"}, {"5"}, 2, "2")},
      {"r2 a=2 eps=0", S({"3/2", "3/2"}, {"4"}, 2, "2")},
      {"r2 a=2 eps=-1/2", S({"3/2", "3/2"}, {"9/2"}, 2, "2")},
      {"r2 a=2 eps=1", S({"3/2", "3/2"}, {"3"}, 2, "2")},
      {"r2 a=1 eps=-1/2", S({"5/4", "5/4"}, {"7/2"}, 2, "1")},
      {"r2 a=1 eps=0", S({"5/4", "5/4"}, {"3"}, 2, "1")},
      {"r2 a=1 eps=1/2", S({"5/4", "5/4"}, {"5/2"}, 2, "1")},
      {"r2 a=2 row-2 truncated eps=1/2", S({"1", "1"}, {"5/2"}, 2, "2")},
      {"r3 a=2 eps=-1", S({"5/2", "5/2"}, {"8"}, 3, "2")},
      {"r3 a=2 eps=0", S({"5/2", "5/2"}, {"7"}, 3, "2")},
      {"r3 a=2 eps=1/2", S({"5/2", "5/2"}, {"13/2"}, 3, "2")},
      {"r3 a=1 4F3 eps=-1/2", S({"7/4", "7/4", "7/4", "7/4"}, {"5/2", "5/2", "7/2"}, 3, "1")},
      {"r3 a=2 first-row truncated", S({"0", "5"}, {"3"}, 3, "2")},
  };
}

}  // namespace jackhyp::verify
