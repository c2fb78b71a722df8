#include "jackhyp/combinatorics.hpp"

namespace jackhyp {

Scalar rising(const Scalar& c, int n) {
  if (n < 0) throw DomainError("rising factorial with negative length");
  Scalar r = 1;
  Scalar f = c;
  for (int k = 0; k < n; ++k) {
    r *= f;
    f += 1;
  }
  return r;
}

Scalar gen_pochhammer(const Scalar& c, const Partition& m, const Scalar& beta) {
  Scalar r = 1;
  for (int j = 0; j < m.length(); ++j) {
    r *= rising(c - beta * j, m[j]);
    if (r == 0) break;
  }
  return r;
}

Scalar q_param(int r, const Scalar& a) {
  if (r < 1) throw DomainError("rank must be at least 1");
  return Scalar(1 + a / 2 * (r - 1));
}

Scalar pi_m(const Partition& m, int r, const Scalar& a) {
  if (m.length() > r) throw DomainError("pi_m: partition longer than rank");
  if (sgn(a) <= 0) throw DomainError("pi_m: multiplicity a must be positive");
  const Scalar k = a / 2;
  Scalar res = 1;
  for (int i = 1; i <= r; ++i) {
    for (int j = i + 1; j <= r; ++j) {
      int d = m[i - 1] - m[j - 1];
      if (d == 0) continue;  // every factor is 1
      Scalar ks = k * (j - i);
      res *= (d + ks) / ks;
      res *= rising(k * (j - i + 1), d) / rising(k * (j - i - 1) + 1, d);
    }
  }
  return res;
}

HookProducts hook_products(const Partition& m, const Scalar& alpha) {
  if (sgn(alpha) <= 0) throw DomainError("hook_products: alpha must be positive");
  HookProducts h{1, 1};
  for (int i = 0; i < m.length(); ++i) {
    for (int j = 0; j < m[i]; ++j) {
      Scalar aa = alpha * m.arm(i, j);
      int l = m.leg(i, j);
      h.lower *= aa + l + 1;
      h.upper *= aa + l + alpha;
    }
  }
  return h;
}

}  // namespace jackhyp
