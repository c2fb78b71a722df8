#include "jackhyp/invariant_norms.hpp"

#include "jackhyp/combinatorics.hpp"
#include "jackhyp/jack.hpp"

namespace jackhyp {

InvariantLabel make_label(const DomainDescriptor& dom, const Partition& m, int parity) {
  const int r = dom.rank();
  if (m.length() > r) throw DomainError("partition " + to_string(m) + " is longer than the rank " + std::to_string(r));
  if (parity != 0 && parity != 1) throw DomainError("parity must be 0 or 1");
  InvariantLabel lab;
  lab.family = dom.family();
  lab.m = m;
  lab.parity = parity;
  if (parity == 1 && lab.family != Family::D) throw DomainError("odd parity only exists for type D");
  switch (lab.family) {
    case Family::BCxBC:
    case Family::A: lab.n = m; break;
    case Family::BC: lab.n = m.doubled(); break;
    case Family::B: lab.n = m.scaled(2); break;
    case Family::D: lab.n = m.scaled(2).shifted(parity, r); break;
  }
  return lab;
}

namespace {

void check_label(const DomainDescriptor& dom, const InvariantLabel& label) {
  if (label.family != dom.family())
    throw DomainError("label family " + to_string(label.family) + " does not match domain family " +
                      to_string(dom.family()));
  InvariantLabel expect = make_label(dom, label.m, label.parity);
  if (!(expect.n == label.n)) throw DomainError("label signature n does not match its base partition");
}

Scalar d_odd_product(const Scalar& k, int r) {
  Scalar p = 1;
  for (int j = 1; j <= r; ++j) p *= k * (r - 1) + Scalar(1, 2) - k * (j - 1);
  return p;
}

}  // namespace

Scalar fock_norm(const DomainDescriptor& dom, const InvariantLabel& label) {
  check_label(dom, label);
  const RealQuadruple& rq = dom.real;
  const int r = rq.rank;
  const Scalar k = rq.a / 2;
  const Partition& m = label.m;
  const Scalar q = q_param(r, rq.a);
  const Scalar qm = gen_pochhammer(q, m, k);
  const Scalar pim = pi_m(m, r, rq.a);
  const Scalar four_m = pow(Scalar(4), m.weight());

  switch (label.family) {
    case Family::BCxBC: return gen_pochhammer(dom.d_over_r, m, k) * qm / pim;
    case Family::A: return qm / pim;
    case Family::B: return four_m * qm * gen_pochhammer(k * (r - 1) + rq.b() + Scalar(1, 2), m, k) / pim;
    case Family::BC: return qm * gen_pochhammer(k * (r - 1) + (rq.iota() + rq.two_b) / 2, m, k) / pim;
    case Family::D:
      if (label.parity == 0) return four_m * qm * gen_pochhammer(k * (r - 1) + Scalar(1, 2), m, k) / pim;
      return pow(Scalar(2), r) * d_odd_product(k, r) * four_m * qm *
             gen_pochhammer(k * (r - 1) + Scalar(3, 2), m, k) / pim;
  }
  throw std::logic_error("unreachable family");
}

Scalar bergman_divisor(const DomainDescriptor& dom, const InvariantLabel& label, const Scalar& nu) {
  check_label(dom, label);
  const Scalar kc = dom.complex.a / 2;
  if (label.family == Family::BCxBC) {
    Scalar p = gen_pochhammer(nu, label.m, kc);
    return p * p;
  }
  return gen_pochhammer(nu, label.n, kc);
}

Scalar bergman_norm(const DomainDescriptor& dom, const InvariantLabel& label, const Scalar& nu) {
  Scalar div = bergman_divisor(dom, label, nu);
  if (div == 0) throw DomainError("(nu)_n vanishes at nu = " + to_string(nu) + ": the component is absent from H_nu");
  return fock_norm(dom, label) / div;
}

Scalar bergman_norm_split(const DomainDescriptor& dom, const InvariantLabel& label, const Scalar& nu) {
  check_label(dom, label);
  const RealQuadruple& rq = dom.real;
  const int r = rq.rank;
  const Scalar k = rq.a / 2;
  const Partition& m = label.m;
  const Scalar qm = gen_pochhammer(q_param(r, rq.a), m, k);
  const Scalar pim = pi_m(m, r, rq.a);

  Scalar num, den;
  switch (label.family) {
    case Family::BCxBC: {
      Scalar dr = gen_pochhammer(dom.d_over_r, m, k);
      Scalar nm = gen_pochhammer(nu, m, k);
      num = dr * dr;
      den = nm * nm * dim_component(dom, m);
      break;
    }
    case Family::A:
      num = qm;
      den = gen_pochhammer(nu, m, k) * pim;
      break;
    case Family::B:
    case Family::D:
      if (label.parity == 0) {
        Scalar c = k * (r - 1) + rq.b() + Scalar(1, 2);
        num = qm * gen_pochhammer(c, m, k);
        den = gen_pochhammer(nu / 2, m, k) * gen_pochhammer((nu + 1) / 2, m, k) * pim;
      } else {
        Scalar top = 1, bottom = 1;
        for (int j = 1; j <= r; ++j) {
          top *= k * (r - 1) + Scalar(1, 2) - k * (j - 1);
          bottom *= nu / 2 - k * (j - 1);
        }
        num = top * qm * gen_pochhammer(k * (r - 1) + Scalar(3, 2), m, k);
        den = bottom * gen_pochhammer(nu / 2 + Scalar(1, 2), m, k) * gen_pochhammer(nu / 2 + 1, m, k) * pim;
      }
      break;
    case Family::BC: {
      const Scalar kc = dom.complex.a / 2;
      num = qm * gen_pochhammer(k * (r - 1) + (rq.iota() + rq.two_b) / 2, m, k);
      den = gen_pochhammer(nu, m, k) * gen_pochhammer(nu - kc, m, k) * pim;
      break;
    }
  }
  if (den == 0) throw DomainError("(nu)_n vanishes at nu = " + to_string(nu) + ": the component is absent from H_nu");
  return num / den;
}

}  // namespace jackhyp
