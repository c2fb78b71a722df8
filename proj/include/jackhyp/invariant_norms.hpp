#pragma once

#include "jackhyp/domains.hpp"
#include "jackhyp/partition.hpp"
#include "jackhyp/scalar.hpp"

namespace jackhyp {

/// Index of an L-invariant polynomial p_n: the base partition m (length <= r)
/// and the signature n of the K-type that carries it.
///   BCxBC, A: n = m
///   BC:       n = (m1, m1, m2, m2, ...)
///   B:        n = 2m
///   D:        n = 2m + parity * (1, ..., 1), parity in {0, 1}
struct InvariantLabel {
  Family family{};
  Partition m;
  Partition n;
  int parity = 0;
};

InvariantLabel make_label(const DomainDescriptor& dom, const Partition& m, int parity = 0);

/// Fock norm square <p_n, p_n>_F in closed form.
Scalar fock_norm(const DomainDescriptor& dom, const InvariantLabel& label);

/// Bergman norm square in H_nu as fock_norm / (nu)_{n, a'/2}. For BCxBC the
/// invariant lives in P_m tensor conj(P_m), so the divisor is (nu)_m^2.
Scalar bergman_norm(const DomainDescriptor& dom, const InvariantLabel& label, const Scalar& nu);

/// The same quantity assembled from the split per-family closed forms
/// (denominators such as (nu/2)_m ((nu+1)/2)_m for type B).
Scalar bergman_norm_split(const DomainDescriptor& dom, const InvariantLabel& label, const Scalar& nu);

/// (nu)_{n, a'/2}: the Pochhammer the Bergman norm divides by.
Scalar bergman_divisor(const DomainDescriptor& dom, const InvariantLabel& label, const Scalar& nu);

}  // namespace jackhyp
