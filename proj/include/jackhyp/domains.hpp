#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jackhyp/scalar.hpp"

namespace jackhyp {

/// Families of real bounded symmetric domains X = H/L inside a Hermitian
/// domain D = G/K. BCxBC is a complex domain seen as the diagonal of D x D-bar.
enum class DomainKind { BCxBC, A, BC, B1, B2, D1, D2 };

std::string to_string(DomainKind k);
DomainKind parse_domain_kind(const std::string& s);

/// Root-system family that governs the invariant polynomials and formulas.
enum class Family { BCxBC, A, B, BC, D };
Family family_of(DomainKind k);
std::string to_string(Family f);

/// (r, iota-1, a, 2b): rank and multiplicities of +-beta_j, (beta_j +- beta_k)/2
/// and +-beta_j/2.
struct RealQuadruple {
  int rank = 0;
  Scalar iota_minus_1;
  Scalar a;
  Scalar two_b;

  Scalar b() const { return two_b / 2; }
  Scalar iota() const { return iota_minus_1 + 1; }
};

/// (r', a', 2b') of the ambient Hermitian domain (longest-root multiplicity 1).
struct ComplexTriple {
  int rank = 0;
  Scalar a;
  Scalar two_b;

  Scalar b() const { return two_b / 2; }
};

/// Parameters accepted by make_domain. Which fields matter depends on the
/// kind: l and r for the matrix families (BC, B1, and BCxBC built from
/// SU(l,r)); r and a (and two_b) for A and generic BCxBC; r for D1.
struct DomainParams {
  std::optional<int> l;
  std::optional<int> r;
  std::optional<Scalar> a;
  std::optional<Scalar> two_b;
};

struct DomainDescriptor {
  DomainKind kind{};
  DomainParams params;
  std::string group_h;  ///< e.g. "SO0(10,2)"
  std::string group_g;  ///< e.g. "SU(10,2)"
  RealQuadruple real;
  ComplexTriple complex;
  Scalar genus;                    ///< p = a'(r'-1) + 2 + b'
  Scalar d_over_r;                 ///< 1 + b' + (a'/2)(r'-1)
  Scalar rho_xi;                   ///< rho(xi) from the positive restricted roots
  std::vector<Scalar> wallach_singular;
  Scalar wallach_threshold;        ///< continuous part is (threshold, inf)
  bool rank_one_oracle = false;    ///< rank-one BCxBC, admitted only for quadrature checks

  Family family() const { return family_of(kind); }
  int rank() const { return real.rank; }
  /// q = 1 + (a/2)(r-1) with the real-form data.
  Scalar q() const;
};

DomainDescriptor make_domain(DomainKind kind, const DomainParams& params);

/// Convenience constructors.
DomainDescriptor make_su(int l, int r);        ///< BCxBC with D = SU(l,r)/S(U(l)xU(r))
DomainDescriptor make_so(int l, int r);        ///< B1: SO0(l,r) in SU(l,r)
DomainDescriptor make_sp(int l, int r);        ///< BC: Sp(l,r) in SU(2l,2r)

struct WallachSet {
  std::vector<Scalar> singular;  ///< 0, a'/2, ..., (a'/2)(r'-1)
  Scalar threshold;              ///< continuous part is (threshold, inf)

  bool contains(const Scalar& nu) const;
  /// 1-based index j with nu = (a'/2)(j-1), or nullopt when nu is not singular.
  std::optional<int> singular_index(const Scalar& nu) const;
};

WallachSet wallach_set(const DomainDescriptor& dom);

/// rho(xi) = 1/2 sum over positive roots gamma of m_gamma * gamma(xi) with
/// beta_j(xi) = 2 for every j. Roots are enumerated explicitly.
Scalar rho_xi_from_roots(const RealQuadruple& q);

}  // namespace jackhyp
