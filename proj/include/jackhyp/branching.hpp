#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jackhyp/domains.hpp"
#include "jackhyp/hypergeo.hpp"
#include "jackhyp/spherical.hpp"

namespace jackhyp {

enum class Setting { Tensor, Restriction };
enum class HKind { SU, SO, Sp };  ///< SU only for the tensor setting

std::string to_string(Setting s);
std::string to_string(HKind h);
Setting parse_setting(const std::string& s);
HKind parse_hkind(const std::string& s);

/// A candidate discrete component (nu, k) and the data certifying it.
struct BranchingCertificate {
  Setting setting{};
  HKind hkind{};
  int l = 0;
  int r = 0;
  std::string group_g;
  std::string group_h;
  Scalar nu;
  std::optional<int> singular_j;  ///< set when nu = (a'/2)(j-1) is a singular Wallach point
  int k = 0;
  Scalar sigma;                   ///< nu + k (tensor) or nu + 2k (restriction)
  Scalar i_lambda;                ///< from rho(xi)
  std::vector<LambdaReading> lambda_literal;
  SeriesParams params;            ///< the series whose value at 1^r is the norm square
  bool predicate = false;         ///< convergent_at_one(params)
  bool printed_bound = false;     ///< the closed-form inequality for this case
  std::string printed_bound_text;
  std::string tag;                ///< e.g. "tensor-continuous", "SO-singular"
  SeriesResult norm_square;       ///< filled by certify
  bool certified = false;

  bool bound_agrees() const { return predicate == printed_bound; }
};

/// Builds the certificate data for one (nu, k) without deciding admissibility.
/// Throws DomainError for nu outside the Wallach set of G, or k > 0 at a
/// singular point.
BranchingCertificate make_certificate(Setting setting, HKind hkind, int l, int r, const Scalar& nu, int k);

struct ScanResult {
  bool applicable = true;
  std::string reason;  ///< why nothing can appear, when not applicable
  std::vector<BranchingCertificate> certificates;
  /// examined candidates where the printed bound and the predicate disagree
  std::vector<BranchingCertificate> mismatches;
};

/// Discrete components of H_nu (x) conj(H_nu) for SU(l,r), k = 0..k_max.
ScanResult scan_tensor(int l, int r, const Scalar& nu, int k_max);

/// Discrete components of H_nu of SU(l,r) (SO) or SU(2l,2r) (Sp) under H.
ScanResult scan_restriction(HKind hkind, int l, int r, const Scalar& nu, int k_max);

/// Sums the norm square series at 1^r. Throws DomainError when the
/// convergence predicate fails (the component is not admissible).
BranchingCertificate certify(BranchingCertificate cert, int max_degree, double tail_tol, const EvalOptions& opts = {});

/// Structural preconditions on (l, r): empty when satisfied, else the reason.
std::string branching_precondition(Setting setting, HKind hkind, int l, int r);

}  // namespace jackhyp
