#include "jackhyp/branching.hpp"

namespace jackhyp {

std::string to_string(Setting s) { return s == Setting::Tensor ? "tensor" : "restriction"; }

std::string to_string(HKind h) {
  switch (h) {
    case HKind::SU: return "SU";
    case HKind::SO: return "SO";
    case HKind::Sp: return "Sp";
  }
  return "?";
}

Setting parse_setting(const std::string& s) {
  if (s == "tensor") return Setting::Tensor;
  if (s == "restriction") return Setting::Restriction;
  throw ParseError("unknown setting '" + s + "' (tensor|restriction)");
}

HKind parse_hkind(const std::string& s) {
  if (s == "SU" || s == "su") return HKind::SU;
  if (s == "SO" || s == "so" || s == "SO0") return HKind::SO;
  if (s == "Sp" || s == "sp" || s == "SP") return HKind::Sp;
  throw ParseError("unknown subgroup kind '" + s + "' (SO|Sp)");
}

std::string branching_precondition(Setting setting, HKind hkind, int l, int r) {
  if (setting == Setting::Tensor) {
    if (hkind != HKind::SU) return "the tensor setting is defined for SU(l,r) only";
    if (r < 1 || l < r) return "SU(l,r) needs l >= r >= 1";
    if (l - r <= 2) return "no discrete component: needs a non-tube domain with l - r > 2";
    return {};
  }
  if (hkind == HKind::SO) {
    if (r < 2 || l <= r) return "SO0(l,r) needs l > r >= 2";
    if (l - r <= 2 * (r - 1)) return "SO0(l,r) restriction needs l - r > 2(r - 1)";
    return {};
  }
  if (hkind == HKind::Sp) {
    if (r < 2 || l <= r) return "Sp(l,r) needs l > r >= 2";
    if (l - r < 2 * (r - 1)) return "Sp(l,r) restriction needs l - r >= 2(r - 1)";
    return {};
  }
  return "the restriction setting needs SO or Sp";
}

namespace {

DomainDescriptor domain_for(Setting setting, HKind hkind, int l, int r) {
  if (setting == Setting::Tensor) {
    if (hkind != HKind::SU) throw DomainError("the tensor setting is defined for SU(l,r) only");
    return make_su(l, r);
  }
  if (hkind == HKind::SO) return make_so(l, r);
  if (hkind == HKind::Sp) return make_sp(l, r);
  throw DomainError("the restriction setting needs SO or Sp");
}

std::string fmt(const Scalar& x) { return to_string(x); }

}  // namespace

BranchingCertificate make_certificate(Setting setting, HKind hkind, int l, int r, const Scalar& nu, int k) {
  if (k < 0) throw DomainError("k must be nonnegative");
  const DomainDescriptor dom = domain_for(setting, hkind, l, r);
  const WallachSet ws = wallach_set(dom);

  BranchingCertificate c;
  c.setting = setting;
  c.hkind = hkind;
  c.l = l;
  c.r = r;
  c.group_g = dom.group_g;
  c.group_h = dom.group_h;
  c.nu = nu;
  c.k = k;
  c.singular_j = ws.singular_index(nu);
  if (!c.singular_j && !(nu > ws.threshold))
    throw DomainError("nu = " + fmt(nu) + " is not in the Wallach set of " + dom.group_g);
  if (c.singular_j && *c.singular_j == 1) throw DomainError("nu = 0 gives the trivial representation");
  if (c.singular_j && k != 0) throw DomainError("at a singular Wallach point only k = 0 is considered");

  c.sigma = setting == Setting::Tensor ? Scalar(nu + k) : Scalar(nu + 2 * k);
  c.i_lambda = lambda_of_sigma(dom, c.sigma);
  c.lambda_literal = lambda_literal_readings(dom, c.sigma);

  const Scalar& s = c.sigma;
  const RealQuadruple& q = dom.real;
  const Scalar half(1, 2);
  const int lr = l - r;
  const int j = c.singular_j.value_or(0);

  if (setting == Setting::Tensor) {
    if (!c.singular_j) {
      c.tag = "tensor-continuous";
      c.params = SeriesParams({s, s, s, s}, {nu, nu, Scalar(l)}, r, Scalar(2));
      c.printed_bound = 2 * nu + 4 * k < 1 + lr;
      c.printed_bound_text = "2nu + 4k < 1 + l - r";
    } else {
      c.tag = "tensor-singular";
      c.params = SeriesParams({nu, nu}, {Scalar(l)}, r, Scalar(2));
      c.printed_bound = lr > 2 * j - 3;
      c.printed_bound_text = "l - r > 2j - 3";
    }
  } else if (hkind == HKind::SO) {
    const Scalar cpar = q.a / 2 * (r - 1) + q.b() + half;
    if (!c.singular_j) {
      c.tag = "SO-continuous";
      c.params = SeriesParams({s / 2, s / 2, (s + 1) / 2, (s + 1) / 2}, {nu / 2, (nu + 1) / 2, cpar}, r, q.a);
      c.printed_bound = 4 * k < frac(lr, 2) - nu;
      c.printed_bound_text = "4k < (l - r)/2 - nu";
    } else {
      c.tag = "SO-singular";
      c.params = SeriesParams({nu / 2, (nu + 1) / 2}, {cpar}, r, q.a);
      c.printed_bound = lr > j - 1;
      c.printed_bound_text = "l - r > j - 1";
    }
  } else {
    const Scalar cpar = q.a / 2 * (r - 1) + q.b() + q.iota() / 2;
    if (!c.singular_j) {
      c.tag = "Sp-continuous";
      c.params = SeriesParams({s, s, s - 1, s - 1}, {cpar, nu, nu - 1}, r, q.a);
      c.printed_bound = 8 * k < 3 + 2 * lr - 2 * nu;
      c.printed_bound_text = "8k < 3 + 2(l - r) - 2nu";
    } else {
      c.tag = "Sp-singular";
      c.params = SeriesParams({nu, nu - 1}, {cpar}, r, q.a);
      c.printed_bound = lr >= j - 2;
      c.printed_bound_text = "l - r >= j - 2";
    }
  }
  c.predicate = convergent_at_one(c.params);
  return c;
}

namespace {

ScanResult scan(Setting setting, HKind hkind, int l, int r, const Scalar& nu, int k_max) {
  if (k_max < 0) throw DomainError("k_max must be nonnegative");
  ScanResult res;
  res.reason = branching_precondition(setting, hkind, l, r);
  if (!res.reason.empty()) {
    // a malformed group is a user error; an inapplicable one is an empty answer
    domain_for(setting, hkind, l, r);
    res.applicable = false;
    return res;
  }
  const DomainDescriptor dom = domain_for(setting, hkind, l, r);
  const WallachSet ws = wallach_set(dom);
  auto j = ws.singular_index(nu);
  if (!j && !(nu > ws.threshold)) throw DomainError("nu = " + to_string(nu) + " is not in the Wallach set of " + dom.group_g);
  if (j && *j == 1) {
    res.applicable = false;
    res.reason = "nu = 0 gives the trivial representation";
    return res;
  }
  const int last = j ? 0 : k_max;
  for (int k = 0; k <= last; ++k) {
    BranchingCertificate c = make_certificate(setting, hkind, l, r, nu, k);
    if (!c.bound_agrees()) res.mismatches.push_back(c);
    if (c.predicate) res.certificates.push_back(std::move(c));
  }
  return res;
}

}  // namespace

ScanResult scan_tensor(int l, int r, const Scalar& nu, int k_max) {
  return scan(Setting::Tensor, HKind::SU, l, r, nu, k_max);
}

ScanResult scan_restriction(HKind hkind, int l, int r, const Scalar& nu, int k_max) {
  if (hkind == HKind::SU) throw DomainError("the restriction setting needs SO or Sp");
  return scan(Setting::Restriction, hkind, l, r, nu, k_max);
}

BranchingCertificate certify(BranchingCertificate cert, int max_degree, double tail_tol, const EvalOptions& opts) {
  if (!convergent_at_one(cert.params))
    throw DomainError("(nu, k) = (" + to_string(cert.nu) + ", " + std::to_string(cert.k) +
                      ") fails the convergence criterion; the norm square diverges");
  cert.predicate = true;
  cert.norm_square = hyper_at_one(cert.params, max_degree, tail_tol, opts);
  cert.certified = cert.norm_square.has_value && cert.norm_square.value > 0 && cert.norm_square.tolerance_met;
  return cert;
}

}  // namespace jackhyp
