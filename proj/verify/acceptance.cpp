#include "acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "empirical.hpp"
#include "jack_oracle.hpp"
#include "jackhyp/branching.hpp"
#include "jackhyp/combinatorics.hpp"
#include "jackhyp/dunkl.hpp"
#include "jackhyp/jack.hpp"
#include "jackhyp/spherical.hpp"

namespace jackhyp::verify {

namespace {

const std::vector<const char*> kMults = {"1", "2", "4", "1/2"};

CriterionResult timed(int id, const char* name, double budget, const std::function<void(CriterionResult&)>& body) {
  CriterionResult res;
  res.id = id;
  res.name = name;
  res.budget_seconds = budget;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(res);
  } catch (const std::exception& e) {
    res.pass = false;
    res.detail = std::string("exception: ") + e.what();
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget > 0 && res.seconds > budget) {
    res.pass = false;
    res.detail += " (over the " + std::to_string(static_cast<int>(budget)) + " s budget)";
  }
  return res;
}

std::string ratio(int good, int total) { return std::to_string(good) + "/" + std::to_string(total); }

Scalar random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-60, 60);
  std::uniform_int_distribution<long> den(1, 12);
  return frac(num(rng), den(rng));
}

std::vector<Partition> partitions_up_to(int weight, int max_len) {
  std::vector<Partition> out;
  for (int n = 0; n <= weight; ++n)
    for (const Partition& m : enumerate_partitions(n, max_len)) out.push_back(m);
  return out;
}

}  // namespace

CriterionResult criterion_jack_oracle() {
  return timed(1, "jack-oracle", 60, [](CriterionResult& res) {
    int total = 0, gs = 0, eig = 0;
    for (const char* as : kMults) {
      const Scalar alpha = 2 / parse_scalar(as);
      for (int r = 1; r <= 3; ++r)
        for (const Partition& m : partitions_up_to(5, r)) {
          ++total;
          const SymmetricPoly j = jack_J(m, alpha, r);
          if (jack_by_gram_schmidt(m, alpha, r) == j) ++gs;
          if (is_laplace_beltrami_eigenvector(m, alpha, r)) ++eig;
        }
    }
    res.pass = gs == total && eig == total;
    res.detail = "gram-schmidt " + ratio(gs, total) + ", eigenvector " + ratio(eig, total);
  });
}

CriterionResult criterion_normalizations() {
  return timed(2, "normalizations", 0, [](CriterionResult& res) {
    int total = 0, omega = 0, norm = 0;
    for (const char* as : kMults) {
      const Scalar a = parse_scalar(as);
      for (int r = 1; r <= 3; ++r) {
        const std::vector<Scalar> ones(static_cast<std::size_t>(r), Scalar(1));
        for (const Partition& m : partitions_up_to(5, r)) {
          ++total;
          if (omega_eval(m, a, ones) == 1) ++omega;
          if (jack_norm_one(m, r, a) == jack_J(m, 2 / a, r).evaluate(ones)) ++norm;
        }
      }
    }
    res.pass = omega == total && norm == total;
    res.detail = "omega(1^r)=1 " + ratio(omega, total) + ", J(1^r) closed form " + ratio(norm, total);
  });
}

CriterionResult criterion_pochhammer_splitting(std::uint64_t seed) {
  return timed(3, "pochhammer-splitting", 0, [seed](CriterionResult& res) {
    std::mt19937_64 rng(seed);
    int total = 0, good = 0;
    const std::vector<Partition> ms = partitions_up_to(5, 5);
    for (int s = 0; s < 20; ++s) {
      const Scalar nu = random_rational(rng);
      for (const char* as : kMults) {
        const Scalar a = parse_scalar(as);
        for (const Partition& m : ms) {
          // (nu)_{2m, a'/2} with a' = 2a
          const Scalar r_lhs = gen_pochhammer(nu, m.scaled(2), a);
          const Scalar r_rhs = pow(Scalar(4), m.weight()) * gen_pochhammer(nu / 2, m, a / 2) *
                               gen_pochhammer((nu + 1) / 2, m, a / 2);
          // (nu)_{(m1,m1,m2,m2,...), a'/2} with a = 2a', here a' = a
          const Scalar h_lhs = gen_pochhammer(nu, m.doubled(), a / 2);
          const Scalar h_rhs = gen_pochhammer(nu, m, a) * gen_pochhammer(nu - a / 2, m, a);
          total += 2;
          good += (r_lhs == r_rhs) + (h_lhs == h_rhs);
        }
      }
    }
    res.pass = good == total;
    res.detail = "identities " + ratio(good, total) + " over 20 random nu";
  });
}

CriterionResult criterion_dunkl() {
  return timed(4, "dunkl-cross-validation", 300, [](CriterionResult& res) {
    const std::vector<DomainDescriptor> doms = {
        make_so(5, 2), make_so(7, 3), make_so(6, 3), make_sp(3, 2), make_sp(4, 3),
        make_domain(DomainKind::B2, {{}, 2, {}, {}}), make_domain(DomainKind::B2, {{}, 3, {}, {}})};
    const std::vector<DunklCheckRow> rows = dunkl_check(doms, 3);
    const int good = static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const DunklCheckRow& r) { return r.pass; }));
    res.pass = good == static_cast<int>(rows.size()) && !rows.empty();
    res.detail = "oracle = closed form " + ratio(good, static_cast<int>(rows.size())) + " (types B, BC; r <= 3; |m| <= 3)";
  });
}

CriterionResult criterion_dimension() {
  return timed(5, "dimension-integrality", 0, [](CriterionResult& res) {
    int total = 0, good = 0;
    bool defining = true;
    for (auto [l, r] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {5, 3}}) {
      const DomainDescriptor dom = make_su(l, r);
      for (const Partition& m : partitions_up_to(4, r)) {
        ++total;
        try {
          const Scalar d = dim_component(dom, m);
          ++good;
          if (m == Partition{1} && d != l * r) defining = false;
        } catch (const DomainError&) {
        }
      }
    }
    res.pass = good == total && defining;
    res.detail = "positive integers " + ratio(good, total) + (defining ? ", d((1)) = lr" : ", d((1)) != lr");
  });
}

CriterionResult criterion_empirical() {
  return timed(6, "convergence-classifier", 0, [](CriterionResult& res) {
    const std::vector<EmpiricalCase> cases = curated_boundary_cases();
    int good = 0;
    std::string misses;
    for (const EmpiricalCase& c : cases) {
      const EmpiricalBehavior e = empirical_behavior(c.params, 80);
      if (e.bounded == convergent_at_one(c.params)) {
        ++good;
      } else {
        misses += " [" + c.name + "]";
      }
    }
    res.pass = good == static_cast<int>(cases.size());
    res.detail = "agreement " + ratio(good, static_cast<int>(cases.size())) + misses;
  });
}

CriterionResult criterion_quadrature() {
  return timed(7, "rank-one-quadrature", 10, [](CriterionResult& res) {
    const DomainDescriptor disk = make_domain(DomainKind::BCxBC, {{}, 1, Scalar(2), Scalar(0)});
    const EvalOptions opts{Precision::Extended, Exec::Parallel, 1e-20};
    long double worst = 0;
    for (const char* s : {"7/10", "1", "3/2", "2"}) {
      const Scalar sigma = parse_scalar(s);
      for (long double t : {0.1L, 0.3L, 0.5L}) {
        const SeriesResult sr = spherical_radial(disk, sigma, {t}, 400, opts);
        const long double q = poisson_quadrature_rank1(to_long_double(sigma), {t, 0.0L}, 512);
        worst = std::max(worst, std::fabs(sr.value - q));
      }
    }
    res.pass = worst <= 1e-8L;
    char buf[96];
    std::snprintf(buf, sizeof buf, "max |series - quadrature| = %.3Lg over 12 points", worst);
    res.detail = buf;
  });
}

CriterionResult criterion_coefficient_identity() {
  return timed(8, "coefficient-identity", 0, [](CriterionResult& res) {
    const std::vector<DomainDescriptor> doms = {
        make_su(3, 2),
        make_su(5, 3),
        make_domain(DomainKind::A, {{}, 2, Scalar(1), {}}),
        make_domain(DomainKind::A, {{}, 3, Scalar(2), {}}),
        make_domain(DomainKind::A, {{}, 2, Scalar(4), {}}),
        make_so(5, 2),
        make_so(8, 3),
        make_domain(DomainKind::B2, {{}, 2, {}, {}}),
        make_sp(3, 2),
        make_sp(5, 3),
        make_domain(DomainKind::D1, {{}, 2, {}, {}}),
        make_domain(DomainKind::D1, {{}, 3, {}, {}}),
        make_domain(DomainKind::D2, {{}, 3, {}, {}}),
    };
    int total = 0, good = 0;
    std::string misses;
    for (const DomainDescriptor& dom : doms) {
      const int parities = dom.family() == Family::D ? 2 : 1;
      for (const char* s : {"7/3", "5/2", "13/4"}) {
        const Scalar sigma = parse_scalar(s);
        for (const Partition& m : partitions_up_to(4, dom.rank()))
          for (int parity = 0; parity < parities; ++parity) {
            const InvariantLabel lab = make_label(dom, m, parity);
            ++total;
            if (spherical_coefficient(dom, sigma, lab) == expansion_coefficient(dom, sigma, lab)) {
              ++good;
            } else if (misses.size() < 200) {
              misses += " [" + dom.group_h + " m=" + to_string(m) + " p=" + std::to_string(parity) + "]";
            }
          }
      }
    }
    res.pass = good == total;
    res.detail = "exact " + ratio(good, total) + " (13 domains, all families)" + misses;
  });
}

CriterionResult criterion_branching_bounds(std::uint64_t seed) {
  return timed(9, "branching-bounds", 0, [seed](CriterionResult& res) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    auto pick = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    int good = 0;
    std::string misses;
    for (int i = 0; i < 50; ++i) {
      const int fam = pick(0, 2);
      const Setting setting = fam == 0 ? Setting::Tensor : Setting::Restriction;
      const HKind hk = fam == 0 ? HKind::SU : (fam == 1 ? HKind::SO : HKind::Sp);
      const int r = pick(2, 3);
      int lr = 0;
      if (fam == 0) lr = pick(3, 10);
      if (fam == 1) lr = pick(2 * (r - 1) + 1, 2 * (r - 1) + 10);
      if (fam == 2) lr = pick(2 * (r - 1), 2 * (r - 1) + 9);
      const int l = r + lr;
      const int r_amb = fam == 2 ? 2 * r : r;
      Scalar nu;
      int k = 0;
      if (pick(0, 2) == 0) {
        nu = pick(1, r_amb - 1);  // singular point (a'/2)(j-1) with a' = 2, j >= 2
      } else {
        nu = Scalar(r_amb - 1) + frac(pick(1, 48), pick(1, 8));
        k = pick(0, 4);
      }
      const BranchingCertificate c = make_certificate(setting, hk, l, r, nu, k);
      if (c.bound_agrees()) {
        ++good;
      } else {
        misses += " [" + c.tag + " l=" + std::to_string(l) + " r=" + std::to_string(r) + " nu=" + to_string(nu) +
                  " k=" + std::to_string(k) + "]";
      }
    }
    res.pass = good == 50;
    res.detail = "printed bound <=> predicate " + ratio(good, 50) + misses;
  });
}

CriterionResult criterion_certificates() {
  return timed(10, "certificate-summation", 300, [](CriterionResult& res) {
    struct Case {
      Setting setting;
      HKind hk;
      int l, r;
      const char* nu;
    };
    const std::vector<Case> cases = {
        {Setting::Tensor, HKind::SU, 7, 2, "2"},          {Setting::Tensor, HKind::SU, 7, 2, "5/2"},
        {Setting::Restriction, HKind::SO, 10, 2, "3/2"},  {Setting::Restriction, HKind::SO, 10, 2, "2"},
        {Setting::Restriction, HKind::Sp, 6, 2, "2"},     {Setting::Tensor, HKind::SU, 7, 3, "1"},
        {Setting::Restriction, HKind::SO, 10, 2, "1"},
    };
    const EvalOptions opts{Precision::Extended, Exec::Parallel, 0};
    int total = 0, good = 0;
    std::ostringstream detail;
    for (const Case& c : cases) {
      const Scalar nu = parse_scalar(c.nu);
      const ScanResult scan = c.setting == Setting::Tensor ? scan_tensor(c.l, c.r, nu, 8)
                                                           : scan_restriction(c.hk, c.l, c.r, nu, 8);
      for (const BranchingCertificate& cert : scan.certificates) {
        const BranchingCertificate done = certify(cert, 120, 1e-10, opts);
        ++total;
        if (done.certified) ++good;
        char buf[160];
        std::snprintf(buf, sizeof buf, " [%s nu=%s k=%d: value %.6Lg, last shell %.2Lg @ %d]", cert.group_h.c_str(),
                      c.nu, cert.k, done.norm_square.value, done.norm_square.last_shell_magnitude,
                      done.norm_square.truncation_degree);
        detail << buf;
      }
    }
    res.pass = total > 0 && good == total;
    res.detail = "tail < 1e-10 by degree 120: " + ratio(good, total) + detail.str();
  });
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
  const std::vector<std::function<CriterionResult()>> all = {
      criterion_jack_oracle,
      criterion_normalizations,
      [&] { return criterion_pochhammer_splitting(opts.seed); },
      criterion_dunkl,
      criterion_dimension,
      criterion_empirical,
      criterion_quadrature,
      criterion_coefficient_identity,
      [&] { return criterion_branching_bounds(opts.seed); },
      criterion_certificates,
  };
  std::vector<CriterionResult> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), id) == opts.only.end()) continue;
    out.push_back(all[i]());
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  char head[96];
  std::snprintf(head, sizeof head, "%s %2d %-24s %8.2fs  ", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds);
  return head + r.detail;
}

}  // namespace jackhyp::verify
