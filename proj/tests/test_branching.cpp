#include <doctest.h>

#include <cmath>
#include <random>

#include "jackhyp/branching.hpp"

using namespace jackhyp;

namespace {

Scalar Q(const char* s) { return parse_scalar(s); }

std::vector<int> ks(const ScanResult& res) {
  std::vector<int> out;
  for (const BranchingCertificate& c : res.certificates) out.push_back(c.k);
  return out;
}

}  // namespace

TEST_CASE("SU(7,2) at nu = 2") {
  const ScanResult res = scan_tensor(7, 2, Scalar(2), 10);
  CHECK(res.applicable);
  CHECK(ks(res) == std::vector<int>{0});
  CHECK(res.mismatches.empty());
  const BranchingCertificate& c = res.certificates.front();
  CHECK(c.tag == "tensor-continuous");
  CHECK(c.sigma == 2);
  CHECK(c.i_lambda == -6);
  CHECK_FALSE(c.singular_j.has_value());
  const BranchingCertificate done = certify(c, 120, 1e-10, {Precision::Extended});
  CHECK(done.norm_square.has_value);
  CHECK(done.norm_square.value > 0);
  CHECK(std::isfinite(static_cast<double>(done.norm_square.value)));
}

TEST_CASE("tube-type SU(4,2) has nothing to offer") {
  const ScanResult res = scan_tensor(4, 2, Scalar(3), 10);
  CHECK_FALSE(res.applicable);
  CHECK(res.certificates.empty());
  CHECK_FALSE(res.reason.empty());
}

TEST_CASE("SU(7,3) at the singular point nu = 1") {
  const ScanResult res = scan_tensor(7, 3, Scalar(1), 10);
  REQUIRE(res.certificates.size() == 1);
  const BranchingCertificate& c = res.certificates.front();
  CHECK(c.singular_j == 2);
  CHECK(c.k == 0);
  CHECK(c.tag == "tensor-singular");
  CHECK(c.printed_bound);
  CHECK(c.predicate);
}

TEST_CASE("SO0(10,2) at nu = 2") {
  const ScanResult res = scan_restriction(HKind::SO, 10, 2, Scalar(2), 10);
  REQUIRE(ks(res) == std::vector<int>{0});
  CHECK(res.certificates.front().sigma == 2);
  CHECK(res.certificates.front().tag == "SO-continuous");
  CHECK(res.certificates.front().lambda_literal.size() == 2);
}

TEST_CASE("SO0(10,2) at the singular point nu = 1") {
  const ScanResult res = scan_restriction(HKind::SO, 10, 2, Scalar(1), 10);
  REQUIRE(res.certificates.size() == 1);
  CHECK(res.certificates.front().singular_j == 2);
  CHECK(res.certificates.front().tag == "SO-singular");
}

TEST_CASE("Sp(6,2) at nu = 2 is a singular point of SU(12,4)") {
  const ScanResult res = scan_restriction(HKind::Sp, 6, 2, Scalar(2), 10);
  REQUIRE(ks(res) == std::vector<int>{0});
  const BranchingCertificate& c = res.certificates.front();
  CHECK(c.group_g == "SU(12,4)");
  CHECK(c.singular_j == 3);
  CHECK(c.tag == "Sp-singular");
}

TEST_CASE("Sp continuous range") {
  CHECK(ks(scan_restriction(HKind::Sp, 6, 2, Q("13/4"), 10)) == std::vector<int>{0});
  CHECK(ks(scan_restriction(HKind::Sp, 10, 2, Q("7/2"), 10)) == std::vector<int>{0, 1});
  const BranchingCertificate c = make_certificate(Setting::Restriction, HKind::Sp, 10, 2, Q("7/2"), 1);
  CHECK(c.sigma == Q("11/2"));
  CHECK(c.tag == "Sp-continuous");
}

TEST_CASE("a certificate on the boundary is refused") {
  // 2nu + 4k = 1 + l - r
  const BranchingCertificate c = make_certificate(Setting::Tensor, HKind::SU, 8, 2, Q("7/2"), 0);
  CHECK_FALSE(c.predicate);
  CHECK_FALSE(c.printed_bound);
  CHECK_THROWS_AS(certify(c, 40, 1e-10), DomainError);
  CHECK(scan_tensor(8, 2, Q("7/2"), 5).certificates.empty());
}

TEST_CASE("a violating k is rejected") {
  const BranchingCertificate c = make_certificate(Setting::Tensor, HKind::SU, 7, 2, Scalar(2), 1);
  CHECK_FALSE(c.predicate);
  CHECK_THROWS_AS(certify(c, 40, 1e-10), DomainError);
  const BranchingCertificate s = make_certificate(Setting::Restriction, HKind::SO, 10, 2, Scalar(2), 3);
  CHECK_THROWS_AS(certify(s, 40, 1e-10), DomainError);
}

TEST_CASE("nu outside the Wallach set") {
  CHECK_THROWS_AS(scan_tensor(7, 3, Q("1/2"), 4), DomainError);
  CHECK_THROWS_AS(scan_tensor(7, 3, Scalar(-1), 4), DomainError);
  CHECK_THROWS_AS(scan_restriction(HKind::SO, 10, 2, Q("1/2"), 4), DomainError);
  CHECK_THROWS_AS(make_certificate(Setting::Tensor, HKind::SU, 7, 3, Q("3/2"), 0), DomainError);
  CHECK_THROWS_AS(make_certificate(Setting::Tensor, HKind::SU, 7, 3, Scalar(1), 1), DomainError);
  const ScanResult zero = scan_tensor(7, 3, Scalar(0), 4);
  CHECK_FALSE(zero.applicable);
  CHECK(zero.certificates.empty());
}

TEST_CASE("structural preconditions") {
  CHECK(branching_precondition(Setting::Tensor, HKind::SU, 7, 2).empty());
  CHECK_FALSE(branching_precondition(Setting::Tensor, HKind::SU, 5, 3).empty());
  CHECK_FALSE(branching_precondition(Setting::Restriction, HKind::SO, 6, 3).empty());
  CHECK(branching_precondition(Setting::Restriction, HKind::SO, 8, 3).empty());
  CHECK(branching_precondition(Setting::Restriction, HKind::Sp, 7, 3).empty());
  CHECK_FALSE(branching_precondition(Setting::Restriction, HKind::Sp, 6, 3).empty());
  CHECK_FALSE(branching_precondition(Setting::Tensor, HKind::SO, 7, 2).empty());
  CHECK_THROWS_AS(scan_restriction(HKind::SU, 7, 2, Scalar(2), 3), DomainError);
  CHECK_THROWS_AS(scan_tensor(2, 3, Scalar(2), 3), DomainError);
}

TEST_CASE("printed bounds agree with the convergence predicate on random cases") {
  std::mt19937_64 rng(20240607);
  std::uniform_int_distribution<int> setting(0, 2), rank(2, 3), gap(0, 10), knum(0, 5), den(1, 8), num(1, 40);
  int checked = 0;
  while (checked < 50) {
    const int which = setting(rng);
    const int r = rank(rng);
    const HKind h = which == 0 ? HKind::SU : which == 1 ? HKind::SO : HKind::Sp;
    const Setting s = which == 0 ? Setting::Tensor : Setting::Restriction;
    const int base = which == 0 ? 3 : which == 1 ? 2 * (r - 1) + 1 : 2 * (r - 1);
    const int l = r + base + gap(rng);
    REQUIRE(branching_precondition(s, h, l, r).empty());
    const int rprime = which == 2 ? 2 * r : r;
    Scalar nu;
    int k = 0;
    if (num(rng) % 4 == 0) {
      std::uniform_int_distribution<int> jd(2, rprime);
      nu = jd(rng) - 1;
    } else {
      nu = Scalar(rprime - 1) + frac(num(rng), den(rng));
      k = knum(rng);
    }
    const BranchingCertificate c = make_certificate(s, h, l, r, nu, k);
    CHECK_MESSAGE(c.bound_agrees(), c.tag << " l=" << l << " r=" << r << " nu=" << to_string(nu) << " k=" << k);
    ++checked;
  }
}

TEST_CASE("admissible k form an initial segment") {
  for (int l = 6; l <= 14; l += 2)
    for (const char* nu : {"3/2", "2", "5/2", "10/3"}) {
      const std::vector<int> k = ks(scan_tensor(l, 2, Q(nu), 12));
      for (std::size_t i = 0; i < k.size(); ++i) CHECK(k[i] == static_cast<int>(i));
      const std::vector<int> so = ks(scan_restriction(HKind::SO, l + 4, 2, Q(nu), 12));
      for (std::size_t i = 0; i < so.size(); ++i) CHECK(so[i] == static_cast<int>(i));
      const std::vector<int> sp = ks(scan_restriction(HKind::Sp, l, 2, Scalar(3) + Q(nu), 12));
      for (std::size_t i = 0; i < sp.size(); ++i) CHECK(sp[i] == static_cast<int>(i));
    }
}

TEST_CASE("no mismatches between printed bound and predicate in scans") {
  for (int l = 5; l <= 12; ++l)
    for (const char* nu : {"1", "2", "3/2", "9/4", "4"}) {
      CHECK(scan_tensor(l, 2, Q(nu), 8).mismatches.empty());
      if (l - 2 > 2) CHECK(scan_restriction(HKind::SO, l, 2, Q(nu), 8).mismatches.empty());
    }
  for (int l = 5; l <= 12; ++l)
    for (const char* nu : {"1", "2", "3", "13/4", "4", "9/2"})
      CHECK(scan_restriction(HKind::Sp, l, 2, Q(nu), 8).mismatches.empty());
}

TEST_CASE("norm-square partial sums are nondecreasing") {
  for (const ScanResult& res : {scan_tensor(12, 2, Q("5/2"), 8), scan_restriction(HKind::SO, 14, 2, Q("3/2"), 8),
                                scan_restriction(HKind::Sp, 8, 2, Q("7/2"), 8)}) {
    REQUIRE_FALSE(res.certificates.empty());
    for (const BranchingCertificate& c : res.certificates) {
      const BranchingCertificate done = certify(c, 40, 0);
      REQUIRE(done.norm_square.has_value);
      for (long double s : done.norm_square.shell_sums) CHECK(s >= 0);
      CHECK(done.norm_square.value >= 1);
    }
  }
}

TEST_CASE("names round trip") {
  CHECK(parse_setting("tensor") == Setting::Tensor);
  CHECK(parse_setting(to_string(Setting::Restriction)) == Setting::Restriction);
  CHECK(parse_hkind("Sp") == HKind::Sp);
  CHECK(parse_hkind(to_string(HKind::SO)) == HKind::SO);
  CHECK_THROWS_AS(parse_setting("both"), ParseError);
  CHECK_THROWS_AS(parse_hkind("U"), ParseError);
}
