#include <doctest.h>

#include "jackhyp/domains.hpp"

using namespace jackhyp;

namespace {

Scalar Q(const char* s) { return parse_scalar(s); }

std::vector<DomainDescriptor> sample_domains() {
  std::vector<DomainDescriptor> out;
  for (int l = 2; l <= 6; ++l)
    for (int r = 1; r <= l; ++r) out.push_back(make_su(l, r));
  for (int l = 3; l <= 8; ++l)
    for (int r = 2; r < l; ++r) {
      out.push_back(make_so(l, r));
      out.push_back(make_sp(l, r));
    }
  for (int r = 2; r <= 4; ++r) {
    out.push_back(make_domain(DomainKind::D1, {{}, r, {}, {}}));
    out.push_back(make_domain(DomainKind::B2, {{}, r, {}, {}}));
    for (const char* a : {"1", "2", "4"}) out.push_back(make_domain(DomainKind::A, {{}, r, Q(a), {}}));
  }
  out.push_back(make_domain(DomainKind::D2, {}));
  out.push_back(make_domain(DomainKind::BCxBC, {{}, 2, Scalar(6), Scalar(8)}));
  out.push_back(make_domain(DomainKind::BCxBC, {{}, 3, Scalar(8), {}}));
  return out;
}

}  // namespace

TEST_CASE("SU(l,r) genus") {
  CHECK(make_su(3, 2).genus == 5);
  for (int l = 1; l <= 7; ++l)
    for (int r = 1; r <= l; ++r) CHECK(make_su(l, r).genus == l + r);
}

TEST_CASE("Sp(4,2) quadruples") {
  const DomainDescriptor d = make_domain(DomainKind::BC, {4, 2, {}, {}});
  CHECK(d.real.rank == 2);
  CHECK(d.real.iota_minus_1 == 3);
  CHECK(d.real.a == 4);
  CHECK(d.real.two_b == 8);
  CHECK(d.complex.rank == 4);
  CHECK(d.complex.a == 2);
  CHECK(d.complex.two_b == 8);
  CHECK(d.group_h == "Sp(4,2)");
  CHECK(d.group_g == "SU(8,4)");
}

TEST_CASE("SO(3,3) quadruples") {
  const DomainDescriptor d = make_domain(DomainKind::D1, {{}, 3, {}, {}});
  CHECK(d.real.rank == 3);
  CHECK(d.real.iota_minus_1 == 0);
  CHECK(d.real.a == 1);
  CHECK(d.real.two_b == 0);
  CHECK(d.complex.rank == 3);
  CHECK(d.complex.a == 2);
  CHECK(d.complex.two_b == 0);
}

TEST_CASE("SO0(l,r) quadruples") {
  for (int l = 3; l <= 9; ++l)
    for (int r = 2; r < l; ++r) {
      const DomainDescriptor d = make_so(l, r);
      CHECK(d.real.rank == r);
      CHECK(d.real.iota_minus_1 == 0);
      CHECK(d.real.a == 1);
      CHECK(d.real.two_b == l - r);
      CHECK(d.real.b() == frac(l - r, 2));
      CHECK(d.complex.a == 2);
      CHECK(d.complex.two_b == 2 * (l - r));
    }
}

TEST_CASE("BCxBC real data equals the complex data") {
  for (const DomainDescriptor& d : sample_domains()) {
    if (d.kind != DomainKind::BCxBC) continue;
    CHECK(d.real.rank == d.complex.rank);
    CHECK(d.real.iota_minus_1 == 1);
    CHECK(d.real.a == d.complex.a);
    CHECK(d.real.two_b == d.complex.two_b);
  }
}

TEST_CASE("derived constants") {
  for (const DomainDescriptor& d : sample_domains()) {
    const ComplexTriple& c = d.complex;
    const RealQuadruple& q = d.real;
    CHECK(d.genus == c.a * (c.rank - 1) + 2 + c.b());
    CHECK(d.d_over_r == 1 + c.b() + c.a / 2 * (c.rank - 1));
    CHECK(d.wallach_threshold == c.a / 2 * (c.rank - 1));
    REQUIRE(static_cast<int>(d.wallach_singular.size()) == c.rank);
    for (int j = 0; j < c.rank; ++j) CHECK(d.wallach_singular[j] == c.a / 2 * j);
    CHECK(d.rho_xi == q.rank * q.iota_minus_1 + q.a / 2 * q.rank * (q.rank - 1) + q.b() * q.rank);
    CHECK(d.q() == 1 + q.a / 2 * (q.rank - 1));
  }
}

TEST_CASE("ranks across families") {
  for (const DomainDescriptor& d : sample_domains()) {
    switch (d.kind) {
      case DomainKind::BC:
        CHECK(d.complex.rank == 2 * d.real.rank);
        CHECK(d.real.a == 2 * d.complex.a);
        break;
      case DomainKind::B1:
      case DomainKind::B2:
      case DomainKind::D1:
      case DomainKind::D2:
        CHECK(d.complex.rank == d.real.rank);
        CHECK(d.complex.a == 2 * d.real.a);
        break;
      default: CHECK(d.complex.rank == d.real.rank);
    }
  }
}

TEST_CASE("Wallach sets") {
  for (int l = 2; l <= 6; ++l)
    for (int r = 1; r <= l; ++r) {
      const WallachSet w = wallach_set(make_su(l, r));
      CHECK(w.threshold == r - 1);
      REQUIRE(static_cast<int>(w.singular.size()) == r);
      for (int j = 0; j < r; ++j) CHECK(w.singular[j] == j);
    }
  const WallachSet one = wallach_set(make_domain(DomainKind::BCxBC, {{}, 1, Scalar(2), Scalar(0)}));
  CHECK(one.singular == std::vector<Scalar>{Scalar(0)});
  CHECK(one.threshold == 0);
  const WallachSet sp = wallach_set(make_sp(5, 3));
  CHECK(sp.singular.size() == 6);
  CHECK(sp.singular.back() == 5);
  CHECK(sp.threshold == 5);
}

TEST_CASE("Wallach membership") {
  const WallachSet w = wallach_set(make_su(5, 3));
  CHECK(w.contains(Scalar(0)));
  CHECK(w.contains(Scalar(1)));
  CHECK(w.contains(Scalar(2)));
  CHECK(w.contains(Q("5/2")));
  CHECK_FALSE(w.contains(Q("1/2")));
  CHECK_FALSE(w.contains(Q("3/2")));
  CHECK_FALSE(w.contains(Scalar(-1)));
  CHECK(w.singular_index(Scalar(2)) == 3);
  CHECK_FALSE(w.singular_index(Scalar(3)).has_value());
}

TEST_CASE("rank-one complex domains only as oracles") {
  CHECK(make_su(4, 1).rank_one_oracle);
  CHECK_FALSE(make_su(4, 2).rank_one_oracle);
}

TEST_CASE("rho from explicit roots") {
  CHECK(rho_xi_from_roots({2, Scalar(3), Scalar(4), Scalar(8)}) == 6 + 4 + 8);
  CHECK(rho_xi_from_roots({1, Scalar(0), Scalar(0), Scalar(0)}) == 0);
  CHECK(rho_xi_from_roots({3, Scalar(0), Scalar(2), Scalar(0)}) == 6);
}

TEST_CASE("out-of-family parameters are rejected") {
  CHECK_THROWS_AS(make_sp(2, 2), DomainError);
  CHECK_THROWS_AS(make_sp(3, 1), DomainError);
  CHECK_THROWS_AS(make_so(4, 4), DomainError);
  CHECK_THROWS_AS(make_so(4, 1), DomainError);
  CHECK_THROWS_AS(make_su(2, 3), DomainError);
  CHECK_THROWS_AS(make_su(2, 0), DomainError);
  CHECK_THROWS_AS(make_domain(DomainKind::D1, {{}, 1, {}, {}}), DomainError);
  CHECK_THROWS_AS(make_domain(DomainKind::D2, {{}, 4, {}, {}}), DomainError);
  CHECK_THROWS_AS(make_domain(DomainKind::A, {{}, 3, Scalar(3), {}}), DomainError);
  CHECK_THROWS_AS(make_domain(DomainKind::A, {{}, 1, Scalar(2), {}}), DomainError);
  CHECK_THROWS_AS(make_domain(DomainKind::BCxBC, {{}, 3, Scalar(3), {}}), DomainError);
  CHECK_THROWS_AS(make_domain(DomainKind::BC, {{}, 2, {}, {}}), DomainError);
  CHECK_THROWS_AS(parse_domain_kind("E6"), ParseError);
}

TEST_CASE("kind names round trip") {
  for (DomainKind k : {DomainKind::BCxBC, DomainKind::A, DomainKind::BC, DomainKind::B1, DomainKind::B2,
                       DomainKind::D1, DomainKind::D2})
    CHECK(parse_domain_kind(to_string(k)) == k);
}
