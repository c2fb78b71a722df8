#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "jackhyp/spherical.hpp"

using namespace jackhyp;

namespace {

Scalar Q(const char* s) { return parse_scalar(s); }

std::vector<DomainDescriptor> domains() {
  return {make_su(3, 2),
          make_su(5, 3),
          make_domain(DomainKind::A, {{}, 2, Scalar(1), {}}),
          make_domain(DomainKind::A, {{}, 3, Scalar(2), {}}),
          make_so(5, 2),
          make_so(8, 3),
          make_sp(3, 2),
          make_domain(DomainKind::B2, {{}, 2, {}, {}}),
          make_domain(DomainKind::D1, {{}, 2, {}, {}}),
          make_domain(DomainKind::D1, {{}, 3, {}, {}})};
}

DomainDescriptor disk() { return make_domain(DomainKind::BCxBC, {{}, 1, Scalar(2), Scalar(0)}); }

long double phi(const DomainDescriptor& d, const Scalar& sigma, std::vector<long double> t, int deg = 200) {
  const SeriesResult r = spherical_radial(d, sigma, t, deg, {Precision::Extended});
  REQUIRE(r.has_value);
  return r.value;
}

}  // namespace

TEST_CASE("sigma and lambda round trip") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> num(-200, 200), den(1, 30);
  for (const DomainDescriptor& d : domains())
    for (int s = 0; s < 10; ++s) {
      const Scalar sigma = frac(num(rng), den(rng));
      CHECK(sigma_of_lambda(d, lambda_of_sigma(d, sigma)) == sigma);
      CHECK(lambda_of_sigma(d, sigma_of_lambda(d, sigma)) == sigma);
    }
}

TEST_CASE("complex case relation") {
  const DomainDescriptor d = make_su(5, 3);
  const Scalar sigma = Q("17/6");
  CHECK(lambda_of_sigma(d, sigma) == 2 * 3 * sigma - d.rho_xi);
  const auto lit = lambda_literal_readings(d, sigma);
  REQUIRE(lit.size() == 1);
  CHECK(lit[0].i_lambda == lambda_of_sigma(d, sigma));
}

TEST_CASE("type A at lambda = 0") {
  for (int r = 2; r <= 4; ++r)
    for (const char* a : {"1", "2", "4"}) {
      const DomainDescriptor d = make_domain(DomainKind::A, {{}, r, Q(a), {}});
      CHECK(sigma_of_lambda(d, Scalar(0)) == Q(a) / 2 * (r - 1));
    }
}

TEST_CASE("literal readings next to the derived value") {
  const DomainDescriptor so = make_so(10, 2);
  const Scalar sigma = Scalar(2);
  const auto lit = lambda_literal_readings(so, sigma);
  REQUIRE(lit.size() == 2);
  CHECK(lit[0].source == "spherical-theorem");
  CHECK(lit[0].i_lambda == lambda_of_sigma(so, sigma));
  CHECK(lit[1].source == "branching-theorem");
  CHECK(lit[1].i_lambda == 2 * sigma - 2 * (Scalar(8) + Q("1/2")));
  CHECK(lit[1].i_lambda != lit[0].i_lambda);

  const DomainDescriptor sp = make_sp(6, 2);
  const auto sl = lambda_literal_readings(sp, sigma);
  REQUIRE(sl.size() == 2);
  CHECK(sl[1].i_lambda == 4 * sigma - 2 * Scalar(3 + 4 + 8));
}

TEST_CASE("value 1 at the origin") {
  for (const DomainDescriptor& d : domains())
    for (const char* s : {"1", "5/2", "7/3"})
      CHECK(std::fabs(phi(d, Q(s), std::vector<long double>(d.rank(), 0), 10) - 1) < 1e-18);
}

TEST_CASE("rank-one quadrature examples") {
  CHECK(std::fabs(poisson_quadrature_rank1(1.7L, 0, 64) - 1) < 1e-18);
  CHECK(std::fabs(poisson_quadrature_rank1(1, 0.5L, 256) - 1) < 1e-15);
  CHECK_THROWS_AS(poisson_quadrature_rank1(1, 0.5L, 8), DomainError);
  CHECK_THROWS_AS(poisson_quadrature_rank1(1, 1.0L, 64), DomainError);
}

TEST_CASE("rank-one series against quadrature") {
  const DomainDescriptor d = disk();
  CHECK(d.rank_one_oracle);
  for (const char* s : {"7/10", "13/10", "2", "1"})
    for (long double t : {0.3L, 0.6L}) {
      const long double series = phi(d, Q(s), {t}, 400);
      const long double quad = poisson_quadrature_rank1(to_long_double(Q(s)), t, 512);
      CHECK(std::fabs(series - quad) < 1e-8);
    }
}

TEST_CASE("rank-one symmetry sigma to c - sigma") {
  const DomainDescriptor d = disk();
  const Scalar c = d.d_over_r;
  for (const char* s : {"3/10", "7/10", "2", "5/2", "-1/2"})
    for (long double t : {0.1L, 0.25L, 0.4L, 0.55L, 0.7L})
      CHECK(std::fabs(phi(d, Q(s), {t}, 600) - phi(d, c - Q(s), {t}, 600)) < 1e-8);
}

TEST_CASE("type A closed form") {
  // the binomial series collapses to prod (1 - t_j)^{-sigma}
  const DomainDescriptor d = make_domain(DomainKind::A, {{}, 2, Scalar(2), {}});
  const Scalar sigma = Q("3/2");
  const std::vector<long double> t{0.2L, -0.3L};
  long double expect = 1;
  for (long double x : t) expect *= std::pow((1 + x) / (1 - x), 0.75L);
  CHECK(std::fabs(phi(d, sigma, t, 50) - expect) < 1e-15);
}

TEST_CASE("symmetric in the radial coordinates") {
  std::mt19937_64 rng(2);
  for (const DomainDescriptor& d : domains()) {
    std::vector<long double> t{0.15L, 0.4L, 0.3L};
    t.resize(d.rank());
    const long double ref = phi(d, Q("9/4"), t, 30);
    for (int s = 0; s < 5; ++s) {
      std::shuffle(t.begin(), t.end(), rng);
      CHECK(phi(d, Q("9/4"), t, 30) == doctest::Approx(static_cast<double>(ref)).epsilon(1e-14));
    }
  }
}

TEST_CASE("series coefficients are Pochhammer over Fock norm") {
  for (const DomainDescriptor& d : domains())
    for (const char* s : {"7/3", "5/2", "13/4"})
      for (int w = 0; w <= 4; ++w)
        for (const Partition& m : enumerate_partitions(w, d.rank()))
          for (int parity = 0; parity < (d.family() == Family::D ? 2 : 1); ++parity) {
            const InvariantLabel lab = make_label(d, m, parity);
            CHECK_MESSAGE(spherical_coefficient(d, Q(s), lab) == expansion_coefficient(d, Q(s), lab),
                          d.group_h << " m=" << to_string(m) << " parity " << parity);
          }
}

TEST_CASE("odd piece of type D vanishes at sigma = a(j-1)") {
  for (int r = 2; r <= 3; ++r) {
    const DomainDescriptor d = make_domain(DomainKind::D1, {{}, r, {}, {}});
    for (int j = 1; j <= r; ++j) {
      const Scalar sigma = d.real.a * (j - 1);
      const SphericalForm f = spherical_form(d, sigma);
      REQUIRE(f.pieces.size() == 2);
      CHECK(f.pieces[1].parity == 1);
      CHECK(f.pieces[1].scale == 0);
      CHECK(spherical_coefficient(d, sigma, make_label(d, Partition{1}, 1)) == 0);
    }
    CHECK(spherical_form(d, Q("5/2")).pieces[1].scale != 0);
  }
}

TEST_CASE("type D is odd-even split in the radial variable") {
  const DomainDescriptor d = make_domain(DomainKind::D1, {{}, 2, {}, {}});
  const Scalar sigma = Q("5/2");
  const long double plus = phi(d, sigma, {0.3L, 0.2L}, 80);
  const long double minus = phi(d, sigma, {-0.3L, 0.2L}, 80);
  const SphericalForm f = spherical_form(d, sigma);
  CHECK(std::fabs(plus - minus) > 1e-6);
  CHECK(phi(d, sigma, {-0.3L, -0.2L}, 80) == doctest::Approx(static_cast<double>(plus)).epsilon(1e-15));
  CHECK(f.prefactor_exponent == sigma / 2);
}

TEST_CASE("radial coordinates are validated") {
  CHECK_THROWS_AS(spherical_radial(make_su(3, 2), Scalar(2), {0.5L, 1.0L}, 10), DomainError);
  CHECK_THROWS_AS(spherical_radial(make_su(3, 2), Scalar(2), {0.5L}, 10), DomainError);
}
